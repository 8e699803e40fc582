/*
 * The family of hyperelliptic curves zeta^2 = F(w) attached to an orbit: F is
 * the monic polynomial whose roots are the free pattern entries (the frozen
 * factors of the full Lax characteristic polynomial divided out), together
 * with discriminants, degeneration bookkeeping, and numerical period data.
 *
 * F is built directly from its roots; the characteristic-polynomial division
 * path exists only as a cross-check, since the product form is exact and well
 * conditioned.
 */

#ifndef GTLAX_CURVES_HPP
#define GTLAX_CURVES_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "eig.hpp"
#include "errors.hpp"
#include "gtsystem.hpp"
#include "polynomial.hpp"
#include "polytope.hpp"
#include "quadrature.hpp"

namespace gtlax {

struct SpectralCurve {
    RealPolynomial F;                                // monic, degree = half_dim
    std::vector<double> roots;                       // free entries, ascending
    std::vector<std::pair<double, int>> frozen_divisors; // (value, multiplicity m_j), m_j >= 1
    double disc = 0.0;
    int degree = 0;
    bool smooth = false;
    double cluster_tol = 0.0;
};

namespace detail {

inline SpectralCurve curve_from_root_list(std::vector<double> roots, double cluster_tol) {
    SpectralCurve c;
    std::sort(roots.begin(), roots.end());
    c.roots = std::move(roots);
    c.F = RealPolynomial::from_roots(c.roots);
    c.degree = static_cast<int>(c.roots.size());
    c.disc = discriminant_from_roots(c.roots);
    c.cluster_tol = cluster_tol;
    bool distinct = true;
    for (std::size_t i = 0; i + 1 < c.roots.size(); ++i)
        if (c.roots[i + 1] - c.roots[i] <= cluster_tol) distinct = false;
    c.smooth = distinct;
    return c;
}

} // namespace detail

/// Standalone curve from prescribed branch points (used by tests and the CLI
/// for synthetic configurations). cluster_tol < 0 means 1e-7 * root spread.
inline SpectralCurve curve_from_roots(std::vector<double> roots, double cluster_tol = -1.0) {
    if (roots.empty()) throw std::invalid_argument("curve_from_roots: no roots");
    if (cluster_tol < 0.0) {
        const auto [lo, hi] = std::minmax_element(roots.begin(), roots.end());
        cluster_tol = 1e-7 * std::max(*hi - *lo, 1e-300);
    }
    return detail::curve_from_root_list(std::move(roots), cluster_tol);
}

/// The curve attached to a pattern: F(w) = prod over free entries (w - a).
/// Cross-check: the product over all pattern entries, synthetically divided by
/// the frozen factors (w - lambda_{n_j})^{m_j}, must agree coefficientwise;
/// failure indicates broken freezing logic, not bad data.
inline SpectralCurve spectral_poly(const OrbitSpec& spec, const GTPattern& pattern,
                                   double cluster_tol = -1.0) {
    if (cluster_tol < 0.0) cluster_tol = 1e-7 * std::max(spec.diameter(), 1e-300);

    std::vector<double> free_entries, all_entries;
    for (int k = 1; k <= spec.n - 1; ++k)
        for (int j = 1; j <= k; ++j) {
            all_entries.push_back(pattern.entry(j, k));
            if (!pattern.frozen(j, k)) free_entries.push_back(pattern.entry(j, k));
        }

    SpectralCurve c = detail::curve_from_root_list(std::move(free_entries), cluster_tol);
    for (const auto& b : spec.blocks) {
        const int m = b.multiplicity * (b.multiplicity - 1) / 2;
        if (m > 0) c.frozen_divisors.push_back({b.value, m});
    }

    RealPolynomial quotient = RealPolynomial::from_roots(all_entries);
    const double scale = std::max(1.0, quotient.max_abs_coeff());
    for (const auto& [value, mult] : c.frozen_divisors) {
        for (int i = 0; i < mult; ++i) {
            auto [q, rem] = quotient.divide_linear(value);
            if (std::abs(rem) > 1e-7 * scale)
                throw InvariantViolation("spectral_poly: frozen factor division left remainder " +
                                         std::to_string(rem));
            quotient = std::move(q);
        }
    }
    if (quotient.degree() != c.degree ||
        max_coeff_diff(quotient, c.F) > 1e-7 * std::max(1.0, c.F.max_abs_coeff()))
        throw InvariantViolation("spectral_poly: product and division paths disagree");
    if (c.degree != spec.half_dim)
        throw InvariantViolation("spectral_poly: degree != half orbit dimension");
    return c;
}

/// Critical-locus classification. The authoritative signal for criticality is
/// the polytope boundary test (some interlacing constraint saturated); the
/// discriminant of F is reported alongside but kept separate, because a free
/// entry meeting a frozen value saturates a facet without killing disc(F),
/// and cross-row root coincidences can kill disc(F) at interior points.
struct Classification {
    bool critical = false;               // == boundary membership
    std::vector<std::string> saturated;  // labels of saturated constraints
    double disc = 0.0;
    bool disc_zero = false;              // |disc| <= tol * diameter^{d(d-1)}
    bool adjacent_distinct = true;       // no saturation among pattern rows
};

inline Classification classify(const OrbitSpec& spec, const GTPattern& pattern, double tol) {
    const PolytopeSpec ps = make_polytope(spec);
    const ActionVector a = action_of(pattern);
    const MembershipReport rep = membership(ps, a, tol);
    if (rep.region == Region::outside)
        throw InfeasiblePattern("classify: pattern violates interlacing");

    Classification out;
    out.critical = rep.region == Region::boundary;
    for (int i : rep.saturated) out.saturated.push_back(ps.constraints[i].label);
    out.adjacent_distinct = rep.saturated.empty();

    const SpectralCurve c = spectral_poly(spec, pattern);
    out.disc = c.disc;
    const double scale = std::pow(std::max(spec.diameter(), 1e-300),
                                  static_cast<double>(c.degree) * (c.degree - 1));
    out.disc_zero = std::abs(c.disc) <= tol * scale;
    return out;
}

/// Genus of a smooth curve: deg F = 2g+1 or 2g+2, so g = floor((d-1)/2).
inline int genus(const SpectralCurve& curve) {
    if (!curve.smooth)
        throw SingularCurve("genus: curve is singular; use degeneration_type");
    return (curve.degree - 1) / 2;
}

struct DegenerationReport {
    std::vector<double> cluster_roots;  // ascending
    std::vector<int> multiplicities;    // aligned with cluster_roots
    int singular_points = 0;            // clusters with multiplicity >= 2
    int square_free_degree = 0;
    int normalization_genus = 0;        // genus of zeta^2 = prod over odd clusters
};

inline DegenerationReport degeneration_type(const SpectralCurve& curve, double tol = -1.0) {
    if (tol < 0.0) tol = curve.cluster_tol;
    const SquareFreeResult sf = square_free_part(std::span<const double>(curve.roots), tol);
    DegenerationReport rep;
    rep.cluster_roots = sf.cluster_roots;
    rep.multiplicities = sf.multiplicities;
    rep.square_free_degree = static_cast<int>(sf.cluster_roots.size());
    int odd = 0;
    for (int m : sf.multiplicities) {
        if (m >= 2) ++rep.singular_points;
        if (m % 2 == 1) ++odd;
    }
    rep.normalization_genus = std::max(0, (odd - 1) / 2);
    return rep;
}

/// Periods of the basis differentials w^i dw / sqrt(F), i = 0..g-1, over the
/// 2g loops around the first 2g finite branch-point gaps. With the cosine
/// substitution w = c + rho cos(theta) the two endpoint singularities cancel
/// and the integrand becomes smooth and periodic, so the midpoint rule
/// converges spectrally. Entries are exactly real or exactly imaginary: F > 0
/// on a gap (even number of branch points above it) gives a real period, F < 0
/// an imaginary one.
struct PeriodData {
    int g = 0;
    std::vector<std::pair<double, double>> cycles; // [e_m, e_{m+1}], m = 1..2g
    ComplexMatrix matrix;                          // g x 2g
};

inline PeriodData period_matrix(const SpectralCurve& curve, double tol = 1e-10) {
    if (!curve.smooth) throw SingularCurve("period_matrix: curve is singular");
    if (curve.degree < 3)
        throw std::invalid_argument("period_matrix: need degree >= 3");
    const std::vector<double>& e = curve.roots;
    const int d = curve.degree;
    const double diameter = e.back() - e.front();
    for (int i = 0; i + 1 < d; ++i)
        if (e[i + 1] - e[i] < 1e-6 * diameter)
            throw NearSingular("period_matrix: branch points closer than 1e-6 * diameter");

    PeriodData pd;
    pd.g = (d - 1) / 2;
    pd.matrix = ComplexMatrix(pd.g, 2 * pd.g);
    for (int cyc = 0; cyc < 2 * pd.g; ++cyc) {
        const double lo = e[cyc], hi = e[cyc + 1];
        pd.cycles.push_back({lo, hi});
        const double c = 0.5 * (lo + hi);
        const double rho = 0.5 * (hi - lo);
        const int above = d - cyc - 2; // branch points strictly greater than the gap
        const bool positive = (above % 2 == 0);
        for (int i = 0; i < pd.g; ++i) {
            auto integrand = [&](double theta) {
                const double w = c + rho * std::cos(theta);
                double prod = 1.0;
                for (int l = 0; l < d; ++l) {
                    if (l == cyc || l == cyc + 1) continue;
                    prod *= w - e[l];
                }
                return std::pow(w, i) / std::sqrt(std::abs(prod));
            };
            const QuadratureResult q = gauss_periodic_quadrature(integrand, tol);
            if (!q.converged)
                throw QuadratureNonConvergence("period_matrix: quadrature did not converge");
            // full loop around the cut = twice the gap integral
            pd.matrix(i, cyc) = positive ? cdouble(2.0 * q.value, 0.0)
                                         : cdouble(0.0, 2.0 * q.value);
        }
    }
    return pd;
}

/// The lattice spanned by the period matrix columns. Asserts that the 2g
/// columns are R-linearly independent by stacking real and imaginary parts
/// into a real 2g x 2g matrix; the condition number comes from the symmetric
/// eigenproblem of M^T M.
struct JacobianLattice {
    std::vector<std::vector<cdouble>> columns; // 2g columns in C^g
    double condition = 0.0;
};

inline JacobianLattice jacobian_lattice(const PeriodData& pd) {
    const int g = pd.g;
    JacobianLattice lat;
    for (int j = 0; j < 2 * g; ++j) {
        std::vector<cdouble> col(g);
        for (int i = 0; i < g; ++i) col[i] = pd.matrix(i, j);
        lat.columns.push_back(std::move(col));
    }
    ComplexMatrix m(2 * g, 2 * g);
    for (int j = 0; j < 2 * g; ++j)
        for (int i = 0; i < g; ++i) {
            m(i, j) = pd.matrix(i, j).real();
            m(g + i, j) = pd.matrix(i, j).imag();
        }
    const auto gram = eigenvalues(HermitianMatrix(m.adjoint() * m));
    const double smax = std::sqrt(std::max(gram.front(), 0.0));
    const double smin = std::sqrt(std::max(gram.back(), 0.0));
    if (smin <= 1e-8 * smax)
        throw RankDeficient("jacobian_lattice: period columns numerically dependent");
    lat.condition = smax / smin;
    return lat;
}

} // namespace gtlax

#endif
