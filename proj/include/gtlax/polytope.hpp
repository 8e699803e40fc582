/*
 * The Gelfand-Tsetlin polytope of an orbit: the interlacing inequalities
 * restricted to the free pattern entries (frozen entries substituted as
 * constants). Provides membership, interior sampling, brute-force vertex
 * enumeration for small dimension, and reconstruction of an orbit point from
 * a pattern by classical bordered inverse-eigenvalue construction.
 */

#ifndef GTLAX_POLYTOPE_HPP
#define GTLAX_POLYTOPE_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "gtsystem.hpp"

namespace gtlax {

/// Affine expression over the free coordinates; the constraint is expr >= 0.
struct LinearExpr {
    std::vector<std::pair<int, double>> terms; // (coordinate index, coefficient)
    double constant = 0.0;

    double eval(const std::vector<double>& x) const {
        double v = constant;
        for (const auto& [i, c] : terms) v += c * x[i];
        return v;
    }
};

struct PolytopeConstraint {
    LinearExpr expr;
    std::string label;
};

struct PolytopeSpec {
    OrbitSpec spec;
    int dim = 0;
    std::vector<PolytopeConstraint> constraints;
    // coordinate index of free entry (j,k), or -1; indexed [k-1][j-1]
    std::vector<std::vector<int>> coord_of;
};

inline PolytopeSpec make_polytope(const OrbitSpec& spec) {
    PolytopeSpec ps;
    ps.spec = spec;
    ps.coord_of.assign(spec.n, {});
    for (int k = 1; k <= spec.n; ++k) ps.coord_of[k - 1].assign(k, -1);
    int idx = 0;
    for (int k = spec.n - 1; k >= 1; --k)
        for (int j = 1; j <= k; ++j)
            if (!entry_frozen(spec, j, k)) ps.coord_of[k - 1][j - 1] = idx++;
    ps.dim = idx;

    // entry (j,k) as either a variable term or a constant
    auto term = [&](int j, int k) -> std::pair<int, double> {
        if (k == spec.n || entry_frozen(spec, j, k)) return {-1, spec.lambda[j - 1]};
        return {ps.coord_of[k - 1][j - 1], 0.0};
    };
    auto entry_name = [](int j, int k) {
        return "a(" + std::to_string(j) + "," + std::to_string(k) + ")";
    };

    for (int k = 1; k <= spec.n - 1; ++k) {
        for (int j = 1; j <= k; ++j) {
            // upper: a(j,k+1) - a(j,k) >= 0 ; lower: a(j,k) - a(j+1,k+1) >= 0
            const auto child = term(j, k);
            const auto up = term(j, k + 1);
            const auto dn = term(j + 1, k + 1);
            if (child.first >= 0 || up.first >= 0) {
                LinearExpr e;
                if (up.first >= 0) e.terms.push_back({up.first, 1.0});
                else e.constant += up.second;
                if (child.first >= 0) e.terms.push_back({child.first, -1.0});
                else e.constant -= child.second;
                ps.constraints.push_back({e, entry_name(j, k) + " <= " + entry_name(j, k + 1)});
            }
            if (child.first >= 0 || dn.first >= 0) {
                LinearExpr e;
                if (child.first >= 0) e.terms.push_back({child.first, 1.0});
                else e.constant += child.second;
                if (dn.first >= 0) e.terms.push_back({dn.first, -1.0});
                else e.constant -= dn.second;
                ps.constraints.push_back({e, entry_name(j, k) + " >= " + entry_name(j + 1, k + 1)});
            }
        }
    }
    return ps;
}

enum class Region { interior, boundary, outside };

struct MembershipReport {
    Region region = Region::interior;
    std::vector<int> saturated; // constraint indices with |slack| <= tol
    std::vector<int> violated;  // constraint indices with slack < -tol
};

inline MembershipReport membership(const PolytopeSpec& ps, const ActionVector& a, double tol) {
    if (static_cast<int>(a.values.size()) != ps.dim)
        throw std::invalid_argument("membership: action vector length mismatch");
    MembershipReport rep;
    for (std::size_t i = 0; i < ps.constraints.size(); ++i) {
        const double slack = ps.constraints[i].expr.eval(a.values);
        if (slack < -tol) rep.violated.push_back(static_cast<int>(i));
        else if (std::abs(slack) <= tol) rep.saturated.push_back(static_cast<int>(i));
    }
    if (!rep.violated.empty()) rep.region = Region::outside;
    else if (!rep.saturated.empty()) rep.region = Region::boundary;
    else rep.region = Region::interior;
    return rep;
}

/// Draws an interior point by walking rows from k = n-1 down to 1, sampling
/// each free entry uniformly from the open interval its two parents allow,
/// shrunk by the relative margin eps. Not uniform over the polytope, but
/// absolutely continuous with full support, which is what the property tests
/// need; the margin keeps downstream reconstruction well conditioned.
inline ActionVector sample_interior(const PolytopeSpec& ps, Rng& rng, double eps = 1e-6) {
    const OrbitSpec& spec = ps.spec;
    std::vector<std::vector<double>> rows(spec.n);
    rows[spec.n - 1] = spec.lambda;
    ActionVector a;
    for (int k = spec.n - 1; k >= 1; --k) {
        rows[k - 1].resize(k);
        for (int j = 1; j <= k; ++j) {
            if (entry_frozen(spec, j, k)) {
                rows[k - 1][j - 1] = spec.lambda[j - 1];
                continue;
            }
            const double hi = rows[k][j - 1];
            const double lo = rows[k][j];
            const double margin = eps * (hi - lo);
            const double v = rng.uniform(lo + margin, hi - margin);
            rows[k - 1][j - 1] = v;
            a.values.push_back(v);
        }
    }
    return a;
}

/// Brute-force vertex enumeration: every size-dim subset of constraints is
/// solved as an equality system; feasible full-rank solutions are kept and
/// deduplicated. Guarded to dim <= 6.
inline std::vector<ActionVector> vertices(const PolytopeSpec& ps) {
    if (ps.dim > 6) throw DimensionTooLarge("vertices: dimension > 6");
    if (ps.dim == 0) return {ActionVector{}};

    const int d = ps.dim;
    const int m = static_cast<int>(ps.constraints.size());
    std::vector<ActionVector> out;

    std::vector<int> comb(d);
    std::iota(comb.begin(), comb.end(), 0);
    auto next_comb = [&]() {
        int i = d - 1;
        while (i >= 0 && comb[i] == m - d + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };

    do {
        // dense equality system: terms . x = -constant
        std::vector<std::vector<double>> mat(d, std::vector<double>(d, 0.0));
        std::vector<double> rhs(d);
        for (int r = 0; r < d; ++r) {
            const auto& c = ps.constraints[comb[r]];
            for (const auto& [i, coef] : c.expr.terms) mat[r][i] = coef;
            rhs[r] = -c.expr.constant;
        }
        // Gaussian elimination with partial pivoting; constraint coefficients
        // are 0/+-1, so an absolute rank threshold of 1e-9 is safe.
        bool singular = false;
        for (int col = 0; col < d && !singular; ++col) {
            int piv = col;
            for (int r = col + 1; r < d; ++r)
                if (std::abs(mat[r][col]) > std::abs(mat[piv][col])) piv = r;
            if (std::abs(mat[piv][col]) < 1e-9) { singular = true; break; }
            std::swap(mat[piv], mat[col]);
            std::swap(rhs[piv], rhs[col]);
            for (int r = col + 1; r < d; ++r) {
                const double f = mat[r][col] / mat[col][col];
                if (f == 0.0) continue;
                for (int j = col; j < d; ++j) mat[r][j] -= f * mat[col][j];
                rhs[r] -= f * rhs[col];
            }
        }
        if (singular) continue;
        ActionVector x;
        x.values.assign(d, 0.0);
        for (int r = d - 1; r >= 0; --r) {
            double s = rhs[r];
            for (int j = r + 1; j < d; ++j) s -= mat[r][j] * x.values[j];
            x.values[r] = s / mat[r][r];
        }
        if (membership(ps, x, 1e-9).region == Region::outside) continue;
        bool dup = false;
        for (const auto& v : out) {
            double diff = 0.0;
            for (int i = 0; i < d; ++i) diff = std::max(diff, std::abs(v.values[i] - x.values[i]));
            if (diff <= 1e-9) { dup = true; break; }
        }
        if (!dup) out.push_back(std::move(x));
    } while (next_comb());

    std::sort(out.begin(), out.end(), [](const ActionVector& a, const ActionVector& b) {
        return a.values < b.values;
    });
    return out;
}

/// Inverse eigenvalue problem by bordering: builds an orbit point whose
/// pattern is the given one. Level k+1 is obtained from A_k by appending, in
/// the eigenbasis of A_k, a border column b with
///     b_i^2 = -prod_l (mu_i - lambda_l) / prod_{l != i} (mu_i - mu_l)
/// and corner c = sum(lambda) - sum(mu). Coinciding mu values are handled by
/// the clustered limit: duplicated directions get b_i = 0 and the
/// representative cancels the vanishing factors pairwise. Negatives under the
/// square root (possible at |slack| ~ tol) are clamped to zero, which keeps
/// the construction continuous at the boundary.
inline OrbitPoint reconstruct(const PolytopeSpec& ps, const ActionVector& a) {
    const OrbitSpec& spec = ps.spec;
    const double diam = std::max(spec.diameter(), 1e-300);
    if (membership(ps, a, 1e-9 * std::max(1.0, diam)).region == Region::outside)
        throw InfeasiblePattern("reconstruct: pattern violates interlacing");
    const GTPattern pat = pattern_from_action(spec, a);
    const double ctol = 1e-8 * diam;

    ComplexMatrix A(1, 1);
    A(0, 0) = pat.entry(1, 1);
    for (int k = 1; k <= spec.n - 1; ++k) {
        const auto d = eig_hermitian(HermitianMatrix(A));
        const std::vector<double>& mu = d.values;          // descending
        const std::vector<double>& target = pat.rows[k];   // row k+1, descending

        const double sum_mu = std::accumulate(mu.begin(), mu.end(), 0.0);
        const double sum_t = std::accumulate(target.begin(), target.end(), 0.0);
        const double corner = sum_t - sum_mu;

        std::vector<double> b(k, 0.0);
        int i = 0;
        while (i < k) {
            int j = i + 1;
            while (j < k && mu[i] - mu[j] <= ctol) ++j;
            const int msize = j - i;
            const double rep = mu[i];
            // cancel the msize-1 target factors nearest zero against the
            // vanishing denominator factors inside the cluster
            std::vector<double> diffs;
            diffs.reserve(target.size());
            for (double t : target) diffs.push_back(rep - t);
            std::sort(diffs.begin(), diffs.end(),
                      [](double x, double y) { return std::abs(x) < std::abs(y); });
            double num = 1.0;
            for (std::size_t l = static_cast<std::size_t>(msize) - 1; l < diffs.size(); ++l)
                num *= diffs[l];
            double den = 1.0;
            for (int l = 0; l < k; ++l)
                if (l < i || l >= j) den *= rep - mu[l];
            b[i] = std::sqrt(std::max(0.0, -num / den));
            i = j;
        }

        ComplexMatrix next(k + 1, k + 1);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) next(r, c) = A(r, c);
        for (int r = 0; r < k; ++r) {
            cdouble u = 0.0;
            for (int c = 0; c < k; ++c) u += d.vectors(r, c) * b[c];
            next(r, k) = u;
            next(k, r) = std::conj(u);
        }
        next(k, k) = corner;
        A = std::move(next);
    }
    return {spec, HermitianMatrix(A)};
}

/// Returns the polytope dimension and cross-validates it against half_dim.
inline int dimension_check(const PolytopeSpec& ps) {
    if (ps.dim != ps.spec.half_dim)
        throw InvariantViolation("dimension_check: free entry count != half orbit dimension");
    return ps.dim;
}

} // namespace gtlax

#endif
