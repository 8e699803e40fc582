/*
 * The block Lax matrix L(Z) = diag(L_1, ..., L_{n-1}) built from the nested
 * principal submatrices of an orbit point, its spectral data arranged as a
 * Gelfand-Tsetlin pattern, and the action map reading off the free entries.
 *
 * Pattern conventions:
 *   - entry (j, k), 1 <= j <= k <= n, is the j-th descending eigenvalue of the
 *     leading k x k block; row n is the orbit spectrum itself;
 *   - entry (j, k) with k <= n-1 is frozen iff lambda_j == lambda_{j+n-k}
 *     (exact equality on the spec, a purely combinatorial test), in which case
 *     its value is pinched to lambda_j;
 *   - ActionVector lists the free entries with k descending from n-1 to 1 and
 *     j ascending inside each row. All file schemas rely on this order.
 */

#ifndef GTLAX_GTSYSTEM_HPP
#define GTLAX_GTSYSTEM_HPP

#include <cmath>
#include <string>
#include <vector>

#include "orbit.hpp"
#include "polynomial.hpp"

namespace gtlax {

struct LaxMatrix {
    std::vector<HermitianMatrix> blocks; // sizes 1 .. n-1
    int r = 0;                           // n(n-1)/2
};

inline LaxMatrix lax_matrix(const OrbitPoint& z) {
    const int n = z.spec.n;
    if (n < 2) throw std::invalid_argument("lax_matrix: need n >= 2");
    LaxMatrix l;
    l.blocks.reserve(n - 1);
    for (int k = 1; k <= n - 1; ++k) l.blocks.push_back(moment_block(z, k));
    l.r = n * (n - 1) / 2;
    return l;
}

/// det(w 1_r - L) as the product of the block characteristic polynomials.
inline RealPolynomial lax_char_poly(const LaxMatrix& l) {
    RealPolynomial p = RealPolynomial::constant(1.0);
    for (const auto& b : l.blocks) p = p * char_poly(b);
    return p;
}

/// The r x r block-diagonal matrix itself (mostly for cross-checks).
inline ComplexMatrix lax_block_diag(const LaxMatrix& l) {
    ComplexMatrix m(l.r, l.r);
    int off = 0;
    for (const auto& b : l.blocks) {
        for (int i = 0; i < b.size(); ++i)
            for (int j = 0; j < b.size(); ++j) m(off + i, off + j) = b(i, j);
        off += b.size();
    }
    return m;
}

/// Coefficients (lowest degree first) of det(w 1_r - (zeta 1_r + L)), i.e. the
/// characteristic polynomial of L in the shifted variable w - zeta.
inline std::vector<cdouble> shift_spectral_parameter(const LaxMatrix& l, cdouble zeta) {
    const RealPolynomial p = lax_char_poly(l);
    std::vector<cdouble> c(p.coeffs().begin(), p.coeffs().end());
    return taylor_shift(c, -zeta);
}

inline bool entry_frozen(const OrbitSpec& spec, int j, int k) {
    if (k >= spec.n) return true; // row n is the fixed spectrum
    return spec.lambda[j - 1] == spec.lambda[j - 1 + spec.n - k];
}

struct GTPattern {
    OrbitSpec spec;
    std::vector<std::vector<double>> rows; // rows[k-1] has k entries, k = 1..n, descending

    double entry(int j, int k) const { return rows[k - 1][j - 1]; }
    bool frozen(int j, int k) const { return entry_frozen(spec, j, k); }

    int free_count() const {
        int c = 0;
        for (int k = 1; k <= spec.n - 1; ++k)
            for (int j = 1; j <= k; ++j)
                if (!frozen(j, k)) ++c;
        return c;
    }
};

inline GTPattern gt_pattern(const OrbitPoint& z) {
    GTPattern p;
    p.spec = z.spec;
    p.rows.resize(z.spec.n);
    for (int k = 1; k <= z.spec.n - 1; ++k) p.rows[k - 1] = eigenvalues(moment_block(z, k));
    p.rows[z.spec.n - 1] = z.spec.lambda;
    return p;
}

struct ActionVector {
    std::vector<double> values; // k = n-1 .. 1, j ascending within each row
};

inline ActionVector action_of(const GTPattern& p) {
    ActionVector a;
    for (int k = p.spec.n - 1; k >= 1; --k)
        for (int j = 1; j <= k; ++j)
            if (!p.frozen(j, k)) a.values.push_back(p.entry(j, k));
    return a;
}

inline ActionVector action_map(const OrbitPoint& z) { return action_of(gt_pattern(z)); }

/// Rebuilds the full triangular pattern from an action vector: free slots are
/// filled in the documented order, frozen slots with their pinched values.
inline GTPattern pattern_from_action(const OrbitSpec& spec, const ActionVector& a) {
    if (static_cast<int>(a.values.size()) != spec.half_dim)
        throw std::invalid_argument("pattern_from_action: wrong action vector length");
    GTPattern p;
    p.spec = spec;
    p.rows.resize(spec.n);
    p.rows[spec.n - 1] = spec.lambda;
    std::size_t idx = 0;
    for (int k = spec.n - 1; k >= 1; --k) {
        p.rows[k - 1].resize(k);
        for (int j = 1; j <= k; ++j)
            p.rows[k - 1][j - 1] = entry_frozen(spec, j, k) ? spec.lambda[j - 1] : a.values[idx++];
    }
    return p;
}

/// One interlacing constraint of the pattern: entry (j,k) against its upper
/// parent (j,k+1) if upper, else against its lower parent (j+1,k+1).
struct InterlacingConstraint {
    int j = 0;
    int k = 0;
    bool upper = true;
    double slack = 0.0;

    std::string label() const {
        const std::string child = "a(" + std::to_string(j) + "," + std::to_string(k) + ")";
        const std::string parent = upper
            ? "a(" + std::to_string(j) + "," + std::to_string(k + 1) + ")"
            : "a(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
        return upper ? child + " <= " + parent : child + " >= " + parent;
    }
};

struct InterlacingReport {
    bool ok = true;
    std::vector<InterlacingConstraint> saturated; // |slack| <= tol
    std::vector<InterlacingConstraint> violated;  // slack < -tol
};

inline InterlacingReport check_interlacing(const GTPattern& p, double tol) {
    InterlacingReport rep;
    for (int k = 1; k <= p.spec.n - 1; ++k) {
        for (int j = 1; j <= k; ++j) {
            const double up = p.entry(j, k + 1) - p.entry(j, k);
            const double dn = p.entry(j, k) - p.entry(j + 1, k + 1);
            const InterlacingConstraint cu{j, k, true, up};
            const InterlacingConstraint cd{j, k, false, dn};
            for (const auto& c : {cu, cd}) {
                if (c.slack < -tol) {
                    rep.violated.push_back(c);
                    rep.ok = false;
                } else if (std::abs(c.slack) <= tol) {
                    rep.saturated.push_back(c);
                }
            }
        }
    }
    return rep;
}

/// Operational test for the regular locus: every free entry is strictly
/// separated from both interlacing parents by more than tol.
inline bool is_regular(const OrbitPoint& z, double tol) {
    const GTPattern p = gt_pattern(z);
    for (int k = 1; k <= z.spec.n - 1; ++k)
        for (int j = 1; j <= k; ++j) {
            if (p.frozen(j, k)) continue;
            if (p.entry(j, k + 1) - p.entry(j, k) <= tol) return false;
            if (p.entry(j, k) - p.entry(j + 1, k + 1) <= tol) return false;
        }
    return true;
}

/// Eigenvalues of ad(B) on the complexified algebra, traceless part: the
/// multiset of pairwise differences {mu_i - mu_j : i != j}, closed under
/// negation. k(k-1) values for a k x k block.
inline std::vector<double> adjoint_spectrum(const HermitianMatrix& block) {
    if (block.size() < 2) throw std::invalid_argument("adjoint_spectrum: need k >= 2");
    const auto mu = eigenvalues(block);
    std::vector<double> out;
    out.reserve(mu.size() * (mu.size() - 1));
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = 0; j < mu.size(); ++j)
            if (i != j) out.push_back(mu[i] - mu[j]);
    return out;
}

/// The pattern entry (j,k) as a differentiable orbit function Lambda_j(L_k).
inline OrbitFunction gt_entry_function(int k, int j, double gap_tol = -1.0) {
    OrbitFunction f;
    f.name = "a(" + std::to_string(j) + "," + std::to_string(k) + ")";
    f.value = [k, j](const OrbitPoint& z) { return eigenvalues(moment_block(z, k))[j - 1]; };
    f.gradient = [k, j, gap_tol](const OrbitPoint& z) {
        return grad_eigenvalue(z, k, j, gap_tol);
    };
    return f;
}

/// All free-entry functions, in ActionVector order.
inline std::vector<OrbitFunction> free_entry_functions(const OrbitSpec& spec,
                                                       double gap_tol = -1.0) {
    std::vector<OrbitFunction> fs;
    for (int k = spec.n - 1; k >= 1; --k)
        for (int j = 1; j <= k; ++j)
            if (!entry_frozen(spec, j, k)) fs.push_back(gt_entry_function(k, j, gap_tol));
    return fs;
}

} // namespace gtlax

#endif
