/*
 * Adjoint orbits O(Lambda) of U(n) in the Hermitian picture: the skew-Hermitian
 * algebra is mapped once at the API boundary by X -> -iX, so every stored
 * matrix is Hermitian and has real spectrum. An orbit point is an n x n
 * Hermitian Z with prescribed eigenvalues; the U(k) moment map is the leading
 * k x k principal submatrix.
 *
 * Bracket convention, fixed once for the whole library:
 *     {f, g}(Z) = +Im Tr(Z [grad f(Z), grad g(Z)]),
 * where grad is the Hermitian gradient, d/dt f(Z + tV)|_0 = Re Tr(grad f . V).
 */

#ifndef GTLAX_ORBIT_HPP
#define GTLAX_ORBIT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "eig.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "rng.hpp"

namespace gtlax {

struct OrbitBlock {
    double value;
    int multiplicity;
};

struct OrbitSpec {
    int n = 0;
    std::vector<double> lambda;     // descending
    std::vector<OrbitBlock> blocks; // runs of equal values in lambda
    int orbit_dim = 0;              // n^2 - sum k_j^2
    int half_dim = 0;               // orbit_dim / 2 = number of free pattern entries

    double diameter() const { return lambda.empty() ? 0.0 : lambda.front() - lambda.back(); }
};

/// Sorts descending and groups exactly equal values into blocks. Equality is
/// exact on purpose: merging nearby eigenvalues changes the combinatorial type
/// of the orbit and must be an explicit caller decision.
inline OrbitSpec make_spec(std::vector<double> lambda) {
    if (lambda.empty()) throw std::invalid_argument("make_spec: empty eigenvalue list");
    std::sort(lambda.begin(), lambda.end(), std::greater<double>());
    OrbitSpec spec;
    spec.n = static_cast<int>(lambda.size());
    spec.lambda = std::move(lambda);
    int sum_sq = 0;
    std::size_t i = 0;
    while (i < spec.lambda.size()) {
        std::size_t j = i + 1;
        while (j < spec.lambda.size() && spec.lambda[j] == spec.lambda[i]) ++j;
        const int k = static_cast<int>(j - i);
        spec.blocks.push_back({spec.lambda[i], k});
        sum_sq += k * k;
        i = j;
    }
    spec.orbit_dim = spec.n * spec.n - sum_sq;
    spec.half_dim = spec.orbit_dim / 2;
    return spec;
}

struct OrbitPoint {
    OrbitSpec spec;
    HermitianMatrix Z;
};

/// Z = U diag(lambda) U^H with U Haar.
inline OrbitPoint sample_point(const OrbitSpec& spec, Rng& rng) {
    const ComplexMatrix u = random_unitary(spec.n, rng);
    const HermitianMatrix d = HermitianMatrix::diagonal(spec.lambda);
    return {spec, HermitianMatrix(u * d.matrix() * u.adjoint())};
}

inline OrbitPoint diagonal_point(const OrbitSpec& spec) {
    return {spec, HermitianMatrix::diagonal(spec.lambda)};
}

/// U(k) moment map: the leading k x k principal submatrix of Z.
inline HermitianMatrix moment_block(const OrbitPoint& z, int k) {
    if (k < 1 || k > z.spec.n) throw std::invalid_argument("moment_block: k out of range");
    return z.Z.leading_block(k);
}

/// Tangent vector V = [S, Z] at Z, produced together with its skew-Hermitian
/// generator S so that the symplectic form can be evaluated on it.
struct TangentVector {
    OrbitPoint base;
    ComplexMatrix S; // skew-Hermitian generator
    HermitianMatrix V;
};

inline TangentVector tangent_vector(const OrbitPoint& base, const ComplexMatrix& s) {
    if (!s.square() || s.rows() != base.spec.n)
        throw std::invalid_argument("tangent_vector: generator has wrong shape");
    const double skewness = (s + s.adjoint()).max_abs();
    if (skewness > 1e-10 * std::max(1.0, s.max_abs()))
        throw std::invalid_argument("tangent_vector: generator is not skew-Hermitian");
    const ComplexMatrix v = s * base.Z.matrix() - base.Z.matrix() * s;
    return {base, s, HermitianMatrix(v)};
}

/// Kirillov-Kostant-Souriau form evaluated on two tangent vectors at the same
/// point, computed in the skew-Hermitian picture (Z_skew = i Z):
/// omega(u, v) = -Re Tr(Z_skew [S_u, S_v]).
inline double kks_form(const TangentVector& u, const TangentVector& v) {
    if (u.base.spec.n != v.base.spec.n ||
        max_abs_diff(u.base.Z.matrix(), v.base.Z.matrix()) >
            1e-12 * std::max(1.0, u.base.Z.max_abs()))
        throw std::invalid_argument("kks_form: tangent vectors have different base points");
    const ComplexMatrix z_skew = u.base.Z.matrix() * cdouble(0.0, 1.0);
    const cdouble t = (z_skew * commutator(u.S, v.S)).trace();
    return -t.real();
}

/// Gradient of the simple eigenvalue j (descending, 1-based) of the k x k
/// moment block, as an n x n Hermitian matrix: the block-padded spectral
/// projector v_j v_j^H. Throws NearDegenerateEigenvalue when the gap to a
/// neighboring eigenvalue is <= gap_tol (default 1e-8 * spectral diameter).
inline HermitianMatrix grad_eigenvalue(const OrbitPoint& z, int k, int j, double gap_tol = -1.0) {
    if (k < 1 || k > z.spec.n) throw std::invalid_argument("grad_eigenvalue: k out of range");
    if (j < 1 || j > k) throw std::invalid_argument("grad_eigenvalue: j out of range");
    if (gap_tol < 0.0) gap_tol = 1e-8 * z.spec.diameter();

    const auto d = eig_hermitian(moment_block(z, k));
    if (j > 1) {
        const double gap = d.values[j - 2] - d.values[j - 1];
        if (gap <= gap_tol) throw NearDegenerateEigenvalue(gap, gap_tol);
    }
    if (j < k) {
        const double gap = d.values[j - 1] - d.values[j];
        if (gap <= gap_tol) throw NearDegenerateEigenvalue(gap, gap_tol);
    }

    ComplexMatrix g(z.spec.n, z.spec.n);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) g(a, b) = d.vectors(a, j - 1) * std::conj(d.vectors(b, j - 1));
    return HermitianMatrix(g);
}

/// A differentiable function on the orbit, exposing its value and Hermitian
/// gradient. Collective Hamiltonians and simple-eigenvalue functions provide
/// both.
struct OrbitFunction {
    std::string name;
    std::function<double(const OrbitPoint&)> value;
    std::function<HermitianMatrix(const OrbitPoint&)> gradient;
};

inline double poisson_bracket(const OrbitFunction& f, const OrbitFunction& g,
                              const OrbitPoint& z) {
    const ComplexMatrix gf = f.gradient(z).matrix();
    const ComplexMatrix gg = g.gradient(z).matrix();
    return (z.Z.matrix() * commutator(gf, gg)).trace().imag();
}

/// Coordinate function Re Z_{ij} (1-based indices) as an orbit function; its
/// gradient is (E_ij + E_ji)/2. Used as a generic non-invariant.
inline OrbitFunction re_entry_function(int i, int j) {
    OrbitFunction f;
    f.name = "Re Z(" + std::to_string(i) + "," + std::to_string(j) + ")";
    f.value = [i, j](const OrbitPoint& z) { return z.Z(i - 1, j - 1).real(); };
    f.gradient = [i, j](const OrbitPoint& z) {
        ComplexMatrix g(z.spec.n, z.spec.n);
        g(i - 1, j - 1) += 0.5;
        g(j - 1, i - 1) += 0.5;
        return HermitianMatrix(g);
    };
    return f;
}

} // namespace gtlax

#endif
