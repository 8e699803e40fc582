/*
 * Hermitian eigendecomposition by cyclic Jacobi rotations.
 *
 * Jacobi is chosen over tridiagonalization on purpose: it is simple, accurate,
 * and produces the orthonormal eigenvectors that eigenvalue gradients need.
 * Eigenvalues are returned in descending order; ties keep the original index
 * order, so identical inputs always give identical outputs.
 */

#ifndef GTLAX_EIG_HPP
#define GTLAX_EIG_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace gtlax {

struct EigenDecomposition {
    std::vector<double> values; // descending
    ComplexMatrix vectors;      // unitary; column j pairs with values[j]
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& m) {
    double s = 0.0;
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

} // namespace detail

inline EigenDecomposition eig_hermitian(const HermitianMatrix& a, int max_sweeps = 100) {
    const int n = a.size();
    ComplexMatrix m = a.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = m.frobenius_norm();
    const double stop = 1e-14 * scale;

    bool converged = (scale == 0.0) || (n <= 1);
    double off = detail::off_diagonal_norm(m);
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        if (off <= stop) { converged = true; break; }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cdouble beta = m(p, q);
                const double ab = std::abs(beta);
                if (ab <= 1e-300) continue;
                const cdouble phase = beta / ab; // e^{i phi}
                const double alpha = m(p, p).real();
                const double gamma = m(q, q).real();

                // Real Jacobi rotation for [[alpha, |beta|], [|beta|, gamma]]:
                // J = [[c, s], [-s, c]], tan picked as the smaller root.
                const double tau = (gamma - alpha) / (2.0 * ab);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Full unitary U = diag(1, conj(phase)) * J:
                // U_pp = c, U_pq = s, U_qp = -s*conj(phase), U_qq = c*conj(phase).
                const cdouble upq = s;
                const cdouble uqp = -s * std::conj(phase);
                const cdouble uqq = c * std::conj(phase);

                // M <- U^H M U; columns first, then rows.
                for (int i = 0; i < n; ++i) {
                    const cdouble mip = m(i, p), miq = m(i, q);
                    m(i, p) = mip * c + miq * uqp;
                    m(i, q) = mip * upq + miq * uqq;
                }
                for (int j = 0; j < n; ++j) {
                    const cdouble mpj = m(p, j), mqj = m(q, j);
                    m(p, j) = c * mpj + std::conj(uqp) * mqj;
                    m(q, j) = std::conj(upq) * mpj + std::conj(uqq) * mqj;
                }
                // Analytic updates keep the pivot exactly zero and the diagonal real.
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                m(p, p) = alpha - t * ab;
                m(q, q) = gamma + t * ab;

                for (int i = 0; i < n; ++i) {
                    const cdouble vip = v(i, p), viq = v(i, q);
                    v(i, p) = vip * c + viq * uqp;
                    v(i, q) = vip * upq + viq * uqq;
                }
            }
        }
        off = detail::off_diagonal_norm(m);
        if (off <= stop) converged = true;
    }
    if (!converged) throw EigNonConvergence(off, max_sweeps);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return m(i, i).real() > m(j, j).real(); });

    EigenDecomposition d;
    d.values.resize(n);
    d.vectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        d.values[j] = m(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) d.vectors(i, j) = v(i, order[j]);
    }
    return d;
}

inline std::vector<double> eigenvalues(const HermitianMatrix& a) {
    return eig_hermitian(a).values;
}

} // namespace gtlax

#endif
