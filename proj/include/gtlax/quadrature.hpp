/*
 * Midpoint quadrature on [0, pi] with node doubling. For integrands that
 * extend to smooth even periodic functions this rule converges spectrally,
 * which is exactly the situation the hyperelliptic period integrals are
 * brought into by the cosine substitution.
 */

#ifndef GTLAX_QUADRATURE_HPP
#define GTLAX_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <numbers>

namespace gtlax {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t nodes = 0;
    bool converged = false;
};

/// Integrates f over [0, pi]. Doubles the node count until two successive
/// midpoint evaluations agree to target_tol, up to max_nodes (default 2^20).
template <class F>
QuadratureResult gauss_periodic_quadrature(F&& f, double target_tol,
                                           std::size_t max_nodes = std::size_t{1} << 20) {
    constexpr double pi = std::numbers::pi;
    auto midpoint = [&](std::size_t n) {
        const double h = pi / static_cast<double>(n);
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += f((static_cast<double>(j) + 0.5) * h);
        return s * h;
    };

    std::size_t n = 16;
    double prev = midpoint(n);
    while (n < max_nodes) {
        n *= 2;
        const double cur = midpoint(n);
        const double err = std::abs(cur - prev);
        if (err <= target_tol) return {cur, err, n, true};
        prev = cur;
    }
    return {prev, std::abs(prev) , n, false};
}

} // namespace gtlax

#endif
