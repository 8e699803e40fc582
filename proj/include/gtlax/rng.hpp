/*
 * Deterministic seeded randomness. The generator is splitmix64, uniforms are
 * built from the top 53 bits, and normals come from Box-Muller, so streams
 * are bit-reproducible across platforms and standard libraries.
 *
 * Parallel callers derive independent streams with child(): the child seed is
 * hash(parent_seed, stream_index).
 */

#ifndef GTLAX_RNG_HPP
#define GTLAX_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

#include "matrix.hpp"

namespace gtlax {

struct Rng {
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller; the second deviate of each pair is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1;
        do { u1 = uniform(); } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// child_seed = hash(parent_seed, stream_index); documented stream-split rule.
    static std::uint64_t child_seed(std::uint64_t parent, std::uint64_t stream_index) {
        return mix(parent + 0x9E3779B97F4A7C15ull * (stream_index + 1));
    }

    Rng child(std::uint64_t stream_index) const {
        return Rng(child_seed(state, stream_index));
    }

    std::uint64_t state;

private:
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-distributed n x n unitary: complex Ginibre followed by Gram-Schmidt QR
/// with a reorthogonalization pass and positive-real diagonal normalization.
inline ComplexMatrix random_unitary(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_unitary: n must be >= 1");
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g(i, j) = cdouble(rng.normal(), rng.normal()) / std::sqrt(2.0);

    ComplexMatrix q(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<cdouble> v(n);
        for (int i = 0; i < n; ++i) v[i] = g(i, j);
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                cdouble proj = 0.0;
                for (int i = 0; i < n; ++i) proj += std::conj(q(i, k)) * v[i];
                for (int i = 0; i < n; ++i) v[i] -= proj * q(i, k);
            }
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += std::norm(v[i]);
        norm = std::sqrt(norm);
        // r_jj = norm is real and positive, so the phase correction is trivial;
        // dividing by it leaves the QR factor with a positive diagonal, which is
        // the normalization that makes Q Haar.
        for (int i = 0; i < n; ++i) q(i, j) = v[i] / norm;
    }
    return q;
}

} // namespace gtlax

#endif
