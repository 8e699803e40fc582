/*
 * Hamiltonian dynamics of collective Hamiltonians as isospectral matrix flows
 * dZ/dt = [S(Z), Z], S(Z) = i * pad(grad F(Z_k)), where Z_k is the leading
 * k x k moment block of the level the Hamiltonian lives at.
 *
 * Two integrators on purpose: rk4_direct steps the raw matrix ODE, so its
 * spectral drift is a measurable O(dt^4) diagnostic; lie_midpoint conjugates
 * by exp(dt S) evaluated at a fixed-point midpoint estimate, so the full
 * spectrum of Z is preserved to rounding no matter how long the run is.
 */

#ifndef GTLAX_FLOW_HPP
#define GTLAX_FLOW_HPP

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "eig.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "orbit.hpp"

namespace gtlax {

/// Matrix exponential by scaling-and-squaring with a degree (6,6) Pade
/// approximant. The scaling power comes from the spectral norm, computed
/// exactly for (skew-)Hermitian input via the Jacobi eigensolver and bounded
/// by the Frobenius norm otherwise.
inline ComplexMatrix expm(const ComplexMatrix& a) {
    if (!a.square()) throw std::invalid_argument("expm: matrix not square");
    const int n = a.rows();

    double nrm;
    const double amax = a.max_abs();
    if ((a + a.adjoint()).max_abs() <= 1e-12 * std::max(1.0, amax)) {
        // skew-Hermitian: iA is Hermitian with the same spectral norm
        const auto vals = eigenvalues(HermitianMatrix(a * cdouble(0.0, 1.0)));
        nrm = 0.0;
        for (double v : vals) nrm = std::max(nrm, std::abs(v));
    } else if (max_abs_diff(a, a.adjoint()) <= 1e-12 * std::max(1.0, amax)) {
        const auto vals = eigenvalues(HermitianMatrix(a));
        nrm = 0.0;
        for (double v : vals) nrm = std::max(nrm, std::abs(v));
    } else {
        nrm = a.frobenius_norm();
    }

    int s = 0;
    double scaled = nrm;
    while (scaled > 0.25) {
        scaled *= 0.5;
        ++s;
    }
    ComplexMatrix b = a * cdouble(std::ldexp(1.0, -s), 0.0);

    // Pade(6,6) coefficients c_j = c_{j-1} (6-j+1) / ((12-j+1) j)
    static constexpr double c[] = {1.0,        1.0 / 2.0,    5.0 / 44.0,  1.0 / 66.0,
                                   1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0};
    ComplexMatrix num = ComplexMatrix::identity(n);
    ComplexMatrix den = ComplexMatrix::identity(n);
    ComplexMatrix power = ComplexMatrix::identity(n);
    for (int j = 1; j <= 6; ++j) {
        power = power * b;
        num += power * cdouble(c[j], 0.0);
        den += power * cdouble((j % 2 == 0) ? c[j] : -c[j], 0.0);
    }
    ComplexMatrix x = solve_linear(den, num);
    for (int i = 0; i < s; ++i) x = x * x;
    return x;
}

/// A collective Hamiltonian F pulled back through the level-k moment map.
/// F is one of: Tr(A^m) (trace_power), Re Tr(C A) (linear), or the j-th
/// descending eigenvalue of A (eigenvalue; requires a simple eigenvalue).
struct CollectiveHamiltonian {
    enum class Kind { trace_power, linear, eigenvalue };

    int level = 1;
    Kind kind = Kind::trace_power;
    int power = 2;
    HermitianMatrix C;
    int eig_index = 1;
    double gap_tol = -1.0; // for eigenvalue kind; resolved against the orbit spec

    static CollectiveHamiltonian trace_power(int level, int m) {
        CollectiveHamiltonian h;
        h.level = level;
        h.kind = Kind::trace_power;
        h.power = m;
        return h;
    }
    static CollectiveHamiltonian linear(int level, HermitianMatrix c) {
        CollectiveHamiltonian h;
        h.level = level;
        h.kind = Kind::linear;
        h.C = std::move(c);
        return h;
    }
    static CollectiveHamiltonian eigenvalue(int level, int j, double gap_tol = -1.0) {
        CollectiveHamiltonian h;
        h.level = level;
        h.kind = Kind::eigenvalue;
        h.eig_index = j;
        h.gap_tol = gap_tol;
        return h;
    }

    std::string name() const {
        switch (kind) {
            case Kind::trace_power: return "tr(A^" + std::to_string(power) + ") @ level " + std::to_string(level);
            case Kind::linear: return "tr(C A) @ level " + std::to_string(level);
            default: return "eig " + std::to_string(eig_index) + " @ level " + std::to_string(level);
        }
    }

    double value_at(const HermitianMatrix& block) const {
        switch (kind) {
            case Kind::trace_power: {
                ComplexMatrix p = ComplexMatrix::identity(block.size());
                for (int i = 0; i < power; ++i) p = p * block.matrix();
                return p.trace().real();
            }
            case Kind::linear:
                return (C.matrix() * block.matrix()).trace().real();
            default:
                return eigenvalues(block)[eig_index - 1];
        }
    }

    /// Hermitian gradient of F at a k x k block: m A^{m-1}, C, or v_j v_j^H.
    HermitianMatrix grad_at(const HermitianMatrix& block, double resolved_gap_tol) const {
        switch (kind) {
            case Kind::trace_power: {
                ComplexMatrix p = ComplexMatrix::identity(block.size());
                for (int i = 0; i < power - 1; ++i) p = p * block.matrix();
                return HermitianMatrix(p * cdouble(power, 0.0));
            }
            case Kind::linear:
                return C;
            default: {
                const auto d = eig_hermitian(block);
                const int j = eig_index;
                if (j > 1 && d.values[j - 2] - d.values[j - 1] <= resolved_gap_tol)
                    throw NearDegenerateEigenvalue(d.values[j - 2] - d.values[j - 1],
                                                   resolved_gap_tol);
                if (j < block.size() && d.values[j - 1] - d.values[j] <= resolved_gap_tol)
                    throw NearDegenerateEigenvalue(d.values[j - 1] - d.values[j],
                                                   resolved_gap_tol);
                ComplexMatrix g(block.size(), block.size());
                for (int a = 0; a < block.size(); ++a)
                    for (int b = 0; b < block.size(); ++b)
                        g(a, b) = d.vectors(a, j - 1) * std::conj(d.vectors(b, j - 1));
                return HermitianMatrix(g);
            }
        }
    }

    OrbitFunction as_function() const {
        OrbitFunction f;
        f.name = name();
        const CollectiveHamiltonian h = *this;
        f.value = [h](const OrbitPoint& z) { return h.value_at(moment_block(z, h.level)); };
        f.gradient = [h](const OrbitPoint& z) {
            const double tol = h.gap_tol >= 0.0 ? h.gap_tol : 1e-8 * z.spec.diameter();
            return pad_to(h.grad_at(moment_block(z, h.level), tol), z.spec.n);
        };
        return f;
    }
};

/// Skew-Hermitian flow generator S(Z) = i * pad(grad F(Z_k)); the Hamiltonian
/// vector field is V = [S, Z]. Eigenvalue-kind Hamiltonians refuse to operate
/// across near-degeneracies (default gap 1e-6 * diameter) rather than silently
/// jumping branches.
inline ComplexMatrix generator(const OrbitPoint& z, const CollectiveHamiltonian& h) {
    const double tol = h.gap_tol >= 0.0 ? h.gap_tol : 1e-6 * z.spec.diameter();
    const HermitianMatrix g = h.grad_at(moment_block(z, h.level), tol);
    return pad_to(g, z.spec.n).matrix() * cdouble(0.0, 1.0);
}

enum class IntegrationMethod { rk4_direct, lie_midpoint };

struct IntegrateOptions {
    int midpoint_passes = 1;       // fixed-point refinements of the midpoint (1..5)
    double rk4_error_tol = 1e-6;   // step-doubling local error rejection threshold
};

struct Trajectory {
    std::vector<double> times;
    std::vector<OrbitPoint> points;
    CollectiveHamiltonian hamiltonian;
    IntegrationMethod method = IntegrationMethod::lie_midpoint;
    double dt = 0.0;
};

namespace detail {

inline HermitianMatrix hamiltonian_field(const OrbitPoint& z, const CollectiveHamiltonian& h) {
    const ComplexMatrix s = generator(z, h);
    return HermitianMatrix(s * z.Z.matrix() - z.Z.matrix() * s);
}

inline HermitianMatrix rk4_step(const OrbitPoint& z0, const CollectiveHamiltonian& h, double dt) {
    const OrbitSpec& spec = z0.spec;
    auto f = [&](const HermitianMatrix& m) {
        return hamiltonian_field({spec, m}, h);
    };
    const HermitianMatrix k1 = f(z0.Z);
    const HermitianMatrix k2 = f(z0.Z + (dt / 2.0) * k1);
    const HermitianMatrix k3 = f(z0.Z + (dt / 2.0) * k2);
    const HermitianMatrix k4 = f(z0.Z + dt * k3);
    return z0.Z + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

inline HermitianMatrix lie_midpoint_step(const OrbitPoint& z0, const CollectiveHamiltonian& h,
                                         double dt, int passes) {
    const OrbitSpec& spec = z0.spec;
    ComplexMatrix s = generator(z0, h);
    // fixed-point refinement of the midpoint generator
    for (int p = 0; p < passes; ++p) {
        const ComplexMatrix e = expm(s * cdouble(dt / 2.0, 0.0));
        const HermitianMatrix z_half = HermitianMatrix(e * z0.Z.matrix() * e.adjoint());
        s = generator({spec, z_half}, h);
    }
    const ComplexMatrix e = expm(s * cdouble(dt, 0.0));
    return HermitianMatrix(e * z0.Z.matrix() * e.adjoint());
}

} // namespace detail

/// Integrates dZ/dt = [S(Z), Z] from t = 0 to t = T in fixed steps dt.
/// Negative T integrates backward. rk4_direct checks a step-doubling local
/// error estimate each step and throws StepRejected above the tolerance.
inline Trajectory integrate(const OrbitPoint& z0, const CollectiveHamiltonian& h, double dt,
                            double T, IntegrationMethod method,
                            const IntegrateOptions& opt = {}) {
    if (dt <= 0.0) throw std::invalid_argument("integrate: dt must be positive");
    if (std::abs(T) < dt) throw std::invalid_argument("integrate: |T| must be >= dt");
    const int passes = std::clamp(opt.midpoint_passes, 1, 5);
    const long steps = std::lround(std::abs(T) / dt);
    const double h_step = (T < 0.0) ? -dt : dt;

    Trajectory traj;
    traj.hamiltonian = h;
    traj.method = method;
    traj.dt = dt;
    traj.times.reserve(steps + 1);
    traj.points.reserve(steps + 1);
    traj.times.push_back(0.0);
    traj.points.push_back(z0);

    OrbitPoint z = z0;
    for (long m = 0; m < steps; ++m) {
        if (method == IntegrationMethod::lie_midpoint) {
            z.Z = detail::lie_midpoint_step(z, h, h_step, passes);
        } else {
            const HermitianMatrix full = detail::rk4_step(z, h, h_step);
            const HermitianMatrix half = detail::rk4_step(
                {z.spec, detail::rk4_step(z, h, h_step / 2.0)}, h, h_step / 2.0);
            const double err = (full - half).max_abs() / 15.0;
            if (err > opt.rk4_error_tol)
                throw StepRejected(traj.times.back(), err);
            z.Z = half;
        }
        traj.times.push_back(static_cast<double>(m + 1) * h_step);
        traj.points.push_back(z);
    }
    return traj;
}

struct DriftEntry {
    std::string name;
    double drift = 0.0;
};

/// Max |q(Z_t) - q(Z_0)| along the trajectory for each quantity, sorted
/// descending by drift.
inline std::vector<DriftEntry> conservation_report(const Trajectory& traj,
                                                   const std::vector<OrbitFunction>& quantities) {
    std::vector<DriftEntry> out;
    out.reserve(quantities.size());
    for (const auto& q : quantities) {
        const double q0 = q.value(traj.points.front());
        double drift = 0.0;
        for (const auto& z : traj.points) drift = std::max(drift, std::abs(q.value(z) - q0));
        out.push_back({q.name, drift});
    }
    std::sort(out.begin(), out.end(),
              [](const DriftEntry& a, const DriftEntry& b) { return a.drift > b.drift; });
    return out;
}

/// Harmonic oscillator fixture: L = [[p, Cq], [Cq, -p]], P = (C/2) [[0,-1],[1,0]],
/// dL/dt = [P, L]. The Lax flow is integrated by conjugation with exp(dt P)
/// (the generator is constant, so the midpoint scheme is exact here) and
/// compared against the closed form q(t) = q0 cos(Ct) + (p0/C) sin(Ct).
struct OscillatorRun {
    std::vector<double> times, q, p, q_exact, p_exact;
    double max_position_error = 0.0;
    double max_energy_drift = 0.0;
    double max_eigenvalue_drift = 0.0;
};

inline OscillatorRun harmonic_oscillator(double q0, double p0, double C, double dt, double T) {
    if (C == 0.0) throw std::invalid_argument("harmonic_oscillator: C must be nonzero");
    if (dt <= 0.0 || T < dt) throw std::invalid_argument("harmonic_oscillator: bad dt/T");

    ComplexMatrix L(2, 2);
    L(0, 0) = p0; L(0, 1) = C * q0;
    L(1, 0) = C * q0; L(1, 1) = -p0;
    ComplexMatrix P(2, 2);
    P(0, 1) = -C / 2.0;
    P(1, 0) = C / 2.0;
    const ComplexMatrix E = expm(P * cdouble(dt, 0.0));

    const long steps = std::lround(T / dt);
    const double e0 = 0.5 * (p0 * p0 + C * C * q0 * q0);
    const double lam0 = std::sqrt(p0 * p0 + C * C * q0 * q0);

    OscillatorRun run;
    run.times.reserve(steps + 1);
    for (long m = 0; m <= steps; ++m) {
        const double t = static_cast<double>(m) * dt;
        const double q = L(0, 1).real() / C;
        const double p = L(0, 0).real();
        const double qe = q0 * std::cos(C * t) + (p0 / C) * std::sin(C * t);
        const double pe = -q0 * C * std::sin(C * t) + p0 * std::cos(C * t);
        run.times.push_back(t);
        run.q.push_back(q);
        run.p.push_back(p);
        run.q_exact.push_back(qe);
        run.p_exact.push_back(pe);
        run.max_position_error = std::max(run.max_position_error, std::abs(q - qe));

        // H = (1/4) Tr(L^2) = (1/2)(p^2 + C^2 q^2)
        const double energy = 0.25 * (L * L).trace().real();
        run.max_energy_drift = std::max(run.max_energy_drift, std::abs(energy - e0));
        const auto ev = eigenvalues(HermitianMatrix(L));
        run.max_eigenvalue_drift =
            std::max(run.max_eigenvalue_drift,
                     std::max(std::abs(ev[0] - lam0), std::abs(ev[1] + lam0)));

        if (m < steps) L = E * L * E.adjoint();
    }
    return run;
}

} // namespace gtlax

#endif
