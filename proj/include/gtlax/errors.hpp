#ifndef GTLAX_ERRORS_HPP
#define GTLAX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gtlax {

/// Base class for failures of a numerical routine (as opposed to bad input).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Jacobi eigensolver ran out of sweeps; carries the remaining off-diagonal residual.
class EigNonConvergence : public NumericalError {
public:
    EigNonConvergence(double residual, int sweeps)
        : NumericalError("eig_hermitian: no convergence after " + std::to_string(sweeps) +
                         " sweeps, off-diagonal residual " + std::to_string(residual)),
          residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// An eigenvalue-derived quantity was requested where the eigenvalue gap is below tolerance.
class NearDegenerateEigenvalue : public NumericalError {
public:
    NearDegenerateEigenvalue(double gap, double tol)
        : NumericalError("near-degenerate eigenvalue: gap " + std::to_string(gap) +
                         " <= tolerance " + std::to_string(tol)),
          gap_(gap) {}
    double gap() const { return gap_; }

private:
    double gap_;
};

class DimensionTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InfeasiblePattern : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularCurve : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Branch points too close for the period quadrature to be trustworthy.
class NearSingular : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class RankDeficient : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Fixed-step integrator rejected a step whose local error estimate exceeded tolerance.
class StepRejected : public NumericalError {
public:
    StepRejected(double t, double error_estimate)
        : NumericalError("step rejected at t = " + std::to_string(t) +
                         ", local error estimate " + std::to_string(error_estimate)),
          t_(t), error_(error_estimate) {}
    double t() const { return t_; }
    double error_estimate() const { return error_; }

private:
    double t_;
    double error_;
};

class QuadratureNonConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A cross-check between two computation paths failed; indicates a bug, not bad data.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace gtlax

#endif
