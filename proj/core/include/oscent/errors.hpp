#pragma once

#include <stdexcept>
#include <string>

namespace oscent {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape or index mismatch between operands.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Iterative eigensolver failed to converge within its sweep budget.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double off_diag_residual)
        : Error(what), off_diag_residual(off_diag_residual) {}
    double off_diag_residual;
};

/// Negative power requested of a matrix whose spectrum touches the zero floor.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, double smallest_eigenvalue)
        : Error(what), smallest_eigenvalue(smallest_eigenvalue) {}
    double smallest_eigenvalue;
};

/// Region does not define a usable bipartition (empty, out of range, duplicated).
class BipartitionError : public Error {
public:
    using Error::Error;
};

/// A model precondition (positive definiteness, norm bound) failed.
class AssumptionError : public Error {
public:
    using Error::Error;
};

/// Symplectic spectrum dips below 1 beyond tolerance: not a valid state.
class UncertaintyError : public Error {
public:
    UncertaintyError(const std::string& what, double min_symplectic_eigenvalue)
        : Error(what), min_symplectic_eigenvalue(min_symplectic_eigenvalue) {}
    double min_symplectic_eigenvalue;
};

/// Internal consistency check failed (e.g. eigenvalues that must pair up do not).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class IntegrationError : public Error {
public:
    IntegrationError(const std::string& what, double best_estimate, double error_estimate)
        : Error(what), best_estimate(best_estimate), error_estimate(error_estimate) {}
    double best_estimate;
    double error_estimate;
};

/// Experiment configuration is malformed or inconsistent.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace oscent
