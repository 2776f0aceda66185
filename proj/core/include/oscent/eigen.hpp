#pragma once

#include <vector>

#include "oscent/sym_matrix.hpp"

namespace oscent::linalg {

/// Convergence threshold of the Jacobi sweep, relative to the largest input entry.
inline constexpr double jacobi_rel_tol = 1e-13;
inline constexpr int jacobi_max_sweeps = 100;

/// Relative floor under which a spectrum is treated as singular for negative powers.
inline constexpr double power_floor_rel = 1e-12;

/// Expected quality of V diag(w) V^T reconstruction, relative to the input norm.
inline constexpr double reconstruction_tol = 1e-9;
inline constexpr double orthogonality_tol = 1e-11;

/// Spectral decomposition of a symmetric matrix.
struct EigenDecomposition {
    int dim = 0;
    std::vector<double> eigenvalues;   // ascending
    std::vector<double> eigenvectors;  // row-major dim x dim; column k pairs with eigenvalues[k]

    double eigenvector(int i, int k) const {
        return eigenvectors[static_cast<size_t>(i) * dim + k];
    }
};

/// x^alpha with sqrt-based exact paths for the half and quarter powers that
/// dominate this library; falls back to std::pow otherwise.
double scalar_power(double x, double alpha);

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps run until the largest off-diagonal entry falls below
/// jacobi_rel_tol * max_abs(input); throws SolverError with the achieved
/// residual if jacobi_max_sweeps sweeps do not get there.
EigenDecomposition sym_eigen(const SymMatrix& m);

/// V diag(w^alpha) V^T from a precomputed decomposition.
///
/// For alpha < 0 every eigenvalue must clear floor; otherwise throws
/// SingularMatrixError reporting the smallest eigenvalue. For fractional
/// alpha >= 0, eigenvalues below -floor throw DomainError and values in
/// [-floor, 0) are clamped to 0. Pass floor explicitly to override the
/// default power_floor_rel * max eigenvalue.
SymMatrix apply_power(const EigenDecomposition& eig, double alpha, double floor = -1.0);

/// Spectral power m^alpha of a positive definite matrix.
///
/// Exactly diagonal input takes an exact entrywise path; alpha == 0 returns
/// the identity. Errors as in apply_power.
SymMatrix matrix_power(const SymMatrix& m, double alpha);

/// Sum of square roots of absolute eigenvalues, Tr |m|^(1/2).
double schatten_half_trace(const SymMatrix& m);

/// Schatten-1/2 quasinorm (Tr |m|^(1/2))^2.
double schatten_half_quasinorm(const SymMatrix& m);

/// Sum of log eigenvalues; throws DomainError if any eigenvalue is <= 0.
double log_det_pos_def(const SymMatrix& m);

/// Cholesky probe for positive definiteness.
bool is_positive_definite(const SymMatrix& m);

} // namespace oscent::linalg
