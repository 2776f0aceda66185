#pragma once

#include <string>
#include <vector>

#include "oscent/eigen.hpp"
#include "oscent/graph.hpp"
#include "oscent/model.hpp"
#include "oscent/sym_matrix.hpp"

namespace oscent::gaussian {

/// Tolerances of the symplectic spectrum pipeline.
struct Tolerances {
    /// Values in [1 - spectrum_tol, 1) snap to 1; anything lower is rejected.
    double spectrum_tol = 1e-8;
    /// Relative mismatch allowed between eigenvalues that must appear twice.
    double pair_tol = 1e-7;
};

/// Covariance of a Gaussian state in position/momentum block order.
///
/// Ground states produced here are block diagonal (positions never mix with
/// momenta). A full 2n x 2n matrix is also supported so the two spectrum
/// routes can be cross-checked on general inputs.
class CovarianceMatrix {
public:
    /// Position and momentum blocks; both must be positive definite.
    static CovarianceMatrix from_blocks(linalg::SymMatrix qq, linalg::SymMatrix pp);

    /// Full positive definite matrix of even dimension 2n.
    static CovarianceMatrix from_full(linalg::SymMatrix full);

    int modes() const { return modes_; }
    bool is_block_diagonal() const { return block_diagonal_; }

    /// Position block; only available on block-diagonal covariances.
    const linalg::SymMatrix& qq() const;
    const linalg::SymMatrix& pp() const;

    /// The 2n x 2n matrix in position/momentum block order.
    linalg::SymMatrix full() const;

private:
    CovarianceMatrix() = default;

    int modes_ = 0;
    bool block_diagonal_ = false;
    linalg::SymMatrix qq_;
    linalg::SymMatrix pp_;
    linalg::SymMatrix full_;
};

/// JSON snapshot of a covariance for experiment provenance: mode count plus
/// either the qq/pp blocks or the full matrix, as full rows. Field order is
/// stable; the schema is documented in docs/report_schema.md.
std::string covariance_snapshot_json(const CovarianceMatrix& cov);

/// Symplectic eigenvalues in ascending order, clamped to [1, inf).
struct SymplecticSpectrum {
    std::vector<double> values;
};

/// Ground-state covariance of an oscillator system: with the effective
/// one-particle operator h = hp^(1/2) hq hp^(1/2), the position block is
/// hp^(1/2) h^(-1/2) hp^(1/2) and the momentum block is its inverse.
/// The inverse relation is verified to 1e-9 before returning.
CovarianceMatrix ground_state_covariance(const model::OscillatorSystem& sys);

/// Restriction of the covariance to the region's sites (both blocks).
/// The full region returns the covariance unchanged.
CovarianceMatrix truncate(const CovarianceMatrix& cov, const model::Region& region);

/// Symplectic spectrum through the squared form: with the symplectic form J,
/// the eigenvalues of -(G^(1/2) J G^(1/2))^2 are the squared symplectic
/// eigenvalues, each appearing twice. Throws ConsistencyError if the pairing
/// fails and UncertaintyError if a value sits below the clamp band.
SymplecticSpectrum symplectic_spectrum_williamson(const CovarianceMatrix& cov,
                                                  const Tolerances& tol = {});

/// Symplectic spectrum of a block-diagonal covariance: square roots of the
/// eigenvalues of qq^(1/2) pp qq^(1/2).
SymplecticSpectrum symplectic_spectrum_block(const linalg::SymMatrix& qq,
                                             const linalg::SymMatrix& pp,
                                             const Tolerances& tol = {});

/// Route dispatch: block shortcut when available, squared form otherwise.
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cov, const Tolerances& tol = {});

/// Symplectic eigenvalues without the state-validity clamp, ascending.
std::vector<double> symplectic_spectrum_raw(const CovarianceMatrix& cov,
                                            const Tolerances& tol = {});

/// True iff the minimal symplectic eigenvalue is >= 1 - tol.spectrum_tol.
bool check_uncertainty(const CovarianceMatrix& cov, const Tolerances& tol = {});

} // namespace oscent::gaussian
