#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscent/eigen.hpp"
#include "oscent/graph.hpp"
#include "oscent/sym_matrix.hpp"

namespace oscent::model {

/// Distribution of on-site pinning strengths for disordered systems.
struct DisorderEnsemble {
    enum class Dist { uniform, constant };

    double mass = 0.5;      // oscillator mass m entering hp = 1/(2m) Id
    double coupling = 1.0;  // spring constant on every edge
    Dist dist = Dist::uniform;
    double lo = 0.0;  // uniform support [lo, hi)
    double hi = 8.0;
    double constant_k = 1.0;
    std::uint64_t seed = 0;

    void validate() const;

    /// Pinning strengths of one disorder realization, one value per site.
    /// A pure function of (seed, realization, site): reproducible bit for bit.
    std::vector<double> sample(int realization, int size) const;
};

/// Coupled harmonic oscillators on a graph, specified by the quadratic forms
/// hq (positions) and hp (momenta). Both are checked to be positive definite.
struct OscillatorSystem {
    Graph graph;
    linalg::SymMatrix hq;
    linalg::SymMatrix hp;

    OscillatorSystem(Graph graph, linalg::SymMatrix hq, linalg::SymMatrix hp);

    int size() const { return graph.size(); }
};

/// End-pinned ordered chain: hp = Id, hq tridiagonal with 2 on the diagonal
/// and -1 on the first off-diagonals.
OscillatorSystem ordered_chain(int n);

/// Disordered system on a graph: hp = 1/(2 mass) Id and
/// hq = diag(k) + coupling * (graph Laplacian), with k drawn from the ensemble.
OscillatorSystem anderson_system(const Graph& graph, const DisorderEnsemble& ensemble,
                                 int realization = 0);

/// JSON snapshot of a system for experiment provenance: size, graph edges,
/// and both quadratic forms as full rows. The ensemble overload also records
/// the parameters, seed, and realization index of the draw that produced the
/// system. Field order is stable; the schema is documented in
/// docs/report_schema.md.
std::string system_snapshot_json(const OscillatorSystem& sys);
std::string system_snapshot_json(const OscillatorSystem& sys, const DisorderEnsemble& ensemble,
                                 int realization);

/// hp^(1/2) hq hp^(1/2); equals hq whenever hp is the identity.
linalg::SymMatrix one_particle_operator(const OscillatorSystem& sys);

/// Operator norms entering the finite-norm hypothesis and whether they all
/// sit at or below the supplied bound.
struct AssumptionReport {
    double norm_hp = 0.0;
    double norm_hp_inv = 0.0;
    double norm_hq = 0.0;
    double bound = 0.0;
    bool passes = false;
};

AssumptionReport check_assumption(const OscillatorSystem& sys, double bound);

/// Analytic eigendecomposition of the ordered-chain hq: eigenvalues
/// 4 sin^2(k pi / (2(n+1))) in ascending order with sine eigenvectors.
linalg::EigenDecomposition chain_spectrum(int n);

enum class BlockPlacement { leading, centered };

/// Principal block of the ordered-chain power hq(n_full)^alpha, evaluated
/// from the analytic spectrum without ever forming the full power.
///
/// `leading` takes rows and columns 1..n_sub; `centered` shifts the block by
/// (n_full - n_sub)/2 sites (floored when the difference is odd). Entries
/// depend only on row distance and row sum, so the mode sum is folded into
/// cosine sums over two index windows and costs O(n_sub * n_full) per
/// exponent. Throws SingularMatrixError if alpha < 0 would overflow on the
/// smallest chain eigenvalue.
linalg::SymMatrix truncated_chain_power(int n_sub, int n_full, double alpha,
                                        BlockPlacement placement = BlockPlacement::leading,
                                        int threads = 1);

/// Blocks for several exponents in one pass over the chain modes.
std::vector<linalg::SymMatrix> truncated_chain_powers(int n_sub, int n_full,
                                                      const std::vector<double>& alphas,
                                                      BlockPlacement placement,
                                                      int threads = 1);

} // namespace oscent::model
