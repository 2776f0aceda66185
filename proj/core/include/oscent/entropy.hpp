#pragma once

#include <vector>

#include "oscent/covariance.hpp"
#include "oscent/graph.hpp"
#include "oscent/model.hpp"
#include "oscent/sym_matrix.hpp"

namespace oscent::entropy {

/// Entropy contribution of one mode with symplectic eigenvalue x >= 1:
/// ((x+1)/2) log((x+1)/2) - ((x-1)/2) log((x-1)/2), in nats.
///
/// Evaluates the asymptotic form (t/2)(1 - log(t/2)), t = x - 1, underneath
/// t < 1e-8 where the direct expression loses precision, and returns exactly
/// 0 for t < 1e-15. Throws DomainError for x < 1.
double entropy_function(double x);

/// Entropy in nats together with the symplectic spectrum it was summed over.
struct EntropyValue {
    double nats = 0.0;
    std::vector<double> spectrum;
};

/// Entropy of the state restricted to the region. For the ground state this
/// is the entanglement entropy of the bipartition; the full region gives 0.
EntropyValue entanglement_entropy(const gaussian::CovarianceMatrix& cov,
                                  const model::Region& region,
                                  const gaussian::Tolerances& tol = {});

/// Entrywise bound on the entanglement entropy across the region's cut:
/// sqrt(d_bound) * sum over x in the region, y outside, of |a(x, y)|^(1/2),
/// where a is the position block of the covariance.
double upper_bound_from_block(const linalg::SymMatrix& a, const model::Region& region,
                              double d_bound);

/// Same bound computed from the system itself. Verifies that the operator
/// norms of hp, hp^(-1), hq stay at or below d_bound (cheap sufficient checks
/// first, exact spectra as fallback) and throws AssumptionError otherwise.
double upper_bound_matrix_elements(const model::OscillatorSystem& sys,
                                   const model::Region& region, double d_bound);

/// Lower bounds on the ordered-chain entanglement entropy from truncated
/// chain powers: half the log determinant and half the log largest eigenvalue
/// of m1 = h^[-1/4] h^[1/2] h^[-1/4] and m2 = h^[1/4] h^[-1/2] h^[1/4],
/// maximized over the two candidates.
struct LowerBounds {
    double det_bound = 0.0;
    double lmax_bound = 0.0;
};

LowerBounds lower_bounds_det_and_max(int n_sub, int n_full,
                                     model::BlockPlacement placement =
                                         model::BlockPlacement::leading,
                                     int threads = 1);

/// Spectral comparison between truncating before and after a fractional
/// power: checks lambda_j(b^[alpha/2] a b^[alpha/2]) <=
/// lambda_j((b^[alpha])^(1/2) a (b^[alpha])^(1/2)) + 1e-10 for every j,
/// where b^[alpha] is the leading embed_dim block of b^alpha.
bool eigenvalue_comparison_check(const linalg::SymMatrix& a, const linalg::SymMatrix& b,
                                 double alpha, int embed_dim);

/// Constants of the sharp comparison f(x) <= c sqrt(x^2 - 1), together
/// with the norm bound the entropy estimates assume.
struct BoundConstants {
    double optimal_c = 0.0;   // f(crossing_x0) / sqrt(crossing_x0^2 - 1)
    double crossing_x0 = 0.0; // stationary point in (1, 3)
    double d_bound = 4.0;     // uniform bound on |hp|, |hp^-1|, |hq|
};

/// Solves x log((x^2-1)/4) = log((x-1)/(x+1)) on (1, 3] by bisection to
/// 1e-12 and evaluates the optimal constant
/// c = sqrt(x0^2-1) (log 2 - log sqrt(x0^2-1)).
BoundConstants find_optimal_constant();

} // namespace oscent::entropy
