#include "oscent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "oscent/eigen.hpp"
#include "oscent/errors.hpp"

namespace oscent::entropy {

double entropy_function(double x) {
    if (!(x >= 1.0)) {
        throw DomainError("entropy function needs a symplectic eigenvalue >= 1, got " +
                          std::to_string(x));
    }
    const double t = x - 1.0;
    if (t < 1e-15) {
        return 0.0;
    }
    const double half_t = 0.5 * t;
    if (t < 1e-8) {
        return half_t * (1.0 - std::log(half_t));
    }
    const double u = 0.5 * (x + 1.0);
    return u * std::log(u) - half_t * std::log(half_t);
}

EntropyValue entanglement_entropy(const gaussian::CovarianceMatrix& cov,
                                  const model::Region& region,
                                  const gaussian::Tolerances& tol) {
    const auto reduced = gaussian::truncate(cov, region);
    auto spectrum = gaussian::symplectic_spectrum(reduced, tol);
    EntropyValue out;
    for (double value : spectrum.values) {
        out.nats += entropy_function(value);
    }
    out.spectrum = std::move(spectrum.values);
    return out;
}

double upper_bound_from_block(const linalg::SymMatrix& a, const model::Region& region,
                              double d_bound) {
    if (region.parent_size() != a.dim()) {
        throw DimensionError("region indexes " + std::to_string(region.parent_size()) +
                             " sites but the covariance block has " + std::to_string(a.dim()));
    }
    if (!(d_bound > 0.0)) {
        throw DomainError("norm bound must be positive");
    }
    std::vector<char> inside(static_cast<size_t>(a.dim()), 0);
    for (int idx : region.indices()) {
        inside[static_cast<size_t>(idx)] = 1;
    }
    double sum = 0.0;
    for (int x = 0; x < a.dim(); ++x) {
        if (!inside[static_cast<size_t>(x)]) {
            continue;
        }
        for (int y = 0; y < a.dim(); ++y) {
            if (inside[static_cast<size_t>(y)]) {
                continue;
            }
            sum += std::sqrt(std::abs(a(x, y)));
        }
    }
    return std::sqrt(d_bound) * sum;
}

double upper_bound_matrix_elements(const model::OscillatorSystem& sys,
                                   const model::Region& region, double d_bound) {
    const auto report = model::check_assumption(sys, d_bound);
    if (!report.passes) {
        const double worst = std::max({report.norm_hp, report.norm_hp_inv, report.norm_hq});
        throw AssumptionError("operator norm " + std::to_string(worst) +
                              " exceeds the hypothesis bound " + std::to_string(d_bound));
    }
    const auto h_eig = linalg::sym_eigen(model::one_particle_operator(sys));
    const auto h_inv_half = linalg::apply_power(h_eig, -0.5);
    const auto hp_half = linalg::matrix_power(sys.hp, 0.5);
    const auto a = linalg::sandwich(hp_half, h_inv_half);
    return upper_bound_from_block(a, region, d_bound);
}

LowerBounds lower_bounds_det_and_max(int n_sub, int n_full, model::BlockPlacement placement,
                                     int threads) {
    if (n_sub < 1) {
        throw DimensionError("block needs at least one site");
    }
    if (n_sub >= n_full) {
        throw DimensionError("block with " + std::to_string(n_sub) +
                             " sites is not a proper truncation of a chain with " +
                             std::to_string(n_full));
    }
    const auto blocks = model::truncated_chain_powers(n_sub, n_full, {-0.25, 0.5, 0.25, -0.5},
                                                      placement, threads);
    const auto m1 = linalg::sandwich(blocks[0], blocks[1]);
    const auto m2 = linalg::sandwich(blocks[2], blocks[3]);

    LowerBounds out;
    out.det_bound = -std::numeric_limits<double>::infinity();
    out.lmax_bound = -std::numeric_limits<double>::infinity();
    for (const auto* m : {&m1, &m2}) {
        const auto eig = linalg::sym_eigen(*m);
        if (eig.eigenvalues.front() <= 0.0) {
            throw SingularMatrixError("sandwiched chain-power block lost positivity",
                                      eig.eigenvalues.front());
        }
        double log_det = 0.0;
        for (double w : eig.eigenvalues) {
            log_det += std::log(w);
        }
        out.det_bound = std::max(out.det_bound, 0.5 * log_det);
        out.lmax_bound = std::max(out.lmax_bound, 0.5 * std::log(eig.eigenvalues.back()));
    }
    return out;
}

bool eigenvalue_comparison_check(const linalg::SymMatrix& a, const linalg::SymMatrix& b,
                                 double alpha, int embed_dim) {
    if (embed_dim != a.dim()) {
        throw DimensionError("comparison block must match the embedded operator");
    }
    if (embed_dim >= b.dim()) {
        throw DimensionError("embedding dimension must be a proper truncation of the base");
    }
    if (!linalg::is_positive_definite(a) || !linalg::is_positive_definite(b)) {
        throw DomainError("comparison operators must be positive definite");
    }

    std::vector<int> leading(static_cast<size_t>(embed_dim));
    std::iota(leading.begin(), leading.end(), 0);

    const auto half_power_block =
        linalg::submatrix(linalg::matrix_power(b, 0.5 * alpha), leading);
    const auto power_block = linalg::submatrix(linalg::matrix_power(b, alpha), leading);
    const auto power_block_root = linalg::matrix_power(power_block, 0.5);

    const auto lhs = linalg::sym_eigen(linalg::sandwich(half_power_block, a));
    const auto rhs = linalg::sym_eigen(linalg::sandwich(power_block_root, a));
    for (int j = 0; j < embed_dim; ++j) {
        if (lhs.eigenvalues[static_cast<size_t>(j)] >
            rhs.eigenvalues[static_cast<size_t>(j)] + 1e-10) {
            return false;
        }
    }
    return true;
}

BoundConstants find_optimal_constant() {
    const auto stationarity = [](double x) {
        return x * std::log(0.25 * (x * x - 1.0)) - std::log((x - 1.0) / (x + 1.0));
    };
    double lo = 1.0 + 1e-6;
    double hi = 3.0;
    if (!(stationarity(lo) < 0.0) || !(stationarity(hi) > 0.0)) {
        throw SolverError("stationarity equation lost its bracket", 0.0);
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (stationarity(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    BoundConstants out;
    out.crossing_x0 = 0.5 * (lo + hi);
    const double s = std::sqrt(out.crossing_x0 * out.crossing_x0 - 1.0);
    out.optimal_c = s * (std::log(2.0) - std::log(s));
    return out;
}

} // namespace oscent::entropy
