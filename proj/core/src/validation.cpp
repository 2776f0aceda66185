#include "oscent/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "oscent/eigen.hpp"
#include "oscent/entropy.hpp"
#include "oscent/errors.hpp"
#include "oscent/model.hpp"
#include "oscent/quadrature.hpp"
#include "oscent/rng.hpp"
#include "oscent/special.hpp"
#include "oscent/sym_matrix.hpp"
#include "oscent/toeplitz.hpp"

namespace oscent::validation {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double inf = std::numeric_limits<double>::infinity();

template <typename Fn>
CheckResult guarded(const std::string& name, Fn&& fn) {
    CheckResult result;
    result.name = name;
    try {
        fn(result);
    } catch (const std::exception& error) {
        result.passed = false;
        result.note = error.what();
    }
    return result;
}

linalg::SymMatrix random_symmetric(int dim, std::uint64_t seed, std::uint64_t stream) {
    linalg::SymMatrix m(dim);
    std::uint64_t index = 0;
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            m.set(i, j, 2.0 * rng::uniform(seed, stream, index++) - 1.0);
        }
    }
    return m;
}

linalg::SymMatrix random_pos_def(int dim, std::uint64_t seed, std::uint64_t stream) {
    const auto s = random_symmetric(dim, seed, stream);
    auto m = linalg::SymMatrix::from_row_major(dim, linalg::multiply_raw(s, s));
    for (int i = 0; i < dim; ++i) {
        m.add(i, i, 0.5);
    }
    return m;
}

model::Region random_proper_region(int parent, std::uint64_t seed, std::uint64_t stream) {
    const int count =
        1 + static_cast<int>(rng::uniform(seed, stream, 0) * (parent - 1)) % (parent - 1);
    std::vector<int> perm(static_cast<size_t>(parent));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = parent - 1; i > 0; --i) {
        const int j = static_cast<int>(rng::uniform(seed, stream, 100 + i) * (i + 1)) % (i + 1);
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    std::vector<int> indices(perm.begin(), perm.begin() + count);
    std::sort(indices.begin(), indices.end());
    return model::Region(parent, indices);
}

model::OscillatorSystem random_system(int size, std::uint64_t seed, std::uint64_t stream) {
    if (stream % 2 == 0) {
        return model::ordered_chain(size);
    }
    model::DisorderEnsemble ensemble;
    ensemble.seed = seed;
    return model::anderson_system(model::Graph::path(size), ensemble,
                                  static_cast<int>(stream));
}

std::vector<double> entropy_grid() {
    std::vector<double> grid;
    grid.push_back(1.0);
    for (int k = 14; k >= 1; --k) {
        grid.push_back(1.0 + std::pow(10.0, -k));
    }
    const int points = 2000;
    for (int i = 0; i <= points; ++i) {
        grid.push_back(1.0 + std::pow(10.0, 6.0 * i / points) * 1e-1);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double mx = 0.0;
    double my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

} // namespace

int SuiteResult::passed_count() const {
    int count = 0;
    for (const auto& check : checks) {
        count += check.passed ? 1 : 0;
    }
    return count;
}

SuiteResult linalg_suite(std::uint64_t seed) {
    SuiteResult suite;
    suite.suite = "linalg";

    suite.checks.push_back(guarded("power-composition", [&](CheckResult& r) {
        const std::vector<std::pair<double, double>> exponents = {
            {0.5, 0.5}, {0.25, 2.0}, {-0.5, -1.0}, {0.5, -0.5}};
        double worst = 0.0;
        for (int inst = 0; inst < 20; ++inst) {
            const int dim = 2 + inst % 7;
            const auto m = random_pos_def(dim, seed, 10 + static_cast<std::uint64_t>(inst));
            const auto& [a, b] = exponents[static_cast<size_t>(inst) % exponents.size()];
            const auto chained = linalg::matrix_power(linalg::matrix_power(m, a), b);
            const auto direct = linalg::matrix_power(m, a * b);
            worst = std::max(worst, linalg::max_abs_diff(chained, direct));
        }
        r.detail = worst;
        r.passed = worst <= 1e-9;
    }));

    suite.checks.push_back(guarded("power-identity-endpoints", [&](CheckResult& r) {
        double worst = 0.0;
        for (int inst = 0; inst < 10; ++inst) {
            const int dim = 2 + inst % 6;
            const auto m = random_pos_def(dim, seed, 40 + static_cast<std::uint64_t>(inst));
            worst = std::max(worst, linalg::max_abs_diff(linalg::matrix_power(m, 1.0), m));
            worst = std::max(worst, linalg::max_abs_diff(linalg::matrix_power(m, 0.0),
                                                         linalg::SymMatrix::identity(dim)));
        }
        r.detail = worst;
        r.passed = worst <= 1e-12;
    }));

    suite.checks.push_back(guarded("quasinorm-domination", [&](CheckResult& r) {
        double worst = inf;
        for (int inst = 0; inst < 100; ++inst) {
            const int dim = 3 + inst % 6;
            const auto m = random_symmetric(dim, seed, 80 + static_cast<std::uint64_t>(inst));
            double entrywise = 0.0;
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) {
                    entrywise += std::sqrt(std::abs(m(i, j)));
                }
            }
            worst = std::min(worst, entrywise - linalg::schatten_half_trace(m));
        }
        r.detail = worst;
        r.passed = worst >= -1e-10;
    }));

    suite.checks.push_back(guarded("tridiagonal-analytic-spectrum", [&](CheckResult& r) {
        double worst = 0.0;
        for (int n = 1; n <= 64; ++n) {
            linalg::SymMatrix m(n);
            for (int i = 0; i < n; ++i) {
                m.set(i, i, 2.0);
                if (i + 1 < n) {
                    m.set(i, i + 1, -1.0);
                }
            }
            const auto eig = linalg::sym_eigen(m);
            for (int j = 0; j < n; ++j) {
                const double s = std::sin((j + 1) * pi / (2.0 * (n + 1)));
                worst = std::max(worst,
                                 std::abs(eig.eigenvalues[static_cast<size_t>(j)] - 4.0 * s * s));
            }
        }
        r.detail = worst;
        r.passed = worst <= 1e-10;
    }));

    suite.all_passed = suite.passed_count() == static_cast<int>(suite.checks.size());
    return suite;
}

SuiteResult model_suite(std::uint64_t seed) {
    SuiteResult suite;
    suite.suite = "model";

    suite.checks.push_back(guarded("anderson-matches-ordered-chain", [&](CheckResult& r) {
        model::DisorderEnsemble ensemble;
        ensemble.dist = model::DisorderEnsemble::Dist::constant;
        ensemble.constant_k = 1.0;
        const auto sys = model::anderson_system(model::Graph::path(2), ensemble);
        const auto chain = model::ordered_chain(2);
        const double dq = linalg::max_abs_diff(sys.hq, chain.hq);
        const double dp = linalg::max_abs_diff(sys.hp, chain.hp);
        r.detail = std::max(dq, dp);
        r.passed = r.detail <= 1e-15;
    }));

    suite.checks.push_back(guarded("chain-spectrum-vs-jacobi", [&](CheckResult& r) {
        double worst = 0.0;
        for (int n : {2, 3, 5, 8, 13, 21, 34, 55, 64}) {
            const auto analytic = model::chain_spectrum(n);
            const auto numeric = linalg::sym_eigen(model::ordered_chain(n).hq);
            for (int j = 0; j < n; ++j) {
                worst = std::max(worst,
                                 std::abs(analytic.eigenvalues[static_cast<size_t>(j)] -
                                          numeric.eigenvalues[static_cast<size_t>(j)]));
            }
        }
        r.detail = worst;
        r.passed = worst <= 1e-10;
    }));

    suite.checks.push_back(guarded("truncated-power-converges", [&](CheckResult& r) {
        const int n_sub = 4;
        struct Case {
            double alpha;
            model::BlockPlacement placement;
            toeplitz::Lattice lattice;
        };
        const std::vector<Case> cases = {
            {0.5, model::BlockPlacement::leading, toeplitz::Lattice::half_line},
            {-0.5, model::BlockPlacement::leading, toeplitz::Lattice::half_line},
            {0.5, model::BlockPlacement::centered, toeplitz::Lattice::full_line},
            {-0.25, model::BlockPlacement::centered, toeplitz::Lattice::full_line},
        };
        double worst_final = 0.0;
        bool monotone = true;
        for (const auto& c : cases) {
            const auto limit = toeplitz::limit_matrix(c.lattice, c.alpha, n_sub);
            double prev = inf;
            for (const int m : {64, 128, 256}) {
                const double err = linalg::max_abs_diff(
                    model::truncated_chain_power(n_sub, m, c.alpha, c.placement),
                    limit.entries);
                monotone = monotone && err < prev;
                prev = err;
            }
            worst_final = std::max(worst_final, prev);
        }
        r.detail = worst_final;
        r.passed = monotone;
    }));

    suite.checks.push_back(guarded("anderson-definiteness", [&](CheckResult& r) {
        model::DisorderEnsemble ensemble;
        ensemble.seed = seed;
        int built = 0;
        for (int realization = 0; realization < 20; ++realization) {
            const auto sys = model::anderson_system(model::Graph::path(16), ensemble, realization);
            built += linalg::is_positive_definite(sys.hq) ? 1 : 0;
        }
        bool rejected_unpinned = false;
        try {
            model::DisorderEnsemble unpinned;
            unpinned.dist = model::DisorderEnsemble::Dist::constant;
            unpinned.constant_k = 0.0;
            model::anderson_system(model::Graph::path(3), unpinned);
        } catch (const AssumptionError&) {
            rejected_unpinned = true;
        }
        r.detail = built;
        r.passed = built == 20 && rejected_unpinned;
    }));

    suite.all_passed = suite.passed_count() == static_cast<int>(suite.checks.size());
    return suite;
}

SuiteResult gaussian_suite(std::uint64_t seed, const gaussian::Tolerances& tol) {
    SuiteResult suite;
    suite.suite = "gaussian";

    suite.checks.push_back(guarded("route-agreement", [&](CheckResult& r) {
        double worst = 0.0;
        for (int inst = 0; inst < 100; ++inst) {
            const int dim = 2 + inst % 5;
            const auto a = random_pos_def(dim, seed, 200 + 2 * static_cast<std::uint64_t>(inst));
            const auto b = random_pos_def(dim, seed, 201 + 2 * static_cast<std::uint64_t>(inst));
            const auto raw = gaussian::symplectic_spectrum_raw(
                gaussian::CovarianceMatrix::from_blocks(a, b), tol);
            const double scale = 1.5 / raw.front();
            const auto cov = gaussian::CovarianceMatrix::from_blocks(a.scaled(scale),
                                                                     b.scaled(scale));
            const auto williamson = gaussian::symplectic_spectrum_williamson(cov, tol);
            const auto block =
                gaussian::symplectic_spectrum_block(cov.qq(), cov.pp(), tol);
            for (int j = 0; j < dim; ++j) {
                worst = std::max(worst, std::abs(williamson.values[static_cast<size_t>(j)] -
                                                 block.values[static_cast<size_t>(j)]));
            }
        }
        r.detail = worst;
        r.passed = worst <= 1e-8;
    }));

    suite.checks.push_back(guarded("pure-state-spectrum", [&](CheckResult& r) {
        double worst = 0.0;
        for (int inst = 0; inst < 10; ++inst) {
            const int size = 2 + inst;
            const auto sys = random_system(size, seed, 300 + static_cast<std::uint64_t>(inst));
            const auto cov = gaussian::ground_state_covariance(sys);
            const auto spectrum = gaussian::symplectic_spectrum(cov, tol);
            for (double value : spectrum.values) {
                worst = std::max(worst, std::abs(value - 1.0));
            }
        }
        r.detail = worst;
        r.passed = worst <= 1e-9;
    }));

    suite.checks.push_back(guarded("truncation-validity", [&](CheckResult& r) {
        int valid = 0;
        const int instances = 15;
        for (int inst = 0; inst < instances; ++inst) {
            const int size = 4 + inst % 9;
            const auto sys = random_system(size, seed, 400 + static_cast<std::uint64_t>(inst));
            const auto cov = gaussian::ground_state_covariance(sys);
            const auto region =
                random_proper_region(size, seed, 500 + static_cast<std::uint64_t>(inst));
            valid += gaussian::check_uncertainty(gaussian::truncate(cov, region), tol) ? 1 : 0;
        }
        r.detail = valid;
        r.passed = valid == instances;
    }));

    suite.checks.push_back(guarded("squeezing-invariance", [&](CheckResult& r) {
        double worst = 0.0;
        for (int inst = 0; inst < 10; ++inst) {
            const int size = 2 + inst % 5;
            const auto sys = random_system(size, seed, 600 + static_cast<std::uint64_t>(inst));
            const auto cov = gaussian::ground_state_covariance(sys);
            const auto reference = gaussian::symplectic_spectrum(cov, tol);

            const double s = inst % 2 == 0 ? 1.5 : 0.7;
            const auto full = cov.full();
            const int doubled = full.dim();
            linalg::SymMatrix squeezed(doubled);
            for (int i = 0; i < doubled; ++i) {
                const double di = i < size ? s : 1.0 / s;
                for (int j = i; j < doubled; ++j) {
                    const double dj = j < size ? s : 1.0 / s;
                    squeezed.set(i, j, di * full(i, j) * dj);
                }
            }
            const auto transformed = gaussian::symplectic_spectrum_williamson(
                gaussian::CovarianceMatrix::from_full(squeezed), tol);
            for (int j = 0; j < size; ++j) {
                worst = std::max(worst, std::abs(transformed.values[static_cast<size_t>(j)] -
                                                 reference.values[static_cast<size_t>(j)]));
            }
        }
        r.detail = worst;
        r.passed = worst <= 1e-9;
    }));

    suite.all_passed = suite.passed_count() == static_cast<int>(suite.checks.size());
    return suite;
}

SuiteResult entropy_suite(std::uint64_t seed, const gaussian::Tolerances& tol) {
    SuiteResult suite;
    suite.suite = "entropy";
    const auto grid = entropy_grid();

    suite.checks.push_back(guarded("f-increasing-concave", [&](CheckResult& r) {
        bool ok = true;
        double worst = inf;
        for (size_t i = 0; i + 1 < grid.size(); ++i) {
            const double step = entropy::entropy_function(grid[i + 1]) -
                                entropy::entropy_function(grid[i]);
            ok = ok && step > 0.0;
            worst = std::min(worst, step);
        }
        for (size_t i = 0; i + 2 < grid.size(); i += 2) {
            const double a = grid[i];
            const double b = grid[i + 2];
            const double gap = entropy::entropy_function(0.5 * (a + b)) -
                               0.5 * (entropy::entropy_function(a) +
                                      entropy::entropy_function(b));
            ok = ok && gap >= -1e-12;
            worst = std::min(worst, gap);
        }
        r.detail = worst;
        r.passed = ok;
    }));

    suite.checks.push_back(guarded("f-sqrt-bounds", [&](CheckResult& r) {
        double worst = inf;
        for (double x : grid) {
            if (x <= 1.0) {
                continue;
            }
            const double s = std::sqrt(x * x - 1.0);
            const double f = entropy::entropy_function(x);
            worst = std::min(worst, std::min(s - f, 0.5645 * s - f));
        }
        r.detail = worst;
        r.passed = worst >= 0.0;
    }));

    suite.checks.push_back(guarded("f-log-floor", [&](CheckResult& r) {
        double worst = inf;
        for (double x : grid) {
            worst = std::min(worst, entropy::entropy_function(x) - std::log(x));
        }
        r.detail = worst;
        r.passed = worst >= 0.0;
    }));

    suite.checks.push_back(guarded("entropy-symmetry", [&](CheckResult& r) {
        double worst = 0.0;
        for (int inst = 0; inst < 20; ++inst) {
            const int size = 4 + inst % 7;
            const auto sys = random_system(size, seed, 700 + static_cast<std::uint64_t>(inst));
            const auto cov = gaussian::ground_state_covariance(sys);
            const auto region =
                random_proper_region(size, seed, 800 + static_cast<std::uint64_t>(inst));
            const double direct = entropy::entanglement_entropy(cov, region, tol).nats;
            const double mirrored =
                entropy::entanglement_entropy(cov, region.complement(), tol).nats;
            worst = std::max(worst, std::abs(direct - mirrored));
        }
        r.detail = worst;
        r.passed = worst <= 1e-9;
    }));

    suite.checks.push_back(guarded("bound-sandwich-ordered", [&](CheckResult& r) {
        double worst = inf;
        for (const int n : {4, 8, 16}) {
            const auto sys = model::ordered_chain(n);
            const auto cov = gaussian::ground_state_covariance(sys);
            for (const int n_sub : {1, n / 2, n - 1}) {
                const auto region = model::Region::range(n, 0, n_sub);
                const double s = entropy::entanglement_entropy(cov, region, tol).nats;
                const auto lower = entropy::lower_bounds_det_and_max(n_sub, n);
                const double upper = entropy::upper_bound_matrix_elements(sys, region, 4.0);
                worst = std::min(worst, s - lower.det_bound);
                worst = std::min(worst, s - lower.lmax_bound);
                worst = std::min(worst, upper - s);
            }
        }
        r.detail = worst;
        r.passed = worst >= -1e-9;
    }));

    suite.checks.push_back(guarded("decoupled-additivity", [&](CheckResult& r) {
        const model::Graph graph(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}});
        model::DisorderEnsemble ensemble;
        ensemble.dist = model::DisorderEnsemble::Dist::constant;
        ensemble.constant_k = 1.0;
        const auto sys = model::anderson_system(graph, ensemble);
        const auto cov = gaussian::ground_state_covariance(sys);
        const auto region = model::Region::range(7, 0, 3);
        r.detail = entropy::entanglement_entropy(cov, region, tol).nats;
        r.passed = r.detail <= 1e-10;
    }));

    suite.checks.push_back(guarded("optimal-constant", [&](CheckResult& r) {
        const auto constants = entropy::find_optimal_constant();
        const double x0 = constants.crossing_x0;
        const double residual =
            std::abs(x0 * std::log(0.25 * (x0 * x0 - 1.0)) - std::log((x0 - 1.0) / (x0 + 1.0)));
        const double ratio =
            entropy::entropy_function(x0) / std::sqrt(x0 * x0 - 1.0);
        const double ratio_gap = std::abs(ratio - constants.optimal_c);
        double domination = inf;
        for (double x : grid) {
            if (x <= 1.0) {
                continue;
            }
            domination = std::min(domination, constants.optimal_c * std::sqrt(x * x - 1.0) -
                                                  entropy::entropy_function(x));
        }
        r.detail = std::max(residual, ratio_gap);
        r.passed = residual <= 1e-10 && ratio_gap <= 1e-10 && domination >= -1e-12;
    }));

    suite.all_passed = suite.passed_count() == static_cast<int>(suite.checks.size());
    return suite;
}

SuiteResult toeplitz_suite(std::uint64_t seed) {
    SuiteResult suite;
    suite.suite = "toeplitz";
    (void)seed;

    suite.checks.push_back(guarded("closed-forms-vs-quadrature", [&](CheckResult& r) {
        double worst = 0.0;
        for (int j = 1; j <= 40; ++j) {
            for (int k = j; k <= 40; ++k) {
                worst = std::max(worst, std::abs(toeplitz::closed_form_R(j, k) -
                                                 toeplitz::half_line_entry(0.25, j, k)));
                worst = std::max(worst, std::abs(toeplitz::closed_form_S(j, k) -
                                                 toeplitz::half_line_entry(-0.5, j, k)));
            }
        }
        r.detail = worst;
        r.passed = worst <= 1e-8;
    }));

    suite.checks.push_back(guarded("full-line-closed-form", [&](CheckResult& r) {
        double worst = 0.0;
        for (int d = 0; d <= 40; ++d) {
            const double closed = -(1.0 / pi) / (static_cast<double>(d) * d - 0.25);
            worst = std::max(worst,
                             std::abs(toeplitz::full_line_coefficient(0.5, d) - closed));
        }
        r.detail = worst;
        r.passed = worst <= 1e-10;
    }));

    suite.checks.push_back(guarded("toeplitz-shift-invariance", [&](CheckResult& r) {
        const auto m = toeplitz::limit_matrix(toeplitz::Lattice::full_line, 0.5, 8);
        double worst = 0.0;
        for (int i = 0; i + 1 < 8; ++i) {
            for (int j = 0; j + 1 < 8; ++j) {
                worst = std::max(worst, std::abs(m.entries(i, j) - m.entries(i + 1, j + 1)));
            }
        }
        r.detail = worst;
        r.passed = worst <= 1e-12;
    }));

    suite.checks.push_back(guarded("smallest-eigenvalue-floor", [&](CheckResult& r) {
        double worst = inf;
        bool floors_match = true;
        for (const int n : {2, 8, 32, 128}) {
            const double floor_value = toeplitz::gershgorin_floor(n);
            const double telescoped = (4.0 / pi) / (2.0 * n + 1.0);
            floors_match = floors_match && std::abs(floor_value - telescoped) <= 1e-12 &&
                           floor_value > 0.0;
            const auto m = toeplitz::limit_matrix(toeplitz::Lattice::full_line, 0.5, n);
            const auto eig = linalg::sym_eigen(m.entries);
            worst = std::min(worst, eig.eigenvalues.front() - floor_value);
        }
        r.detail = worst;
        r.passed = floors_match && worst >= -1e-10;
    }));

    suite.checks.push_back(guarded("digamma-identity", [&](CheckResult& r) {
        double worst = 0.0;
        for (int j = 1; j <= 30; ++j) {
            for (int k = j; k <= 30; ++k) {
                const double via_digamma = (special::digamma_half_integer(j + k) -
                                            special::digamma_half_integer(std::abs(j - k))) /
                                           pi;
                worst = std::max(worst, std::abs(toeplitz::closed_form_S(j, k) - via_digamma));
            }
        }
        r.detail = worst;
        r.passed = worst <= 1e-12;
    }));

    suite.checks.push_back(guarded("szego-divergence-trend", [&](CheckResult& r) {
        const std::vector<int> sizes = {4, 8, 16, 32, 64, 128};
        const auto report = toeplitz::szego_scan(0.5, sizes);
        bool increasing = true;
        for (size_t i = 0; i + 1 < report.log_dets.size(); ++i) {
            increasing = increasing && report.log_dets[i + 1] > report.log_dets[i];
        }
        const double slope = ols_slope(report.partial_sums, report.log_dets);
        const auto flat = toeplitz::szego_scan(0.0, {4, 16, 64});
        double flat_worst = 0.0;
        for (double value : flat.log_dets) {
            flat_worst = std::max(flat_worst, std::abs(value));
        }
        r.detail = slope;
        r.passed = increasing && slope > 0.0 && flat_worst <= 1e-6 &&
                   std::abs(report.g_constant - 1.0) <= 1e-15;
    }));

    suite.checks.push_back(guarded("half-line-identity-at-zero", [&](CheckResult& r) {
        const auto m = toeplitz::limit_matrix(toeplitz::Lattice::half_line, 0.0, 6);
        r.detail = linalg::max_abs_diff(m.entries, linalg::SymMatrix::identity(6));
        r.passed = r.detail <= 1e-10;
    }));

    suite.checks.push_back(guarded("log-symbol-coefficients", [&](CheckResult& r) {
        double worst = 0.0;
        for (const double alpha : {0.5, -0.25}) {
            for (int k = 1; k <= 8; ++k) {
                const double parts_integral = quadrature::integrate(
                    [&](double x) {
                        return std::cos(0.5 * x) / std::sin(0.5 * x) * std::sin(k * x);
                    },
                    0.0, pi, 1e-10);
                const double numeric = -alpha / (pi * k) * parts_integral;
                worst = std::max(worst,
                                 std::abs(numeric - toeplitz::log_symbol_coefficient(alpha, k)));
            }
        }
        r.detail = worst;
        r.passed = worst <= 1e-8;
    }));

    suite.checks.push_back(guarded("property-suite-margins", [&](CheckResult& r) {
        double worst = inf;
        bool all = true;
        for (const int n : {2, 10, 50, 100}) {
            const auto report = toeplitz::rs_property_suite(n);
            all = all && report.all_passed;
            for (const auto& check : report.checks) {
                worst = std::min(worst, check.margin);
            }
        }
        r.detail = worst;
        r.passed = all && worst > 0.0;
    }));

    suite.checks.push_back(guarded("property-suite-mutation", [&](CheckResult& r) {
        auto r_broken = toeplitz::r_matrix(6);
        r_broken.add(0, 1, 0.2);
        const auto first = toeplitz::rs_property_suite_on(r_broken, toeplitz::s_matrix(6));
        auto s_broken = toeplitz::s_matrix(6);
        s_broken.add(0, 0, 0.3);
        const auto second = toeplitz::rs_property_suite_on(toeplitz::r_matrix(6), s_broken);
        r.detail = (first.all_passed ? 0.0 : 1.0) + (second.all_passed ? 0.0 : 1.0);
        r.passed = !first.all_passed && !second.all_passed;
    }));

    suite.checks.push_back(guarded("half-line-element-floor", [&](CheckResult& r) {
        double worst = inf;
        for (const int n : {2, 3, 5, 10, 25, 50, 100, 200}) {
            const auto bound = toeplitz::ordered_lower_bound_halfline(n);
            worst = std::min(worst, bound.exact_element - bound.element_floor);
        }
        const double d1 = toeplitz::ordered_lower_bound_halfline(32).bound -
                          toeplitz::ordered_lower_bound_halfline(16).bound;
        const double d2 = toeplitz::ordered_lower_bound_halfline(64).bound -
                          toeplitz::ordered_lower_bound_halfline(32).bound;
        r.detail = worst;
        r.passed = worst > 0.0 && d2 < d1;
    }));

    suite.all_passed = suite.passed_count() == static_cast<int>(suite.checks.size());
    return suite;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, const gaussian::Tolerances& tol) {
    std::vector<SuiteResult> suites;
    suites.push_back(linalg_suite(seed));
    suites.push_back(model_suite(seed));
    suites.push_back(gaussian_suite(seed, tol));
    suites.push_back(entropy_suite(seed, tol));
    suites.push_back(toeplitz_suite(seed));
    return suites;
}

} // namespace oscent::validation
