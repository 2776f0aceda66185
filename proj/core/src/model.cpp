#include "oscent/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>

#include "json.hpp"

#include "oscent/errors.hpp"
#include "oscent/parallel.hpp"
#include "oscent/rng.hpp"

namespace oscent::model {

namespace {

constexpr double pi = std::numbers::pi;

} // namespace

void DisorderEnsemble::validate() const {
    if (!(mass > 0.0)) {
        throw DomainError("ensemble mass must be positive");
    }
    if (!(coupling >= 0.0)) {
        throw DomainError("ensemble coupling must be nonnegative");
    }
    if (dist == Dist::uniform && !(hi >= lo)) {
        throw DomainError("uniform ensemble needs hi >= lo");
    }
}

std::vector<double> DisorderEnsemble::sample(int realization, int size) const {
    validate();
    std::vector<double> k(size);
    if (dist == Dist::constant) {
        std::fill(k.begin(), k.end(), constant_k);
        return k;
    }
    for (int x = 0; x < size; ++x) {
        k[x] = lo + (hi - lo) * rng::uniform(seed, static_cast<std::uint64_t>(realization),
                                             static_cast<std::uint64_t>(x));
    }
    return k;
}

OscillatorSystem::OscillatorSystem(Graph graph_in, linalg::SymMatrix hq_in,
                                   linalg::SymMatrix hp_in)
    : graph(std::move(graph_in)), hq(std::move(hq_in)), hp(std::move(hp_in)) {
    if (hq.dim() != graph.size() || hp.dim() != graph.size()) {
        throw DimensionError("hq/hp dimensions must match the number of sites");
    }
    if (!linalg::is_positive_definite(hq)) {
        throw AssumptionError("hq is not positive definite");
    }
    if (!linalg::is_positive_definite(hp)) {
        throw AssumptionError("hp is not positive definite");
    }
}

OscillatorSystem ordered_chain(int n) {
    if (n < 1) {
        throw DimensionError("ordered chain needs at least one site");
    }
    linalg::SymMatrix hq(n);
    for (int i = 0; i < n; ++i) {
        hq.set(i, i, 2.0);
        if (i + 1 < n) {
            hq.set(i, i + 1, -1.0);
        }
    }
    return OscillatorSystem(Graph::path(n), std::move(hq), linalg::SymMatrix::identity(n));
}

OscillatorSystem anderson_system(const Graph& graph, const DisorderEnsemble& ensemble,
                                 int realization) {
    ensemble.validate();
    const int n = graph.size();
    const std::vector<double> k = ensemble.sample(realization, n);

    linalg::SymMatrix hq(n);
    for (int x = 0; x < n; ++x) {
        hq.set(x, x, k[x]);
    }
    for (const auto& [x, y] : graph.edges()) {
        hq.add(x, x, ensemble.coupling);
        hq.add(y, y, ensemble.coupling);
        hq.add(x, y, -ensemble.coupling);
    }
    linalg::SymMatrix hp =
        linalg::SymMatrix::diagonal(std::vector<double>(n, 1.0 / (2.0 * ensemble.mass)));
    return OscillatorSystem(graph, std::move(hq), std::move(hp));
}

namespace {

nlohmann::ordered_json matrix_rows(const linalg::SymMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.dim(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::ordered_json snapshot_body(const OscillatorSystem& sys) {
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [x, y] : sys.graph.edges()) {
        edges.push_back(nlohmann::ordered_json::array({x, y}));
    }
    nlohmann::ordered_json j;
    j["size"] = sys.size();
    j["edges"] = std::move(edges);
    j["hq"] = matrix_rows(sys.hq);
    j["hp"] = matrix_rows(sys.hp);
    return j;
}

} // namespace

std::string system_snapshot_json(const OscillatorSystem& sys) {
    return snapshot_body(sys).dump();
}

std::string system_snapshot_json(const OscillatorSystem& sys, const DisorderEnsemble& ensemble,
                                 int realization) {
    auto j = snapshot_body(sys);
    nlohmann::ordered_json e;
    e["mass"] = ensemble.mass;
    e["coupling"] = ensemble.coupling;
    e["dist"] = ensemble.dist == DisorderEnsemble::Dist::uniform ? "uniform" : "constant";
    e["lo"] = ensemble.lo;
    e["hi"] = ensemble.hi;
    e["constant_k"] = ensemble.constant_k;
    e["seed"] = ensemble.seed;
    e["realization"] = realization;
    j["ensemble"] = std::move(e);
    return j.dump();
}

linalg::SymMatrix one_particle_operator(const OscillatorSystem& sys) {
    const linalg::SymMatrix hp_half = linalg::matrix_power(sys.hp, 0.5);
    return linalg::sandwich(hp_half, sys.hq);
}

AssumptionReport check_assumption(const OscillatorSystem& sys, double bound) {
    AssumptionReport report;
    report.bound = bound;

    const auto hp_eig = linalg::sym_eigen(sys.hp);
    const auto hq_eig = linalg::sym_eigen(sys.hq);
    report.norm_hp = std::max(std::abs(hp_eig.eigenvalues.front()),
                              std::abs(hp_eig.eigenvalues.back()));
    report.norm_hp_inv = 1.0 / hp_eig.eigenvalues.front();
    report.norm_hq = std::max(std::abs(hq_eig.eigenvalues.front()),
                              std::abs(hq_eig.eigenvalues.back()));
    report.passes = report.norm_hp <= bound && report.norm_hp_inv <= bound &&
                    report.norm_hq <= bound;
    return report;
}

linalg::EigenDecomposition chain_spectrum(int n) {
    if (n < 1) {
        throw DimensionError("chain spectrum needs at least one site");
    }
    linalg::EigenDecomposition eig;
    eig.dim = n;
    eig.eigenvalues.resize(n);
    eig.eigenvectors.resize(static_cast<size_t>(n) * n);
    const double norm = std::sqrt(2.0 / (n + 1));
    for (int k = 0; k < n; ++k) {
        const double s = std::sin((k + 1) * pi / (2.0 * (n + 1)));
        eig.eigenvalues[k] = 4.0 * s * s;
        for (int j = 0; j < n; ++j) {
            eig.eigenvectors[static_cast<size_t>(j) * n + k] =
                norm * std::sin(static_cast<double>(j + 1) * (k + 1) * pi / (n + 1));
        }
    }
    return eig;
}

linalg::SymMatrix truncated_chain_power(int n_sub, int n_full, double alpha,
                                        BlockPlacement placement, int threads) {
    return truncated_chain_powers(n_sub, n_full, {alpha}, placement, threads).front();
}

std::vector<linalg::SymMatrix> truncated_chain_powers(int n_sub, int n_full,
                                                      const std::vector<double>& alphas,
                                                      BlockPlacement placement, int threads) {
    if (n_sub < 1 || n_sub > n_full) {
        throw DimensionError("need 1 <= n_sub <= n_full");
    }
    if (alphas.empty()) {
        return {};
    }
    const int big_n = n_full;
    const int offset = (placement == BlockPlacement::centered) ? (big_n - n_sub) / 2 : 0;
    const int n_alpha = static_cast<int>(alphas.size());

    // Guard the smallest chain eigenvalue before burning through the mode sum.
    const double sin_min = std::sin(pi / (2.0 * (big_n + 1)));
    for (double alpha : alphas) {
        if (alpha < 0.0) {
            const double s = linalg::scalar_power(sin_min * sin_min, alpha);
            if (!std::isfinite(s)) {
                throw SingularMatrixError(
                    "chain power overflows on the smallest eigenvalue for alpha = " +
                        std::to_string(alpha),
                    4.0 * sin_min * sin_min);
            }
        }
    }

    // Entries need the cosine sums C(d) = sum_l sin^(2 alpha)(theta_l) cos(d phi_l)
    // over two windows of d: row distances [0, n_sub) and shifted row sums
    // [start2, start2 + len2).
    const int len1 = n_sub;
    const int start2 = 2 * offset + 2;
    const int len2 = 2 * n_sub - 1;
    const int len = len1 + len2;

    const int chunk = 1 << 16;
    const int chunk_count = (big_n + chunk - 1) / chunk;
    std::vector<double> acc(static_cast<size_t>(chunk_count) * n_alpha * len, 0.0);

    const double half_step = pi / (2.0 * (big_n + 1));
    const std::int64_t period = 2LL * (big_n + 1);

    detail::run_chunks(chunk_count, threads, [&](int ci) {
        const int l_begin = ci * chunk + 1;
        const int l_end = std::min(big_n, (ci + 1) * chunk);
        double* base = acc.data() + static_cast<size_t>(ci) * n_alpha * len;
        std::vector<double> cosbuf(len);
        for (int l = l_begin; l <= l_end; ++l) {
            const double theta = l * half_step;
            const double sn = std::sin(theta);
            const double sn2 = sn * sn;
            const double twoc = 2.0 - 4.0 * sn2;  // 2 cos(2 theta)

            // Window 1 starts at d = 0.
            double c_prev = 1.0;
            double c_cur = 0.5 * twoc;
            cosbuf[0] = c_prev;
            if (len1 > 1) {
                cosbuf[1] = c_cur;
                for (int d = 2; d < len1; ++d) {
                    const double c_next = twoc * c_cur - c_prev;
                    c_prev = c_cur;
                    c_cur = c_next;
                    cosbuf[d] = c_cur;
                }
            }
            // Window 2 starts at d = start2; arguments are reduced modulo the
            // mode period exactly in integers so large d stays accurate.
            const std::int64_t r0 = (static_cast<std::int64_t>(start2) * l) % period;
            const std::int64_t r1 = (static_cast<std::int64_t>(start2 + 1) * l) % period;
            c_prev = std::cos(static_cast<double>(r0) * 2.0 * half_step);
            c_cur = std::cos(static_cast<double>(r1) * 2.0 * half_step);
            cosbuf[len1] = c_prev;
            if (len2 > 1) {
                cosbuf[len1 + 1] = c_cur;
                for (int d = 2; d < len2; ++d) {
                    const double c_next = twoc * c_cur - c_prev;
                    c_prev = c_cur;
                    c_cur = c_next;
                    cosbuf[len1 + d] = c_cur;
                }
            }
            for (int a = 0; a < n_alpha; ++a) {
                const double s = linalg::scalar_power(sn2, alphas[a]);
                double* accrow = base + static_cast<size_t>(a) * len;
                for (int i = 0; i < len; ++i) {
                    accrow[i] += s * cosbuf[i];
                }
            }
        }
    });

    std::vector<linalg::SymMatrix> out;
    out.reserve(n_alpha);
    std::vector<double> c(len);
    for (int a = 0; a < n_alpha; ++a) {
        std::fill(c.begin(), c.end(), 0.0);
        for (int ci = 0; ci < chunk_count; ++ci) {
            const double* accrow =
                acc.data() + (static_cast<size_t>(ci) * n_alpha + a) * len;
            for (int i = 0; i < len; ++i) {
                c[i] += accrow[i];
            }
        }
        const double pref = linalg::scalar_power(4.0, alphas[a]) / (big_n + 1);
        linalg::SymMatrix m(n_sub);
        for (int j = 0; j < n_sub; ++j) {
            for (int k = j; k < n_sub; ++k) {
                m.set(j, k, pref * (c[k - j] - c[len1 + j + k]));
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace oscent::model
