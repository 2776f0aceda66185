#include "oscent/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "oscent/eigen.hpp"
#include "oscent/entropy.hpp"
#include "oscent/errors.hpp"
#include "oscent/parallel.hpp"
#include "oscent/validation.hpp"
#include "oscent/version.hpp"

namespace oscent::experiment {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double quiet_nan = std::numeric_limits<double>::quiet_NaN();
constexpr double normal_quantile_975 = 1.959963984540054;

class Stopwatch {
public:
    double seconds() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add_aggregate(ExperimentReport& report, const std::string& name, double value) {
    report.aggregates.push_back({name, value});
}

void add_verdict(ExperimentReport& report, const std::string& name, bool passed) {
    report.verdicts.push_back({name, passed});
}

struct LineFit {
    double slope = quiet_nan;
    double intercept = quiet_nan;
    double slope_stderr = quiet_nan;
    double ci_low = quiet_nan;
    double ci_high = quiet_nan;
    bool valid = false;
};

/// Weighted least squares with known per-point sigmas; falls back to equal
/// weights with residual-based standard errors when sigmas are unusable.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y,
                 const std::vector<double>* sigma) {
    LineFit fit;
    const size_t n = x.size();
    if (n < 2 || y.size() != n) {
        return fit;
    }
    bool use_sigma = sigma != nullptr && sigma->size() == n;
    if (use_sigma) {
        for (double s : *sigma) {
            use_sigma = use_sigma && std::isfinite(s) && s > 0.0;
        }
    }

    std::vector<double> weights(n, 1.0);
    if (use_sigma) {
        for (size_t i = 0; i < n; ++i) {
            weights[i] = 1.0 / ((*sigma)[i] * (*sigma)[i]);
        }
    }
    double weight_sum = 0.0;
    double x_bar = 0.0;
    double y_bar = 0.0;
    for (size_t i = 0; i < n; ++i) {
        weight_sum += weights[i];
        x_bar += weights[i] * x[i];
        y_bar += weights[i] * y[i];
    }
    x_bar /= weight_sum;
    y_bar /= weight_sum;

    double sxx = 0.0;
    double sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sxx += weights[i] * (x[i] - x_bar) * (x[i] - x_bar);
        sxy += weights[i] * (x[i] - x_bar) * (y[i] - y_bar);
    }
    if (!(sxx > 0.0)) {
        return fit;
    }
    fit.slope = sxy / sxx;
    fit.intercept = y_bar - fit.slope * x_bar;

    double variance = 0.0;
    if (use_sigma) {
        variance = 1.0 / sxx;
    } else {
        if (n < 3) {
            return fit;
        }
        double residual_sum = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double r = y[i] - (fit.intercept + fit.slope * x[i]);
            residual_sum += r * r;
        }
        variance = residual_sum / (static_cast<double>(n) - 2.0) / sxx;
    }
    fit.slope_stderr = std::sqrt(variance);
    fit.ci_low = fit.slope - normal_quantile_975 * fit.slope_stderr;
    fit.ci_high = fit.slope + normal_quantile_975 * fit.slope_stderr;
    fit.valid = true;
    return fit;
}

bool strictly_increasing(const std::vector<double>& values) {
    for (size_t i = 0; i + 1 < values.size(); ++i) {
        if (!(values[i + 1] > values[i])) {
            return false;
        }
    }
    return !values.empty();
}

std::string lattice_name(toeplitz::Lattice lattice) {
    return lattice == toeplitz::Lattice::full_line ? "full_line" : "half_line";
}

toeplitz::Lattice lattice_from_name(const std::string& name) {
    if (name == "full_line") {
        return toeplitz::Lattice::full_line;
    }
    if (name == "half_line") {
        return toeplitz::Lattice::half_line;
    }
    throw ConfigError("unknown lattice name: " + name);
}

std::string dist_name(model::DisorderEnsemble::Dist dist) {
    return dist == model::DisorderEnsemble::Dist::uniform ? "uniform" : "constant";
}

model::DisorderEnsemble::Dist dist_from_name(const std::string& name) {
    if (name == "uniform") {
        return model::DisorderEnsemble::Dist::uniform;
    }
    if (name == "constant") {
        return model::DisorderEnsemble::Dist::constant;
    }
    throw ConfigError("unknown disorder distribution: " + name);
}

void expect_keys(const ordered_json& object, const std::vector<std::string>& allowed,
                 const std::string& where) {
    for (const auto& item : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            throw ConfigError("unknown key \"" + item.key() + "\" in " + where);
        }
    }
}

ordered_json config_json(const ExperimentConfig& config) {
    ordered_json ensemble;
    ensemble["mass"] = config.ensemble.mass;
    ensemble["coupling"] = config.ensemble.coupling;
    ensemble["dist"] = dist_name(config.ensemble.dist);
    ensemble["lo"] = config.ensemble.lo;
    ensemble["hi"] = config.ensemble.hi;
    ensemble["constant_k"] = config.ensemble.constant_k;

    ordered_json tol;
    tol["spectrum_tol"] = config.tol.spectrum_tol;
    tol["pair_tol"] = config.tol.pair_tol;

    ordered_json j;
    j["kind"] = kind_name(config.kind);
    j["chain_length"] = config.chain_length;
    j["block_sizes"] = config.block_sizes;
    j["ensemble"] = ensemble;
    j["realizations"] = config.realizations;
    j["ladder"] = config.ladder;
    j["safety_multiplier"] = config.safety_multiplier;
    j["alpha"] = config.alpha;
    j["szego_sizes"] = config.szego_sizes;
    j["matel_which"] = config.matel_which;
    j["matel_lattice"] = lattice_name(config.matel_lattice);
    j["matel_size"] = config.matel_size;
    j["seed"] = config.seed;
    j["threads"] = config.threads;
    j["d_bound"] = config.d_bound;
    j["out_path"] = config.out_path;
    j["format"] = config.format;
    j["tol"] = tol;
    return j;
}

ordered_json payload_json(const ExperimentReport& report) {
    ordered_json payload;
    payload["columns"] = report.columns;
    if (!report.row_labels.empty()) {
        payload["row_labels"] = report.row_labels;
    }
    payload["rows"] = report.rows;
    ordered_json aggregates = ordered_json::object();
    for (const auto& aggregate : report.aggregates) {
        aggregates[aggregate.name] = aggregate.value;
    }
    payload["aggregates"] = aggregates;
    ordered_json verdicts = ordered_json::object();
    for (const auto& verdict : report.verdicts) {
        verdicts[verdict.name] = verdict.passed;
    }
    payload["verdicts"] = verdicts;
    return payload;
}

std::string number_token(double value) {
    return ordered_json(value).dump();
}

/// Cheap sufficient test for the norm assumption: exact diagonal norms for
/// hp plus a Gershgorin row bound for hq. Falls back to the exact spectral
/// check only when the row bound is inconclusive.
bool passes_assumption(const model::OscillatorSystem& sys, double d_bound) {
    if (sys.hp.is_diagonal()) {
        const auto diag = sys.hp.diagonal_entries();
        double hp_max = 0.0;
        double hp_min = std::numeric_limits<double>::infinity();
        for (double value : diag) {
            hp_max = std::max(hp_max, std::abs(value));
            hp_min = std::min(hp_min, std::abs(value));
        }
        double row_bound = 0.0;
        const int dim = sys.hq.dim();
        for (int i = 0; i < dim; ++i) {
            double row = 0.0;
            for (int j = 0; j < dim; ++j) {
                row += std::abs(sys.hq(i, j));
            }
            row_bound = std::max(row_bound, row);
        }
        if (hp_min > 0.0 && hp_max <= d_bound && 1.0 / hp_min <= d_bound &&
            row_bound <= d_bound) {
            return true;
        }
    }
    return model::check_assumption(sys, d_bound).passes;
}

int boundary_edge_count(const model::Graph& graph, const model::Region& region) {
    int count = 0;
    for (const auto& edge : graph.edges()) {
        const bool first = region.contains(edge.first);
        const bool second = region.contains(edge.second);
        if (first != second) {
            ++count;
        }
    }
    return count;
}

} // namespace

std::string kind_name(Kind kind) {
    switch (kind) {
    case Kind::validate:
        return "validate";
    case Kind::area_law:
        return "area_law";
    case Kind::divergence_z:
        return "divergence_z";
    case Kind::divergence_n:
        return "divergence_n";
    case Kind::szego:
        return "szego";
    case Kind::matel:
        return "matel";
    }
    throw ConfigError("unhandled experiment kind");
}

Kind kind_from_name(const std::string& name) {
    if (name == "validate") {
        return Kind::validate;
    }
    if (name == "area_law") {
        return Kind::area_law;
    }
    if (name == "divergence_z") {
        return Kind::divergence_z;
    }
    if (name == "divergence_n") {
        return Kind::divergence_n;
    }
    if (name == "szego") {
        return Kind::szego;
    }
    if (name == "matel") {
        return Kind::matel;
    }
    throw ConfigError("unknown experiment kind: " + name);
}

void ExperimentConfig::validate() const {
    if (threads < 1) {
        throw ConfigError("threads must be at least 1");
    }
    if (format != "json" && format != "csv") {
        throw ConfigError("format must be \"json\" or \"csv\"");
    }
    if (!(tol.spectrum_tol >= 0.0) || !(tol.pair_tol > 0.0)) {
        throw ConfigError("tolerances must be nonnegative (pair_tol positive)");
    }
    if (!(d_bound > 0.0)) {
        throw ConfigError("d_bound must be positive");
    }

    switch (kind) {
    case Kind::validate:
        break;
    case Kind::area_law: {
        if (chain_length < 4) {
            throw ConfigError("chain_length must be at least 4");
        }
        if (block_sizes.empty()) {
            throw ConfigError("block_sizes must be nonempty");
        }
        for (int block : block_sizes) {
            if (block < 1 || block >= chain_length) {
                throw ConfigError("block sizes must lie in [1, chain_length)");
            }
        }
        if (realizations < 1) {
            throw ConfigError("realizations must be at least 1");
        }
        ensemble.validate();
        break;
    }
    case Kind::divergence_z:
    case Kind::divergence_n: {
        if (ladder.empty()) {
            throw ConfigError("ladder must be nonempty");
        }
        for (size_t i = 0; i < ladder.size(); ++i) {
            if (ladder[i] < 1) {
                throw ConfigError("ladder entries must be at least 1");
            }
            if (i > 0 && ladder[i] <= ladder[i - 1]) {
                throw ConfigError("ladder must be strictly increasing");
            }
        }
        if (safety_multiplier < 1) {
            throw ConfigError("safety_multiplier must be at least 1");
        }
        const int largest = ladder.back();
        const double volume = static_cast<double>(safety_multiplier) *
                              std::pow(static_cast<double>(largest),
                                       kind == Kind::divergence_n ? 4.0 : 3.0);
        if (volume > 2.0e9) {
            throw ConfigError("ladder top requires a finite volume beyond integer range");
        }
        break;
    }
    case Kind::szego: {
        if (szego_sizes.empty()) {
            throw ConfigError("szego_sizes must be nonempty");
        }
        for (size_t i = 0; i < szego_sizes.size(); ++i) {
            if (szego_sizes[i] < 1) {
                throw ConfigError("szego_sizes entries must be at least 1");
            }
            if (i > 0 && szego_sizes[i] <= szego_sizes[i - 1]) {
                throw ConfigError("szego_sizes must be strictly increasing");
            }
        }
        if (!(alpha > -0.5)) {
            throw ConfigError("szego symbol exponent must exceed -1/2");
        }
        break;
    }
    case Kind::matel: {
        if (matel_size < 1) {
            throw ConfigError("matel_size must be at least 1");
        }
        if (matel_which != "R" && matel_which != "S" && matel_which != "limit") {
            throw ConfigError("matel_which must be \"R\", \"S\", or \"limit\"");
        }
        if (matel_which == "limit") {
            const bool half = matel_lattice == toeplitz::Lattice::half_line;
            if ((half && !(alpha >= -0.5)) || (!half && !(alpha > -0.5))) {
                throw ConfigError("limit-matrix exponent out of range for the lattice");
            }
        }
        break;
    }
    }
}

std::string config_to_json(const ExperimentConfig& config) {
    return config_json(config).dump(2);
}

ExperimentConfig config_from_json(const std::string& text) {
    try {
        const auto j = ordered_json::parse(text);
        expect_keys(j,
                    {"kind", "chain_length", "block_sizes", "ensemble", "realizations",
                     "ladder", "safety_multiplier", "alpha", "szego_sizes", "matel_which",
                     "matel_lattice", "matel_size", "seed", "threads", "d_bound", "out_path",
                     "format", "tol"},
                    "config");
        ExperimentConfig config;
        if (j.contains("kind")) {
            config.kind = kind_from_name(j["kind"].get<std::string>());
        }
        config.chain_length = j.value("chain_length", config.chain_length);
        config.block_sizes = j.value("block_sizes", config.block_sizes);
        if (j.contains("ensemble")) {
            const auto& e = j["ensemble"];
            expect_keys(e, {"mass", "coupling", "dist", "lo", "hi", "constant_k"},
                        "config.ensemble");
            config.ensemble.mass = e.value("mass", config.ensemble.mass);
            config.ensemble.coupling = e.value("coupling", config.ensemble.coupling);
            if (e.contains("dist")) {
                config.ensemble.dist = dist_from_name(e["dist"].get<std::string>());
            }
            config.ensemble.lo = e.value("lo", config.ensemble.lo);
            config.ensemble.hi = e.value("hi", config.ensemble.hi);
            config.ensemble.constant_k = e.value("constant_k", config.ensemble.constant_k);
        }
        config.realizations = j.value("realizations", config.realizations);
        config.ladder = j.value("ladder", config.ladder);
        config.safety_multiplier = j.value("safety_multiplier", config.safety_multiplier);
        config.alpha = j.value("alpha", config.alpha);
        config.szego_sizes = j.value("szego_sizes", config.szego_sizes);
        config.matel_which = j.value("matel_which", config.matel_which);
        if (j.contains("matel_lattice")) {
            config.matel_lattice = lattice_from_name(j["matel_lattice"].get<std::string>());
        }
        config.matel_size = j.value("matel_size", config.matel_size);
        config.seed = j.value("seed", config.seed);
        config.threads = j.value("threads", config.threads);
        config.d_bound = j.value("d_bound", config.d_bound);
        config.out_path = j.value("out_path", config.out_path);
        config.format = j.value("format", config.format);
        if (j.contains("tol")) {
            const auto& t = j["tol"];
            expect_keys(t, {"spectrum_tol", "pair_tol"}, "config.tol");
            config.tol.spectrum_tol = t.value("spectrum_tol", config.tol.spectrum_tol);
            config.tol.pair_tol = t.value("pair_tol", config.tol.pair_tol);
        }
        return config;
    } catch (const nlohmann::json::exception& error) {
        throw ConfigError(std::string("config parse failure: ") + error.what());
    }
}

bool ExperimentReport::all_passed() const {
    for (const auto& verdict : verdicts) {
        if (!verdict.passed) {
            return false;
        }
    }
    return true;
}

std::string ExperimentReport::payload_string() const {
    ordered_json j;
    j["config"] = config_json(config);
    j["payload"] = payload_json(*this);
    return j.dump();
}

std::string ExperimentReport::to_json() const {
    ordered_json j;
    j["config"] = config_json(config);
    j["payload"] = payload_json(*this);
    ordered_json meta;
    meta["library_version"] = library_version;
    meta["wall_clock_seconds"] = wall_clock_seconds;
    j["meta"] = meta;
    return j.dump(2) + "\n";
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream out;
    out << "# oscent report kind=" << kind_name(config.kind) << " seed=" << config.seed
        << "\n";
    out << "# config " << config_json(config).dump() << "\n";

    const bool labelled = !row_labels.empty();
    if (labelled) {
        out << "label";
    }
    for (size_t c = 0; c < columns.size(); ++c) {
        if (labelled || c > 0) {
            out << ",";
        }
        out << columns[c];
    }
    out << "\n";
    for (size_t r = 0; r < rows.size(); ++r) {
        if (labelled) {
            out << row_labels[r];
        }
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (labelled || c > 0) {
                out << ",";
            }
            out << number_token(rows[r][c]);
        }
        out << "\n";
    }
    for (const auto& aggregate : aggregates) {
        out << "# aggregate," << aggregate.name << "," << number_token(aggregate.value)
            << "\n";
    }
    for (const auto& verdict : verdicts) {
        out << "# verdict," << verdict.name << "," << (verdict.passed ? "pass" : "fail")
            << "\n";
    }
    out << "# meta,library_version," << library_version << "\n";
    out << "# meta,wall_clock_seconds," << number_token(wall_clock_seconds) << "\n";
    return out.str();
}

ExperimentReport run_validate(const ExperimentConfig& config) {
    const Stopwatch clock;
    config.validate();

    ExperimentReport report;
    report.config = config;
    report.config.kind = Kind::validate;
    report.columns = {"passed", "detail"};

    const auto suites = validation::run_all_suites(config.seed, config.tol);
    int total_passed = 0;
    int total_checks = 0;
    for (const auto& suite : suites) {
        for (const auto& check : suite.checks) {
            report.row_labels.push_back(suite.suite + "/" + check.name);
            report.rows.push_back({check.passed ? 1.0 : 0.0, check.detail});
        }
        total_passed += suite.passed_count();
        total_checks += static_cast<int>(suite.checks.size());
        add_aggregate(report, suite.suite + "_passed", suite.passed_count());
        add_aggregate(report, suite.suite + "_total", static_cast<double>(suite.checks.size()));
        add_verdict(report, suite.suite + "-all-passed", suite.all_passed);
    }
    add_aggregate(report, "total_passed", total_passed);
    add_aggregate(report, "total_checks", total_checks);
    add_verdict(report, "all-suites-passed", total_passed == total_checks);

    report.wall_clock_seconds = clock.seconds();
    return report;
}

ExperimentReport run_area_law(const ExperimentConfig& config) {
    const Stopwatch clock;
    {
        auto checked = config;
        checked.kind = Kind::area_law;
        checked.validate();
    }

    ExperimentReport report;
    report.config = config;
    report.config.kind = Kind::area_law;
    report.columns = {"realization", "block_size", "entropy", "upper_bound", "included"};

    const int length = config.chain_length;
    const auto graph = model::Graph::path(length);
    auto ensemble = config.ensemble;
    ensemble.seed = config.seed;

    const auto& blocks = config.block_sizes;
    const int block_count = static_cast<int>(blocks.size());
    const int fit_distances = std::min(32, std::max(2, length / 8));

    struct Slot {
        bool included = false;
        std::vector<double> entropies;
        std::vector<double> upper_bounds;
        std::vector<double> profile;
    };
    std::vector<Slot> slots(static_cast<size_t>(config.realizations));

    detail::run_chunks(config.realizations, config.threads, [&](int realization) {
        auto& slot = slots[static_cast<size_t>(realization)];
        const auto sys = model::anderson_system(graph, ensemble, realization);
        if (!passes_assumption(sys, config.d_bound)) {
            return;
        }
        slot.included = true;
        const auto cov = gaussian::ground_state_covariance(sys);
        const auto& qq = cov.qq();
        for (int block : blocks) {
            const auto region = model::Region::centered(length, block);
            slot.entropies.push_back(
                entropy::entanglement_entropy(cov, region, config.tol).nats);
            slot.upper_bounds.push_back(
                entropy::upper_bound_from_block(qq, region, config.d_bound));
        }
        slot.profile.resize(static_cast<size_t>(fit_distances));
        for (int d = 1; d <= fit_distances; ++d) {
            double sum = 0.0;
            for (int x = 0; x + d < length; ++x) {
                sum += std::abs(qq(x, x + d));
            }
            slot.profile[static_cast<size_t>(d - 1)] = sum / (length - d);
        }
    });

    int included_count = 0;
    for (int r = 0; r < config.realizations; ++r) {
        const auto& slot = slots[static_cast<size_t>(r)];
        included_count += slot.included ? 1 : 0;
        for (int b = 0; b < block_count; ++b) {
            report.rows.push_back({static_cast<double>(r), static_cast<double>(blocks[b]),
                                   slot.included ? slot.entropies[static_cast<size_t>(b)]
                                                 : quiet_nan,
                                   slot.included ? slot.upper_bounds[static_cast<size_t>(b)]
                                                 : quiet_nan,
                                   slot.included ? 1.0 : 0.0});
        }
    }

    std::vector<double> block_means(static_cast<size_t>(block_count), quiet_nan);
    std::vector<double> block_stderrs(static_cast<size_t>(block_count), quiet_nan);
    double min_margin = std::numeric_limits<double>::infinity();
    for (int b = 0; b < block_count; ++b) {
        double sum = 0.0;
        for (const auto& slot : slots) {
            if (slot.included) {
                sum += slot.entropies[static_cast<size_t>(b)];
            }
        }
        if (included_count > 0) {
            const double mean = sum / included_count;
            block_means[static_cast<size_t>(b)] = mean;
            if (included_count > 1) {
                double squares = 0.0;
                for (const auto& slot : slots) {
                    if (slot.included) {
                        const double diff = slot.entropies[static_cast<size_t>(b)] - mean;
                        squares += diff * diff;
                    }
                }
                block_stderrs[static_cast<size_t>(b)] =
                    std::sqrt(squares / (included_count - 1)) / std::sqrt(included_count);
            }
        }
        for (const auto& slot : slots) {
            if (slot.included) {
                min_margin = std::min(min_margin, slot.upper_bounds[static_cast<size_t>(b)] -
                                                      slot.entropies[static_cast<size_t>(b)]);
            }
        }
    }

    const auto region_for = [&](int block) { return model::Region::centered(length, block); };
    for (int b = 0; b < block_count; ++b) {
        const std::string suffix = "_b" + std::to_string(blocks[b]);
        const int boundary = boundary_edge_count(graph, region_for(blocks[b]));
        add_aggregate(report, "mean_entropy" + suffix, block_means[static_cast<size_t>(b)]);
        add_aggregate(report, "stderr_entropy" + suffix,
                      block_stderrs[static_cast<size_t>(b)]);
        add_aggregate(report, "mean_entropy_over_boundary" + suffix,
                      block_means[static_cast<size_t>(b)] / boundary);
    }

    std::vector<double> block_x(blocks.begin(), blocks.end());
    const auto slope_fit = fit_line(block_x, block_means, &block_stderrs);
    add_aggregate(report, "entropy_slope", slope_fit.slope);
    add_aggregate(report, "entropy_slope_stderr", slope_fit.slope_stderr);
    add_aggregate(report, "entropy_slope_ci_low", slope_fit.ci_low);
    add_aggregate(report, "entropy_slope_ci_high", slope_fit.ci_high);

    std::vector<double> distances;
    std::vector<double> log_profile;
    if (included_count > 0) {
        for (int d = 1; d <= fit_distances; ++d) {
            double sum = 0.0;
            for (const auto& slot : slots) {
                if (slot.included) {
                    sum += slot.profile[static_cast<size_t>(d - 1)];
                }
            }
            distances.push_back(static_cast<double>(d));
            log_profile.push_back(std::log(sum / included_count));
        }
    }
    const auto decay_fit = fit_line(distances, log_profile, nullptr);
    add_aggregate(report, "decay_nu", -decay_fit.slope);
    add_aggregate(report, "decay_nu_stderr", decay_fit.slope_stderr);
    add_aggregate(report, "decay_nu_ci_low", -decay_fit.ci_high);
    add_aggregate(report, "decay_nu_ci_high", -decay_fit.ci_low);
    add_aggregate(report, "decay_c", std::exp(decay_fit.intercept));
    add_aggregate(report, "decay_fit_distances", fit_distances);

    add_aggregate(report, "included_realizations", included_count);
    add_aggregate(report, "excluded_realizations", config.realizations - included_count);
    add_aggregate(report, "min_upper_bound_margin",
                  included_count > 0 ? min_margin : quiet_nan);

    add_verdict(report, "upper-bound-dominates",
                included_count > 0 && min_margin >= -1e-9);
    if (config.ensemble.dist == model::DisorderEnsemble::Dist::uniform) {
        add_verdict(report, "entropy-slope-ci-contains-zero",
                    slope_fit.valid && slope_fit.ci_low <= 0.0 && slope_fit.ci_high >= 0.0);
        add_verdict(report, "decay-rate-positive", decay_fit.valid && -decay_fit.ci_high > 0.0);
    } else {
        bool growing = included_count > 0 && block_count > 1;
        for (int b = 0; b + 1 < block_count; ++b) {
            growing = growing && block_means[static_cast<size_t>(b + 1)] >
                                     block_means[static_cast<size_t>(b)];
        }
        add_verdict(report, "entropy-growing-with-block-size", growing);
    }

    report.wall_clock_seconds = clock.seconds();
    return report;
}

ExperimentReport run_divergence(const ExperimentConfig& config, toeplitz::Lattice lattice) {
    const Stopwatch clock;
    const bool half_line = lattice == toeplitz::Lattice::half_line;
    {
        auto checked = config;
        checked.kind = half_line ? Kind::divergence_n : Kind::divergence_z;
        checked.validate();
    }

    ExperimentReport report;
    report.config = config;
    report.config.kind = half_line ? Kind::divergence_n : Kind::divergence_z;
    report.columns = {"n",       "m",       "entropy",        "det_bound",
                      "lmax_bound", "det_sum", "halfline_bound", "element_floor"};

    const auto placement =
        half_line ? model::BlockPlacement::leading : model::BlockPlacement::centered;
    const int volume_exponent = half_line ? 4 : 3;

    std::vector<double> entropies;
    std::vector<double> det_sums;
    double min_det_margin = std::numeric_limits<double>::infinity();
    double min_lmax_margin = std::numeric_limits<double>::infinity();
    double min_halfline_margin = std::numeric_limits<double>::infinity();
    bool any_halfline = false;

    for (const int n : config.ladder) {
        double volume = config.safety_multiplier;
        for (int e = 0; e < volume_exponent; ++e) {
            volume *= n;
        }
        const int m = static_cast<int>(volume);

        const auto powers = model::truncated_chain_powers(
            n, m, {-0.5, -0.25, 0.25, 0.5}, placement, config.threads);
        const auto& inv_half = powers[0];
        const auto& inv_quarter = powers[1];
        const auto& quarter = powers[2];
        const auto& half = powers[3];

        const auto spectrum =
            gaussian::symplectic_spectrum_block(inv_half, half, config.tol);
        double entropy_value = 0.0;
        for (double gamma : spectrum.values) {
            entropy_value += entropy::entropy_function(gamma);
        }

        double det_bound = -std::numeric_limits<double>::infinity();
        double lmax_bound = -std::numeric_limits<double>::infinity();
        for (const auto& sandwiched : {linalg::sandwich(inv_quarter, half),
                                       linalg::sandwich(quarter, inv_half)}) {
            const auto eig = linalg::sym_eigen(sandwiched);
            if (eig.eigenvalues.front() <= 0.0) {
                throw SingularMatrixError("lower-bound operator lost definiteness",
                                          eig.eigenvalues.front());
            }
            double log_det = 0.0;
            for (double value : eig.eigenvalues) {
                log_det += std::log(value);
            }
            det_bound = std::max(det_bound, 0.5 * log_det);
            lmax_bound = std::max(lmax_bound, 0.5 * std::log(eig.eigenvalues.back()));
        }

        const double det_sum =
            0.5 * linalg::log_det_pos_def(half) + linalg::log_det_pos_def(inv_quarter);

        double halfline_bound = quiet_nan;
        double element_floor = quiet_nan;
        if (half_line && n >= 2) {
            const auto lower = toeplitz::ordered_lower_bound_halfline(n);
            halfline_bound = lower.bound;
            element_floor = lower.element_floor;
            if (!lower.vacuous) {
                any_halfline = true;
                min_halfline_margin =
                    std::min(min_halfline_margin, entropy_value - lower.bound);
            }
        }

        entropies.push_back(entropy_value);
        det_sums.push_back(det_sum);
        min_det_margin = std::min(min_det_margin, entropy_value - det_bound);
        min_lmax_margin = std::min(min_lmax_margin, entropy_value - lmax_bound);

        report.rows.push_back({static_cast<double>(n), static_cast<double>(m), entropy_value,
                               det_bound, lmax_bound, det_sum, halfline_bound,
                               element_floor});
    }

    double min_increment = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < entropies.size(); ++i) {
        min_increment = std::min(min_increment, entropies[i + 1] - entropies[i]);
    }
    add_aggregate(report, "min_entropy_increment",
                  entropies.size() > 1 ? min_increment : quiet_nan);
    add_aggregate(report, "min_det_bound_margin", min_det_margin);
    add_aggregate(report, "min_lmax_bound_margin", min_lmax_margin);
    if (half_line) {
        add_aggregate(report, "min_halfline_bound_margin",
                      any_halfline ? min_halfline_margin : quiet_nan);
    }

    add_verdict(report, "entropy-strictly-increasing", strictly_increasing(entropies));
    add_verdict(report, "entropy-dominates-det-bound", min_det_margin > 0.0);
    add_verdict(report, "entropy-dominates-lmax-bound", min_lmax_margin > 0.0);
    if (half_line) {
        add_verdict(report, "entropy-dominates-halfline-bound",
                    !any_halfline || min_halfline_margin > 0.0);
    } else {
        add_verdict(report, "det-sum-strictly-increasing", strictly_increasing(det_sums));
    }

    report.wall_clock_seconds = clock.seconds();
    return report;
}

ExperimentReport run_szego(const ExperimentConfig& config) {
    const Stopwatch clock;
    {
        auto checked = config;
        checked.kind = Kind::szego;
        checked.validate();
    }

    ExperimentReport report;
    report.config = config;
    report.config.kind = Kind::szego;
    report.columns = {"n", "log_det", "partial_sum", "bound", "exact"};

    const auto scan = toeplitz::szego_scan(config.alpha, config.szego_sizes, config.threads);
    bool all_pos_def = true;
    for (size_t i = 0; i < scan.sizes.size(); ++i) {
        const int n = scan.sizes[i];
        double bound = quiet_nan;
        double exact = quiet_nan;
        if (n >= 2) {
            const auto lower = toeplitz::ordered_lower_bound_halfline(n);
            bound = lower.bound;
            exact = lower.exact_element;
        }
        all_pos_def = all_pos_def && scan.positive_definite[i] != 0;
        report.rows.push_back(
            {static_cast<double>(n), scan.log_dets[i], scan.partial_sums[i], bound, exact});
    }

    const auto fit = fit_line(scan.partial_sums, scan.log_dets, nullptr);
    add_aggregate(report, "g_constant", scan.g_constant);
    add_aggregate(report, "log_det_slope_vs_partial_sum", fit.slope);

    add_verdict(report, "all-truncations-positive-definite", all_pos_def);
    if (config.alpha != 0.0) {
        add_verdict(report, "log-det-strictly-increasing",
                    all_pos_def && strictly_increasing(scan.log_dets));
        add_verdict(report, "log-det-slope-positive", fit.valid && fit.slope > 0.0);
    } else {
        double worst = 0.0;
        for (double value : scan.log_dets) {
            worst = std::max(worst, std::abs(value));
        }
        add_verdict(report, "log-det-identically-zero", all_pos_def && worst <= 1e-6);
    }

    report.wall_clock_seconds = clock.seconds();
    return report;
}

ExperimentReport run_matel(const ExperimentConfig& config) {
    const Stopwatch clock;
    {
        auto checked = config;
        checked.kind = Kind::matel;
        checked.validate();
    }

    ExperimentReport report;
    report.config = config;
    report.config.kind = Kind::matel;
    report.columns = {"j", "k", "value"};

    linalg::SymMatrix entries(config.matel_size);
    if (config.matel_which == "R") {
        entries = toeplitz::r_matrix(config.matel_size);
    } else if (config.matel_which == "S") {
        entries = toeplitz::s_matrix(config.matel_size);
    } else {
        entries = toeplitz::limit_matrix(config.matel_lattice, config.alpha,
                                         config.matel_size, config.threads)
                      .entries;
    }

    double max_abs = 0.0;
    bool finite = true;
    for (int j = 0; j < config.matel_size; ++j) {
        for (int k = 0; k < config.matel_size; ++k) {
            const double value = entries(j, k);
            report.rows.push_back(
                {static_cast<double>(j + 1), static_cast<double>(k + 1), value});
            max_abs = std::max(max_abs, std::abs(value));
            finite = finite && std::isfinite(value);
        }
    }
    add_aggregate(report, "max_abs_entry", max_abs);
    add_verdict(report, "entries-finite", finite);

    report.wall_clock_seconds = clock.seconds();
    return report;
}

ExperimentReport run(const ExperimentConfig& config) {
    config.validate();
    switch (config.kind) {
    case Kind::validate:
        return run_validate(config);
    case Kind::area_law:
        return run_area_law(config);
    case Kind::divergence_z:
        return run_divergence(config, toeplitz::Lattice::full_line);
    case Kind::divergence_n:
        return run_divergence(config, toeplitz::Lattice::half_line);
    case Kind::szego:
        return run_szego(config);
    case Kind::matel:
        return run_matel(config);
    }
    throw ConfigError("unhandled experiment kind");
}

} // namespace oscent::experiment
