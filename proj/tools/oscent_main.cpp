#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "oscent/errors.hpp"
#include "oscent/experiment.hpp"

namespace {

using oscent::experiment::ExperimentConfig;
using oscent::experiment::ExperimentReport;
using oscent::experiment::Kind;

int default_threads() {
    if (const char* env = std::getenv("OSCENT_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) {
            return parsed;
        }
    }
    return 1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw oscent::ConfigError("cannot read config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int emit(const ExperimentReport& report) {
    const std::string text =
        report.config.format == "csv" ? report.to_csv() : report.to_json();
    if (report.config.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(report.config.out_path);
        if (!out) {
            throw oscent::ConfigError("cannot open output path: " + report.config.out_path);
        }
        out << text;
        std::cerr << "report written to " << report.config.out_path << "\n";
    }
    for (const auto& verdict : report.verdicts) {
        std::cerr << (verdict.passed ? "PASS" : "FAIL") << " " << verdict.name << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement entropies of oscillator ground states on graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out_path;
    std::string format;
    const auto* config_opt =
        app.add_option("--config", config_path, "JSON config file; flags override its fields")
            ->check(CLI::ExistingFile);
    const auto* seed_opt = app.add_option("--seed", seed, "base seed for all randomness");
    const auto* threads_opt =
        app.add_option("--threads", threads, "worker threads (default: OSCENT_THREADS or 1)")
            ->check(CLI::PositiveNumber);
    const auto* out_opt =
        app.add_option("--out", out_path, "output file path (default: stdout)");
    const auto* format_opt =
        app.add_option("--format", format, "report format")
            ->check(CLI::IsMember({"json", "csv"}));

    auto* validate_cmd =
        app.add_subcommand("validate", "run every module's invariant suite");

    auto* area_cmd = app.add_subcommand(
        "area-law", "disorder-averaged block entropies on a pinned chain");
    int chain_length = 0;
    std::vector<int> block_sizes;
    int realizations = 0;
    double constant_k = 0.0;
    double d_bound = 0.0;
    const auto* length_opt =
        area_cmd->add_option("--length", chain_length, "chain length")->check(CLI::PositiveNumber);
    const auto* blocks_opt =
        area_cmd->add_option("--blocks", block_sizes, "centered block sizes");
    const auto* realizations_opt =
        area_cmd->add_option("--realizations", realizations, "disorder samples")
            ->check(CLI::PositiveNumber);
    const auto* constant_opt = area_cmd->add_option(
        "--constant-k", constant_k, "disable disorder and pin every site at this strength");
    const auto* dbound_opt =
        area_cmd->add_option("--d-bound", d_bound, "norm bound for the assumption check");

    auto* divergence_cmd = app.add_subcommand(
        "divergence", "exact block entropies along a doubling ladder with lower bounds");
    std::string lattice_flag;
    divergence_cmd->add_option("--lattice", lattice_flag, "z: centered blocks; n: leading blocks")
        ->check(CLI::IsMember({"z", "n"}))
        ->required();

    auto* szego_cmd = app.add_subcommand(
        "szego", "Toeplitz log determinants against their divergent driver");
    double alpha = 0.0;
    const auto* szego_alpha_opt =
        szego_cmd->add_option("--alpha", alpha, "symbol exponent (> -1/2)");

    auto* matel_cmd = app.add_subcommand("matel", "emit closed-form or limit matrix entries");
    std::string which;
    int matel_size = 0;
    std::string matel_lattice;
    double matel_alpha = 0.0;
    const auto* which_opt = matel_cmd->add_option("--which", which, "matrix family")
                                ->check(CLI::IsMember({"R", "S", "limit"}));
    const auto* size_opt =
        matel_cmd->add_option("--size", matel_size, "matrix size")->check(CLI::PositiveNumber);
    const auto* matel_lattice_opt =
        matel_cmd->add_option("--lattice", matel_lattice, "lattice for --which limit")
            ->check(CLI::IsMember({"half", "full"}));
    const auto* matel_alpha_opt =
        matel_cmd->add_option("--alpha", matel_alpha, "exponent for --which limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    }

    try {
        ExperimentConfig config;
        bool file_sets_threads = false;
        if (config_opt->count() > 0) {
            const std::string text = slurp(config_path);
            config = oscent::experiment::config_from_json(text);
            file_sets_threads = nlohmann::ordered_json::parse(text).contains("threads");
        }
        if (!file_sets_threads) {
            config.threads = default_threads();
        }
        if (seed_opt->count() > 0) {
            config.seed = seed;
        }
        if (threads_opt->count() > 0) {
            config.threads = threads;
        }
        if (out_opt->count() > 0) {
            config.out_path = out_path;
        }
        if (format_opt->count() > 0) {
            config.format = format;
        }

        if (app.got_subcommand(validate_cmd)) {
            config.kind = Kind::validate;
        } else if (app.got_subcommand(area_cmd)) {
            config.kind = Kind::area_law;
            if (length_opt->count() > 0) {
                config.chain_length = chain_length;
            }
            if (blocks_opt->count() > 0) {
                config.block_sizes = block_sizes;
            }
            if (realizations_opt->count() > 0) {
                config.realizations = realizations;
            }
            if (constant_opt->count() > 0) {
                config.ensemble.dist = oscent::model::DisorderEnsemble::Dist::constant;
                config.ensemble.constant_k = constant_k;
            }
            if (dbound_opt->count() > 0) {
                config.d_bound = d_bound;
            }
        } else if (app.got_subcommand(divergence_cmd)) {
            config.kind = lattice_flag == "z" ? Kind::divergence_z : Kind::divergence_n;
        } else if (app.got_subcommand(szego_cmd)) {
            config.kind = Kind::szego;
            if (szego_alpha_opt->count() > 0) {
                config.alpha = alpha;
            }
        } else if (app.got_subcommand(matel_cmd)) {
            config.kind = Kind::matel;
            if (which_opt->count() > 0) {
                config.matel_which = which;
            }
            if (size_opt->count() > 0) {
                config.matel_size = matel_size;
            }
            if (matel_lattice_opt->count() > 0) {
                config.matel_lattice = matel_lattice == "half"
                                           ? oscent::toeplitz::Lattice::half_line
                                           : oscent::toeplitz::Lattice::full_line;
            }
            if (matel_alpha_opt->count() > 0) {
                config.alpha = matel_alpha;
            }
        }

        return emit(oscent::experiment::run(config));
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
}
