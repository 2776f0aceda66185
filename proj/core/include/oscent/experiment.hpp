#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscent/covariance.hpp"
#include "oscent/model.hpp"
#include "oscent/toeplitz.hpp"

namespace oscent::experiment {

enum class Kind { validate, area_law, divergence_z, divergence_n, szego, matel };

std::string kind_name(Kind kind);
Kind kind_from_name(const std::string& name);

/// Full description of one experiment run. Round-trips losslessly through
/// JSON so a report can be reproduced from its config echo alone.
struct ExperimentConfig {
    Kind kind = Kind::validate;

    // area_law
    int chain_length = 256;
    std::vector<int> block_sizes = {8, 16, 32, 64};
    model::DisorderEnsemble ensemble;
    int realizations = 100;

    // divergence
    std::vector<int> ladder = {2, 4, 8, 16, 32};
    int safety_multiplier = 8;

    // szego / matel
    double alpha = 0.5;
    std::vector<int> szego_sizes = {4, 8, 16, 32, 64, 128, 256};
    std::string matel_which = "R"; // "R", "S", or "limit"
    toeplitz::Lattice matel_lattice = toeplitz::Lattice::half_line;
    int matel_size = 8;

    // execution
    std::uint64_t seed = 1;
    int threads = 1;
    double d_bound = 12.0;
    std::string out_path;
    std::string format = "json"; // "json" or "csv"
    gaussian::Tolerances tol;

    /// Throws ConfigError on out-of-range sizes or unknown enum strings.
    void validate() const;
};

std::string config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const std::string& text);

struct Aggregate {
    std::string name;
    double value = 0.0;
};

struct Verdict {
    std::string name;
    bool passed = false;
};

/// Result of one experiment: tabular rows plus named scalars and verdicts.
/// The numeric payload is a pure function of the config (seed included), so
/// reruns reproduce payload_string() byte for byte at any thread count;
/// wall clock and version live outside the payload.
struct ExperimentReport {
    ExperimentConfig config;
    std::vector<std::string> columns;
    std::vector<std::string> row_labels; // empty, or one label per row
    std::vector<std::vector<double>> rows;
    std::vector<Aggregate> aggregates;
    std::vector<Verdict> verdicts;
    double wall_clock_seconds = 0.0;

    bool all_passed() const;

    /// Deterministic serialization of config + numeric payload, excluding
    /// wall clock and version. Basis of the reproducibility guarantee.
    std::string payload_string() const;

    std::string to_json() const;
    std::string to_csv() const;
};

ExperimentReport run_validate(const ExperimentConfig& config);
ExperimentReport run_area_law(const ExperimentConfig& config);
ExperimentReport run_divergence(const ExperimentConfig& config, toeplitz::Lattice lattice);
ExperimentReport run_szego(const ExperimentConfig& config);
ExperimentReport run_matel(const ExperimentConfig& config);

/// Dispatches on config.kind after validating the config.
ExperimentReport run(const ExperimentConfig& config);

} // namespace oscent::experiment
