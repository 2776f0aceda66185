#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscent/covariance.hpp"

namespace oscent::validation {

/// One named invariant check. `detail` is the worst margin or residual
/// observed, with the convention stated per check; `note` is empty unless
/// the check failed for a reason worth surfacing (for example an exception).
struct CheckResult {
    std::string name;
    bool passed = false;
    double detail = 0.0;
    std::string note;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_passed = false;
    int passed_count() const;
};

/// Invariant suites, one per library layer. Each is deterministic in the
/// seed. The tolerances parameter feeds the covariance routines so that
/// deliberately broken tolerances surface as failed checks rather than
/// aborting the run.
SuiteResult linalg_suite(std::uint64_t seed);
SuiteResult model_suite(std::uint64_t seed);
SuiteResult gaussian_suite(std::uint64_t seed, const gaussian::Tolerances& tol = {});
SuiteResult entropy_suite(std::uint64_t seed, const gaussian::Tolerances& tol = {});
SuiteResult toeplitz_suite(std::uint64_t seed);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, const gaussian::Tolerances& tol = {});

} // namespace oscent::validation
