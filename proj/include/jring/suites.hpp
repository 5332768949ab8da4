#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "jring/ring.hpp"

namespace jring {

/// Bad suite parameters (wrong ring kind, incompatible size); the CLI maps
/// this to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

struct SuiteConfig {
    std::string suite;
    RingId ring = RingId::rational();
    std::vector<int> ns;      // matrix sizes, cycled across trials
    std::vector<int> omegas;  // index-set sizes (map-algebra suites only)
    int trials = 1;
    std::uint64_t seed = 0;
};

struct TrialResult {
    int trial = 0;
    int n = 0;
    int omega = 0;  // 0 when the suite ignores omega
    bool pass = true;
    std::string detail;    // empty when the trial passed
    nlohmann::json data;   // serialized inputs and both sides of the violated equality
};

struct RunReport {
    SuiteConfig config;
    std::vector<TrialResult> trials;
    double wall_seconds = 0.0;

    int passed() const;
    int failed() const;
    bool pass() const { return failed() == 0; }
    nlohmann::json to_json() const;
    std::string to_csv() const;
};

const std::vector<std::string>& suite_names();
bool suite_uses_omega(const std::string& suite);

/// Runs the named suite with per-trial randomness derived from (seed, trial).
RunReport run_suite(const SuiteConfig& config);

}  // namespace jring
