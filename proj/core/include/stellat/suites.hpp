#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace stellat {

/// Configuration shared by all verification suites. Defaults match the
/// evidence runs; everything is overridable from the CLI (flags or
/// STELLAT_* environment variables).
struct SuiteConfig {
    double tol = 1e-9;
    int trials = 1000;
    std::uint64_t seed = 0x5eed;
    int max_order = 6;
    long long n_max = 1'000'000;
    std::int64_t bb_budget = 4'000'000;
    std::string out_path;

    void validate() const; // throws ConfigError
};

/// One suite's machine-readable outcome. verdict is FAIL exactly when some
/// asserted inequality was violated beyond its tolerance (or the suite
/// aborted); wall_ms is informational and excluded from determinism
/// comparisons.
struct EvidenceReport {
    std::string suite;
    std::string claim;
    std::string inputs_digest;
    nlohmann::json metrics;
    bool pass = false;
    double wall_ms = 0.0;

    nlohmann::json to_json() const;
};

/// Suites: lemma7 (analytic closure / truncated composition), prop8
/// (continuity bound of states, with proof replay), counterexample5
/// (non-continuous state on the cube algebra), flaw4 (unit leak of the
/// square root on the decaying class), norms (enclosure soundness), all.
std::vector<std::string> list_suites();
bool is_suite(const std::string& name);

/// Human-readable claim, methodology, and pass criteria; throws
/// UnknownSuite for anything not in list_suites().
std::string describe(const std::string& name);

/// Deterministic given (name, cfg); never throws on suite-level failures
/// (they become FAIL reports), only on bad configuration.
std::vector<EvidenceReport> run_suite(const std::string& name, const SuiteConfig& cfg);

/// 0 if every report passed, else 1.
int exit_code(const std::vector<EvidenceReport>& reports);

/// Serialize reports (JSON array) and optionally write cfg.out_path.
nlohmann::json reports_to_json(const std::vector<EvidenceReport>& reports);

} // namespace stellat
