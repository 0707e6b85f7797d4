#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbx/sieve.hpp"
#include "gbx/zeros.hpp"

namespace gbx {

// The empirical harness: every desk-scale-checkable statement becomes one
// registered check that compares computed data (sieve, zero table, oracles)
// against the packaged bound or against an independent second computation.
// A check never throws on a violated inequality; the status encodes it.

enum class CheckStatus { pass, fail, skipped_resources, hypotheses_unmet };

std::string to_string(CheckStatus status);

// What a check needs before it can run.  A zero-table requirement of 0 means
// no table is needed; a positive value is the minimum certified height.
struct CheckSpec {
    std::string id;          // stable identifier, e.g. "zero.count-box-principal"
    std::string anchor;      // one-line statement of what is being checked
    double needs_zero_height = 0;
    std::uint64_t needs_sieve_limit = 0;
};

// Outcome of one check.  Ratios are normalized so that pass means
// worst_ratio <= 1 + 1e-12: bound checks report empirical/bound, tolerance
// checks report deviation/tolerance, exact identities report 0 when they
// hold.  runtime is wall-clock seconds and is excluded from the canonical
// JSON report so identical configurations produce byte-identical output.
struct CheckReport {
    std::string id;
    CheckStatus status = CheckStatus::skipped_resources;
    double worst_ratio = 0;
    std::string witness;       // parameter point achieving worst_ratio
    std::uint64_t grid_points = 0;
    std::string provenance;    // data sources and bound origin
    double runtime_seconds = 0;
};

struct VerifyConfig {
    std::string zeros_path;               // empty = no zero table configured
    std::uint64_t sieve_limit = 10000000;
    int jobs = 1;                         // > 1 runs checks concurrently
    double explicit_T = 400000;           // truncation height for the psi check
    std::vector<double> u_samples = {1e3, 1e4, 1e5, 1e6};
    int points_per_decade = 50;           // log-spaced grid density
};

// Aggregate outcome.  checks is ordered by id regardless of execution order.
struct VerifyRun {
    int version = 1;
    VerifyConfig config;
    std::uint64_t zero_count = 0;
    double zero_height = 0;
    std::string zero_source;
    std::vector<CheckReport> checks;

    bool all_passed() const;
    std::string to_json() const;   // deterministic; excludes runtimes
    std::string to_csv() const;    // id,status,worst_ratio,runtime_seconds
};

// The full registry in id order.  Every id appears exactly once.
const std::vector<CheckSpec>& check_registry();

// Check groups.  Each returns one report per registered check of the group;
// shortfalls in the passed resources surface as skipped-resources, violated
// statement hypotheses (for example a truncation height below the stated
// minimum) as hypotheses-unmet.
std::vector<CheckReport> check_zero_facts(const ZeroTable& table, const VerifyConfig& cfg);
CheckReport check_explicit_formula(const SieveTable& sieve, const ZeroTable& table,
                                   const VerifyConfig& cfg);
std::vector<CheckReport> check_arithmetic_facts(const SieveTable& sieve,
                                                const VerifyConfig& cfg);
std::vector<CheckReport> check_consistency_oracles(const SieveTable& sieve,
                                                   const VerifyConfig& cfg);
std::vector<CheckReport> reproduce_packaged_constants();

// Runs every registered check with the configured resources.  The zero file
// is loaded first; a missing or malformed file is a config_error raised
// before any check runs.  An empty zeros_path is not an error: zero-dependent
// checks are reported as skipped-resources.
VerifyRun run_all(const VerifyConfig& cfg);

// Runs a single check by id, building only the resources it needs.
// Unknown ids raise domain_error.
CheckReport run_one(const std::string& id, const VerifyConfig& cfg);

} // namespace gbx
