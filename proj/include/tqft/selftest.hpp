#pragma once

#include "tqft/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tqft {

/// One acceptance criterion outcome.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double millis = 0;
};

/// Runs the cross-module acceptance suite.  `only` filters criteria by
/// substring of the name (empty = all).  Criterion 13 re-runs the suite's
/// JSON payload twice and compares bytes, so a full run executes the other
/// criteria three times in total.
std::vector<CriterionResult> run_selftest(std::uint64_t seed = kDefaultSeed,
                                          const std::string& only = "");

/// Deterministic JSON payload (criteria 1-12 results, no timings).
std::string selftest_payload_json(std::uint64_t seed, const std::string& only = "");

} // namespace tqft
