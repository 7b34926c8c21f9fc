#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hatters/game.hpp"
#include "hatters/graph.hpp"
#include "hatters/solver.hpp"

namespace hatters {

struct SuiteOptions {
    uint64_t trials = 0;  // 0 = per-suite default
    uint64_t seed = 0;
    SearchBudget budget;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    bool inconclusive = false;  // pass that rests on a budget-limited Unknown
    uint64_t trials = 0;
    uint64_t failures = 0;
    std::string detail;
};

struct SuiteInfo {
    std::string name;
    std::string summary;
    SuiteResult (*run)(const SuiteOptions&);
};

// One suite per acceptance check, shared by the CLI and the acceptance binary.
const std::vector<SuiteInfo>& verify_suites();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

// Exhaustive single-guess oracle: enumerates every full strategy table
// profile in lexicographic order and tests every coloring. Deliberately
// independent of the constraint solver; Unknown when over the limits.
Verdict naive_oracle_decide(const GameSpec& spec, uint64_t profile_limit = 40'000'000,
                            double time_limit_secs = 600.0);

struct OracleFixture {
    const char* graph;
    int num_colors;
    bool winnable;  // frozen from a completed oracle run
};
const std::vector<OracleFixture>& oracle_fixtures();
Graph named_graph(const std::string& name);

}  // namespace hatters
