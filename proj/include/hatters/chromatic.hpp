#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hatters/graph.hpp"

namespace hatters {

struct ColoringBudget {
    uint64_t node_limit = 20'000'000;
};

struct ChromaticResult {
    std::optional<int> chi;                 // set when decided exactly
    int lower = 0;                          // best bounds either way
    int upper = 0;
    std::vector<std::vector<int>> classes;  // proper coloring with `upper` classes
    uint64_t nodes = 0;
};

// Exact chromatic number by branch and bound over color classes; witness
// partition always matches `upper`. Budget exhaustion leaves chi unset.
ChromaticResult chromatic_number(const Graph& g, const ColoringBudget& budget = {});

// Proper colorability with at most k classes; nullopt when the budget runs out.
std::optional<bool> colorable_with(const Graph& g, int k, const ColoringBudget& budget = {});

}  // namespace hatters
