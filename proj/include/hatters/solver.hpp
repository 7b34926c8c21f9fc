#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hatters/game.hpp"

namespace hatters {

enum class Verdict { Winnable, NotWinnable, Unknown };

std::string to_string(Verdict v);

struct SolverOptions {
    SearchBudget budget;
    bool counting_prune = true;   // prune nodes whose remaining capacity cannot cover the unhit colorings
    bool symmetry_break = false;  // full-space only: force color 0 into the first branching cell
};

struct SolveResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Strategy> strategy;  // present iff Winnable; passes verify_winning
    uint64_t nodes = 0;
    double seconds = 0.0;
    std::string note;
};

// Hard ceilings: at most 1e7 colorings in the universe and 1e6 table cells.
bool within_solver_ceilings(const GameSpec& spec);

// Complete backtracking over partial guess tables. Cells are (vertex, view)
// pairs filled with up to s colors; a coloring is hit when a touched cell
// guesses its color, and a node is refuted when an unhit coloring has no cell
// left that could still cover it. NotWinnable only after exhausting the root.
SolveResult decide_winnable(const GameSpec& spec, const SolverOptions& opts = {});

// Same engine, requires an explicit admissible set on the spec.
SolveResult decide_winnable_admissible(const GameSpec& spec, const SolverOptions& opts = {});

struct HatNumberResult {
    int mu = 0;        // largest palette size found winnable (floor: mu = s trivially)
    bool exact = false;
    int k_min = 0, k_max = 0;
    std::vector<std::pair<int, Verdict>> per_k;
    std::vector<int> anomalies;  // winnable k above some refuted k' < k
    uint64_t nodes = 0;
};

// Scans k = s+1 .. k_max without assuming monotonicity; every k is decided
// independently and non-monotone outcomes are reported, not suppressed.
HatNumberResult hat_number(const Graph& g, int guesses, int k_max,
                           const SolverOptions& opts = {});

}  // namespace hatters
