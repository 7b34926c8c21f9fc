#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hatters/graph.hpp"

namespace hatters {

using Coloring = std::vector<int>;
// sorted ascending, no duplicates, non-empty once attached to a strategy
using GuessSet = std::vector<int>;

bool guess_contains(const GuessSet& g, int color);
GuessSet normalized_guesses(GuessSet g);

struct SearchBudget {
    uint64_t node_limit = 50'000'000;
    double time_limit_secs = 60.0;
    int threads = 1;
};

// Mixed-radix view codes: coordinate 0 (the smallest observed vertex) is the
// least significant digit.
std::size_t view_space(const std::vector<int>& radices);  // throws on overflow
std::size_t encode_view(const std::vector<int>& radices, const std::vector<int>& view);
std::vector<int> decode_view(const std::vector<int>& radices, std::size_t code);

// Guessing rule of one vertex over an ordered list of observed vertices.
// Either dense-table backed or procedure backed; observable behavior is the
// same through operator().
struct VertexStrategy {
    int vertex = 0;
    std::vector<int> coords;   // strictly ascending
    std::vector<int> radices;  // colors visible per coordinate
    std::vector<GuessSet> table;
    std::function<GuessSet(const std::vector<int>&)> rule;
    std::string rule_name;               // set for named procedural rules
    std::vector<uint64_t> rule_params;

    bool tabulated() const { return !rule; }
    std::size_t view_count() const { return view_space(radices); }
    GuessSet operator()(const std::vector<int>& view) const;
    const GuessSet& at_code(std::size_t code) const { return table[code]; }
};

VertexStrategy make_constant_strategy(int vertex, GuessSet guesses);
VertexStrategy make_table_strategy(int vertex, std::vector<int> coords, std::vector<int> radices,
                                   std::vector<GuessSet> table);
VertexStrategy tabulate(const VertexStrategy& s, std::size_t max_cells = std::size_t(1) << 22);
// Fixes some observed coordinates; the result ranges over the remaining ones.
VertexStrategy restrict_strategy(const VertexStrategy& s,
                                 const std::vector<std::pair<int, int>>& fixed);

struct Strategy {
    std::vector<VertexStrategy> at;  // indexed by vertex
};

struct GameSpec {
    Graph graph;
    std::vector<int> palette;  // colors available at each vertex
    int guesses = 1;
    std::optional<std::vector<Coloring>> admissible;

    // validates: guesses >= 1 and guesses < min palette (a guess set covering
    // the whole palette is trivially winning and rejected); admissible
    // colorings in range and duplicate-free
    static GameSpec make(Graph graph, std::vector<int> palette, int guesses,
                         std::optional<std::vector<Coloring>> admissible = std::nullopt);
    static GameSpec uniform(Graph graph, int num_colors, int guesses = 1,
                            std::optional<std::vector<Coloring>> admissible = std::nullopt);

    std::size_t universe_size() const;  // throws if the full product overflows
};

std::vector<int> view_of(const Coloring& c, const std::vector<int>& coords);
void validate_strategy(const GameSpec& spec, const Strategy& strat);  // throws

// Vertices whose guess set contains their own color.
std::vector<int> evaluate(const GameSpec& spec, const Strategy& strat, const Coloring& c);
bool any_correct(const GameSpec& spec, const Strategy& strat, const Coloring& c);
bool is_demonic(const GameSpec& spec, const Strategy& strat, const Coloring& c);

struct VerifyOutcome {
    bool win = false;
    std::optional<Coloring> counterexample;  // lexicographically first
    uint64_t checked = 0;
};
// Scans the whole universe; refuses (throws) when it exceeds the node budget.
VerifyOutcome verify_winning(const GameSpec& spec, const Strategy& strat,
                             const SearchBudget& budget = {});

// Uniform independent guess set of size exactly `guesses` per view entry.
Strategy random_table_strategy(const GameSpec& spec, uint64_t seed,
                               std::size_t max_cells = std::size_t(1) << 22);

}  // namespace hatters
