#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hatters/game.hpp"
#include "hatters/graph.hpp"

namespace hatters {

struct Cube {
    std::vector<std::vector<int>> components;  // each non-empty
    bool contains(const std::vector<int>& point) const;
    std::size_t point_count() const;
};

// Colors d such that {views : d in rule(views)} contains a cube whose every
// component has at least num_colors - guesses colors. The rule must be
// tabulated with all radices equal to num_colors. Computed by covering the
// complement with per-coordinate deletion sets of size <= guesses.
std::vector<int> dominant_colors(const VertexStrategy& rule, int num_colors, int guesses);
// Reference implementation: enumerates all component choices and cube points.
std::vector<int> dominant_colors_enumerated(const VertexStrategy& rule, int num_colors,
                                            int guesses);

struct RootedTree {
    int root = 0;
    std::vector<int> parent;                 // -1 at root
    std::vector<std::vector<int>> children;  // ascending
};
RootedTree root_tree(const Graph& tree, int root);

// Demonic coloring against a strategy on a tree, any target root color that is
// not dominant for the root rule. Requires num_colors > guesses*(guesses+1).
Coloring tree_demonic(const Graph& tree, int root, const Strategy& strat, int num_colors,
                      int guesses, int root_color);
// Roots at vertex 0 and picks the smallest non-dominant root color.
Coloring tree_demonic_auto(const Graph& tree, const Strategy& strat, int num_colors, int guesses);

// Sub-demon contract: defeat any `guesses`-guess strategy on the given induced
// graph with `num_colors` colors.
using SubDemon = std::function<Coloring(const Graph&, const Strategy&, int num_colors,
                                        int guesses)>;
// For edgeless graphs: every rule is constant, pick an unguessed color.
Coloring independent_set_demon(const Graph& g, const Strategy& strat, int num_colors,
                               int guesses);
SubDemon make_independent_subdemon();
SubDemon make_tree_subdemon();

// Splits the board into parts A and B. B-side rules absorb all possible A-side
// views (guess sets grow to s1 = guesses * part_a_colors^d where d is the
// maximum number of A-neighbors of a B vertex); demon_b defeats them, then
// A-side rules are restricted to the B answer and to colors < part_a_colors,
// and demon_a defeats those. Requires s1 < num_colors.
Coloring partition_demonic(const Graph& g, const std::vector<int>& part_a,
                           const std::vector<int>& part_b, const Strategy& strat,
                           int num_colors, int guesses, int part_a_colors,
                           const SubDemon& demon_a, const SubDemon& demon_b);

// A single-guess rule is bi-polar for an order when, scanning prefixes of the
// order, its image over the still-free neighbors is always the full palette or
// a singleton, and each singleton value is forced by at most one color of the
// vertex just placed. The default reading exempts singletons that do not
// depend on the placed color; strict applies the literal one-forcer condition
// at every observed position.
bool is_bipolar(const VertexStrategy& rule, const std::vector<int>& order, const GameSpec& spec,
                bool strict = false);

// Greedy demon along the order: each new vertex avoids every earlier
// neighbor's forcing color and its own already-determined guess. Needs
// num_colors strictly above the coloring number realized by the order.
Coloring bipolar_demonic(const Graph& g, const std::vector<int>& order, const Strategy& strat,
                         int num_colors);

// Lexicographically first demonic coloring, if any; refuses oversized spaces.
std::optional<Coloring> exhaustive_demonic_search(const GameSpec& spec, const Strategy& strat,
                                                  const SearchBudget& budget = {});

}  // namespace hatters
