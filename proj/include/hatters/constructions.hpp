#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hatters/game.hpp"
#include "hatters/graph.hpp"

namespace hatters {

// Vertex i of the complete graph guesses (i - sum of the others) mod num_colors.
// With num_colors == n this wins every coloring with exactly one correct bear.
Strategy clique_sum_strategy(int n, int num_colors = -1);

// Winning single-guess strategy on a tree with palette 2^deg(v) at each vertex.
// Built by eliminating the largest-index leaf and lifting the smaller tree's
// strategy: the new leaf answers the parity complement of its neighbor's color,
// the neighbor answers 2*d + leaf_color over its doubled palette, and the
// neighbor's other neighbors read color/2.
struct TreePowerResult {
    std::vector<int> palette;
    Strategy strategy;
};
TreePowerResult tree_power_strategy(const Graph& tree);

// Wins every coloring in `admissible` on the complete graph, provided
// |admissible| <= 2^n - 1. Bear n-1 answers the unique extension color of its
// view when that view has exactly one admissible extension, otherwise 0; the
// rest recurse on the multi-extension views.
Strategy kn_admissible_strategy(int n, int num_colors, const std::vector<Coloring>& admissible);

// K-clique with one leaf per (K-1)-subset of the K^k clique colorings, K = 2^k.
// Leaves answer the rank of the observed clique coloring inside their subset
// (or K-1 when outside); clique bears compute the set of clique colorings no
// leaf would answer and play the admissible-set strategy on it.
struct KStarStrategy {
    int k = 0;
    int num_colors = 0;  // 2^k
    KStarGraph shape;
    GameSpec spec;       // uniform palette, one guess
    Strategy strategy;
    // leaf guess per clique coloring code, indexed [leaf][code]
    std::shared_ptr<std::vector<std::vector<int>>> leaf_guess;
};
KStarStrategy kstar_strategy(int k, bool allow_large = false);

// The clique colorings no leaf answers, given the leaf colors (ascending leaf
// order). The construction guarantees at most num_colors - 1 entries.
std::vector<Coloring> kstar_unguessed(const KStarStrategy& ks, const std::vector<int>& leaf_colors);

// Rank-r subset of size m from {0..universe-1}, lexicographic rank order.
std::vector<int> unrank_subset(uint64_t universe, int m, uint64_t rank);
uint64_t subset_count(uint64_t universe, int m);  // binomial, throws on overflow

// Single leaf rule for the k-star, reconstructible from (k, subset_rank).
VertexStrategy kstar_leaf_rule(int k, int vertex, const std::vector<int>& clique_coords,
                               uint64_t subset_rank);

}  // namespace hatters
