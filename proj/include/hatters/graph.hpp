#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hatters {

// Loopless undirected simple graph; neighbor lists kept sorted ascending.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    static Graph empty(int n);
    // validates vertex range, rejects loops and duplicate edges
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int degree(int v) const { return int(adj[v].size()); }
    int max_degree() const;
    std::size_t edge_count() const;
    bool has_edge(int u, int v) const;
    // u < v, sorted lexicographically
    std::vector<std::pair<int, int>> edges() const;
};

struct VertexOrder {
    std::vector<int> order;        // permutation of 0..n-1
    std::vector<int> back_degree;  // back_degree[v] = #neighbors of v preceding v in order
    // 1 + max back degree; 1 for the empty graph by convention
    int coloring_number() const;
};

Graph make_complete(int n);
Graph make_cycle(int n);  // n >= 3
Graph make_path(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_tree_random(int n, uint64_t seed);

// k-clique plus n leaves, each leaf adjacent to every clique vertex.
// Clique part is numbered first (0..k-1), leaves after.
struct KStarGraph {
    Graph graph;
    std::vector<int> clique_part;
    std::vector<int> leaf_part;
};
KStarGraph make_kstar(int k, int n);

// One new vertex per edge; originals keep their numbers, subdivision vertices follow.
struct SubdivisionResult {
    Graph graph;
    std::vector<int> original_part;
    std::vector<int> subdivision_part;
};
SubdivisionResult subdivide(const Graph& g);

// Repeatedly removes a minimum-degree vertex (smallest index on ties), then
// reverses the removal sequence.
VertexOrder degeneracy_order(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_sub;   // full vertex -> sub vertex, -1 if absent
    std::vector<int> to_full;  // sub vertex -> full vertex
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

Graph prufer_decode(const std::vector<int>& seq, int n);

// Canonical string invariant under isomorphism (trees only).
std::string tree_canonical_form(const Graph& tree);
// One representative per isomorphism class.
std::vector<Graph> all_trees(int n);
// Connected graphs on 1..max_n vertices, one per isomorphism class (max_n <= 6).
std::vector<Graph> connected_graphs_upto(int max_n);

}  // namespace hatters
