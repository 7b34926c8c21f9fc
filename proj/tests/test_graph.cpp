#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "hatters/graph.hpp"
#include "hatters/rng.hpp"

using namespace hatters;

TEST_CASE("builders produce the expected shapes") {
    Graph k4 = make_complete(4);
    CHECK(k4.n == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.max_degree() == 3);

    Graph c5 = make_cycle(5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    Graph p4 = make_path(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);

    Graph b23 = make_complete_bipartite(2, 3);
    CHECK(b23.n == 5);
    CHECK(b23.edge_count() == 6);
    CHECK_FALSE(b23.has_edge(0, 1));
    CHECK(b23.has_edge(0, 2));
}

TEST_CASE("from_edges validates input") {
    CHECK_THROWS(Graph::from_edges(2, {{0, 2}}));
    CHECK_THROWS(Graph::from_edges(2, {{1, 1}}));
    CHECK_THROWS(Graph::from_edges(3, {{0, 1}, {1, 0}}));
    Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(std::is_sorted(g.adj[0].begin(), g.adj[0].end()));
}

TEST_CASE("prufer decoding and random trees") {
    // sequence (0,0) on 4 vertices is the star at 0
    Graph star = prufer_decode({0, 0}, 4);
    CHECK(is_tree(star));
    CHECK(star.degree(0) == 3);
    for (uint64_t seed = 0; seed < 50; ++seed) {
        Graph t = make_tree_random(7, seed);
        CHECK(is_tree(t));
        CHECK(is_connected(t));
    }
    CHECK(make_tree_random(6, 3).edges() == make_tree_random(6, 3).edges());
}

TEST_CASE("tree isomorphism classes per order") {
    // unlabeled trees on 1..8 vertices
    std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) {
        auto trees = all_trees(n);
        CHECK(trees.size() == expected[n - 1]);
        std::set<std::string> forms;
        for (const Graph& t : trees) {
            CHECK(is_tree(t));
            CHECK(t.n == n);
            forms.insert(tree_canonical_form(t));
        }
        CHECK(forms.size() == trees.size());
    }
}

TEST_CASE("connected graph corpus") {
    // 1 + 1 + 2 + 6 + 21 isomorphism classes on 1..5 vertices
    auto corpus = connected_graphs_upto(5);
    CHECK(corpus.size() == 31);
    for (const Graph& g : corpus) CHECK(is_connected(g));
    int n4 = 0;
    for (const Graph& g : corpus) n4 += g.n == 4;
    CHECK(n4 == 6);
}

TEST_CASE("degeneracy order realizes the coloring number") {
    CHECK(degeneracy_order(make_path(6)).coloring_number() == 2);
    CHECK(degeneracy_order(make_complete(5)).coloring_number() == 5);
    CHECK(degeneracy_order(make_cycle(7)).coloring_number() == 3);
    CHECK(degeneracy_order(Graph::empty(3)).coloring_number() == 1);

    Graph g = make_complete_bipartite(2, 4);
    VertexOrder ord = degeneracy_order(g);
    std::vector<int> pos(g.n);
    for (int j = 0; j < g.n; ++j) pos[ord.order[j]] = j;
    for (int v = 0; v < g.n; ++v) {
        int back = 0;
        for (int u : g.adj[v]) back += pos[u] < pos[v];
        CHECK(back == ord.back_degree[v]);
        CHECK(back <= ord.coloring_number() - 1);
    }
}

TEST_CASE("induced subgraphs keep the right edges") {
    Graph g = make_cycle(5);
    InducedSubgraph sub = induced_subgraph(g, {0, 1, 3});
    CHECK(sub.graph.n == 3);
    CHECK(sub.graph.edge_count() == 1);  // only 0-1 survives
    CHECK(sub.to_full[sub.to_sub[3]] == 3);
    CHECK(sub.to_sub[2] == -1);
}

TEST_CASE("subdivision splits every edge once") {
    SubdivisionResult s = subdivide(make_complete(3));
    CHECK(s.graph.n == 6);
    CHECK(s.graph.edge_count() == 6);
    CHECK(s.original_part.size() == 3);
    CHECK(s.subdivision_part.size() == 3);
    for (int v : s.subdivision_part) CHECK(s.graph.degree(v) == 2);
    CHECK(bipartition(s.graph).has_value());
}

TEST_CASE("bipartition exists exactly for even cycles") {
    CHECK(bipartition(make_cycle(6)).has_value());
    CHECK_FALSE(bipartition(make_cycle(5)).has_value());
    auto parts = bipartition(make_complete_bipartite(3, 3));
    REQUIRE(parts.has_value());
    CHECK(parts->first.size() + parts->second.size() == 6);
}

TEST_CASE("k-star shape") {
    KStarGraph ks = make_kstar(2, 5);
    CHECK(ks.graph.n == 7);
    CHECK(ks.clique_part.size() == 2);
    CHECK(ks.leaf_part.size() == 5);
    for (int leaf : ks.leaf_part) {
        CHECK(ks.graph.degree(leaf) == 2);
        for (int c : ks.clique_part) CHECK(ks.graph.has_edge(leaf, c));
    }
    CHECK(ks.graph.has_edge(0, 1));
}
