#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hatters/constructions.hpp"
#include "hatters/demon.hpp"
#include "hatters/rng.hpp"

using namespace hatters;

TEST_CASE("sum strategy wins on cliques at the matching palette") {
    for (int n = 2; n <= 5; ++n) {
        GameSpec spec = GameSpec::uniform(make_complete(n), n);
        Strategy s = clique_sum_strategy(n);
        validate_strategy(spec, s);
        VerifyOutcome out = verify_winning(spec, s);
        CHECK(out.win);
        CHECK(out.checked == spec.universe_size());
    }
}

TEST_CASE("sum strategy with one extra color loses") {
    GameSpec spec = GameSpec::uniform(make_complete(3), 4);
    Strategy s = clique_sum_strategy(3, 4);
    validate_strategy(spec, s);
    CHECK_FALSE(verify_winning(spec, s).win);
}

TEST_CASE("sum strategy hits exactly once per coloring") {
    int n = 3;
    GameSpec spec = GameSpec::uniform(make_complete(n), n);
    Strategy s = clique_sum_strategy(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) CHECK(evaluate(spec, s, {a, b, c}).size() == 1);
}

TEST_CASE("tree power palettes double along degrees and win") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& tree : all_trees(n)) {
            TreePowerResult tp = tree_power_strategy(tree);
            REQUIRE(tp.palette.size() == std::size_t(tree.n));
            for (int v = 0; v < tree.n; ++v) {
                // palette doubles once per incident edge
                CHECK(tp.palette[v] == 1 << tree.degree(v));
            }
            GameSpec spec = GameSpec::make(tree, tp.palette, 1);
            CHECK(verify_winning(spec, tp.strategy).win);
        }
}

TEST_CASE("tree power handles the single vertex") {
    TreePowerResult tp = tree_power_strategy(make_path(1));
    REQUIRE(tp.palette == std::vector<int>{1});
    // one color, no neighbors: the only sane answer is color 0
    CHECK(tp.strategy.at[0]({}) == GuessSet{0});
}

TEST_CASE("admissible-set strategy wins any small list on the clique") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = rng.uniform_int(2, 4);
        int k = rng.uniform_int(2, 5);
        std::size_t limit = (std::size_t(1) << n) - 1;
        std::size_t total = 1;
        for (int v = 0; v < n; ++v) total *= std::size_t(k);
        std::vector<Coloring> adm;
        std::set<std::size_t> codes;
        while (adm.size() < std::min(limit, total) && codes.size() < total) {
            std::size_t code = rng.uniform_u64(0, total - 1);
            if (!codes.insert(code).second) continue;
            Coloring c;
            for (int v = 0; v < n; ++v) {
                c.push_back(int(code % k));
                code /= k;
            }
            adm.push_back(c);
        }
        GameSpec spec = GameSpec::uniform(make_complete(n), k, 1, adm);
        Strategy s = kn_admissible_strategy(n, k, adm);
        validate_strategy(spec, s);
        for (const Coloring& c : adm) CHECK(any_correct(spec, s, c));
    }
}

TEST_CASE("subset ranking round-trips") {
    CHECK(subset_count(16, 3) == 560);
    CHECK(subset_count(4, 2) == 6);
    std::set<std::vector<int>> seen;
    for (uint64_t r = 0; r < 6; ++r) {
        auto sub = unrank_subset(4, 2, r);
        CHECK(sub.size() == 2);
        CHECK(sub[0] < sub[1]);
        seen.insert(sub);
    }
    CHECK(seen.size() == 6);
    CHECK(unrank_subset(4, 2, 0) == std::vector<int>{0, 1});  // lexicographic rank order
    CHECK(unrank_subset(4, 2, 5) == std::vector<int>{2, 3});
    CHECK_THROWS(unrank_subset(4, 2, 6));
}

TEST_CASE("smallest k-star wins exhaustively") {
    KStarStrategy ks = kstar_strategy(1);
    CHECK(ks.num_colors == 2);
    CHECK(ks.shape.clique_part.size() == 1);
    CHECK(ks.shape.leaf_part.size() == 2);
    CHECK(verify_winning(ks.spec, ks.strategy).win);
}

TEST_CASE("k-star leaf rules reconstruct from their ranks") {
    KStarStrategy ks = kstar_strategy(2, true);
    CHECK(ks.num_colors == 4);
    CHECK(ks.shape.leaf_part.size() == 560);
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int idx = rng.uniform_int(0, int(ks.shape.leaf_part.size()) - 1);
        int leaf = ks.shape.leaf_part[idx];
        const VertexStrategy& built = ks.strategy.at[leaf];
        REQUIRE(built.rule_name == "kstar_leaf");
        VertexStrategy again =
            kstar_leaf_rule(ks.k, leaf, ks.spec.graph.adj[leaf], built.rule_params[1]);
        for (int probe = 0; probe < 20; ++probe) {
            std::size_t code = rng.uniform_u64(0, view_space(built.radices) - 1);
            auto view = decode_view(built.radices, code);
            CHECK(built(view) == again(view));
        }
    }
}

TEST_CASE("k-star unguessed sets stay below the palette size") {
    KStarStrategy ks = kstar_strategy(2, true);
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> leafColors;
        for (std::size_t i = 0; i < ks.shape.leaf_part.size(); ++i)
            leafColors.push_back(rng.uniform_int(0, ks.num_colors - 1));
        auto missed = kstar_unguessed(ks, leafColors);
        CHECK(missed.size() <= std::size_t(ks.num_colors - 1));
    }
}
