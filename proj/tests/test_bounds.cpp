#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hatters/bounds.hpp"
#include "hatters/chromatic.hpp"
#include "hatters/rng.hpp"
#include "hatters/verify_suites.hpp"

using namespace hatters;

TEST_CASE("degree bound values") {
    CHECK(lll_bound(0) == 2);   // floor(e)
    CHECK(lll_bound(2) == 8);   // floor(3e)
    CHECK(lll_bound(9) == 27);  // floor(10e)
    CHECK(lll_bound(1) == 5);
}

TEST_CASE("partition inequality basics") {
    // two singleton classes certify k-1 = 2 but not k-1 = 1
    CHECK(partition_bound_holds({1, 1}, 3));
    CHECK_FALSE(partition_bound_holds({1, 1}, 2));
    CHECK(partition_bound_best({1, 1}) == 2);

    // a single class is an independent set: certified losing at two colors
    CHECK(partition_bound_holds({5}, 2));
    CHECK(partition_bound_best({5}) == 1);
}

TEST_CASE("partition inequality is monotone and eventually true") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int parts = rng.uniform_int(1, 4);
        std::vector<int> sizes;
        int n = 0;
        for (int i = 0; i < parts; ++i) {
            sizes.push_back(rng.uniform_int(1, 5));
            n += sizes.back();
        }
        bool seen = false;
        for (int k = 2; k <= n + 1; ++k) {
            bool holds = partition_bound_holds(sizes, k);
            if (seen) CHECK(holds);  // once true it stays true
            seen = seen || holds;
        }
        CHECK(seen);  // k = n+1 always certifies
        CHECK(partition_bound_best(sizes) <= n);
    }
}

TEST_CASE("chromatic threshold bound") {
    for (int n = 2; n <= 12; ++n) CHECK(chromatic_threshold_bound(n, n) == n);
    CHECK(chromatic_threshold_bound(5, 3) == 4);  // five-cycle
    CHECK(chromatic_threshold_bound(4, 2) == 3);  // four-cycle
    CHECK(chromatic_threshold_bound(2, 2) == 2);  // clique case again
    CHECK(chromatic_threshold_bound(6, 2) == 4);  // 1/(1-2^(-1/3)) = 4.847

}

TEST_CASE("asymptotic ratio approaches the threshold for large n") {
    double a = asymptotic_chromatic_bound(1000, 3);
    CHECK(a > 800.0);
    CHECK(a < 850.0);  // 1000 / (3 ln(3/2)) = 822.0...
}

TEST_CASE("exact chromatic numbers on small graphs") {
    CHECK(chromatic_number(make_complete(5)).chi == 5);
    CHECK(chromatic_number(make_cycle(5)).chi == 3);
    CHECK(chromatic_number(make_cycle(6)).chi == 2);
    CHECK(chromatic_number(make_complete_bipartite(3, 4)).chi == 2);
    CHECK(chromatic_number(Graph::empty(4)).chi == 1);
    ChromaticResult r = chromatic_number(make_complete(4));
    REQUIRE(r.chi.has_value());
    CHECK(r.classes.size() == 4);  // witness partition matches chi
    int covered = 0;
    for (const auto& cls : r.classes) covered += int(cls.size());
    CHECK(covered == 4);
}

TEST_CASE("colorable_with matches the exact number") {
    Graph c5 = make_cycle(5);
    CHECK(colorable_with(c5, 2) == std::optional<bool>(false));
    CHECK(colorable_with(c5, 3) == std::optional<bool>(true));
}

TEST_CASE("bound report on the four-cycle") {
    BoundReport rep = bound_report(named_graph("c4"));
    CHECK(rep.max_degree == 2);
    CHECK(rep.chromatic == 2);
    REQUIRE(rep.best.has_value());
    CHECK(*rep.best == 3);  // the threshold bound is tight here
    bool sawAsymptotic = false;
    for (const auto& e : rep.entries) {
        if (e.name == "asymptotic_chromatic") {
            sawAsymptotic = true;
            CHECK_FALSE(e.bound.has_value());  // report-only entry
        }
        if (e.bound) CHECK(*e.bound >= 3);  // nothing undercuts the exact value
    }
    CHECK(sawAsymptotic);
}

TEST_CASE("bound report on a clique") {
    BoundReport rep = bound_report(make_complete(4));
    CHECK(rep.chromatic == 4);
    REQUIRE(rep.best.has_value());
    CHECK(*rep.best == 4);  // clique threshold is exact
    for (const auto& e : rep.entries)
        if (e.bound) CHECK(*e.bound >= 4);
}

TEST_CASE("bound report survives an unknown chromatic number") {
    // starve the chromatic search so only degree-based entries remain
    ColoringBudget tiny;
    tiny.node_limit = 1;
    BoundReport rep = bound_report(make_cycle(5), tiny);
    CHECK_FALSE(rep.chromatic.has_value());
    REQUIRE(rep.best.has_value());
    CHECK(*rep.best == 8);  // degree bound only
    for (const auto& e : rep.entries) CHECK(e.name != "chromatic_threshold");
}
