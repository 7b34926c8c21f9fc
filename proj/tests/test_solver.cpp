#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hatters/constructions.hpp"
#include "hatters/solver.hpp"
#include "hatters/verify_suites.hpp"

using namespace hatters;

namespace {

Verdict solve_named(const char* name, int k, SolverOptions opts = {}) {
    return decide_winnable(GameSpec::uniform(named_graph(name), k), opts).verdict;
}

}  // namespace

TEST_CASE("solver reproduces every oracle fixture") {
    for (const OracleFixture& f : oracle_fixtures()) {
        SolveResult r = decide_winnable(GameSpec::uniform(named_graph(f.graph), f.num_colors), {});
        CHECK(r.verdict == (f.winnable ? Verdict::Winnable : Verdict::NotWinnable));
    }
}

TEST_CASE("winning witnesses verify") {
    for (auto [name, k] : {std::pair<const char*, int>{"k3", 3}, {"k4", 4}, {"c4", 3},
                           {"p4", 2}, {"k13", 2}}) {
        GameSpec spec = GameSpec::uniform(named_graph(name), k);
        SolveResult r = decide_winnable(spec, {});
        REQUIRE(r.verdict == Verdict::Winnable);
        REQUIRE(r.strategy.has_value());
        validate_strategy(spec, *r.strategy);
        CHECK(verify_winning(spec, *r.strategy).win);
    }
}

TEST_CASE("clique refutations one color above the order") {
    CHECK(solve_named("k2", 3) == Verdict::NotWinnable);
    CHECK(solve_named("k3", 4) == Verdict::NotWinnable);
    CHECK(solve_named("k4", 5) == Verdict::NotWinnable);
}

TEST_CASE("options do not change verdicts") {
    for (auto [name, k] : {std::pair<const char*, int>{"k3", 3}, {"k3", 4}, {"p3", 3},
                           {"c4", 3}, {"c4", 4}}) {
        Verdict base = solve_named(name, k);
        SolverOptions noCount;
        noCount.counting_prune = false;
        CHECK(solve_named(name, k, noCount) == base);
        SolverOptions sym;
        sym.symmetry_break = true;
        CHECK(solve_named(name, k, sym) == base);
        SolverOptions par;
        par.budget.threads = 4;
        CHECK(solve_named(name, k, par) == base);
    }
}

TEST_CASE("degenerate boards") {
    SolveResult empty = decide_winnable(GameSpec::uniform(Graph::empty(0), 2), {});
    CHECK(empty.verdict == Verdict::NotWinnable);

    // single vertex, blind guess: loses with two colors
    CHECK(solve_named("k1", 2) == Verdict::NotWinnable);

    // no admissible colorings at all: nothing to refute
    GameSpec none = GameSpec::uniform(make_complete(2), 2, 1, std::vector<Coloring>{});
    CHECK(decide_winnable(none, {}).verdict == Verdict::Winnable);
}

TEST_CASE("admissible restriction flips losing boards") {
    Graph k2 = make_complete(2);
    // the full nine colorings lose at three colors
    CHECK(decide_winnable(GameSpec::uniform(k2, 3), {}).verdict == Verdict::NotWinnable);
    // any three colorings are winnable (3 <= 2^2 - 1)
    std::vector<Coloring> adm{{0, 0}, {1, 2}, {2, 1}};
    SolveResult r = decide_winnable_admissible(GameSpec::uniform(k2, 3, 1, adm), {});
    CHECK(r.verdict == Verdict::Winnable);
    REQUIRE(r.strategy.has_value());
    GameSpec spec = GameSpec::uniform(k2, 3, 1, adm);
    for (const Coloring& c : adm) CHECK(any_correct(spec, *r.strategy, c));

    CHECK_THROWS(decide_winnable_admissible(GameSpec::uniform(k2, 3), {}));
}

TEST_CASE("multi-guess boards") {
    // two guesses on K_2: wins at 4 colors (pair the colors), loses at 5
    GameSpec four = GameSpec::uniform(make_complete(2), 4, 2);
    CHECK(decide_winnable(four, {}).verdict == Verdict::Winnable);
    GameSpec five = GameSpec::uniform(make_complete(2), 5, 2);
    CHECK(decide_winnable(five, {}).verdict == Verdict::NotWinnable);
}

TEST_CASE("budget exhaustion reports unknown") {
    SolverOptions opts;
    opts.budget.node_limit = 50;
    SolveResult r = decide_winnable(GameSpec::uniform(make_cycle(5), 3), opts);
    CHECK(r.verdict == Verdict::Unknown);
    CHECK(r.note == "budget exhausted");
}

TEST_CASE("ceilings are enforced") {
    GameSpec spec = GameSpec::uniform(make_complete(10), 8);  // 8^10 colorings
    CHECK_FALSE(within_solver_ceilings(spec));
    CHECK_THROWS(decide_winnable(spec, {}));
    CHECK(within_solver_ceilings(GameSpec::uniform(make_cycle(5), 3)));
}

TEST_CASE("palette cap for color masks") {
    CHECK_THROWS(decide_winnable(GameSpec::uniform(make_complete(2), 32), {}));
}

TEST_CASE("hat number scans") {
    HatNumberResult k3 = hat_number(named_graph("k3"), 1, 4, {});
    CHECK(k3.mu == 3);
    CHECK(k3.exact);
    CHECK(k3.anomalies.empty());
    REQUIRE(k3.per_k.size() == 3);
    CHECK(k3.per_k[0] == std::pair<int, Verdict>{2, Verdict::Winnable});
    CHECK(k3.per_k[1] == std::pair<int, Verdict>{3, Verdict::Winnable});
    CHECK(k3.per_k[2] == std::pair<int, Verdict>{4, Verdict::NotWinnable});

    HatNumberResult p4 = hat_number(named_graph("p4"), 1, 4, {});
    CHECK(p4.mu == 2);
    CHECK(p4.exact);

    // trivial floor: a lone bear never beats two colors
    HatNumberResult k1 = hat_number(named_graph("k1"), 1, 3, {});
    CHECK(k1.mu == 1);
    CHECK(k1.exact);

    // a budget too small for the k=3 refutation leaves the scan inexact
    SolverOptions tight;
    tight.budget.node_limit = 50;
    HatNumberResult c5 = hat_number(named_graph("c5"), 1, 3, tight);
    CHECK_FALSE(c5.exact);
    CHECK(c5.per_k[1].second == Verdict::Unknown);

    CHECK_THROWS(hat_number(named_graph("k3"), 1, 1, {}));
}

TEST_CASE("hat number marks over-ceiling palettes unknown") {
    // K_7 at k=8 exceeds the view-cell ceiling and must come back Unknown
    // without a throw; the scan below it runs under a tiny node budget
    SolverOptions opts;
    opts.budget.node_limit = 500;
    HatNumberResult r = hat_number(make_complete(7), 1, 8, opts);
    CHECK(r.per_k.back().second == Verdict::Unknown);
    CHECK(r.per_k.front().second == Verdict::Winnable);  // K_7 at two colors
    CHECK_FALSE(r.exact);
}
