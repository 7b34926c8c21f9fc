#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hatters/constructions.hpp"
#include "hatters/game.hpp"
#include "hatters/graph.hpp"

using namespace hatters;

TEST_CASE("mixed-radix view codes round-trip") {
    std::vector<int> radices{3, 2, 4};
    CHECK(view_space(radices) == 24);
    for (std::size_t code = 0; code < 24; ++code) {
        auto view = decode_view(radices, code);
        CHECK(encode_view(radices, view) == code);
    }
    // coordinate 0 is the least significant digit
    CHECK(encode_view(radices, {1, 0, 0}) == 1);
    CHECK(encode_view(radices, {0, 1, 0}) == 3);
    CHECK(encode_view(radices, {0, 0, 1}) == 6);
    CHECK(view_space({}) == 1);
}

TEST_CASE("view_of picks the observed coordinates") {
    Coloring c{5, 1, 7, 2};
    CHECK(view_of(c, {0, 2}) == std::vector<int>{5, 7});
    CHECK(view_of(c, {3}) == std::vector<int>{2});
    CHECK(view_of(c, {}).empty());
}

TEST_CASE("guess sets normalize and query") {
    CHECK(normalized_guesses({3, 1, 3, 2}) == GuessSet{1, 2, 3});
    CHECK(guess_contains({1, 4, 6}, 4));
    CHECK_FALSE(guess_contains({1, 4, 6}, 5));
}

TEST_CASE("strategy wrappers agree through operator()") {
    VertexStrategy con = make_constant_strategy(2, {1});
    CHECK(con({}) == GuessSet{1});
    CHECK(con.coords.empty());

    VertexStrategy tab = make_table_strategy(0, {1}, {3}, {{0}, {2}, {1}});
    CHECK(tab({1}) == GuessSet{2});
    CHECK(tab.tabulated());

    VertexStrategy proc;
    proc.vertex = 0;
    proc.coords = {1, 2};
    proc.radices = {2, 2};
    proc.rule = [](const std::vector<int>& v) { return GuessSet{(v[0] + v[1]) % 2}; };
    VertexStrategy dense = tabulate(proc);
    REQUIRE(dense.tabulated());
    for (std::size_t code = 0; code < 4; ++code) {
        auto view = decode_view(proc.radices, code);
        CHECK(dense.at_code(code) == proc(view));
    }
    CHECK_THROWS(tabulate(proc, 2));  // cell cap enforced
}

TEST_CASE("restrict_strategy fixes observed coordinates") {
    VertexStrategy tab = make_table_strategy(0, {1, 3}, {2, 3}, {{0}, {1}, {0}, {2}, {1}, {0}});
    VertexStrategy r = restrict_strategy(tab, {{3, 2}});
    CHECK(r.coords == std::vector<int>{1});
    CHECK(r.radices == std::vector<int>{2});
    // fixing the high digit keeps the low-digit slice
    CHECK(r({0}) == tab({0, 2}));
    CHECK(r({1}) == tab({1, 2}));
}

TEST_CASE("spec validation") {
    Graph k2 = make_complete(2);
    CHECK_THROWS(GameSpec::uniform(k2, 1));               // guesses must stay below the palette
    CHECK_THROWS(GameSpec::uniform(k2, 2, 2));
    CHECK_THROWS(GameSpec::uniform(k2, 2, 0));
    CHECK_THROWS(GameSpec::make(k2, {3}, 1));             // palette length mismatch
    CHECK_THROWS(GameSpec::uniform(k2, 2, 1, {{{0, 2}}}));  // admissible color out of range
    CHECK_THROWS(GameSpec::uniform(k2, 2, 1, {{{0, 1}, {0, 1}}}));  // duplicate

    GameSpec spec = GameSpec::uniform(make_path(3), 3);
    CHECK(spec.universe_size() == 27);
    GameSpec adm = GameSpec::uniform(k2, 2, 1, {{{0, 0}, {1, 1}}});
    CHECK(adm.universe_size() == 2);  // the admissible list replaces the full product
}

TEST_CASE("evaluate and demonic checks on a handmade profile") {
    Graph k2 = make_complete(2);
    GameSpec spec = GameSpec::uniform(k2, 2);
    // both bears guess the color they see
    Strategy copy;
    copy.at.push_back(make_table_strategy(0, {1}, {2}, {{0}, {1}}));
    copy.at.push_back(make_table_strategy(1, {0}, {2}, {{0}, {1}}));
    validate_strategy(spec, copy);
    CHECK(evaluate(spec, copy, {0, 0}) == std::vector<int>{0, 1});
    CHECK(evaluate(spec, copy, {1, 1}) == std::vector<int>{0, 1});
    CHECK(is_demonic(spec, copy, {0, 1}));
    CHECK_FALSE(any_correct(spec, copy, {1, 0}));

    VerifyOutcome out = verify_winning(spec, copy);
    CHECK_FALSE(out.win);
    CHECK(out.checked == 2);  // scan stops at the first counterexample
    REQUIRE(out.counterexample.has_value());
    CHECK(*out.counterexample == Coloring{0, 1});
}

TEST_CASE("verify_winning accepts the pair strategy and reports lex-first failures") {
    Graph k2 = make_complete(2);
    GameSpec spec = GameSpec::uniform(k2, 2);
    // bear 0 assumes equal colors, bear 1 assumes different: one is always right
    Strategy pair;
    pair.at.push_back(make_table_strategy(0, {1}, {2}, {{0}, {1}}));
    pair.at.push_back(make_table_strategy(1, {0}, {2}, {{1}, {0}}));
    VerifyOutcome out = verify_winning(spec, pair);
    CHECK(out.win);
    CHECK(out.checked == 4);

    // constant guesses lose; the first miss in lex order is (1,1)
    Strategy zeros;
    zeros.at.push_back(make_table_strategy(0, {1}, {2}, {{0}, {0}}));
    zeros.at.push_back(make_table_strategy(1, {0}, {2}, {{0}, {0}}));
    VerifyOutcome lose = verify_winning(spec, zeros);
    CHECK_FALSE(lose.win);
    CHECK(*lose.counterexample == Coloring{1, 1});
}

TEST_CASE("validate_strategy rejects malformed profiles") {
    Graph p3 = make_path(3);
    GameSpec spec = GameSpec::uniform(p3, 3);
    Strategy s;
    s.at.push_back(make_table_strategy(0, {1}, {3}, {{0}, {1}, {2}}));
    s.at.push_back(make_table_strategy(1, {0, 2}, {3, 3},
                                       std::vector<GuessSet>(9, GuessSet{0})));
    s.at.push_back(make_table_strategy(2, {1}, {3}, {{0}, {1}, {2}}));
    validate_strategy(spec, s);

    Strategy badCoords = s;
    badCoords.at[0].coords = {2};  // must observe the open neighborhood
    CHECK_THROWS(validate_strategy(spec, badCoords));

    Strategy badGuess = s;
    badGuess.at[2].table[1] = {3};  // color outside the palette
    CHECK_THROWS(validate_strategy(spec, badGuess));

    Strategy badSize = s;
    badSize.at[1].table[4] = {0, 1};  // guess set larger than s
    CHECK_THROWS(validate_strategy(spec, badSize));
}

TEST_CASE("verify_winning refuses oversized universes") {
    Graph g = make_complete(8);
    GameSpec spec = GameSpec::uniform(g, 16);  // 16^8 colorings
    Strategy s;
    for (int v = 0; v < 8; ++v) s.at.push_back(make_constant_strategy(v, {0}));
    SearchBudget tiny;
    tiny.node_limit = 1000;
    CHECK_THROWS(verify_winning(spec, s, tiny));
}

TEST_CASE("random strategies are valid and seed-deterministic") {
    GameSpec spec = GameSpec::uniform(make_cycle(4), 3, 2);
    Strategy a = random_table_strategy(spec, 7);
    Strategy b = random_table_strategy(spec, 7);
    Strategy c = random_table_strategy(spec, 8);
    validate_strategy(spec, a);
    for (int v = 0; v < 4; ++v) {
        CHECK(a.at[v].table == b.at[v].table);
        for (const GuessSet& g : a.at[v].table) CHECK(g.size() == 2);
    }
    bool differs = false;
    for (int v = 0; v < 4; ++v) differs = differs || a.at[v].table != c.at[v].table;
    CHECK(differs);
}
