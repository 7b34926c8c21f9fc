#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "hatters/constructions.hpp"
#include "hatters/json_io.hpp"
#include "hatters/rng.hpp"
#include "hatters/verify_suites.hpp"

using namespace hatters;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// runs a shell command, captures stdout; stderr goes to the terminal
RunResult run_cmd(const std::string& cmd) {
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string& cli() {
    static const std::string path = HATTERS_CLI_PATH;
    return path;
}

const std::string& work_dir() {
    static const std::string dir = [] {
        char tmpl[] = "/tmp/hatters_cli_XXXXXX";
        char* d = mkdtemp(tmpl);
        REQUIRE(d != nullptr);
        return std::string(d);
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    std::string path = work_dir() + "/" + name;
    std::ofstream f(path);
    f << text;
    return path;
}

}  // namespace

TEST_CASE("graph json round-trip") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int n = rng.uniform_int(1, 8);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.uniform_int(0, 1)) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        Graph back = graph_from_json(graph_to_json(g));
        CHECK(back.n == g.n);
        CHECK(back.edges() == g.edges());
    }
    CHECK_THROWS(graph_from_json(parse_json_text("{\"n\": 2}", "t")));
    CHECK_THROWS(graph_from_json(parse_json_text("{\"n\": 2, \"edges\": [[0,2]]}", "t")));
}

TEST_CASE("coloring json round-trip") {
    Coloring c{3, 0, 2};
    CHECK(coloring_from_json(coloring_to_json(c)) == c);
    CHECK_THROWS(coloring_from_json(parse_json_text("{\"wrong\": []}", "t")));
}

TEST_CASE("parse errors carry the byte offset") {
    try {
        parse_json_text("{\"n\": 1, ", "somewhere");
        FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("somewhere") != std::string::npos);
        CHECK(msg.find("byte") != std::string::npos);
    }
}

TEST_CASE("strategy files round-trip dense tables") {
    Graph g = make_cycle(4);
    GameSpec spec = GameSpec::uniform(g, 3, 2);
    Strategy s = random_table_strategy(spec, 99);
    json j = strategy_to_json(spec, s);
    StrategyFile back = strategy_from_json(j, g);
    CHECK(back.palette == spec.palette);
    CHECK(back.guesses == 2);
    for (int v = 0; v < g.n; ++v) CHECK(back.strategy.at[v].table == s.at[v].table);
}

TEST_CASE("strategy files keep named leaf rules compact") {
    KStarStrategy ks = kstar_strategy(2, true);
    json j = strategy_to_json(ks.spec, ks.strategy);
    // leaves serialize as (rule, k, subset_rank), not as 4^2-entry tables
    int named = 0;
    for (const auto& v : j.at("vertices"))
        if (v.contains("rule") && v.at("rule") == "kstar_leaf") {
            ++named;
            CHECK_FALSE(v.contains("table"));
        }
    CHECK(named == 560);
    StrategyFile back = strategy_from_json(j, ks.spec.graph);
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        int leaf = ks.shape.leaf_part[rng.uniform_int(0, 559)];
        std::size_t code = rng.uniform_u64(0, 15);
        auto view = decode_view(ks.strategy.at[leaf].radices, code);
        CHECK(back.strategy.at[leaf](view) == ks.strategy.at[leaf](view));
    }
}

TEST_CASE("strategy validation rejects bad files") {
    Graph g = make_path(3);
    GameSpec spec = GameSpec::uniform(g, 3);
    Strategy s = random_table_strategy(spec, 1);
    json good = strategy_to_json(spec, s);

    json wrongNeighbors = good;
    wrongNeighbors["vertices"][0]["neighbors"] = {2};
    CHECK_THROWS(strategy_from_json(wrongNeighbors, g));

    json shortTable = good;
    shortTable["vertices"][1]["table"].erase(0);
    CHECK_THROWS(strategy_from_json(shortTable, g));

    json badColor = good;
    badColor["vertices"][0]["table"][0] = {7};
    CHECK_THROWS(strategy_from_json(badColor, g));

    json dupVertex = good;
    dupVertex["vertices"][2]["vertex"] = 0;
    CHECK_THROWS(strategy_from_json(dupVertex, g));
}

TEST_CASE("cli gen writes graphs") {
    RunResult r = run_cmd(cli() + " gen --family path --n 4");
    CHECK(r.exit_code == 0);
    Graph g = graph_from_json(parse_json_text(r.out, "gen"));
    CHECK(g.edges() == make_path(4).edges());

    RunResult named = run_cmd(cli() + " gen --name c5");
    CHECK(named.exit_code == 0);
    CHECK(graph_from_json(parse_json_text(named.out, "gen")).edge_count() == 5);

    CHECK(run_cmd(cli() + " gen --name no_such_graph 2>/dev/null").exit_code == 64);
}

TEST_CASE("cli construct then eval wins") {
    std::string g = write_file("k3.json", graph_to_json(make_complete(3)).dump());
    std::string strat = work_dir() + "/sum3.json";
    RunResult c = run_cmd(cli() + " construct --type sum --n 3 --out " + strat);
    REQUIRE(c.exit_code == 0);
    RunResult e = run_cmd(cli() + " eval --graph " + g + " --strategy " + strat);
    CHECK(e.exit_code == 0);
    json out = parse_json_text(e.out, "eval");
    CHECK(out.at("win") == true);
    CHECK(out.at("checked") == 27);
}

TEST_CASE("cli demon pipeline round-trips into eval") {
    std::string g = write_file("k2.json", graph_to_json(make_complete(2)).dump());
    GameSpec spec = GameSpec::uniform(make_complete(2), 3);
    Strategy zeros;
    zeros.at.push_back(make_table_strategy(0, {1}, {3}, {{0}, {0}, {0}}));
    zeros.at.push_back(make_table_strategy(1, {0}, {3}, {{0}, {0}, {0}}));
    std::string strat = write_file("zeros.json", strategy_to_json(spec, zeros).dump());
    std::string col = work_dir() + "/dem.json";

    RunResult d = run_cmd(cli() + " demon --graph " + g + " --strategy " + strat +
                          " --mode exhaustive --out " + col);
    CHECK(d.exit_code == 2);  // demonic coloring found
    json dj = parse_json_file(col);
    CHECK(dj.at("demonic") == true);
    CHECK(dj.at("colors") == json::array({1, 1}));  // lexicographically first

    RunResult e = run_cmd(cli() + " eval --graph " + g + " --strategy " + strat +
                          " --coloring " + col);
    CHECK(e.exit_code == 2);
    CHECK(parse_json_text(e.out, "eval").at("correct").empty());

    // the sum strategy admits no demonic coloring at the matching palette
    std::string k3 = write_file("k3b.json", graph_to_json(make_complete(3)).dump());
    std::string sum = write_file(
        "sum3b.json", strategy_to_json(GameSpec::uniform(make_complete(3), 3),
                                       clique_sum_strategy(3))
                          .dump());
    RunResult none = run_cmd(cli() + " demon --graph " + k3 + " --strategy " + sum +
                             " --mode exhaustive");
    CHECK(none.exit_code == 0);
    CHECK(parse_json_text(none.out, "demon").at("demonic") == false);
}

TEST_CASE("cli solve exit codes and determinism") {
    std::string g = write_file("c4.json", graph_to_json(make_cycle(4)).dump());
    RunResult a = run_cmd(cli() + " solve --graph " + g + " --k 3 2>/dev/null");
    CHECK(a.exit_code == 0);
    CHECK(parse_json_text(a.out, "solve").at("verdict") == "winnable");
    RunResult b = run_cmd(cli() + " solve --graph " + g + " --k 3 2>/dev/null");
    CHECK(a.out == b.out);  // stats stay byte-identical run to run

    RunResult ref = run_cmd(cli() + " solve --graph " + g + " --k 4 2>/dev/null");
    CHECK(ref.exit_code == 0);
    CHECK(parse_json_text(ref.out, "solve").at("verdict") == "not_winnable");

    std::string c5 = write_file("c5.json", graph_to_json(make_cycle(5)).dump());
    RunResult u = run_cmd(cli() + " solve --graph " + c5 +
                          " --k 3 --budget-nodes 50 2>/dev/null");
    CHECK(u.exit_code == 3);
    CHECK(parse_json_text(u.out, "solve").at("verdict") == "unknown");

    RunResult env = run_cmd("HATTERS_BUDGET_SECS=0.02 " + cli() + " solve --graph " + c5 +
                            " --k 3 2>/dev/null");
    CHECK(env.exit_code == 3);
}

TEST_CASE("cli mu and bounds") {
    std::string g = write_file("k3mu.json", graph_to_json(make_complete(3)).dump());
    RunResult r = run_cmd(cli() + " mu --graph " + g + " 2>/dev/null");
    CHECK(r.exit_code == 0);
    json j = parse_json_text(r.out, "mu");
    CHECK(j.at("mu") == 3);
    CHECK(j.at("exact") == true);

    std::string c4 = write_file("c4b.json", graph_to_json(make_cycle(4)).dump());
    RunResult b = run_cmd(cli() + " bounds --graph " + c4);
    CHECK(b.exit_code == 0);
    CHECK(parse_json_text(b.out, "bounds").at("best") == 3);
}

TEST_CASE("cli verify lists and runs suites") {
    RunResult l = run_cmd(cli() + " verify --list");
    CHECK(l.exit_code == 0);
    json suites = parse_json_text(l.out, "verify");
    CHECK(suites.size() == 13);
    bool sawClique = false;
    for (const auto& s : suites) sawClique = sawClique || s.at("name") == "clique_sum";
    CHECK(sawClique);

    RunResult r = run_cmd(cli() + " verify --theorem clique_sum 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(parse_json_text(r.out, "verify").at("pass") == true);

    CHECK(run_cmd(cli() + " verify --theorem nope 2>/dev/null").exit_code == 64);
}

TEST_CASE("cli usage and input errors") {
    CHECK(run_cmd(cli() + " solve 2>/dev/null").exit_code == 64);          // missing flags
    CHECK(run_cmd(cli() + " frobnicate 2>/dev/null").exit_code == 64);     // no such command
    CHECK(run_cmd(cli() + " solve --graph /nonexistent.json --k 2 2>/dev/null").exit_code == 64);
    std::string bad = write_file("bad.json", "{\"n\": 2,");
    CHECK(run_cmd(cli() + " solve --graph " + bad + " --k 2 2>/dev/null").exit_code == 64);
    CHECK(run_cmd(cli() + " --help >/dev/null").exit_code == 0);
}
