#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hatters/bounds.hpp"
#include "hatters/constructions.hpp"
#include "hatters/demon.hpp"
#include "hatters/json_io.hpp"
#include "hatters/solver.hpp"
#include "hatters/verify_suites.hpp"

using namespace hatters;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFound = 2;    // counterexample or demonic coloring found
constexpr int kExitUnknown = 3;  // budget exhausted / undecided
constexpr int kExitUsage = 64;

struct Opts {
    std::string graphPath, strategyPath, coloringPath, admissiblePath, outPath;
    std::string family, name, mode = "exhaustive", theorem, type, partA, order, partBDemon = "independent";
    int n = 0, k = 0, s = 1, sideA = 1, sideB = 1, kmax = 0, root = 0, rootColor = -1, k1 = 2;
    uint64_t seed = 0, trials = 0, budgetNodes = 50'000'000;
    double budgetSecs = -1.0;
    int threads = 1;
    bool noCounting = false, symmetry = false, list = false;
};

SearchBudget make_budget(const Opts& o) {
    SearchBudget b;
    b.node_limit = o.budgetNodes;
    b.threads = o.threads;
    if (o.budgetSecs >= 0) {
        b.time_limit_secs = o.budgetSecs;
    } else if (const char* env = std::getenv("HATTERS_BUDGET_SECS")) {
        b.time_limit_secs = std::atof(env);
    }
    return b;
}

void emit(const json& j, const Opts& o) {
    std::string text = j.dump(2) + "\n";
    if (o.outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.outPath, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + o.outPath);
        out << text;
    }
}

Graph load_graph(const Opts& o) {
    if (o.graphPath.empty()) throw std::invalid_argument("--graph is required");
    return graph_from_json(parse_json_file(o.graphPath));
}

StrategyFile load_strategy(const Opts& o, const Graph& g) {
    if (o.strategyPath.empty()) throw std::invalid_argument("--strategy is required");
    return strategy_from_json(parse_json_file(o.strategyPath), g);
}

std::vector<Coloring> load_colorings(const std::string& path) {
    json j = parse_json_file(path);
    if (!j.is_object() || !j.contains("colorings"))
        throw std::runtime_error(path + ": expected field colorings");
    std::vector<Coloring> out;
    for (const auto& c : j.at("colorings")) out.push_back(c.get<Coloring>());
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

int uniform_colors(const std::vector<int>& palette) {
    if (palette.empty()) throw std::invalid_argument("empty palette");
    for (int k : palette)
        if (k != palette[0]) throw std::invalid_argument("a uniform palette is required here");
    return palette[0];
}

int cmd_gen(const Opts& o) {
    Graph g;
    if (!o.name.empty()) {
        g = named_graph(o.name);
    } else if (o.family == "complete") {
        g = make_complete(o.n);
    } else if (o.family == "cycle") {
        g = make_cycle(o.n);
    } else if (o.family == "path") {
        g = make_path(o.n);
    } else if (o.family == "biclique") {
        g = make_complete_bipartite(o.sideA, o.sideB);
    } else if (o.family == "tree") {
        g = make_tree_random(o.n, o.seed);
    } else if (o.family == "kstar") {
        uint64_t K = uint64_t(1) << o.k;
        uint64_t space = 1;
        for (int i = 0; i < o.k; ++i) space *= K;
        g = make_kstar(o.k, int(subset_count(space, int(K) - 1))).graph;
    } else if (o.family == "subdivide") {
        g = subdivide(load_graph(o)).graph;
    } else {
        throw std::invalid_argument("unknown family: " + o.family);
    }
    emit(graph_to_json(g), o);
    return kExitOk;
}

int cmd_eval(const Opts& o) {
    Graph g = load_graph(o);
    StrategyFile sf = load_strategy(o, g);
    GameSpec spec = GameSpec::make(g, sf.palette, sf.guesses);
    if (!o.coloringPath.empty()) {
        Coloring c = coloring_from_json(parse_json_file(o.coloringPath));
        std::vector<int> correct = evaluate(spec, sf.strategy, c);
        emit(json{{"correct", correct}, {"demonic", correct.empty()}}, o);
        return correct.empty() ? kExitFound : kExitOk;
    }
    SearchBudget budget = make_budget(o);
    if (spec.universe_size() > budget.node_limit) {
        emit(json{{"win", nullptr}, {"note", "color space above the node budget"}}, o);
        return kExitUnknown;
    }
    VerifyOutcome out = verify_winning(spec, sf.strategy, budget);
    json j{{"win", out.win}, {"checked", out.checked}};
    if (out.counterexample) j["counterexample"] = *out.counterexample;
    emit(j, o);
    return out.win ? kExitOk : kExitFound;
}

int cmd_construct(const Opts& o) {
    if (o.type == "sum") {
        if (o.n < 2) throw std::invalid_argument("--n >= 2 required");
        int k = o.k > 0 ? o.k : o.n;
        Strategy strat = clique_sum_strategy(o.n, k);
        emit(strategy_to_json(std::vector<int>(o.n, k), 1, strat), o);
        return kExitOk;
    }
    if (o.type == "tree_power") {
        Graph g = load_graph(o);
        TreePowerResult tp = tree_power_strategy(g);
        emit(strategy_to_json(tp.palette, 1, tp.strategy), o);
        return kExitOk;
    }
    if (o.type == "kstar") {
        KStarStrategy ks = kstar_strategy(o.k);
        emit(strategy_to_json(ks.spec.palette, 1, ks.strategy), o);
        return kExitOk;
    }
    if (o.type == "admissible") {
        if (o.admissiblePath.empty()) throw std::invalid_argument("--admissible is required");
        if (o.n < 1 || o.k < 2) throw std::invalid_argument("--n and --k required");
        std::vector<Coloring> A = load_colorings(o.admissiblePath);
        Strategy strat = kn_admissible_strategy(o.n, o.k, A);
        emit(strategy_to_json(std::vector<int>(o.n, o.k), 1, strat), o);
        return kExitOk;
    }
    throw std::invalid_argument("unknown construct type: " + o.type);
}

int cmd_demon(const Opts& o) {
    Graph g = load_graph(o);
    StrategyFile sf = load_strategy(o, g);
    GameSpec spec = GameSpec::make(g, sf.palette, sf.guesses);
    int K = uniform_colors(sf.palette);
    std::optional<Coloring> col;
    uint64_t checked = 0;
    if (o.mode == "tree") {
        col = o.rootColor >= 0
                  ? tree_demonic(g, o.root, sf.strategy, K, sf.guesses, o.rootColor)
                  : tree_demonic_auto(g, sf.strategy, K, sf.guesses);
    } else if (o.mode == "partition") {
        std::vector<int> partA = parse_int_list(o.partA);
        std::vector<bool> inA(g.n, false);
        for (int v : partA) inA.at(v) = true;
        std::vector<int> partB;
        for (int v = 0; v < g.n; ++v)
            if (!inA[v]) partB.push_back(v);
        SubDemon demonB = o.partBDemon == "tree" ? make_tree_subdemon()
                                                 : make_independent_subdemon();
        col = partition_demonic(g, partA, partB, sf.strategy, K, sf.guesses, o.k1,
                                make_independent_subdemon(), demonB);
    } else if (o.mode == "bipolar") {
        std::vector<int> order = o.order.empty() ? std::vector<int>{} : parse_int_list(o.order);
        if (order.empty())
            for (int v = 0; v < g.n; ++v) order.push_back(v);
        col = bipolar_demonic(g, order, sf.strategy, K);
    } else if (o.mode == "exhaustive") {
        col = exhaustive_demonic_search(spec, sf.strategy, make_budget(o));
        checked = spec.admissible ? spec.admissible->size() : spec.universe_size();
    } else {
        throw std::invalid_argument("unknown demon mode: " + o.mode);
    }
    if (!col) {
        emit(json{{"demonic", false}, {"checked", checked}}, o);
        return kExitOk;
    }
    bool verified = is_demonic(spec, sf.strategy, *col);
    // key matches the coloring file format so the output feeds eval --coloring
    emit(json{{"colors", *col}, {"demonic", verified}}, o);
    if (!verified) throw std::logic_error("constructed coloring is not demonic");
    return kExitFound;
}

int cmd_solve(const Opts& o) {
    Graph g = load_graph(o);
    if (o.k < 2) throw std::invalid_argument("--k >= 2 required");
    std::optional<std::vector<Coloring>> admissible;
    if (!o.admissiblePath.empty()) admissible = load_colorings(o.admissiblePath);
    GameSpec spec = GameSpec::uniform(g, o.k, o.s, admissible);
    SolverOptions so{make_budget(o), !o.noCounting, o.symmetry};
    auto t0 = std::chrono::steady_clock::now();
    SolveResult sr = decide_winnable(spec, so);
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    emit(solve_result_to_json(sr, spec), o);
    std::cerr << "elapsed " << dt.count() << "s\n";
    return sr.verdict == Verdict::Unknown ? kExitUnknown : kExitOk;
}

int cmd_mu(const Opts& o) {
    Graph g = load_graph(o);
    int kmax = o.kmax;
    if (kmax <= 0) {
        // scan one past the best closed-form bound so an exact value can be
        // certified by a refutation
        BoundReport rep = bound_report(g);
        kmax = (rep.best ? *rep.best : g.n) + 1;
        kmax = std::max(kmax, o.s + 2);
    }
    SolverOptions so{make_budget(o)};
    HatNumberResult hn = hat_number(g, o.s, kmax, so);
    emit(hat_number_to_json(hn), o);
    for (auto& [k, v] : hn.per_k)
        if (v == Verdict::Unknown) return kExitUnknown;
    return kExitOk;
}

int cmd_bounds(const Opts& o) {
    Graph g = load_graph(o);
    emit(bound_report_to_json(bound_report(g)), o);
    return kExitOk;
}

int cmd_verify(const Opts& o) {
    if (o.list) {
        json suites = json::array();
        for (const SuiteInfo& s : verify_suites())
            suites.push_back(json{{"name", s.name}, {"summary", s.summary}});
        emit(suites, o);
        return kExitOk;
    }
    if (o.theorem.empty()) throw std::invalid_argument("--theorem is required (or --list)");
    SuiteOptions opts{o.trials, o.seed, make_budget(o)};
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult sr = run_suite(o.theorem, opts);
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    emit(json{{"suite", sr.name},
              {"pass", sr.pass},
              {"inconclusive", sr.inconclusive},
              {"trials", sr.trials},
              {"failures", sr.failures},
              {"detail", sr.detail}},
         o);
    std::cerr << "elapsed " << dt.count() << "s\n";
    if (!sr.pass) return kExitFound;
    return sr.inconclusive ? kExitUnknown : kExitOk;
}

void add_budget_flags(CLI::App* sub, Opts& o) {
    sub->add_option("--budget-nodes", o.budgetNodes, "node budget");
    sub->add_option("--budget-secs", o.budgetSecs, "time budget in seconds");
    sub->add_option("--threads", o.threads, "worker threads");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hat-guessing games on graphs: strategies, demons, exact decisions, bounds"};
    app.require_subcommand(1);
    Opts o;
    std::function<int()> action;

    auto* gen = app.add_subcommand("gen", "emit a graph as JSON");
    gen->add_option("--family", o.family, "complete|cycle|path|biclique|tree|kstar|subdivide");
    gen->add_option("--name", o.name, "named small graph (k1..k5, p3, p4, k13, c4, c5, paw, diamond)");
    gen->add_option("--n", o.n, "order");
    gen->add_option("--a", o.sideA, "biclique side a");
    gen->add_option("--b", o.sideB, "biclique side b");
    gen->add_option("--k", o.k, "k-star parameter");
    gen->add_option("--graph", o.graphPath, "input graph (family subdivide)");
    gen->add_option("--seed", o.seed, "random tree seed");
    gen->add_option("--out", o.outPath, "output path");
    gen->callback([&] { action = [&] { return cmd_gen(o); }; });

    auto* eval = app.add_subcommand("eval", "evaluate a strategy on one coloring or all of them");
    eval->add_option("--graph", o.graphPath)->required();
    eval->add_option("--strategy", o.strategyPath)->required();
    eval->add_option("--coloring", o.coloringPath, "single coloring to test");
    eval->add_option("--out", o.outPath);
    add_budget_flags(eval, o);
    eval->callback([&] { action = [&] { return cmd_eval(o); }; });

    auto* construct = app.add_subcommand("construct", "emit a strategy profile as JSON");
    construct->add_option("--type", o.type, "sum|tree_power|kstar|admissible")->required();
    construct->add_option("--n", o.n, "number of bears");
    construct->add_option("--k", o.k, "colors (or k-star parameter)");
    construct->add_option("--graph", o.graphPath, "tree input for tree_power");
    construct->add_option("--admissible", o.admissiblePath, "colorings file for admissible");
    construct->add_option("--out", o.outPath);
    construct->callback([&] { action = [&] { return cmd_construct(o); }; });

    auto* demon = app.add_subcommand("demon", "find a demonic coloring against a strategy");
    demon->add_option("--graph", o.graphPath)->required();
    demon->add_option("--strategy", o.strategyPath)->required();
    demon->add_option("--mode", o.mode, "tree|partition|bipolar|exhaustive");
    demon->add_option("--root", o.root, "tree root");
    demon->add_option("--root-color", o.rootColor, "tree root color (default: auto)");
    demon->add_option("--part-a", o.partA, "comma-separated part A vertices");
    demon->add_option("--k1", o.k1, "colors reserved for part A");
    demon->add_option("--part-b-demon", o.partBDemon, "independent|tree");
    demon->add_option("--order", o.order, "comma-separated vertex order");
    demon->add_option("--out", o.outPath);
    add_budget_flags(demon, o);
    demon->callback([&] { action = [&] { return cmd_demon(o); }; });

    auto* solve = app.add_subcommand("solve", "decide winnability exactly");
    solve->add_option("--graph", o.graphPath)->required();
    solve->add_option("--k", o.k, "palette size")->required();
    solve->add_option("--s", o.s, "guesses per bear");
    solve->add_option("--admissible", o.admissiblePath, "restrict to listed colorings");
    solve->add_flag("--no-counting", o.noCounting, "disable the counting prune");
    solve->add_flag("--symmetry", o.symmetry, "fix color 0 in the first cell (full space only)");
    solve->add_option("--out", o.outPath);
    add_budget_flags(solve, o);
    solve->callback([&] { action = [&] { return cmd_solve(o); }; });

    auto* mu = app.add_subcommand("mu", "largest winnable palette size");
    mu->add_option("--graph", o.graphPath)->required();
    mu->add_option("--s", o.s, "guesses per bear");
    mu->add_option("--kmax", o.kmax, "scan ceiling (default: best bound + 1)");
    mu->add_option("--out", o.outPath);
    add_budget_flags(mu, o);
    mu->callback([&] { action = [&] { return cmd_mu(o); }; });

    auto* bounds = app.add_subcommand("bounds", "closed-form upper bounds");
    bounds->add_option("--graph", o.graphPath)->required();
    bounds->add_option("--out", o.outPath);
    bounds->callback([&] { action = [&] { return cmd_bounds(o); }; });

    auto* verify = app.add_subcommand("verify", "run a theorem verification suite");
    verify->add_option("--theorem", o.theorem, "suite name (see --list)");
    verify->add_flag("--list", o.list, "list available suites");
    verify->add_option("--trials", o.trials, "trial count (0 = suite default)");
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--out", o.outPath);
    add_budget_flags(verify, o);
    verify->callback([&] { action = [&] { return cmd_verify(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
