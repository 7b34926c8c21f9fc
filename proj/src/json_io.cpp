#include "hatters/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hatters/constructions.hpp"

namespace hatters {

json parse_json_text(const std::string& text, const std::string& source_name) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(source_name + ": malformed JSON at byte " +
                                 std::to_string(e.byte) + " (" + e.what() + ")");
    }
}

json parse_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::runtime_error("graph JSON needs fields n and edges");
    int n = j.at("n").get<int>();
    if (n < 0) throw std::runtime_error("graph JSON: negative n");
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error("graph JSON: each edge must be a pair");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(n, es);
}

json coloring_to_json(const Coloring& c) { return json{{"colors", c}}; }

Coloring coloring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("colors"))
        throw std::runtime_error("coloring JSON needs field colors");
    Coloring c;
    for (const auto& x : j.at("colors")) {
        int v = x.get<int>();
        if (v < 0) throw std::runtime_error("coloring JSON: negative color");
        c.push_back(v);
    }
    return c;
}

namespace {

json vertex_entry_to_json(int guesses, const VertexStrategy& vs) {
    if (!vs.tabulated()) {
        if (vs.rule_name == "kstar_leaf") {
            return json{{"vertex", vs.vertex},
                        {"rule", "kstar_leaf"},
                        {"k", vs.rule_params.at(0)},
                        {"subset_rank", vs.rule_params.at(1)}};
        }
        if (vs.rule_name == "kstar_clique") {
            return json{{"vertex", vs.vertex},
                        {"rule", "kstar_clique"},
                        {"k", vs.rule_params.at(0)}};
        }
        VertexStrategy dense = tabulate(vs);
        return vertex_entry_to_json(guesses, dense);
    }
    json table = json::array();
    for (const auto& g : vs.table) table.push_back(g);
    return json{{"vertex", vs.vertex},
                {"s", guesses},
                {"neighbors", vs.coords},
                {"table", table}};
}

}  // namespace

json strategy_to_json(const std::vector<int>& palette, int guesses, const Strategy& strat) {
    json vertices = json::array();
    for (const auto& vs : strat.at) vertices.push_back(vertex_entry_to_json(guesses, vs));
    return json{{"palette", palette}, {"s", guesses}, {"vertices", vertices}};
}

json strategy_to_json(const GameSpec& spec, const Strategy& strat) {
    return strategy_to_json(spec.palette, spec.guesses, strat);
}

StrategyFile strategy_from_json(const json& j, const Graph& g) {
    if (!j.is_object() || !j.contains("palette") || !j.contains("s") || !j.contains("vertices"))
        throw std::runtime_error("strategy JSON needs fields palette, s and vertices");
    StrategyFile out;
    out.palette = j.at("palette").get<std::vector<int>>();
    out.guesses = j.at("s").get<int>();
    if (int(out.palette.size()) != g.n)
        throw std::runtime_error("strategy JSON: palette length differs from graph order");
    if (int(j.at("vertices").size()) != g.n)
        throw std::runtime_error("strategy JSON: one entry per vertex required");

    out.strategy.at.resize(g.n);
    std::vector<bool> filled(g.n, false);
    std::optional<KStarStrategy> kstarCache;
    auto kstar_for = [&](int k) -> const KStarStrategy& {
        if (!kstarCache || kstarCache->k != k) kstarCache = kstar_strategy(k, true);
        return *kstarCache;
    };
    for (const auto& entry : j.at("vertices")) {
        int v = entry.at("vertex").get<int>();
        if (v < 0 || v >= g.n) throw std::runtime_error("strategy JSON: vertex out of range");
        if (filled[v]) throw std::runtime_error("strategy JSON: duplicate vertex entry");
        filled[v] = true;
        if (entry.contains("rule")) {
            std::string rule = entry.at("rule").get<std::string>();
            int k = entry.at("k").get<int>();
            if (rule == "kstar_leaf") {
                uint64_t rank = entry.at("subset_rank").get<uint64_t>();
                out.strategy.at[v] = kstar_leaf_rule(k, v, g.adj[v], rank);
            } else if (rule == "kstar_clique") {
                const KStarStrategy& ks = kstar_for(k);
                if (v >= int(ks.strategy.at.size()))
                    throw std::runtime_error("strategy JSON: clique vertex out of range");
                out.strategy.at[v] = ks.strategy.at[v];
            } else {
                throw std::runtime_error("strategy JSON: unknown rule " + rule);
            }
            continue;
        }
        VertexStrategy vs;
        vs.vertex = v;
        vs.coords = entry.at("neighbors").get<std::vector<int>>();
        if (vs.coords != g.adj[v])
            throw std::runtime_error("strategy JSON: neighbors must match the graph adjacency");
        for (int u : vs.coords) vs.radices.push_back(out.palette.at(u));
        std::size_t cells = view_space(vs.radices);
        const auto& table = entry.at("table");
        if (table.size() != cells)
            throw std::runtime_error("strategy JSON: table size must be the view-space size");
        for (const auto& cell : table) {
            GuessSet gs = normalized_guesses(cell.get<GuessSet>());
            if (gs.empty() || int(gs.size()) > out.guesses)
                throw std::runtime_error("strategy JSON: guess sets must have 1..s colors");
            for (int c : gs)
                if (c < 0 || c >= out.palette[v])
                    throw std::runtime_error("strategy JSON: guess outside the palette");
            vs.table.push_back(std::move(gs));
        }
        out.strategy.at[v] = std::move(vs);
    }
    return out;
}

json solve_result_to_json(const SolveResult& r, const GameSpec& spec) {
    json j{{"verdict", to_string(r.verdict)}, {"nodes", r.nodes}};
    if (!r.note.empty()) j["note"] = r.note;
    if (r.strategy) j["strategy"] = strategy_to_json(spec, *r.strategy);
    return j;
}

json hat_number_to_json(const HatNumberResult& r) {
    json per = json::array();
    for (auto [k, v] : r.per_k) per.push_back(json{{"k", k}, {"verdict", to_string(v)}});
    return json{{"mu", r.mu},           {"exact", r.exact},        {"k_min", r.k_min},
                {"k_max", r.k_max},     {"per_k", per},            {"anomalies", r.anomalies},
                {"nodes", r.nodes}};
}

json bound_report_to_json(const BoundReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json je{{"name", e.name}, {"value", e.value}, {"note", e.note}};
        if (e.bound) je["bound"] = *e.bound;
        entries.push_back(je);
    }
    json j{{"max_degree", r.max_degree}, {"entries", entries}};
    j["chromatic"] = r.chromatic ? json(*r.chromatic) : json(nullptr);
    j["best"] = r.best ? json(*r.best) : json(nullptr);
    return j;
}

}  // namespace hatters
