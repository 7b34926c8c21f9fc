#pragma once

#include <string>

#include "json.hpp"

#include "hatters/bounds.hpp"
#include "hatters/game.hpp"
#include "hatters/graph.hpp"
#include "hatters/solver.hpp"

namespace hatters {

using json = nlohmann::json;

// Both report malformed input with the byte offset of the parse failure.
json parse_json_text(const std::string& text, const std::string& source_name);
json parse_json_file(const std::string& path);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

struct StrategyFile {
    std::vector<int> palette;
    int guesses = 1;
    Strategy strategy;
};

// {"palette": [...], "s": s, "vertices": [...]} where each vertex entry is a
// dense table {"vertex", "s", "neighbors", "table"} or a named rule
// descriptor such as {"vertex", "rule": "kstar_leaf", "k", "subset_rank"}.
json strategy_to_json(const std::vector<int>& palette, int guesses, const Strategy& strat);
json strategy_to_json(const GameSpec& spec, const Strategy& strat);
StrategyFile strategy_from_json(const json& j, const Graph& g);

// Stats carry node counts only, so equal inputs give byte-equal output.
json solve_result_to_json(const SolveResult& r, const GameSpec& spec);
json hat_number_to_json(const HatNumberResult& r);
json bound_report_to_json(const BoundReport& r);

}  // namespace hatters
