#include "hatters/game.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "hatters/rng.hpp"

namespace hatters {

bool guess_contains(const GuessSet& g, int color) {
    return std::find(g.begin(), g.end(), color) != g.end();
}

GuessSet normalized_guesses(GuessSet g) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

std::size_t view_space(const std::vector<int>& radices) {
    std::size_t s = 1;
    for (int r : radices) {
        if (r <= 0) throw std::invalid_argument("view_space: radix must be positive");
        if (s > std::numeric_limits<std::size_t>::max() / std::size_t(r))
            throw std::overflow_error("view_space: overflow");
        s *= std::size_t(r);
    }
    return s;
}

std::size_t encode_view(const std::vector<int>& radices, const std::vector<int>& view) {
    if (view.size() != radices.size()) throw std::invalid_argument("encode_view: size mismatch");
    std::size_t code = 0, mult = 1;
    for (std::size_t i = 0; i < view.size(); ++i) {
        if (view[i] < 0 || view[i] >= radices[i])
            throw std::invalid_argument("encode_view: color out of range");
        code += mult * std::size_t(view[i]);
        mult *= std::size_t(radices[i]);
    }
    return code;
}

std::vector<int> decode_view(const std::vector<int>& radices, std::size_t code) {
    std::vector<int> view(radices.size());
    for (std::size_t i = 0; i < radices.size(); ++i) {
        view[i] = int(code % std::size_t(radices[i]));
        code /= std::size_t(radices[i]);
    }
    return view;
}

GuessSet VertexStrategy::operator()(const std::vector<int>& view) const {
    if (rule) return rule(view);
    return table[encode_view(radices, view)];
}

VertexStrategy make_constant_strategy(int vertex, GuessSet guesses) {
    VertexStrategy s;
    s.vertex = vertex;
    s.table.push_back(normalized_guesses(std::move(guesses)));
    if (s.table[0].empty()) throw std::invalid_argument("strategy: empty guess set");
    return s;
}

VertexStrategy make_table_strategy(int vertex, std::vector<int> coords, std::vector<int> radices,
                                   std::vector<GuessSet> table) {
    if (coords.size() != radices.size())
        throw std::invalid_argument("strategy: coords/radices size mismatch");
    if (!std::is_sorted(coords.begin(), coords.end()) ||
        std::adjacent_find(coords.begin(), coords.end()) != coords.end())
        throw std::invalid_argument("strategy: coords must be strictly ascending");
    if (table.size() != view_space(radices))
        throw std::invalid_argument("strategy: table size does not match view space");
    VertexStrategy s;
    s.vertex = vertex;
    s.coords = std::move(coords);
    s.radices = std::move(radices);
    s.table = std::move(table);
    for (auto& g : s.table) {
        g = normalized_guesses(std::move(g));
        if (g.empty()) throw std::invalid_argument("strategy: empty guess set");
    }
    return s;
}

VertexStrategy tabulate(const VertexStrategy& s, std::size_t max_cells) {
    if (s.tabulated()) return s;
    std::size_t cells = s.view_count();
    if (cells > max_cells) throw std::runtime_error("tabulate: view space too large");
    VertexStrategy out;
    out.vertex = s.vertex;
    out.coords = s.coords;
    out.radices = s.radices;
    out.table.resize(cells);
    for (std::size_t code = 0; code < cells; ++code)
        out.table[code] = normalized_guesses(s.rule(decode_view(s.radices, code)));
    return out;
}

VertexStrategy restrict_strategy(const VertexStrategy& s,
                                 const std::vector<std::pair<int, int>>& fixed) {
    std::vector<int> fixedColor(s.coords.size(), -1);
    for (auto [vtx, color] : fixed) {
        auto it = std::find(s.coords.begin(), s.coords.end(), vtx);
        if (it == s.coords.end())
            throw std::invalid_argument("restrict: vertex not observed");
        std::size_t i = std::size_t(it - s.coords.begin());
        if (color < 0 || color >= s.radices[i])
            throw std::invalid_argument("restrict: color out of range");
        fixedColor[i] = color;
    }
    VertexStrategy out;
    out.vertex = s.vertex;
    std::vector<std::size_t> freePos;
    for (std::size_t i = 0; i < s.coords.size(); ++i)
        if (fixedColor[i] < 0) {
            out.coords.push_back(s.coords[i]);
            out.radices.push_back(s.radices[i]);
            freePos.push_back(i);
        }
    if (s.tabulated()) {
        out.table.resize(view_space(out.radices));
        std::vector<int> full(s.coords.size());
        for (std::size_t i = 0; i < s.coords.size(); ++i)
            if (fixedColor[i] >= 0) full[i] = fixedColor[i];
        for (std::size_t code = 0; code < out.table.size(); ++code) {
            auto sub = decode_view(out.radices, code);
            for (std::size_t j = 0; j < freePos.size(); ++j) full[freePos[j]] = sub[j];
            out.table[code] = s.table[encode_view(s.radices, full)];
        }
    } else {
        auto base = s.rule;
        out.rule = [base, fixedColor, freePos, nCoords = s.coords.size()](
                       const std::vector<int>& sub) {
            std::vector<int> full(nCoords);
            for (std::size_t i = 0; i < nCoords; ++i)
                if (fixedColor[i] >= 0) full[i] = fixedColor[i];
            for (std::size_t j = 0; j < freePos.size(); ++j) full[freePos[j]] = sub[j];
            return base(full);
        };
    }
    return out;
}

GameSpec GameSpec::make(Graph graph, std::vector<int> palette, int guesses,
                        std::optional<std::vector<Coloring>> admissible) {
    if (int(palette.size()) != graph.n)
        throw std::invalid_argument("game: palette size must match vertex count");
    for (int a : palette)
        if (a < 1) throw std::invalid_argument("game: palette entries must be >= 1");
    if (guesses < 1) throw std::invalid_argument("game: guesses must be >= 1");
    for (int a : palette)
        if (guesses >= a)
            throw std::invalid_argument("game: guesses must be < every palette size");
    if (admissible) {
        std::set<Coloring> seen;
        for (const auto& c : *admissible) {
            if (int(c.size()) != graph.n)
                throw std::invalid_argument("game: admissible coloring has wrong length");
            for (int v = 0; v < graph.n; ++v)
                if (c[v] < 0 || c[v] >= palette[v])
                    throw std::invalid_argument("game: admissible coloring out of palette");
            if (!seen.insert(c).second)
                throw std::invalid_argument("game: duplicate admissible coloring");
        }
    }
    GameSpec s;
    s.graph = std::move(graph);
    s.palette = std::move(palette);
    s.guesses = guesses;
    s.admissible = std::move(admissible);
    return s;
}

GameSpec GameSpec::uniform(Graph graph, int num_colors, int guesses,
                           std::optional<std::vector<Coloring>> admissible) {
    std::vector<int> palette(graph.n, num_colors);
    return make(std::move(graph), std::move(palette), guesses, std::move(admissible));
}

std::size_t GameSpec::universe_size() const {
    if (admissible) return admissible->size();
    return view_space(palette);
}

std::vector<int> view_of(const Coloring& c, const std::vector<int>& coords) {
    std::vector<int> view(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) view[i] = c[coords[i]];
    return view;
}

void validate_strategy(const GameSpec& spec, const Strategy& strat) {
    if (int(strat.at.size()) != spec.graph.n)
        throw std::invalid_argument("strategy: one rule per vertex required");
    for (int v = 0; v < spec.graph.n; ++v) {
        const auto& s = strat.at[v];
        if (s.vertex != v) throw std::invalid_argument("strategy: rule owner mismatch");
        if (s.coords != spec.graph.adj[v])
            throw std::invalid_argument("strategy: rule must observe exactly the neighbors");
        for (std::size_t i = 0; i < s.coords.size(); ++i)
            if (s.radices[i] != spec.palette[s.coords[i]])
                throw std::invalid_argument("strategy: radix does not match neighbor palette");
        if (s.tabulated()) {
            for (const auto& g : s.table) {
                if (g.empty() || int(g.size()) > spec.guesses)
                    throw std::invalid_argument("strategy: guess set size out of range");
                for (int color : g)
                    if (color < 0 || color >= spec.palette[v])
                        throw std::invalid_argument("strategy: guess outside palette");
            }
        }
    }
}

std::vector<int> evaluate(const GameSpec& spec, const Strategy& strat, const Coloring& c) {
    std::vector<int> correct;
    for (int v = 0; v < spec.graph.n; ++v) {
        GuessSet g = strat.at[v](view_of(c, strat.at[v].coords));
        if (guess_contains(g, c[v])) correct.push_back(v);
    }
    return correct;
}

bool any_correct(const GameSpec& spec, const Strategy& strat, const Coloring& c) {
    for (int v = 0; v < spec.graph.n; ++v) {
        GuessSet g = strat.at[v](view_of(c, strat.at[v].coords));
        if (guess_contains(g, c[v])) return true;
    }
    return false;
}

bool is_demonic(const GameSpec& spec, const Strategy& strat, const Coloring& c) {
    return !any_correct(spec, strat, c);
}

namespace {

// ascending index is lexicographic order on the color vector read left to
// right (vertex 0 most significant)
Coloring lex_coloring(const std::vector<int>& palette, std::size_t index) {
    int n = int(palette.size());
    Coloring c(n);
    for (int v = n - 1; v >= 0; --v) {
        c[v] = int(index % std::size_t(palette[v]));
        index /= std::size_t(palette[v]);
    }
    return c;
}

bool lex_less(const Coloring& a, const Coloring& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

VerifyOutcome verify_winning(const GameSpec& spec, const Strategy& strat,
                             const SearchBudget& budget) {
    if (budget.node_limit == 0 || budget.threads < 1)
        throw std::invalid_argument("verify: budget fields must be positive");
    VerifyOutcome out;
    if (spec.admissible) {
        // universe is the explicit list; report the lexicographically first loss
        std::optional<Coloring> best;
        for (const auto& c : *spec.admissible) {
            ++out.checked;
            if (!any_correct(spec, strat, c) && (!best || lex_less(c, *best))) best = c;
        }
        out.win = !best.has_value();
        out.counterexample = std::move(best);
        return out;
    }
    std::size_t total = spec.universe_size();
    if (total > budget.node_limit)
        throw std::runtime_error("verify: refusing to scan " + std::to_string(total) +
                                 " colorings (budget " + std::to_string(budget.node_limit) + ")");
    int threads = std::min<int>(budget.threads, 64);
    if (threads <= 1 || total < 4096) {
        for (std::size_t i = 0; i < total; ++i) {
            Coloring c = lex_coloring(spec.palette, i);
            ++out.checked;
            if (!any_correct(spec, strat, c)) {
                out.win = false;
                out.counterexample = std::move(c);
                return out;
            }
        }
        out.win = true;
        return out;
    }
    std::atomic<std::size_t> firstLoss{total};
    std::atomic<uint64_t> checked{0};
    std::vector<std::thread> pool;
    std::size_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            std::size_t lo = std::size_t(t) * chunk, hi = std::min(total, lo + chunk);
            uint64_t local = 0;
            for (std::size_t i = lo; i < hi; ++i) {
                if (i >= firstLoss.load(std::memory_order_relaxed)) break;
                Coloring c = lex_coloring(spec.palette, i);
                ++local;
                if (!any_correct(spec, strat, c)) {
                    // lexicographic-minimum reduction keeps the verdict deterministic
                    std::size_t cur = firstLoss.load();
                    while (i < cur && !firstLoss.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
            checked += local;
        });
    }
    for (auto& th : pool) th.join();
    out.checked = checked.load();
    std::size_t loss = firstLoss.load();
    if (loss < total) {
        out.win = false;
        out.counterexample = lex_coloring(spec.palette, loss);
    } else {
        out.win = true;
    }
    return out;
}

Strategy random_table_strategy(const GameSpec& spec, uint64_t seed, std::size_t max_cells) {
    Rng root(seed);
    Strategy strat;
    for (int v = 0; v < spec.graph.n; ++v) {
        VertexStrategy s;
        s.vertex = v;
        s.coords = spec.graph.adj[v];
        for (int u : s.coords) s.radices.push_back(spec.palette[u]);
        std::size_t cells = view_space(s.radices);
        if (cells > max_cells)
            throw std::runtime_error("random_table_strategy: view space too large at vertex " +
                                     std::to_string(v));
        Rng rng = root.split(uint64_t(v));
        s.table.resize(cells);
        for (std::size_t code = 0; code < cells; ++code)
            s.table[code] = rng.subset(spec.palette[v], spec.guesses);
        strat.at.push_back(std::move(s));
    }
    return strat;
}

}  // namespace hatters
