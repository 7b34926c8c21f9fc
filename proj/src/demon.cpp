#include "hatters/demon.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace hatters {

bool Cube::contains(const std::vector<int>& point) const {
    if (point.size() != components.size()) return false;
    for (std::size_t i = 0; i < components.size(); ++i)
        if (std::find(components[i].begin(), components[i].end(), point[i]) ==
            components[i].end())
            return false;
    return true;
}

std::size_t Cube::point_count() const {
    std::size_t s = 1;
    for (const auto& c : components) s *= c.size();
    return s;
}

namespace {

void check_uniform_rule(const VertexStrategy& rule, int k, int s) {
    if (!rule.tabulated())
        throw std::invalid_argument("dominant: rule must be tabulated");
    for (int r : rule.radices)
        if (r != k) throw std::invalid_argument("dominant: all radices must equal num_colors");
    if (s < 1 || s >= k)
        throw std::invalid_argument("dominant: need 1 <= guesses < num_colors");
}

// Covers every hole with per-coordinate deletion sets of size <= s. A cube of
// components [k] minus the deletions then avoids all holes.
bool cover_holes(const std::vector<std::vector<int>>& holes, std::size_t from,
                 std::vector<std::vector<int>>& del, int s) {
    std::size_t i = from;
    while (i < holes.size()) {
        const auto& h = holes[i];
        bool covered = false;
        for (std::size_t c = 0; c < del.size() && !covered; ++c)
            covered = std::find(del[c].begin(), del[c].end(), h[c]) != del[c].end();
        if (!covered) break;
        ++i;
    }
    if (i == holes.size()) return true;
    const auto& h = holes[i];
    for (std::size_t c = 0; c < del.size(); ++c) {
        if (int(del[c].size()) >= s) continue;
        del[c].push_back(h[c]);
        if (cover_holes(holes, i + 1, del, s)) return true;
        del[c].pop_back();
    }
    return false;
}

}  // namespace

std::vector<int> dominant_colors(const VertexStrategy& rule, int num_colors, int guesses) {
    check_uniform_rule(rule, num_colors, guesses);
    std::size_t cells = rule.view_count();
    std::vector<int> out;
    std::vector<std::vector<int>> holes;
    for (int d = 0; d < num_colors; ++d) {
        holes.clear();
        for (std::size_t code = 0; code < cells; ++code)
            if (!guess_contains(rule.table[code], d))
                holes.push_back(decode_view(rule.radices, code));
        std::vector<std::vector<int>> del(rule.coords.size());
        if (cover_holes(holes, 0, del, guesses)) out.push_back(d);
    }
    return out;
}

std::vector<int> dominant_colors_enumerated(const VertexStrategy& rule, int num_colors,
                                            int guesses) {
    check_uniform_rule(rule, num_colors, guesses);
    int k = num_colors, s = guesses, t = int(rule.coords.size());
    // all (k-s)-subsets of the palette
    std::vector<std::vector<int>> comps;
    std::vector<int> pick(k - s);
    std::function<void(int, int)> gen = [&](int start, int slot) {
        if (slot == k - s) {
            comps.push_back(pick);
            return;
        }
        for (int c = start; c < k; ++c) {
            pick[slot] = c;
            gen(c + 1, slot + 1);
        }
    };
    gen(0, 0);
    double work = 1;
    for (int i = 0; i < t; ++i) work *= double(comps.size());
    if (work > 5e7) throw std::runtime_error("dominant enumeration too large");

    std::vector<int> out;
    for (int d = 0; d < num_colors; ++d) {
        std::vector<int> choice(t, 0);
        bool found = false;
        while (!found) {
            Cube cube;
            for (int i = 0; i < t; ++i) cube.components.push_back(comps[choice[i]]);
            // test every cube point
            std::vector<int> idx(t, 0), point(t);
            bool all = true;
            while (true) {
                for (int i = 0; i < t; ++i) point[i] = cube.components[i][idx[i]];
                if (!guess_contains(rule.table[encode_view(rule.radices, point)], d)) {
                    all = false;
                    break;
                }
                int i = 0;
                while (i < t && ++idx[i] == int(cube.components[i].size())) idx[i++] = 0;
                if (i == t) break;
            }
            if (all) found = true;
            int i = 0;
            while (i < t && ++choice[i] == int(comps.size())) choice[i++] = 0;
            if (i == t) break;
        }
        // t == 0: the empty cube has the single empty point
        if (t == 0) found = guess_contains(rule.table[0], d);
        if (found) out.push_back(d);
    }
    return out;
}

RootedTree root_tree(const Graph& tree, int root) {
    if (!is_tree(tree)) throw std::invalid_argument("root_tree: input is not a tree");
    if (root < 0 || root >= tree.n) throw std::invalid_argument("root_tree: root out of range");
    RootedTree rt;
    rt.root = root;
    rt.parent.assign(tree.n, -1);
    rt.children.assign(tree.n, {});
    std::vector<int> stack{root};
    std::vector<bool> seen(tree.n, false);
    seen[root] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : tree.adj[v])
            if (!seen[u]) {
                seen[u] = true;
                rt.parent[u] = v;
                rt.children[v].push_back(u);
                stack.push_back(u);
            }
    }
    for (auto& kids : rt.children) std::sort(kids.begin(), kids.end());
    return rt;
}

namespace {

std::vector<int> pad_to_size(std::vector<int> set, int size, int num_colors) {
    std::sort(set.begin(), set.end());
    for (int c = 0; c < num_colors && int(set.size()) < size; ++c)
        if (!std::binary_search(set.begin(), set.end(), c)) {
            set.push_back(c);
            std::sort(set.begin(), set.end());
        }
    if (int(set.size()) != size)
        throw std::runtime_error("pad_to_size: palette too small");
    return set;
}

void tree_demon_rec(const RootedTree& rt, const Strategy& strat, int k, int s, int vertex,
                    const VertexStrategy& rule, int target, Coloring& out) {
    out[vertex] = target;
    const auto& kids = rt.children[vertex];
    if (kids.empty()) return;

    std::vector<VertexStrategy> restricted;
    std::vector<std::vector<int>> allowed;  // per child, colors outside the padded dominant set
    for (int c : kids) {
        VertexStrategy rc = tabulate(restrict_strategy(strat.at[c], {{vertex, target}}));
        auto dom = pad_to_size(dominant_colors(rc, k, s), s, k);
        std::vector<int> a;
        for (int color = 0; color < k; ++color)
            if (!std::binary_search(dom.begin(), dom.end(), color)) a.push_back(color);
        restricted.push_back(std::move(rc));
        allowed.push_back(std::move(a));
    }

    // lexicographically first point of the child cube the vertex rule misses
    int t = int(kids.size());
    std::vector<int> idx(t, 0), point(t);
    bool found = false;
    while (true) {
        for (int i = 0; i < t; ++i) point[i] = allowed[i][idx[i]];
        if (!guess_contains(rule(point), target)) {
            found = true;
            break;
        }
        int i = t - 1;  // advance most significant last for lexicographic order
        while (i >= 0 && ++idx[i] == int(allowed[i].size())) idx[i--] = 0;
        if (i < 0) break;
    }
    if (!found)
        throw std::logic_error("tree_demonic: target color turned out dominant");
    for (int i = 0; i < t; ++i)
        tree_demon_rec(rt, strat, k, s, kids[i], restricted[i], point[i], out);
}

void check_tree_strategy(const Graph& tree, const Strategy& strat) {
    if (int(strat.at.size()) != tree.n)
        throw std::invalid_argument("tree_demonic: one rule per vertex required");
    for (int v = 0; v < tree.n; ++v)
        if (strat.at[v].coords != tree.adj[v])
            throw std::invalid_argument("tree_demonic: rules must observe exactly the neighbors");
}

}  // namespace

Coloring tree_demonic(const Graph& tree, int root, const Strategy& strat, int num_colors,
                      int guesses, int root_color) {
    RootedTree rt = root_tree(tree, root);
    check_tree_strategy(tree, strat);
    if (num_colors <= guesses * (guesses + 1))
        throw std::invalid_argument("tree_demonic: need num_colors > guesses*(guesses+1)");
    if (root_color < 0 || root_color >= num_colors)
        throw std::invalid_argument("tree_demonic: root color out of range");
    VertexStrategy rootRule = tabulate(strat.at[root]);
    auto dom = dominant_colors(rootRule, num_colors, guesses);
    if (std::binary_search(dom.begin(), dom.end(), root_color))
        throw std::invalid_argument("tree_demonic: root color is dominant for the root rule");
    Coloring out(tree.n, -1);
    tree_demon_rec(rt, strat, num_colors, guesses, root, rootRule, root_color, out);
    return out;
}

Coloring tree_demonic_auto(const Graph& tree, const Strategy& strat, int num_colors,
                           int guesses) {
    RootedTree rt = root_tree(tree, 0);
    (void)rt;
    VertexStrategy rootRule = tabulate(strat.at[0]);
    auto dom = dominant_colors(rootRule, num_colors, guesses);
    for (int c = 0; c < num_colors; ++c)
        if (!std::binary_search(dom.begin(), dom.end(), c))
            return tree_demonic(tree, 0, strat, num_colors, guesses, c);
    throw std::runtime_error("tree_demonic_auto: every color dominant at the root");
}

Coloring independent_set_demon(const Graph& g, const Strategy& strat, int num_colors,
                               int guesses) {
    (void)guesses;
    if (g.edge_count() != 0)
        throw std::invalid_argument("independent_set_demon: graph must be edgeless");
    Coloring c(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (!strat.at[v].coords.empty())
            throw std::invalid_argument("independent_set_demon: rules must be constant");
        GuessSet guessed = strat.at[v](std::vector<int>{});
        int pick = -1;
        for (int color = 0; color < num_colors; ++color)
            if (!guess_contains(guessed, color)) {
                pick = color;
                break;
            }
        if (pick < 0)
            throw std::runtime_error("independent_set_demon: guesses cover the whole palette");
        c[v] = pick;
    }
    return c;
}

SubDemon make_independent_subdemon() {
    return [](const Graph& g, const Strategy& s, int k, int guesses) {
        return independent_set_demon(g, s, k, guesses);
    };
}

SubDemon make_tree_subdemon() {
    return [](const Graph& g, const Strategy& s, int k, int guesses) {
        return tree_demonic_auto(g, s, k, guesses);
    };
}

Coloring partition_demonic(const Graph& g, const std::vector<int>& part_a,
                           const std::vector<int>& part_b, const Strategy& strat,
                           int num_colors, int guesses, int part_a_colors,
                           const SubDemon& demon_a, const SubDemon& demon_b) {
    int K = num_colors, s = guesses, K1 = part_a_colors;
    std::vector<int> side(g.n, -1);
    for (int v : part_a) side.at(v) = 0;
    for (int v : part_b) {
        if (side.at(v) == 0) throw std::invalid_argument("partition: parts overlap");
        side[v] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (side[v] < 0) throw std::invalid_argument("partition: parts must cover the graph");
    if (s < 1 || K1 <= s || K <= K1)
        throw std::invalid_argument("partition: need guesses < part_a_colors < num_colors");
    if (int(strat.at.size()) != g.n)
        throw std::invalid_argument("partition: one rule per vertex required");

    int d = 0;
    for (int v : part_b) {
        int cnt = 0;
        for (int u : g.adj[v]) cnt += side[u] == 0;
        d = std::max(d, cnt);
    }
    long long s1 = s;
    for (int i = 0; i < d; ++i) {
        s1 *= K1;
        if (s1 >= K) break;
    }
    if (s1 >= K)
        throw std::invalid_argument("partition: absorbed guess budget s*K1^d must stay below "
                                    "num_colors");

    auto subB = induced_subgraph(g, part_b);
    Strategy fb;
    for (int i = 0; i < subB.graph.n; ++i) {
        int v = subB.to_full[i];
        std::vector<std::size_t> aPos, bPos;
        const auto& coords = strat.at[v].coords;
        if (coords != g.adj[v])
            throw std::invalid_argument("partition: rules must observe exactly the neighbors");
        for (std::size_t j = 0; j < coords.size(); ++j)
            (side[coords[j]] == 0 ? aPos : bPos).push_back(j);
        VertexStrategy s2;
        s2.vertex = i;
        for (auto j : bPos) {
            s2.coords.push_back(subB.to_sub[coords[j]]);
            s2.radices.push_back(K);
        }
        std::size_t cells = view_space(s2.radices);
        s2.table.resize(cells);
        std::vector<int> aRad(aPos.size(), K1);
        std::size_t aCells = view_space(aRad);
        std::vector<int> full(coords.size());
        for (std::size_t code = 0; code < cells; ++code) {
            auto y = decode_view(s2.radices, code);
            for (std::size_t j = 0; j < bPos.size(); ++j) full[bPos[j]] = y[j];
            std::vector<int> uni;
            for (std::size_t ax = 0; ax < aCells; ++ax) {
                auto x = decode_view(aRad, ax);
                for (std::size_t j = 0; j < aPos.size(); ++j) full[aPos[j]] = x[j];
                for (int color : strat.at[v](full)) uni.push_back(color);
            }
            std::sort(uni.begin(), uni.end());
            uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
            s2.table[code] = pad_to_size(std::move(uni), int(s1), K);
        }
        fb.at.push_back(std::move(s2));
    }
    Coloring colB = demon_b(subB.graph, fb, K, int(s1));
    if (int(colB.size()) != subB.graph.n)
        throw std::runtime_error("partition: B-side demon returned a bad coloring");

    auto subA = induced_subgraph(g, part_a);
    Strategy fa;
    for (int i = 0; i < subA.graph.n; ++i) {
        int v = subA.to_full[i];
        std::vector<std::size_t> aPos, bPos;
        const auto& coords = strat.at[v].coords;
        for (std::size_t j = 0; j < coords.size(); ++j)
            (side[coords[j]] == 0 ? aPos : bPos).push_back(j);
        VertexStrategy s2;
        s2.vertex = i;
        for (auto j : aPos) {
            s2.coords.push_back(subA.to_sub[coords[j]]);
            s2.radices.push_back(K1);
        }
        std::size_t cells = view_space(s2.radices);
        s2.table.resize(cells);
        std::vector<int> full(coords.size());
        for (std::size_t j = 0; j < bPos.size(); ++j)
            full[bPos[j]] = colB[subB.to_sub[coords[bPos[j]]]];
        for (std::size_t code = 0; code < cells; ++code) {
            auto x = decode_view(s2.radices, code);
            for (std::size_t j = 0; j < aPos.size(); ++j) full[aPos[j]] = x[j];
            std::vector<int> cut;
            for (int color : strat.at[v](full))
                if (color < K1) cut.push_back(color);
            s2.table[code] = pad_to_size(std::move(cut), s, K1);
        }
        fa.at.push_back(std::move(s2));
    }
    Coloring colA = demon_a(subA.graph, fa, K1, s);
    if (int(colA.size()) != subA.graph.n)
        throw std::runtime_error("partition: A-side demon returned a bad coloring");

    Coloring out(g.n, -1);
    for (int i = 0; i < subB.graph.n; ++i) out[subB.to_full[i]] = colB[i];
    for (int i = 0; i < subA.graph.n; ++i) out[subA.to_full[i]] = colA[i];
    return out;
}

namespace {

uint64_t bit(int c) { return uint64_t(1) << c; }

// union of single guesses over assignments of the free coordinates; `fixed`
// holds -1 for free slots
uint64_t image_mask(const VertexStrategy& rule, std::vector<int>& fixed, uint64_t fullMask) {
    std::vector<std::size_t> freeIdx;
    for (std::size_t i = 0; i < fixed.size(); ++i)
        if (fixed[i] < 0) freeIdx.push_back(i);
    uint64_t mask = 0;
    std::vector<int> idx(freeIdx.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < freeIdx.size(); ++i) fixed[freeIdx[i]] = idx[i];
        GuessSet gs = rule.tabulated() ? rule.table[encode_view(rule.radices, fixed)]
                                       : rule.rule(fixed);
        for (int color : gs) mask |= bit(color);
        if (mask == fullMask) break;
        std::size_t i = 0;
        while (i < freeIdx.size() && ++idx[i] == rule.radices[freeIdx[i]]) idx[i++] = 0;
        if (i == freeIdx.size()) break;
    }
    for (std::size_t i : freeIdx) fixed[i] = -1;
    return mask;
}

int single_color_of(const GuessSet& g) {
    if (g.size() != 1)
        throw std::invalid_argument("bi-polar analysis needs single-guess strategies");
    return g[0];
}

}  // namespace

bool is_bipolar(const VertexStrategy& ruleIn, const std::vector<int>& order,
                const GameSpec& spec, bool strict) {
    int n = spec.graph.n;
    if (int(order.size()) != n) throw std::invalid_argument("is_bipolar: bad order length");
    std::vector<int> pos(n, -1);
    for (int j = 0; j < n; ++j) {
        if (order[j] < 0 || order[j] >= n || pos[order[j]] != -1)
            throw std::invalid_argument("is_bipolar: order must be a permutation");
        pos[order[j]] = j;
    }
    int K = spec.palette.empty() ? 0 : spec.palette[0];
    for (int a : spec.palette)
        if (a != K) throw std::invalid_argument("is_bipolar: uniform palette required");
    if (K < 1 || K > 63) throw std::invalid_argument("is_bipolar: palette size out of range");

    VertexStrategy rule = tabulate(ruleIn);
    for (const auto& g : rule.table) (void)single_color_of(g);
    const uint64_t fullMask = (uint64_t(1) << K) - 1;
    int pv = pos[rule.vertex];
    std::size_t t = rule.coords.size();

    for (int j = strict ? 0 : pv + 1; j < n; ++j) {
        int vj = order[j];
        std::vector<std::size_t> fixedIdx;
        int xjIdx = -1;
        for (std::size_t i = 0; i < t; ++i) {
            int u = rule.coords[i];
            if (u == vj)
                xjIdx = int(i);
            else if (pos[u] < j)
                fixedIdx.push_back(i);
        }
        std::vector<int> fixedRad;
        for (auto i : fixedIdx) fixedRad.push_back(rule.radices[i]);
        std::size_t keys = view_space(fixedRad);
        int slots = xjIdx >= 0 ? K : 1;
        std::vector<uint64_t> masks(keys * std::size_t(slots), 0);
        for (std::size_t code = 0; code < rule.table.size(); ++code) {
            auto view = decode_view(rule.radices, code);
            std::vector<int> keyView;
            for (auto i : fixedIdx) keyView.push_back(view[i]);
            std::size_t key = encode_view(fixedRad, keyView);
            int slot = xjIdx >= 0 ? view[std::size_t(xjIdx)] : 0;
            masks[key * std::size_t(slots) + std::size_t(slot)] |=
                bit(single_color_of(rule.table[code]));
        }
        for (std::size_t key = 0; key < keys; ++key) {
            uint64_t unionAll = 0;
            for (int slot = 0; slot < slots; ++slot)
                unionAll |= masks[key * std::size_t(slots) + std::size_t(slot)];
            std::vector<int> forcers(K, 0);
            for (int slot = 0; slot < slots; ++slot) {
                uint64_t m = masks[key * std::size_t(slots) + std::size_t(slot)];
                if (m != fullMask && __builtin_popcountll(m) != 1) return false;
                if (xjIdx >= 0 && __builtin_popcountll(m) == 1)
                    forcers[__builtin_ctzll(m)]++;
            }
            if (xjIdx >= 0) {
                for (int y = 0; y < K; ++y) {
                    if (forcers[y] < 2) continue;
                    if (strict) return false;
                    // exempt when the image is that singleton before x_j is fixed
                    if (unionAll != bit(y)) return false;
                }
            }
        }
    }
    return true;
}

Coloring bipolar_demonic(const Graph& g, const std::vector<int>& order, const Strategy& stratIn,
                         int num_colors) {
    int n = g.n, K = num_colors;
    if (int(order.size()) != n) throw std::invalid_argument("bipolar_demonic: bad order length");
    if (K < 1 || K > 63) throw std::invalid_argument("bipolar_demonic: palette size out of range");
    std::vector<int> pos(n, -1);
    for (int j = 0; j < n; ++j) pos[order[j]] = j;
    int maxBack = 0;
    for (int v = 0; v < n; ++v) {
        int b = 0;
        for (int u : g.adj[v]) b += pos[u] < pos[v];
        maxBack = std::max(maxBack, b);
    }
    if (K <= maxBack + 1)
        throw std::invalid_argument(
            "bipolar_demonic: need num_colors above the realized coloring number");

    std::vector<VertexStrategy> rules;
    for (int v = 0; v < n; ++v) rules.push_back(tabulate(stratIn.at[v]));
    const uint64_t fullMask = (uint64_t(1) << K) - 1;

    Coloring c(n, -1);
    for (int j = 0; j < n; ++j) {
        int v = order[j];
        uint64_t forbidden = 0;
        {
            std::vector<int> fixed(rules[v].coords.size(), -1);
            for (std::size_t i = 0; i < rules[v].coords.size(); ++i)
                if (c[rules[v].coords[i]] >= 0) fixed[i] = c[rules[v].coords[i]];
            uint64_t own = image_mask(rules[v], fixed, fullMask);
            if (__builtin_popcountll(own) == 1) forbidden |= own;
        }
        for (int u : g.adj[v]) {
            if (c[u] < 0) continue;
            const auto& ru = rules[u];
            std::vector<int> fixed(ru.coords.size(), -1);
            int vSlot = -1;
            for (std::size_t i = 0; i < ru.coords.size(); ++i) {
                if (ru.coords[i] == v)
                    vSlot = int(i);
                else if (c[ru.coords[i]] >= 0)
                    fixed[i] = c[ru.coords[i]];
            }
            for (int cand = 0; cand < K; ++cand) {
                fixed[vSlot] = cand;
                if (image_mask(ru, fixed, fullMask) == bit(c[u])) forbidden |= bit(cand);
                fixed[vSlot] = -1;
            }
        }
        int pick = -1;
        for (int color = 0; color < K && pick < 0; ++color)
            if (!(forbidden & bit(color))) pick = color;
        if (pick < 0)
            throw std::runtime_error(
                "bipolar_demonic: no legal color, strategies are not bi-polar for this order");
        c[v] = pick;
    }
    return c;
}

namespace {

Coloring lex_coloring(const std::vector<int>& palette, std::size_t index) {
    int n = int(palette.size());
    Coloring c(n);
    for (int v = n - 1; v >= 0; --v) {
        c[v] = int(index % std::size_t(palette[v]));
        index /= std::size_t(palette[v]);
    }
    return c;
}

}  // namespace

std::optional<Coloring> exhaustive_demonic_search(const GameSpec& spec, const Strategy& strat,
                                                  const SearchBudget& budget) {
    if (spec.admissible) {
        std::optional<Coloring> best;
        for (const auto& c : *spec.admissible)
            if (is_demonic(spec, strat, c) &&
                (!best || std::lexicographical_compare(c.begin(), c.end(), best->begin(),
                                                       best->end())))
                best = c;
        return best;
    }
    std::size_t total = spec.universe_size();
    if (total > budget.node_limit)
        throw std::runtime_error("exhaustive search: refusing to scan " + std::to_string(total) +
                                 " colorings (budget " + std::to_string(budget.node_limit) + ")");
    int threads = std::max(1, std::min(budget.threads, 64));
    if (threads == 1 || total < 4096) {
        for (std::size_t i = 0; i < total; ++i) {
            Coloring c = lex_coloring(spec.palette, i);
            if (is_demonic(spec, strat, c)) return c;
        }
        return std::nullopt;
    }
    std::atomic<std::size_t> first{total};
    std::vector<std::thread> pool;
    std::size_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            std::size_t lo = std::size_t(t) * chunk, hi = std::min(total, lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) {
                if (i >= first.load(std::memory_order_relaxed)) break;
                if (is_demonic(spec, strat, lex_coloring(spec.palette, i))) {
                    std::size_t cur = first.load();
                    while (i < cur && !first.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    std::size_t got = first.load();
    if (got < total) return lex_coloring(spec.palette, got);
    return std::nullopt;
}

}  // namespace hatters
