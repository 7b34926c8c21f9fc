#include "hatters/chromatic.hpp"

#include <algorithm>
#include <numeric>

namespace hatters {

namespace {

struct KSearch {
    const Graph& g;
    std::vector<int> order;   // static, degree descending
    std::vector<int> color;   // by vertex, -1 unassigned
    int k;
    uint64_t nodes = 0, limit;
    bool out_of_budget = false;

    KSearch(const Graph& g, int k, uint64_t limit) : g(g), k(k), limit(limit) {
        order.resize(g.n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        color.assign(g.n, -1);
    }

    bool run(int idx, int used) {
        if (idx == g.n) return true;
        if (++nodes > limit) {
            out_of_budget = true;
            return false;
        }
        int v = order[idx];
        // existing classes plus at most one fresh class breaks class symmetry
        int cap = std::min(k, used + 1);
        for (int c = 0; c < cap; ++c) {
            bool ok = true;
            for (int u : g.adj[v])
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (run(idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

int greedy_clique_size(const Graph& g) {
    std::vector<int> byDeg(g.n);
    std::iota(byDeg.begin(), byDeg.end(), 0);
    std::stable_sort(byDeg.begin(), byDeg.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : byDeg) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return int(clique.size());
}

std::vector<int> greedy_coloring(const Graph& g) {
    std::vector<int> color(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        std::vector<bool> used(g.n + 1, false);
        for (int u : g.adj[v])
            if (color[u] >= 0) used[color[u]] = true;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

std::vector<std::vector<int>> classes_of(const std::vector<int>& color, int k) {
    std::vector<std::vector<int>> cls(k);
    for (int v = 0; v < int(color.size()); ++v) cls[color[v]].push_back(v);
    return cls;
}

}  // namespace

std::optional<bool> colorable_with(const Graph& g, int k, const ColoringBudget& budget) {
    if (g.n == 0) return true;
    if (k <= 0) return false;
    KSearch s(g, k, budget.node_limit);
    bool ok = s.run(0, 0);
    if (!ok && s.out_of_budget) return std::nullopt;
    return ok;
}

ChromaticResult chromatic_number(const Graph& g, const ColoringBudget& budget) {
    ChromaticResult r;
    if (g.n == 0) {
        r.chi = 0;
        return r;
    }
    auto greedy = greedy_coloring(g);
    int ub = 1 + *std::max_element(greedy.begin(), greedy.end());
    int lb = std::max(1, greedy_clique_size(g));
    r.lower = lb;
    r.upper = ub;
    r.classes = classes_of(greedy, ub);

    uint64_t spent = 0;
    for (int k = lb; k < ub; ++k) {
        KSearch s(g, k, budget.node_limit > spent ? budget.node_limit - spent : 0);
        bool ok = s.run(0, 0);
        spent += s.nodes;
        r.nodes = spent;
        if (s.out_of_budget) {
            r.lower = k;  // everything below k was refuted
            return r;
        }
        if (ok) {
            r.upper = k;
            r.classes = classes_of(s.color, k);
            break;
        }
        r.lower = k + 1;
    }
    r.lower = r.upper;
    r.chi = r.upper;
    return r;
}

}  // namespace hatters
