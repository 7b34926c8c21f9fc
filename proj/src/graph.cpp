#include "hatters/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hatters/rng.hpp"

namespace hatters {

Graph Graph::empty(int n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = empty(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: loop rejected");
        auto e = std::minmax(u, v);
        if (!seen.insert({e.first, e.second}).second)
            throw std::invalid_argument("graph: duplicate edge rejected");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t s = 0;
    for (auto& a : adj) s += a.size();
    return s / 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) es.push_back({u, v});
    std::sort(es.begin(), es.end());
    return es;
}

int VertexOrder::coloring_number() const {
    int m = 0;
    for (int b : back_degree) m = std::max(m, b);
    return m + 1;
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph::from_edges(n, es);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) es.push_back({v, (v + 1) % n});
    return Graph::from_edges(n, es);
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    return Graph::from_edges(n, es);
}

Graph make_complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back({u, a + v});
    return Graph::from_edges(a + b, es);
}

Graph prufer_decode(const std::vector<int>& seq, int n) {
    if (n <= 0) throw std::invalid_argument("prufer: need n >= 1");
    if (n <= 2) {
        if (!seq.empty()) throw std::invalid_argument("prufer: sequence must be empty for n <= 2");
        return n == 2 ? Graph::from_edges(2, {{0, 1}}) : Graph::empty(1);
    }
    if (int(seq.size()) != n - 2) throw std::invalid_argument("prufer: bad sequence length");
    std::vector<int> deg(n, 1);
    for (int x : seq) {
        if (x < 0 || x >= n) throw std::invalid_argument("prufer: value out of range");
        deg[x]++;
    }
    std::vector<std::pair<int, int>> es;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        es.push_back({leaf, x});
        if (--deg[x] == 1) leaves.insert(x);
    }
    int u = *leaves.begin(), v = *std::next(leaves.begin());
    es.push_back({u, v});
    return Graph::from_edges(n, es);
}

Graph make_tree_random(int n, uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("tree: need n >= 1");
    Rng rng(seed);
    std::vector<int> seq;
    for (int i = 0; i < n - 2; ++i) seq.push_back(rng.uniform_int(0, n - 1));
    return prufer_decode(seq, n);
}

KStarGraph make_kstar(int k, int n) {
    if (k < 1 || n < 0) throw std::invalid_argument("kstar: need k >= 1, n >= 0");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) es.push_back({u, v});
    for (int l = 0; l < n; ++l)
        for (int u = 0; u < k; ++u) es.push_back({u, k + l});
    KStarGraph r;
    r.graph = Graph::from_edges(k + n, es);
    for (int u = 0; u < k; ++u) r.clique_part.push_back(u);
    for (int l = 0; l < n; ++l) r.leaf_part.push_back(k + l);
    return r;
}

SubdivisionResult subdivide(const Graph& g) {
    auto es = g.edges();
    int n2 = g.n + int(es.size());
    std::vector<std::pair<int, int>> out;
    int w = g.n;
    for (auto [u, v] : es) {
        out.push_back({u, w});
        out.push_back({v, w});
        ++w;
    }
    SubdivisionResult r;
    r.graph = Graph::from_edges(n2, out);
    for (int v = 0; v < g.n; ++v) r.original_part.push_back(v);
    for (int v = g.n; v < n2; ++v) r.subdivision_part.push_back(v);
    return r;
}

VertexOrder degeneracy_order(const Graph& g) {
    int n = g.n;
    std::vector<int> deg(n), removal;
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
        gone[best] = true;
        removal.push_back(best);
        for (int u : g.adj[best])
            if (!gone[u]) deg[u]--;
    }
    VertexOrder ord;
    ord.order.assign(removal.rbegin(), removal.rend());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ord.order[i]] = i;
    ord.back_degree.assign(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.adj[v])
            if (pos[u] < pos[v]) ord.back_degree[v]++;
    return ord;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    InducedSubgraph r;
    r.to_full = vertices;
    std::sort(r.to_full.begin(), r.to_full.end());
    if (std::adjacent_find(r.to_full.begin(), r.to_full.end()) != r.to_full.end())
        throw std::invalid_argument("induced_subgraph: duplicate vertex");
    r.to_sub.assign(g.n, -1);
    for (int i = 0; i < int(r.to_full.size()); ++i) {
        int v = r.to_full[i];
        if (v < 0 || v >= g.n) throw std::invalid_argument("induced_subgraph: vertex out of range");
        r.to_sub[v] = i;
    }
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < int(r.to_full.size()); ++i)
        for (int u : g.adj[r.to_full[i]])
            if (r.to_sub[u] > i) es.push_back({i, r.to_sub[u]});
    r.graph = Graph::from_edges(int(r.to_full.size()), es);
    return r;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    std::vector<bool> seen(g.n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[v])
            if (!seen[u]) {
                seen[u] = true;
                ++cnt;
                stack.push_back(u);
            }
    }
    return cnt == g.n;
}

bool is_tree(const Graph& g) {
    return g.n >= 1 && g.edge_count() == std::size_t(g.n - 1) && is_connected(g);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    std::vector<int> side(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.adj[v]) {
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < g.n; ++v) (side[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

namespace {

std::string ahu_encode(const Graph& t, int v, int parent) {
    std::vector<std::string> subs;
    for (int u : t.adj[v])
        if (u != parent) subs.push_back(ahu_encode(t, u, v));
    std::sort(subs.begin(), subs.end());
    std::string s = "(";
    for (auto& x : subs) s += x;
    s += ")";
    return s;
}

std::vector<int> tree_centers(const Graph& t) {
    int n = t.n;
    if (n == 1) return {0};
    std::vector<int> deg(n), layer;
    int removed = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    std::vector<int> cur = layer;
    while (removed + int(cur.size()) < n) {
        removed += int(cur.size());
        std::vector<int> next;
        for (int v : cur)
            for (int u : t.adj[v])
                if (--deg[u] == 1) next.push_back(u);
        cur = next;
    }
    return cur;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
    auto centers = tree_centers(tree);
    std::string best;
    for (int c : centers) {
        std::string s = ahu_encode(tree, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

std::vector<Graph> all_trees(int n) {
    if (n <= 0) throw std::invalid_argument("all_trees: need n >= 1");
    std::vector<Graph> out;
    if (n <= 2) {
        out.push_back(prufer_decode({}, n));
        return out;
    }
    std::set<std::string> seen;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        Graph t = prufer_decode(seq, n);
        auto canon = tree_canonical_form(t);
        if (seen.insert(canon).second) out.push_back(t);
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        seq[i]++;
    }
    return out;
}

namespace {

// canonical edge set under vertex permutations; fine for n <= 6
std::string graph_canonical_form(const Graph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    auto es = g.edges();
    std::string best;
    do {
        std::vector<std::pair<int, int>> mapped;
        for (auto [u, v] : es) {
            auto e = std::minmax(perm[u], perm[v]);
            mapped.push_back({e.first, e.second});
        }
        std::sort(mapped.begin(), mapped.end());
        std::string s;
        for (auto [u, v] : mapped) {
            s += char('a' + u);
            s += char('a' + v);
        }
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(g.n) + ":" + best;
}

}  // namespace

std::vector<Graph> connected_graphs_upto(int max_n) {
    if (max_n < 1 || max_n > 6) throw std::invalid_argument("connected_graphs_upto: max_n in 1..6");
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.push_back({u, v});
        std::set<std::string> seen;
        for (uint64_t mask = 0; mask < (uint64_t(1) << all.size()); ++mask) {
            std::vector<std::pair<int, int>> es;
            for (std::size_t i = 0; i < all.size(); ++i)
                if (mask >> i & 1) es.push_back(all[i]);
            Graph g = Graph::from_edges(n, es);
            if (!is_connected(g)) continue;
            if (seen.insert(graph_canonical_form(g)).second) out.push_back(g);
        }
    }
    return out;
}

}  // namespace hatters
