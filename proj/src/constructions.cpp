#include "hatters/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hatters {

Strategy clique_sum_strategy(int n, int num_colors) {
    if (n < 1) throw std::invalid_argument("clique_sum: need n >= 1");
    int K = num_colors < 0 ? n : num_colors;
    if (K < 1) throw std::invalid_argument("clique_sum: need num_colors >= 1");
    Strategy strat;
    for (int i = 0; i < n; ++i) {
        VertexStrategy s;
        s.vertex = i;
        for (int j = 0; j < n; ++j)
            if (j != i) {
                s.coords.push_back(j);
                s.radices.push_back(K);
            }
        std::size_t cells = view_space(s.radices);
        if (cells > (std::size_t(1) << 24))
            throw std::runtime_error("clique_sum: view space too large");
        s.table.resize(cells);
        for (std::size_t code = 0; code < cells; ++code) {
            auto view = decode_view(s.radices, code);
            long long sum = 0;
            for (int x : view) sum += x;
            int g = int(((i - sum) % K + K) % K);
            s.table[code] = {g};
        }
        strat.at.push_back(std::move(s));
    }
    return strat;
}

namespace {

constexpr std::size_t kTableCap = std::size_t(1) << 22;

// doubles the radix of coordinate `w` in-place semantics: the rebuilt rule
// reads floor(x_w / 2)
VertexStrategy double_observed(const VertexStrategy& f, int w) {
    auto it = std::find(f.coords.begin(), f.coords.end(), w);
    std::size_t pos = std::size_t(it - f.coords.begin());
    VertexStrategy out;
    out.vertex = f.vertex;
    out.coords = f.coords;
    out.radices = f.radices;
    out.radices[pos] *= 2;
    std::size_t cells = view_space(out.radices);
    if (cells > kTableCap) throw std::runtime_error("tree_power: view space too large");
    out.table.resize(cells);
    for (std::size_t code = 0; code < cells; ++code) {
        auto view = decode_view(out.radices, code);
        view[pos] /= 2;
        out.table[code] = f.table[encode_view(f.radices, view)];
    }
    return out;
}

// adds leaf coordinate `v` (radix 2) to the neighbor rule and doubles its own
// palette: answer 2*d + x_v
VertexStrategy lift_neighbor(const VertexStrategy& f, int v) {
    VertexStrategy out;
    out.vertex = f.vertex;
    out.coords = f.coords;
    out.radices = f.radices;
    auto ins = std::lower_bound(out.coords.begin(), out.coords.end(), v);
    std::size_t pos = std::size_t(ins - out.coords.begin());
    out.coords.insert(ins, v);
    out.radices.insert(out.radices.begin() + pos, 2);
    std::size_t cells = view_space(out.radices);
    if (cells > kTableCap) throw std::runtime_error("tree_power: view space too large");
    out.table.resize(cells);
    for (std::size_t code = 0; code < cells; ++code) {
        auto view = decode_view(out.radices, code);
        int xv = view[pos];
        view.erase(view.begin() + pos);
        const GuessSet& old = f.table[encode_view(f.radices, view)];
        out.table[code] = {2 * old[0] + xv};
    }
    return out;
}

}  // namespace

TreePowerResult tree_power_strategy(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_power: input is not a tree");
    int n = t.n;
    std::vector<bool> alive(n, true);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<std::pair<int, int>> elim;  // (leaf, its neighbor), removal order
    for (int step = 0; step + 1 < n; ++step) {
        int leaf = -1;
        for (int v = n - 1; v >= 0; --v)
            if (alive[v] && deg[v] <= 1) {
                leaf = v;
                break;
            }
        int w = -1;
        for (int u : t.adj[leaf])
            if (alive[u]) w = u;
        elim.push_back({leaf, w});
        alive[leaf] = false;
        --deg[w];
    }
    int root = -1;
    for (int v = 0; v < n; ++v)
        if (alive[v]) root = v;

    std::vector<VertexStrategy> F(n);
    std::vector<int> pal(n, 0);
    std::vector<std::vector<int>> cur(n);  // adjacency of the grown tree
    pal[root] = 1;
    F[root] = make_constant_strategy(root, {0});

    for (auto it = elim.rbegin(); it != elim.rend(); ++it) {
        auto [v, w] = *it;
        for (int u : cur[w]) F[u] = double_observed(F[u], w);
        F[w] = lift_neighbor(F[w], v);
        pal[w] *= 2;
        pal[v] = 2;
        VertexStrategy fv;
        fv.vertex = v;
        fv.coords = {w};
        fv.radices = {pal[w]};
        fv.table.resize(pal[w]);
        for (int x = 0; x < pal[w]; ++x) fv.table[x] = {1 - (x & 1)};
        F[v] = std::move(fv);
        cur[v].push_back(w);
        cur[w].push_back(v);
    }

    TreePowerResult r;
    r.palette = pal;
    r.strategy.at = std::move(F);
    return r;
}

namespace {

Strategy kn_admissible_build(int n, int K, const std::vector<Coloring>& A) {
    Strategy strat;
    if (n == 1) {
        int g = A.empty() ? 0 : A[0][0];
        strat.at.push_back(make_constant_strategy(0, {g}));
        return strat;
    }
    std::map<Coloring, std::vector<int>> byPrefix;
    for (const auto& c : A)
        byPrefix[Coloring(c.begin(), c.end() - 1)].push_back(c.back());
    std::vector<Coloring> B;
    std::vector<int> prefRad(n - 1, K);
    std::map<std::size_t, int> uniqueExt;
    for (const auto& [p, exts] : byPrefix) {
        if (exts.size() >= 2)
            B.push_back(p);
        else
            uniqueExt[encode_view(prefRad, p)] = exts[0];
    }
    Strategy sub = kn_admissible_build(n - 1, K, B);

    std::size_t subCells = view_space(std::vector<int>(n - 2, K));
    for (int i = 0; i < n - 1; ++i) {
        VertexStrategy s;
        s.vertex = i;
        for (int j = 0; j < n; ++j)
            if (j != i) {
                s.coords.push_back(j);
                s.radices.push_back(K);
            }
        std::size_t cells = view_space(s.radices);
        s.table.resize(cells);
        // vertex n-1 is the last coordinate, hence the most significant digit
        for (std::size_t code = 0; code < cells; ++code)
            s.table[code] = sub.at[i].table[code % subCells];
        strat.at.push_back(std::move(s));
    }
    VertexStrategy last;
    last.vertex = n - 1;
    last.coords.resize(n - 1);
    for (int j = 0; j < n - 1; ++j) last.coords[j] = j;
    last.radices.assign(n - 1, K);
    std::size_t cells = view_space(last.radices);
    last.table.resize(cells);
    for (std::size_t code = 0; code < cells; ++code) {
        auto it = uniqueExt.find(code);
        last.table[code] = {it == uniqueExt.end() ? 0 : it->second};
    }
    strat.at.push_back(std::move(last));
    return strat;
}

}  // namespace

Strategy kn_admissible_strategy(int n, int num_colors, const std::vector<Coloring>& admissible) {
    if (n < 1) throw std::invalid_argument("kn_admissible: need n >= 1");
    if (num_colors < 1) throw std::invalid_argument("kn_admissible: need num_colors >= 1");
    if (n >= 40 || admissible.size() > (std::size_t(1) << n) - 1)
        throw std::invalid_argument("kn_admissible: admissible set larger than 2^n - 1");
    std::set<Coloring> seen;
    for (const auto& c : admissible) {
        if (int(c.size()) != n)
            throw std::invalid_argument("kn_admissible: coloring has wrong length");
        for (int x : c)
            if (x < 0 || x >= num_colors)
                throw std::invalid_argument("kn_admissible: color out of range");
        if (!seen.insert(c).second)
            throw std::invalid_argument("kn_admissible: duplicate coloring");
    }
    std::vector<Coloring> A(seen.begin(), seen.end());
    std::size_t cells = view_space(std::vector<int>(n - 1, num_colors));
    if (cells > kTableCap) throw std::runtime_error("kn_admissible: view space too large");
    return kn_admissible_build(n, num_colors, A);
}

uint64_t subset_count(uint64_t universe, int m) {
    if (m < 0) throw std::invalid_argument("subset_count: negative size");
    if (uint64_t(m) > universe) return 0;
    if (uint64_t(m) > universe - uint64_t(m)) m = int(universe - uint64_t(m));
    unsigned __int128 acc = 1;
    for (int i = 1; i <= m; ++i) {
        acc = acc * (universe - uint64_t(m) + uint64_t(i));
        acc /= uint64_t(i);
        if (acc > (unsigned __int128)UINT64_MAX)
            throw std::overflow_error("subset_count: overflow");
    }
    return uint64_t(acc);
}

std::vector<int> unrank_subset(uint64_t universe, int m, uint64_t rank) {
    if (rank >= subset_count(universe, m))
        throw std::invalid_argument("unrank_subset: rank out of range");
    std::vector<int> out;
    uint64_t x = 0;
    for (int slot = 0; slot < m; ++slot) {
        while (true) {
            uint64_t below = subset_count(universe - x - 1, m - slot - 1);
            if (rank < below) {
                out.push_back(int(x));
                ++x;
                break;
            }
            rank -= below;
            ++x;
        }
    }
    return out;
}

namespace {

std::shared_ptr<std::vector<std::vector<int>>> build_leaf_tables(int k) {
    int K = 1 << k;
    std::vector<int> rad(k, K);
    std::size_t universe = view_space(rad);
    uint64_t leaves = subset_count(universe, K - 1);
    auto tables = std::make_shared<std::vector<std::vector<int>>>();
    tables->reserve(leaves);
    for (uint64_t r = 0; r < leaves; ++r) {
        auto subset = unrank_subset(universe, K - 1, r);
        std::vector<int> tab(universe, K - 1);
        for (int i = 0; i < int(subset.size()); ++i) tab[subset[i]] = i;
        tables->push_back(std::move(tab));
    }
    return tables;
}

std::vector<Coloring> unguessed_from_tables(const std::vector<std::vector<int>>& lg,
                                            const std::vector<int>& rad,
                                            const std::vector<int>& leafColors) {
    std::vector<Coloring> out;
    std::size_t universe = view_space(rad);
    for (std::size_t code = 0; code < universe; ++code) {
        bool guessed = false;
        for (std::size_t l = 0; l < lg.size(); ++l)
            if (lg[l][code] == leafColors[l]) {
                guessed = true;
                break;
            }
        if (!guessed) out.push_back(decode_view(rad, code));
    }
    return out;
}

}  // namespace

VertexStrategy kstar_leaf_rule(int k, int vertex, const std::vector<int>& clique_coords,
                               uint64_t subset_rank) {
    int K = 1 << k;
    std::vector<int> rad(k, K);
    std::size_t universe = view_space(rad);
    auto subset = unrank_subset(universe, K - 1, subset_rank);
    VertexStrategy s;
    s.vertex = vertex;
    s.coords = clique_coords;
    s.radices = rad;
    s.rule_name = "kstar_leaf";
    s.rule_params = {uint64_t(k), subset_rank};
    s.rule = [rad, subset, K](const std::vector<int>& view) -> GuessSet {
        std::size_t code = encode_view(rad, view);
        auto it = std::lower_bound(subset.begin(), subset.end(), int(code));
        if (it != subset.end() && *it == int(code)) return {int(it - subset.begin())};
        return {K - 1};
    };
    return s;
}

KStarStrategy kstar_strategy(int k, bool allow_large) {
    if (k < 1) throw std::invalid_argument("kstar_strategy: need k >= 1");
    if (k > 2 && !allow_large)
        throw std::invalid_argument("kstar_strategy: k > 2 rejected (leaf count explodes); "
                                    "pass allow_large to try anyway");
    int K = 1 << k;
    std::vector<int> rad(k, K);
    std::size_t universe = view_space(rad);
    uint64_t leaves = subset_count(universe, K - 1);
    if (leaves > 1'000'000)
        throw std::runtime_error("kstar_strategy: too many leaves to materialize");
    int n = int(leaves);

    KStarStrategy ks;
    ks.k = k;
    ks.num_colors = K;
    ks.shape = make_kstar(k, n);
    ks.spec = GameSpec::uniform(ks.shape.graph, K, 1);
    ks.leaf_guess = build_leaf_tables(k);

    for (int v = 0; v < k; ++v) {
        VertexStrategy s;
        s.vertex = v;
        s.coords = ks.shape.graph.adj[v];
        s.radices.assign(s.coords.size(), K);
        s.rule_name = "kstar_clique";
        s.rule_params = {uint64_t(k), uint64_t(v)};
        auto lg = ks.leaf_guess;
        s.rule = [lg, rad, k, K, v](const std::vector<int>& view) -> GuessSet {
            // view: the other k-1 clique vertices ascending, then all leaves
            std::vector<int> leafColors(view.begin() + (k - 1), view.end());
            auto A = unguessed_from_tables(*lg, rad, leafColors);
            Strategy prof = kn_admissible_strategy(k, K, A);
            std::vector<int> cliqueView(view.begin(), view.begin() + (k - 1));
            return prof.at[v](cliqueView);
        };
        ks.strategy.at.push_back(std::move(s));
    }
    for (int l = 0; l < n; ++l) {
        std::vector<int> cliqueCoords(k);
        for (int j = 0; j < k; ++j) cliqueCoords[j] = j;
        ks.strategy.at.push_back(kstar_leaf_rule(k, k + l, cliqueCoords, uint64_t(l)));
    }
    return ks;
}

std::vector<Coloring> kstar_unguessed(const KStarStrategy& ks,
                                      const std::vector<int>& leaf_colors) {
    std::vector<int> rad(ks.k, ks.num_colors);
    return unguessed_from_tables(*ks.leaf_guess, rad, leaf_colors);
}

}  // namespace hatters
