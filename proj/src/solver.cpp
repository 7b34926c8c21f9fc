#include "hatters/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <stdexcept>
#include <thread>

namespace hatters {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Winnable: return "winnable";
        case Verdict::NotWinnable: return "not_winnable";
        default: return "unknown";
    }
}

namespace {

constexpr std::size_t kMaxColorings = 10'000'000;
constexpr std::size_t kMaxCells = 1'000'000;
constexpr int kMaskColors = 31;

Coloring lex_coloring(const std::vector<int>& palette, std::size_t index) {
    int n = int(palette.size());
    Coloring c(n);
    for (int v = n - 1; v >= 0; --v) {
        c[v] = int(index % std::size_t(palette[v]));
        index /= std::size_t(palette[v]);
    }
    return c;
}

// Immutable per-instance tables shared across workers.
struct Instance {
    const GameSpec* spec;
    int n, s, m;
    int totalCells;
    std::vector<int> cellBase;    // n+1 entries
    std::vector<int> cellVertex;  // per cell
    std::vector<std::vector<int>> viewRadices;
    std::vector<int> touch;       // m*n cell ids
    std::vector<uint8_t> tcolor;  // m*n colors
    std::vector<int> csrStart;    // totalCells+1
    std::vector<int> csrIdx;
};

Instance build_instance(const GameSpec& spec) {
    Instance I;
    I.spec = &spec;
    I.n = spec.graph.n;
    I.s = spec.guesses;
    I.cellBase.assign(I.n + 1, 0);
    for (int v = 0; v < I.n; ++v) {
        std::vector<int> rad;
        for (int u : spec.graph.adj[v]) rad.push_back(spec.palette[u]);
        I.viewRadices.push_back(rad);
        I.cellBase[v + 1] = I.cellBase[v] + int(view_space(rad));
    }
    I.totalCells = I.cellBase[I.n];
    I.cellVertex.resize(I.totalCells);
    for (int v = 0; v < I.n; ++v)
        for (int c = I.cellBase[v]; c < I.cellBase[v + 1]; ++c) I.cellVertex[c] = v;

    std::vector<Coloring> universe;
    if (spec.admissible)
        universe = *spec.admissible;
    else {
        std::size_t total = spec.universe_size();
        for (std::size_t i = 0; i < total; ++i)
            universe.push_back(lex_coloring(spec.palette, i));
    }
    I.m = int(universe.size());
    I.touch.resize(std::size_t(I.m) * I.n);
    I.tcolor.resize(std::size_t(I.m) * I.n);
    std::vector<int> view;
    for (int i = 0; i < I.m; ++i)
        for (int v = 0; v < I.n; ++v) {
            view.clear();
            for (int u : spec.graph.adj[v]) view.push_back(universe[i][u]);
            I.touch[std::size_t(i) * I.n + v] =
                I.cellBase[v] + int(encode_view(I.viewRadices[v], view));
            I.tcolor[std::size_t(i) * I.n + v] = uint8_t(universe[i][v]);
        }

    I.csrStart.assign(I.totalCells + 1, 0);
    for (auto c : I.touch) I.csrStart[c + 1]++;
    for (int c = 0; c < I.totalCells; ++c) I.csrStart[c + 1] += I.csrStart[c];
    I.csrIdx.resize(I.touch.size());
    std::vector<int> fill = I.csrStart;
    for (int i = 0; i < I.m; ++i)
        for (int v = 0; v < I.n; ++v) I.csrIdx[fill[I.touch[std::size_t(i) * I.n + v]]++] = i;
    return I;
}

struct Op {
    int cell;
    uint8_t color;
    bool isForbid;
};

struct State {
    const Instance* I;
    std::vector<uint32_t> mask, forbid;
    std::vector<uint8_t> count;
    std::vector<uint16_t> hit;
    std::vector<int> live;
    std::vector<int> bucket;  // stride 32 per cell
    long long unhit;
    std::vector<Op> trail;
    std::vector<int> unitQ;
    bool conflictFlag = false;
    bool useCounting;
    uint64_t nodes = 0, nodeLimit;
    std::chrono::steady_clock::time_point deadline;
    bool budgetOut = false;
    const std::atomic<bool>* stop = nullptr;

    // scratch for the exact matching rule
    std::vector<int> mCol, mStart, mEdgeCell, mCellIds, mCellCap, mCellSeen, mMatch;
    std::vector<std::vector<int>> mMatched;
    std::vector<int> mCellStamp, mCellPos;
    int mStamp = 0;

    explicit State(const Instance& inst, const SolverOptions& opts) : I(&inst) {
        mask.assign(inst.totalCells, 0);
        forbid.assign(inst.totalCells, 0);
        count.assign(inst.totalCells, 0);
        hit.assign(inst.m, 0);
        live.assign(inst.m, inst.n);
        bucket.assign(std::size_t(inst.totalCells) * 32, 0);
        for (int i = 0; i < inst.m; ++i)
            for (int v = 0; v < inst.n; ++v)
                bucket[std::size_t(I->touch[std::size_t(i) * inst.n + v]) * 32 +
                       I->tcolor[std::size_t(i) * inst.n + v]]++;
        unhit = inst.m;
        useCounting = opts.counting_prune;
        nodeLimit = opts.budget.node_limit;
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(opts.budget.time_limit_secs));
    }

    void on_hit(int i) {
        --unhit;
        for (int v = 0; v < I->n; ++v)
            bucket[std::size_t(I->touch[std::size_t(i) * I->n + v]) * 32 +
                   I->tcolor[std::size_t(i) * I->n + v]]--;
    }
    void on_unhit(int i) {
        ++unhit;
        for (int v = 0; v < I->n; ++v)
            bucket[std::size_t(I->touch[std::size_t(i) * I->n + v]) * 32 +
                   I->tcolor[std::size_t(i) * I->n + v]]++;
    }

    void option_died(int i) {
        if (--live[i] == 0) {
            if (hit[i] == 0) conflictFlag = true;
        } else if (live[i] == 1 && hit[i] == 0) {
            unitQ.push_back(i);
        }
    }

    void do_assign(int cell, int color) {
        trail.push_back({cell, uint8_t(color), false});
        mask[cell] |= 1u << color;
        bool nowFull = ++count[cell] == I->s;
        for (int p = I->csrStart[cell]; p < I->csrStart[cell + 1]; ++p) {
            int i = I->csrIdx[p];
            int col = I->tcolor[std::size_t(i) * I->n + I->cellVertex[cell]];
            if (col == color) {
                --live[i];
                if (hit[i]++ == 0) on_hit(i);
            } else if (nowFull && !(mask[cell] >> col & 1) && !(forbid[cell] >> col & 1)) {
                option_died(i);
            }
        }
    }

    void do_forbid(int cell, int color) {
        trail.push_back({cell, uint8_t(color), true});
        forbid[cell] |= 1u << color;
        if (count[cell] >= I->s) return;
        for (int p = I->csrStart[cell]; p < I->csrStart[cell + 1]; ++p) {
            int i = I->csrIdx[p];
            if (I->tcolor[std::size_t(i) * I->n + I->cellVertex[cell]] == color) option_died(i);
        }
    }

    void undo_to(std::size_t markPos) {
        while (trail.size() > markPos) {
            Op op = trail.back();
            trail.pop_back();
            int cell = op.cell, color = op.color;
            if (op.isForbid) {
                if (count[cell] < I->s)
                    for (int p = I->csrStart[cell]; p < I->csrStart[cell + 1]; ++p) {
                        int i = I->csrIdx[p];
                        if (I->tcolor[std::size_t(i) * I->n + I->cellVertex[cell]] == color)
                            ++live[i];
                    }
                forbid[cell] &= ~(1u << color);
            } else {
                bool wasFull = count[cell] == I->s;
                for (int p = I->csrStart[cell]; p < I->csrStart[cell + 1]; ++p) {
                    int i = I->csrIdx[p];
                    int col = I->tcolor[std::size_t(i) * I->n + I->cellVertex[cell]];
                    if (col == color) {
                        ++live[i];
                        if (--hit[i] == 0) on_unhit(i);
                    } else if (wasFull && !(mask[cell] >> col & 1) &&
                               !(forbid[cell] >> col & 1)) {
                        ++live[i];
                    }
                }
                mask[cell] &= ~(1u << color);
                --count[cell];
            }
        }
        conflictFlag = false;
    }

    bool counting_refuted() {
        long long cap = 0;
        std::vector<int> top;
        for (int cell = 0; cell < I->totalCells; ++cell) {
            int freeSlots = I->s - count[cell];
            if (freeSlots <= 0) continue;
            int kv = I->spec->palette[I->cellVertex[cell]];
            top.assign(freeSlots, 0);
            uint32_t blocked = mask[cell] | forbid[cell];
            for (int c = 0; c < kv; ++c) {
                if (blocked >> c & 1) continue;
                int b = bucket[std::size_t(cell) * 32 + c];
                if (b > top[0]) {
                    top[0] = b;
                    for (int j = 1; j < freeSlots && top[j - 1] > top[j]; ++j)
                        std::swap(top[j - 1], top[j]);
                }
            }
            for (int b : top) cap += b;
            if (cap >= unhit) return false;
        }
        return cap < unhit;
    }

    bool propagate() {
        while (true) {
            if (conflictFlag) return false;
            if (unitQ.empty()) break;
            int i = unitQ.back();
            unitQ.pop_back();
            if (hit[i] != 0 || live[i] != 1) continue;
            for (int v = 0; v < I->n; ++v) {
                int cell = I->touch[std::size_t(i) * I->n + v];
                int col = I->tcolor[std::size_t(i) * I->n + v];
                if (count[cell] < I->s && !(mask[cell] >> col & 1) &&
                    !(forbid[cell] >> col & 1)) {
                    do_assign(cell, col);
                    break;
                }
            }
            if (conflictFlag) return false;
        }
        if (useCounting && unhit > 0 && counting_refuted()) return false;
        return true;
    }

    // Seeds the unit queue from scratch; used once per state before searching.
    bool propagate_root() {
        for (int i = 0; i < I->m; ++i)
            if (hit[i] == 0) {
                if (live[i] == 0) return false;
                if (live[i] == 1) unitQ.push_back(i);
            }
        return propagate();
    }

    bool try_augment(int pos, int stamp) {
        for (int e = mStart[pos]; e < mStart[pos + 1]; ++e) {
            int ci = mEdgeCell[e];
            if (mCellSeen[ci] == stamp) continue;
            mCellSeen[ci] = stamp;
            if (int(mMatched[ci].size()) < mCellCap[ci]) {
                mMatched[ci].push_back(pos);
                mMatch[pos] = ci;
                return true;
            }
            for (int& occ : mMatched[ci])
                if (try_augment(occ, stamp)) {
                    occ = pos;
                    mMatch[pos] = ci;
                    return true;
                }
        }
        return false;
    }

    // When no two unhit colorings share a live (cell, color) slot, each
    // assignment hits at most one of them and the node reduces to a bipartite
    // matching of colorings into cells with capacity s - count. Decides the
    // subtree exactly: -1 rule not applicable, 0 refuted, 1 winnable with the
    // witness assignments applied.
    int matching_decides() {
        if (unhit <= 0 || unhit > 20000) return -1;
        if (mCellStamp.empty()) {
            mCellStamp.assign(I->totalCells, 0);
            mCellPos.assign(I->totalCells, 0);
        }
        mCol.clear();
        mStart.assign(1, 0);
        mEdgeCell.clear();
        mCellIds.clear();
        ++mStamp;
        for (int i = 0; i < I->m; ++i) {
            if (hit[i] != 0) continue;
            for (int v = 0; v < I->n; ++v) {
                int cell = I->touch[std::size_t(i) * I->n + v];
                int col = I->tcolor[std::size_t(i) * I->n + v];
                if (count[cell] >= I->s || (forbid[cell] >> col & 1)) continue;
                if (bucket[std::size_t(cell) * 32 + col] > 1) return -1;
                if (mCellStamp[cell] != mStamp) {
                    mCellStamp[cell] = mStamp;
                    mCellPos[cell] = int(mCellIds.size());
                    mCellIds.push_back(cell);
                }
                mEdgeCell.push_back(mCellPos[cell]);
            }
            mCol.push_back(i);
            mStart.push_back(int(mEdgeCell.size()));
            if (mEdgeCell.size() > 200000 || mCellIds.size() > 30000) return -1;
        }
        int nc = int(mCellIds.size());
        mCellCap.resize(nc);
        for (int ci = 0; ci < nc; ++ci) mCellCap[ci] = I->s - count[mCellIds[ci]];
        mCellSeen.assign(nc, 0);
        mMatched.assign(nc, {});
        mMatch.assign(mCol.size(), -1);
        for (int pos = 0; pos < int(mCol.size()); ++pos)
            if (!try_augment(pos, pos + 1)) return 0;
        for (int pos = 0; pos < int(mCol.size()); ++pos) {
            int cell = mCellIds[mMatch[pos]];
            int i = mCol[pos];
            do_assign(cell, I->tcolor[std::size_t(i) * I->n + I->cellVertex[cell]]);
        }
        return 1;
    }

    int pick_branch() const {
        int best = -1;
        for (int i = 0; i < I->m; ++i)
            if (hit[i] == 0 && (best < 0 || live[i] < live[best])) best = i;
        return best;
    }

    bool out_of_budget() {
        if (budgetOut) return true;
        if (nodes > nodeLimit) return budgetOut = true;
        if ((nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline)
            return budgetOut = true;
        if (stop && stop->load(std::memory_order_relaxed)) return budgetOut = true;
        return false;
    }

    bool search() {
        if (unhit == 0) return true;
        ++nodes;
        if (out_of_budget()) return false;
        int md = matching_decides();
        if (md == 0) return false;
        if (md == 1) return true;
        int branch = pick_branch();
        for (int v = 0; v < I->n; ++v) {
            int cell = I->touch[std::size_t(branch) * I->n + v];
            int col = I->tcolor[std::size_t(branch) * I->n + v];
            if (count[cell] >= I->s || (mask[cell] >> col & 1) || (forbid[cell] >> col & 1))
                continue;
            std::size_t markPos = trail.size();
            do_assign(cell, col);
            if (propagate() && search()) return true;
            undo_to(markPos);
            if (budgetOut) return false;
            do_forbid(cell, col);
            if (!propagate()) return false;
        }
        // all options of the branch coloring are forbidden yet no conflict was
        // raised: propagation hit the coloring through another cell, so this
        // state is consistent and the search must continue
        return search();
    }

    Strategy extract() const {
        Strategy strat;
        for (int v = 0; v < I->n; ++v) {
            VertexStrategy vs;
            vs.vertex = v;
            vs.coords = I->spec->graph.adj[v];
            vs.radices = I->viewRadices[v];
            for (int cell = I->cellBase[v]; cell < I->cellBase[v + 1]; ++cell) {
                GuessSet g;
                for (int c = 0; c < kMaskColors; ++c)
                    if (mask[cell] >> c & 1) g.push_back(c);
                if (g.empty()) g.push_back(0);
                vs.table.push_back(std::move(g));
            }
            strat.at.push_back(std::move(vs));
        }
        return strat;
    }
};

}  // namespace

bool within_solver_ceilings(const GameSpec& spec) {
    std::size_t cells = 0;
    for (int v = 0; v < spec.graph.n; ++v) {
        std::vector<int> rad;
        for (int u : spec.graph.adj[v]) rad.push_back(spec.palette[u]);
        cells += view_space(rad);
        if (cells > kMaxCells) return false;
    }
    std::size_t m = spec.admissible ? spec.admissible->size() : spec.universe_size();
    return m <= kMaxColorings;
}

SolveResult decide_winnable(const GameSpec& spec, const SolverOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    if (!within_solver_ceilings(spec))
        throw std::invalid_argument("decide_winnable: instance above solver ceilings");
    for (int k : spec.palette)
        if (k > kMaskColors)
            throw std::invalid_argument("decide_winnable: palette too large for color masks");

    SolveResult res;
    if (spec.graph.n == 0) {
        res.verdict = Verdict::NotWinnable;
        res.note = "no bears";
        res.seconds = elapsed();
        return res;
    }
    Instance I = build_instance(spec);
    if (I.m == 0) {
        res.verdict = Verdict::Winnable;
        State s(I, opts);
        res.strategy = s.extract();
        res.seconds = elapsed();
        return res;
    }

    State root(I, opts);
    res.nodes = 1;
    bool sym = opts.symmetry_break && !spec.admissible;
    if (sym) root.do_assign(root.I->cellBase[0], 0);
    if (!root.propagate_root()) {
        res.verdict = Verdict::NotWinnable;
        res.seconds = elapsed();
        return res;
    }
    if (root.unhit == 0) {
        res.verdict = Verdict::Winnable;
        res.strategy = root.extract();
        res.seconds = elapsed();
        return res;
    }

    int threads = std::max(1, std::min(opts.budget.threads, 64));
    if (threads == 1) {
        bool won = root.search();
        res.nodes += root.nodes;
        if (won) {
            res.verdict = Verdict::Winnable;
            res.strategy = root.extract();
        } else if (root.budgetOut) {
            res.verdict = Verdict::Unknown;
            res.note = "budget exhausted";
        } else {
            res.verdict = Verdict::NotWinnable;
        }
        res.seconds = elapsed();
        return res;
    }

    // parallel split over the root branch options; each worker replays the
    // forbids of all earlier options so the branches are disjoint
    int branch = root.pick_branch();
    std::vector<std::pair<int, int>> options;  // (cell, color)
    for (int v = 0; v < I.n; ++v) {
        int cell = I.touch[std::size_t(branch) * I.n + v];
        int col = I.tcolor[std::size_t(branch) * I.n + v];
        if (root.count[cell] < I.s && !(root.mask[cell] >> col & 1) &&
            !(root.forbid[cell] >> col & 1))
            options.emplace_back(cell, col);
    }
    int nOpt = int(options.size());
    // jobs 0..nOpt-1 assign option j after forbidding options before it; job
    // nOpt forbids every option (feasible only if propagation hits the branch
    // coloring some other way)
    int nJobs = nOpt + 1;
    std::atomic<bool> stopFlag{false};
    std::vector<int> outcome(nJobs, -1);  // 0 fail, 1 win, 2 budget
    std::vector<uint64_t> optNodes(nJobs, 0);
    std::vector<std::unique_ptr<State>> winners(nJobs);
    SolverOptions perOpt = opts;
    perOpt.budget.node_limit = std::max<uint64_t>(1, opts.budget.node_limit / std::size_t(nJobs));
    std::atomic<int> nextOpt{0};
    auto workerFn = [&] {
        while (true) {
            int j = nextOpt.fetch_add(1);
            if (j >= nJobs) return;
            auto st = std::make_unique<State>(I, perOpt);
            st->stop = &stopFlag;
            if (sym) st->do_assign(st->I->cellBase[0], 0);
            bool feasible = st->propagate_root();
            for (int e = 0; e < std::min(j, nOpt) && feasible; ++e) {
                st->do_forbid(options[e].first, options[e].second);
                feasible = st->propagate();
            }
            if (feasible && j < nOpt) {
                st->do_assign(options[j].first, options[j].second);
                feasible = st->propagate();
            }
            bool won = feasible && st->search();
            optNodes[j] = st->nodes;
            if (won) {
                outcome[j] = 1;
                winners[j] = std::move(st);
                stopFlag.store(true);
            } else {
                outcome[j] = st->budgetOut && !stopFlag.load() ? 2 : 0;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(threads, nJobs); ++t) pool.emplace_back(workerFn);
    for (auto& th : pool) th.join();

    for (auto nn : optNodes) res.nodes += nn;
    int winIdx = -1;
    bool anyBudget = false;
    for (int j = 0; j < nJobs; ++j) {
        if (outcome[j] == 1 && winIdx < 0) winIdx = j;
        if (outcome[j] == 2) anyBudget = true;
    }
    if (winIdx >= 0) {
        res.verdict = Verdict::Winnable;
        res.strategy = winners[winIdx]->extract();
    } else if (anyBudget) {
        res.verdict = Verdict::Unknown;
        res.note = "budget exhausted";
    } else {
        res.verdict = Verdict::NotWinnable;
    }
    res.seconds = elapsed();
    return res;
}

SolveResult decide_winnable_admissible(const GameSpec& spec, const SolverOptions& opts) {
    if (!spec.admissible)
        throw std::invalid_argument("decide_winnable_admissible: spec has no admissible set");
    return decide_winnable(spec, opts);
}

HatNumberResult hat_number(const Graph& g, int guesses, int k_max, const SolverOptions& opts) {
    if (guesses < 1) throw std::invalid_argument("hat_number: need at least one guess");
    if (k_max <= guesses) throw std::invalid_argument("hat_number: k_max must exceed guesses");
    HatNumberResult r;
    r.mu = guesses;  // palette of size s is won by guessing every color
    r.k_min = guesses + 1;
    r.k_max = k_max;
    for (int k = guesses + 1; k <= k_max; ++k) {
        GameSpec spec = GameSpec::uniform(g, k, guesses);
        Verdict v;
        if (!within_solver_ceilings(spec)) {
            v = Verdict::Unknown;
        } else {
            SolveResult sr = decide_winnable(spec, opts);
            v = sr.verdict;
            r.nodes += sr.nodes;
        }
        r.per_k.emplace_back(k, v);
        if (v == Verdict::Winnable) {
            bool aboveRefuted = false;
            for (auto& [kk, vv] : r.per_k)
                if (kk < k && vv == Verdict::NotWinnable) aboveRefuted = true;
            if (aboveRefuted) r.anomalies.push_back(k);
            r.mu = std::max(r.mu, k);
        }
    }
    bool anyUnknown = false;
    for (auto& [kk, vv] : r.per_k) anyUnknown |= vv == Verdict::Unknown;
    r.exact = !anyUnknown && r.mu < k_max && r.anomalies.empty();
    return r;
}

}  // namespace hatters
