#include "hatters/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hatters {

int lll_bound(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("lll_bound: negative degree");
    long double v = std::numbers::e_v<long double> * (max_degree + 1);
    return int(std::floor(v));
}

namespace {

// base^exp, or nullopt on 128-bit overflow
std::optional<unsigned __int128> pow_checked(unsigned __int128 base, int exp) {
    unsigned __int128 r = 1;
    const unsigned __int128 lim = ~(unsigned __int128)0;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > lim / base) return std::nullopt;
        r *= base;
    }
    return r;
}

std::optional<unsigned __int128> mul_checked(unsigned __int128 a, unsigned __int128 b) {
    const unsigned __int128 lim = ~(unsigned __int128)0;
    if (a != 0 && b > lim / a) return std::nullopt;
    return a * b;
}

}  // namespace

bool partition_bound_holds(const std::vector<int>& part_sizes, int k) {
    if (k < 2) throw std::invalid_argument("partition_bound: k must be at least 2");
    if (part_sizes.empty()) throw std::invalid_argument("partition_bound: empty partition");
    for (int m : part_sizes)
        if (m < 1) throw std::invalid_argument("partition_bound: part sizes must be positive");
    int l = int(part_sizes.size());
    int maxM = *std::max_element(part_sizes.begin(), part_sizes.end());

    // l - 1 < sum ((k-1)/k)^{m_i}  <=>  (l-1) k^M < sum (k-1)^{m_i} k^{M-m_i}
    bool exactOk = true;
    unsigned __int128 lhs = 0, rhs = 0;
    if (auto kM = pow_checked(k, maxM)) {
        if (auto p = mul_checked(*kM, (unsigned)(l - 1)))
            lhs = *p;
        else
            exactOk = false;
    } else
        exactOk = false;
    for (int m : part_sizes) {
        if (!exactOk) break;
        auto a = pow_checked(k - 1, m);
        auto b = a ? pow_checked(k, maxM - m) : std::nullopt;
        auto t = b ? mul_checked(*a, *b) : std::nullopt;
        if (!t) {
            exactOk = false;
            break;
        }
        unsigned __int128 next = rhs + *t;
        if (next < rhs) {
            exactOk = false;
            break;
        }
        rhs = next;
    }
    if (exactOk) return lhs < rhs;

    long double sum = 0;
    for (int m : part_sizes) sum += std::pow((long double)(k - 1) / k, (long double)m);
    // near-ties claim nothing
    return (long double)l - sum < 1.0L - 1e-12L;
}

int partition_bound_best(const std::vector<int>& part_sizes) {
    long long n = 0;
    for (int m : part_sizes) n += m;
    for (int k = 2; k <= n + 1; ++k)
        if (partition_bound_holds(part_sizes, k)) return k - 1;
    throw std::logic_error("partition_bound_best: inequality failed through k = n+1");
}

int chromatic_threshold_bound(int n, int h) {
    if (h < 2 || h > n) throw std::invalid_argument("chromatic_threshold_bound: need 2 <= h <= n");
    if (h == n) return n;  // threshold is exactly n
    long double t = 1.0L / (1.0L - std::pow(1.0L - 1.0L / h, (long double)h / n));
    long double r = std::floor(t + 0.5L);
    if (std::fabs(t - r) < 1e-9L) return int(r);
    return int(std::floor(t));
}

double asymptotic_chromatic_bound(int n, int h) {
    if (h < 2) throw std::invalid_argument("asymptotic_chromatic_bound: need h >= 2");
    return double(n) / (h * std::log(double(h) / (h - 1)));
}

BoundReport bound_report(const Graph& g, const ColoringBudget& budget) {
    BoundReport rep;
    rep.max_degree = g.max_degree();
    {
        BoundEntry e;
        e.name = "degree";
        e.bound = lll_bound(rep.max_degree);
        e.value = double(*e.bound);
        e.note = "floor(e*(max_degree+1))";
        rep.entries.push_back(e);
    }
    ChromaticResult chi = chromatic_number(g, budget);
    rep.chromatic = chi.chi;
    if (!chi.chi) {
        BoundEntry e;
        e.name = "chromatic";
        e.note = "omitted: chromatic number undecided within budget";
        rep.entries.push_back(e);
    } else {
        int h = *chi.chi;
        std::vector<int> sizes;
        for (const auto& cls : chi.classes) sizes.push_back(int(cls.size()));
        {
            BoundEntry e;
            e.name = "partition";
            e.bound = partition_bound_best(sizes);
            e.value = double(*e.bound);
            e.note = "independent-partition inequality on the proper-coloring classes";
            rep.entries.push_back(e);
        }
        if (h >= 2) {
            BoundEntry e;
            e.name = "chromatic_threshold";
            e.bound = chromatic_threshold_bound(g.n, h);
            e.value = double(*e.bound);
            e.note = "largest k at or below 1/(1-(1-1/h)^(h/n))";
            rep.entries.push_back(e);
            BoundEntry a;
            a.name = "asymptotic_chromatic";
            a.value = asymptotic_chromatic_bound(g.n, h);
            a.note = "valid for large n only; never folded into best";
            rep.entries.push_back(a);
        }
    }
    for (const auto& e : rep.entries)
        if (e.bound && (!rep.best || *e.bound < *rep.best)) rep.best = *e.bound;
    return rep;
}

}  // namespace hatters
