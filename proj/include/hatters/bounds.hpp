#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hatters/chromatic.hpp"
#include "hatters/graph.hpp"

namespace hatters {

// floor(e * (max_degree + 1))
int lll_bound(int max_degree);

// True means the independent-partition inequality
//   l - sum_i ((k-1)/k)^{m_i} < 1
// holds, which certifies that the hat number is at most k-1. Evaluated in
// exact integer arithmetic when it fits 128 bits, else long double with a
// 1e-12 margin resolved conservatively (near-ties report false).
bool partition_bound_holds(const std::vector<int>& part_sizes, int k);

// Smallest upper bound the partition inequality certifies; scans k upward
// (the inequality is monotone in k and always holds by k = n+1).
int partition_bound_best(const std::vector<int>& part_sizes);

// Largest k at or below the winnability threshold 1/(1-(1-1/h)^{h/n});
// exact n for h == n, floor of the threshold otherwise with near-integer
// ties rounded up so the reported bound is never below the theorem's.
int chromatic_threshold_bound(int n, int h);

// n / (h ln(h/(h-1))), valid only for large n; report-only.
double asymptotic_chromatic_bound(int n, int h);

struct BoundEntry {
    std::string name;
    double value = 0.0;
    std::optional<int> bound;  // set iff the entry is an applicable upper bound
    std::string note;
};

struct BoundReport {
    int max_degree = 0;
    std::optional<int> chromatic;
    std::vector<BoundEntry> entries;
    std::optional<int> best;  // min over applicable bounds
};

BoundReport bound_report(const Graph& g, const ColoringBudget& budget = {});

}  // namespace hatters
