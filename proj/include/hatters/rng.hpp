#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace hatters {

// splitmix64 finalizer, used to derive independent child seeds
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seeded generator. split(i) derives a child stream from the base seed and the
// component index only, so child streams do not depend on parent draw order.
class Rng {
public:
    explicit Rng(uint64_t seed) : base_(seed), gen_(mix64(seed)) {}

    Rng split(uint64_t index) const { return Rng(mix64(base_ ^ mix64(index + 1))); }

    uint64_t next() { return gen_(); }

    // inclusive bounds
    int uniform_int(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen_);
    }

    uint64_t uniform_u64(uint64_t lo, uint64_t hi) {
        std::uniform_int_distribution<uint64_t> d(lo, hi);
        return d(gen_);
    }

    double uniform_real() {
        std::uniform_real_distribution<double> d(0.0, 1.0);
        return d(gen_);
    }

    // uniform k-subset of {0..universe-1}, returned sorted
    std::vector<int> subset(int universe, int k) {
        std::vector<int> pool(universe);
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < k; ++i) {
            int j = uniform_int(i, universe - 1);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = int(v.size()) - 1; i > 0; --i) {
            int j = uniform_int(0, i);
            std::swap(v[i], v[j]);
        }
    }

    std::mt19937_64& engine() { return gen_; }

private:
    uint64_t base_;
    std::mt19937_64 gen_;
};

}  // namespace hatters
