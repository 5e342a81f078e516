#pragma once

#include <cstdint>
#include <random>

namespace gcoh {

// Deterministic seeded RNG. mt19937_64 output is pinned by the standard and
// we avoid std distributions, whose streams vary across libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // uniform integer in [lo, hi], inclusive
    int uniform(int lo, int hi) {
        if (hi < lo) return lo;
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v;
        do { v = eng_(); } while (v >= limit);
        return lo + static_cast<int>(v % span);
    }

    bool coin() { return (eng_() & 1u) != 0; }

    // pick an index weighted uniformly from [0, n)
    int index(int n) { return uniform(0, n - 1); }

private:
    std::mt19937_64 eng_;
};

}  // namespace gcoh
