#pragma once

#include <cstdint>
#include <random>

namespace kuores {

// Seeded random source. Sampling is hand-rolled rejection on top of
// mt19937_64 so that a given seed yields the same stream on every platform
// (std::uniform_int_distribution makes no such promise).
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // Uniform in [0, bound), bound >= 1.
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        uint64_t mask = ~uint64_t{0} >> __builtin_clzll((bound - 1) | 1);
        for (;;) {
            uint64_t v = gen_() & mask;
            if (v < bound) return v;
        }
    }

    // Uniform in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (gen_() & 1) != 0; }

private:
    std::mt19937_64 gen_;
};

} // namespace kuores
