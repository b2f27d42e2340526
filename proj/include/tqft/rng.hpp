#pragma once

#include <cstdint>
#include <random>

namespace tqft {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// Deterministic PRNG.  mt19937_64 output is pinned by the standard; the
// double mapping below avoids std::uniform_real_distribution, whose exact
// sequence is implementation-defined, so identical seeds give identical
// streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1)
    double uniform01() { return double(eng_() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    Rng fork() { return Rng(next_u64() ^ 0x9E3779B97F4A7C15ull); }

private:
    std::mt19937_64 eng_;
};

} // namespace tqft
