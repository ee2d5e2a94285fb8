#pragma once

#include "wshuffle/ratfun.hpp"

namespace wsh {

// Deterministic cross-platform RNG.
struct SplitMix64 {
    uint64_t s;
    explicit SplitMix64(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        uint64_t x = s;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    // uniform in [0, m)
    uint64_t below(uint64_t m) { return next() % m; }
    int range(int lo, int hi) { return lo + (int)below((uint64_t)(hi - lo + 1)); }
};

// Default modulus for the probabilistic equality oracle (62-bit prime;
// primality is asserted by the test suite).
inline constexpr uint64_t kDefaultPrime = 4611686018427387847ULL;  // 2^62 - 57

bool miller_rabin_is_prime(uint64_t p);

// Schwartz-Zippel equality probe: evaluate a - b at `rounds` random points
// of F_p (component-wise nonzero). Returns false iff some evaluation
// differs; a true result is probabilistic evidence only.
bool prob_equal(const RatFun& a, const RatFun& b, uint64_t seed,
                uint64_t p = kDefaultPrime, int rounds = 4);

}  // namespace wsh
