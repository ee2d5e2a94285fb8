#include "wshuffle/prob.hpp"

namespace wsh {

bool miller_rabin_is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                       29ull, 31ull, 37ull}) {
        if (p == d) return true;
        if (p % d == 0) return false;
    }
    auto mulmod = [p](uint64_t a, uint64_t b) {
        return (uint64_t)((__uint128_t)a * b % p);
    };
    auto powmod = [&](uint64_t b, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    uint64_t d = p - 1;
    int s = 0;
    while (!(d & 1)) d >>= 1, ++s;
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                       29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d);
        if (x == 1 || x == p - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == p - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool prob_equal(const RatFun& a, const RatFun& b, uint64_t seed, uint64_t p,
                int rounds) {
    SplitMix64 rng(seed);
    for (int r = 0; r < rounds; ++r) {
        std::array<uint64_t, kNumVars> pt{};
        std::optional<uint64_t> ea, eb;
        for (int attempt = 0; attempt < 64 && (!ea || !eb); ++attempt) {
            for (auto& v : pt) v = rng.below(p - 1) + 1;
            ea = a.eval_mod(pt, p);
            eb = b.eval_mod(pt, p);
        }
        if (!ea || !eb) continue;  // persistent denominator hit; skip round
        if (*ea != *eb) return false;
    }
    return true;
}

}  // namespace wsh
