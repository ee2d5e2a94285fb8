#pragma once

#include "wshuffle/prob.hpp"

#include <map>
#include <vector>

namespace wsh {

// Free associative algebra on symbols Lam^{(i)}(x p^{2m}) and the shift
// operator D acting by f(x) -> f(x p^2). Normalization pushes every D to
// the right through D Lam^{(i)}(x p^{2m}) = Lam^{(i)}(x p^{2m+2}) D.

struct LamSym {
    int i = 1;  // which copy, 1..r
    int m = 0;  // argument x p^{2m}
    auto operator<=>(const LamSym&) const = default;
};

struct FreeWord {
    std::vector<LamSym> lams;
    int dpow = 0;  // trailing power of D
    auto operator<=>(const FreeWord&) const = default;
};

class FreePoly {
  public:
    FreePoly() = default;
    explicit FreePoly(long c) {
        if (c) terms_[FreeWord{}] = c;
    }
    static FreePoly lam(int i, int m);
    static FreePoly shift_op();  // D
    static FreePoly term(FreeWord w, const mpz_class& c);

    const std::map<FreeWord, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FreePoly operator+(const FreePoly& o) const;
    FreePoly operator-(const FreePoly& o) const;
    FreePoly operator*(const FreePoly& o) const;  // concatenate + normalize
    bool operator==(const FreePoly& o) const { return terms_ == o.terms_; }

    // Shift every Lambda argument by p^{2s}.
    FreePoly shift_args(int s) const;

    std::string str() const;

  private:
    void add_term(FreeWord w, const mpz_class& c);
    std::map<FreeWord, mpz_class> terms_;
};

// Normalization of a raw symbol string (test hook for confluence): symbols
// are D (i = 0) or Lambda; rewrites applied in a seed-dependent order.
FreeWord normalize_word(const std::vector<LamSym>& raw, SplitMix64* rng = nullptr);

// Coefficients Wbar^{(k)}(x) of prod_{i=1..r} (Lam^{(i)}(x p^{2(r-i)}) - D)
// = sum_k (-D)^{r-k} Wbar^{(k)}(x).
std::map<int, FreePoly> miura_expand(int r);
// The direct sums over increasing index tuples.
FreePoly miura_bar_w(int r, int k);
// Empty on success, else the offending k and monomial.
std::string miura_check(int r);

}  // namespace wsh
