#pragma once

#include "wshuffle/scalar.hpp"

#include <functional>
#include <map>

namespace wsh {

// Multivariate rational function over Q(q,t), kept as
//     sc * num / prod fac_i^{m_i}
// with the denominator in factored form. All denominators arising from the
// R-matrix toolkit are products of two-term factors (z_i - c z_j, 1 - c x,
// ...), so cancellation is an exact-division probe per factor and regime
// expansions are per-factor geometric series; no multivariate gcd is needed
// on the hot path. Values are immutable after construction.
class RatFun {
  public:
    RatFun() : sc_(0), num_(1) {}
    RatFun(long v) : sc_(v), num_(1) {}
    RatFun(const Scalar& s) : sc_(s), num_(1) {}
    explicit RatFun(const Poly& p);
    RatFun(const Poly& num, const std::vector<std::pair<Poly, int>>& fac,
           const Scalar& sc = Scalar(1));
    static RatFun var(int v, int e = 1) { return RatFun(Poly::var(v, e)); }

    const Scalar& scalar_part() const { return sc_; }
    const Poly& num() const { return num_; }
    const std::vector<std::pair<Poly, int>>& fac() const { return fac_; }

    bool is_zero() const { return sc_.is_zero(); }
    bool is_scalar() const { return fac_.empty() && num_.only_vars_qt(); }
    Scalar to_scalar() const;  // throws if variables beyond q,t remain

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    RatFun inv() const;
    RatFun pow(int k) const;
    bool operator==(const RatFun& o) const { return (*this - o).is_zero(); }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    bool involves(int v) const;

    // v := m (monomial in other variables, integer coefficient c = +-1 or
    // any integer when no negative powers of v occur).
    RatFun subst_mono(int v, const Mono& m, const mpz_class& c = 1) const;
    // v := c * (other variable w), or v := c when w < 0. Throws
    // HigherOrderPole when a denominator factor vanishes under the locus.
    RatFun subst_scalar(int v, const Scalar& c, int w = -1) const;

    RatFun rename_vars(const std::array<int, kNumVars>& to) const;

    // Expanded numerator/denominator (scalar part merged); for printing and
    // cross checks.
    std::pair<Poly, Poly> as_fraction() const;
    std::string str() const;

    // Evaluation mod p at a point; nullopt when the denominator vanishes.
    std::optional<uint64_t> eval_mod(const std::array<uint64_t, kNumVars>& pt,
                                     uint64_t p) const;

    // Laurent-series slice along v. dir = +1 expands for |v| smallest
    // (ascending powers), dir = -1 for |v| largest. Returns coefficients of
    // v^e for e in [lo, hi]; coefficients are v-free.
    std::map<int, RatFun> series(int v, int lo, int hi, int dir) const;
    RatFun series_coeff(int v, int e, int dir) const;

    // Order bound: the lowest (dir=+1) or highest (dir=-1) exponent of v in
    // the regime expansion.
    int series_ord(int v, int dir) const;

  private:
    void normalize();
    Scalar sc_;
    Poly num_;
    std::vector<std::pair<Poly, int>> fac_;
};

struct HigherOrderPole : std::domain_error {
    explicit HigherOrderPole(const std::string& what) : std::domain_error(what) {}
};

// --- Regime expansions and residues (exact-arithmetic module operations) ---

// Truncated bi-directional Laurent expansion in an ordered regime.
// regime lists variables from smallest to largest magnitude; every stored
// exponent tuple (aligned with regime) satisfies |e_i| <= N.
struct SeriesWindow {
    std::vector<int> regime;
    int N = 0;
    std::map<std::vector<int>, RatFun> coeff;

    RatFun at(const std::vector<int>& e) const;
    SeriesWindow mul(const SeriesWindow& o) const;  // truncated product
};

SeriesWindow expand_regime(const RatFun& f, const std::vector<int>& regime, int N);

// Res_{z_i = c z_j} F (w = -1 means the locus z_i = c). At most a simple
// pole is allowed; zero when regular.
RatFun residue_simple(const RatFun& f, int zi, const Scalar& c, int zj);

// Iterated constant term: residue at 0 with measure dz/(2 pi i z), first in
// order[0], then order[1], ... under |order[0]| << ... << |order[k-1]|.
Scalar constant_term_iterated(const RatFun& f, const std::vector<int>& order);
// Same, but leaving functions of un-listed variables intact.
RatFun constant_term_iterated_rf(const RatFun& f, const std::vector<int>& order);

// Residue collection along geometric chains: groups partition z_1..z_k into
// consecutive blocks; within a block of size l the residues are taken at
// z_{b+1} = step z_b, ..., z_{b+l-1} = step^{l-1} z_b, and the surviving base
// variables are relabeled z_1..z_u in block order.
RatFun iterated_residue_collection(const RatFun& f, const std::vector<int>& groups,
                                   const Scalar& step);

}  // namespace wsh
