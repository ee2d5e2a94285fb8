#pragma once

#include "wshuffle/shuffle.hpp"

#include <map>

namespace wsh {

// --- Color-variable formalism -----------------------------------------------
// Variables z_{c,o} of color c in {1..n}, occurrence o >= 1, laid out over
// the shared z-slots; max_occ(n) occurrences per color are available.

int max_occ(int n);
int zc_var(int n, int c, int o);

// Rational function over the colored variables with per-color degrees.
struct ColorSymFun {
    int n = 1;
    std::vector<int> deg;  // d_1..d_n
    RatFun value;

    bool is_zero() const { return value.is_zero(); }
};

bool is_color_symmetric(const ColorSymFun& f);

// Structure-function table: entry (cnum, cden) applies to ratios
// z_{cnum,.} / z_{cden,.}. Entries are one-variable rational functions in
// the placeholder variable x.
struct ZetaConfig {
    int n = 1;
    std::map<std::pair<int, int>, RatFun> entry;

    const RatFun& at(int cnum, int cden) const;
    RatFun apply(int cnum, int cden, const RatFun& ratio) const;
    std::string fingerprint() const;
};

// Shipped default (a convention; the CLI file format can override every
// entry).
ZetaConfig default_zeta(int n);

// Relabeling of integer-indexed variables z_a, a in [lo, hi), onto colored
// ones: z_a, z_{a+n}, ... -> z_{abar,1}, z_{abar,2} qbar^{-2}, ...
struct RelabelEntry {
    int var;    // colored slot
    int twist;  // power of qbar^{-2}
};
std::map<int, RelabelEntry> relabel_map(int n, int lo, int hi);
RatFun relabel_ratio(int n, const std::map<int, RelabelEntry>& m, int a, int b);

// --- The kernel identity and combinatorial identities (zeta-free) ----------

// X(z_i..z_{j-1}): the finite sum over strictly-decreasing positive-slope
// paths from j down to i; integer index a maps to slot z_{a-i+1}.
RatFun kernel_X(int n, int i, int j, int k);
// X = (z_i qbar^{2i/n})^k (-z_{j-1}) / (z_i (-q^2)^{j-i-1})
bool of_check(int n, int i, int j, int k);
// Mirrored minus-side kernel built from the negative-slope path sum.
RatFun kernel_X_minus(int n, int i, int j, int k);
bool of_check_minus(int n, int i, int j, int k);

// Floor-sum identity: for every composition and path,
// sum_s sum_a a (floor((a-c_s+1)k_s/(c_{s-1}-c_s)) - floor(...)) =
// k j - k - alpha(v). Exhaustive over k, j-i <= bound.
bool floor_identity_check(int bound);

// Arc-exponent identity from the pairing proof: d = 2(alpha(v) -
// (k-1) ibar - jbar) over stringing arc sequences; exhaustive at small
// sizes.
bool arc_exponent_check(int n, int max_arcs, int max_step, int max_k);

// --- S-side elements (zeta-configured) --------------------------------------

ColorSymFun make_Abar(int n, int i, int j, int mu_num, int mu_den,
                      const ZetaConfig& zeta);
ColorSymFun make_Bbar(int n, int i, int j, int mu_num, int mu_den,
                      const ZetaConfig& zeta);
ColorSymFun make_Anew(int n, int i, int j, int k, const ZetaConfig& zeta);

ColorSymFun shuffle_product_S(const ColorSymFun& x, const ColorSymFun& y,
                              const ZetaConfig& zeta);

// Wheel conditions: simple poles only at z_{c,a} q^2 - z_{c+1,b} (with the
// wraparound z_{n+1,c} = z_{1,c} qbar^{-2}); the residue at such a pole is
// divisible by z_{c,a'} - z_{c+1,b} and z_{c,a} - z_{c+1,b'}. Returns an
// empty string or a description of the violation.
std::string wheel_check(const ColorSymFun& f);

// Equality (eq plus) at one size: the slope-ordered sum of Abar products
// equals A_{[i;j),k}; zeta-independent in content but evaluated with the
// given table.
bool eq_plus_check(int n, int i, int j, int k, const ZetaConfig& zeta);

}  // namespace wsh
