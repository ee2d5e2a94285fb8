#pragma once

#include "wshuffle/pairing.hpp"

#include <memory>

namespace wsh {

// Truncation window for the W-generator series: slope bound S, step bound B
// (defaults to 3n when 0), and a cap on enumerated terms.
struct Window {
    int S = 3;
    int B = 0;
    int cap = 10000;
    int effective_B(int n) const { return B > 0 ? B : 3 * n; }
};

// One summand F^{(k_1)}_{c_0 c_1} ... F^{(k_t)}_{c_{t-1} c_t} of a
// W-generator, with its p-power coefficient.
struct FWordTerm {
    std::vector<int> path;   // c_0 .. c_t (integer lifts)
    std::vector<int> comps;  // k_1 .. k_t
    Scalar coeff;
};

struct WTruncation {
    int n = 1, i = 1, j = 1, k = 0;  // class lift (i in 1..n), level k
    Window win;
    std::vector<FWordTerm> terms;
};

// alpha of a sequence of lattice points v = {(d_s, k_s)}.
long alpha_v(const std::vector<std::pair<int, int>>& v);

// Enumerate the window truncation of W^{(k)}_{ij}. k = 1 is exact (single
// term, ignores the window); k = 0 is the identity convention and holds a
// single empty term when i = j as classes.
WTruncation w_truncate(int n, int i, int j, int k, const Window& win);

// Pairings of truncations against minus words (sum over terms of
// coefficient times the trace-residue pairing of the explicit product).
Scalar w_pair(const WTruncation& wt, const Word& jword);
Scalar w_pair_product(const WTruncation& a, const WTruncation& b, const Word& jword);

// Exponent bookkeeping of <W^(k)(y), F^{(-k)}> against (q^2-1)^k X^(k)(1/y)^T:
// returns empty on success, else a description of the mismatch.
std::string pair_w_check(int n, int k, int i, int j);

// ---------------------------------------------------------------------------

struct WRelParams {
    int n = 1;
    int k = 1, kp = 1;  // k <= kp
    Word jword;         // length k + kp
    Window win;
    int N = 3;           // series window: |x exponent|, |y exponent| <= N
    int quotient_r = -1;  // >= 0: drop W^{(m)} for m > r
};

// Paired series windows in (x, y); entries are End(V tensor V) matrices
// with exact scalar entries.
using XYWindow = std::map<std::pair<int, int>, TensorRat>;

struct WRelOutcome {
    XYWindow A, B, RHS;
    std::vector<std::string> witnesses;
    bool pass = false;
};

// Verify  A - B = RHS  coefficientwise after pairing against the J-word.
WRelOutcome wrels_check(const WRelParams& p);

// Rational reconstruction of the paired A-side as a function of u = y/x
// (n = 1 only). Checks that the poles are exactly u = p^{2a} over the
// allowed a-set with residues matching the RHS delta coefficients.
struct ReconOutcome {
    enum Status { kPass, kFail, kInconclusive } status = kInconclusive;
    std::string detail;
};
ReconOutcome residues_crosscheck(const WRelParams& p, int series_len);

}  // namespace wsh
