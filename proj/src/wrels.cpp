#include "wshuffle/wrels.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wsh {

long alpha_v(const std::vector<std::pair<int, int>>& v) {
    long alpha = 0, prefix = 0;  // prefix = c_0 - c_{s-1}
    for (const auto& [d, k] : v) {
        long g = std::gcd(std::labs((long)d), (long)k);
        long num = (long)k * d - k - d + g;
        if (num % 2) throw std::logic_error("alpha parity");
        alpha += num / 2 + (long)k * prefix;
        prefix += d;
    }
    return alpha;
}

namespace {

void enumerate_paths(int k, int delta, int S, int B, int cap,
                     std::vector<int>& comps, std::vector<int>& steps,
                     std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
    int used = 0, dsum = 0;
    for (size_t s = 0; s < comps.size(); ++s) used += comps[s], dsum += steps[s];
    if (used == k) {
        if (dsum == delta) out.push_back({comps, steps});
        return;
    }
    if ((int)out.size() > cap) throw std::domain_error("window term cap exceeded");
    for (int ks = 1; ks <= k - used; ++ks) {
        for (int d = -B; d <= B; ++d) {
            if (std::labs((long)d) > (long)S * ks) continue;
            // slopes strictly decreasing
            if (!comps.empty()) {
                int pd = steps.back(), pk = comps.back();
                if ((long)d * pk >= (long)pd * ks) continue;
            }
            comps.push_back(ks);
            steps.push_back(d);
            enumerate_paths(k, delta, S, B, cap, comps, steps, out);
            comps.pop_back();
            steps.pop_back();
        }
    }
}

}  // namespace

WTruncation w_truncate(int n, int i, int j, int k, const Window& win) {
    // normalize the class lift so i lands in {1..n}
    int shift = residue_1n(i, n) - i;
    i += shift;
    j += shift;
    WTruncation wt;
    wt.n = n;
    wt.i = i;
    wt.j = j;
    wt.k = k;
    wt.win = win;
    int ib = residue_1n(i, n), jb = residue_1n(j, n);
    if (k == 0) {
        if (i == j) wt.terms.push_back({{i}, {}, Scalar(1)});
        return wt;
    }
    if (k == 1) {
        long a = alpha_v({{i - j, 1}});
        wt.terms.push_back({{i, j}, {1}, Scalar::p_frac2((int)(a - jb))});
        return wt;
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> paths;
    std::vector<int> comps, steps;
    enumerate_paths(k, i - j, win.S, win.effective_B(n), win.cap, comps, steps, paths);
    for (const auto& [cs, ds] : paths) {
        FWordTerm term;
        term.comps = cs;
        term.path.push_back(i);
        std::vector<std::pair<int, int>> v;
        for (size_t s = 0; s < cs.size(); ++s) {
            v.push_back({ds[s], cs[s]});
            term.path.push_back(term.path.back() - ds[s]);
        }
        long a = alpha_v(v);
        term.coeff = Scalar::p_frac2((int)(a - (long)(k - 1) * ib - jb));
        wt.terms.push_back(std::move(term));
    }
    return wt;
}

// ---------------------------------------------------------------------------
// Shared caches. F generators and term products depend only on (n, class,
// composition), so they are memoized process-wide; pairings are memoized per
// J-word signature.

namespace {

struct Caches {
    std::mutex mu;
    std::map<std::tuple<int, int, int, int>, std::shared_ptr<const ShuffleElem>> fplus;
    std::map<std::string, std::shared_ptr<const ShuffleElem>> elems;
    std::map<std::string, Scalar> pairs;
};

Caches& caches() {
    static Caches c;
    return c;
}

std::string term_key(int n, const FWordTerm& t) {
    std::ostringstream os;
    os << n << ":";
    for (size_t s = 0; s < t.comps.size(); ++s)
        os << t.path[s] << "," << t.path[s + 1] << "," << t.comps[s] << ";";
    return os.str();
}

std::string word_key(int n, const Word& w) {
    std::ostringstream os;
    os << n << "|";
    for (const auto& l : w) os << l.u << "," << l.v << "," << l.e << "," << l.c.str() << ";";
    return os.str();
}

std::shared_ptr<const ShuffleElem> f_plus_cached(int n, int i, int j, int k) {
    auto key = std::make_tuple(n, residue_1n(i, n), i - j, k);
    auto& c = caches();
    {
        std::unique_lock lock(c.mu);
        auto it = c.fplus.find(key);
        if (it != c.fplus.end()) return it->second;
    }
    auto e = std::make_shared<const ShuffleElem>(make_F(n, +1, i, j, k));
    std::unique_lock lock(c.mu);
    return c.fplus.emplace(key, std::move(e)).first->second;
}

std::shared_ptr<const ShuffleElem> term_elem(int n, const FWordTerm& t) {
    std::string key = term_key(n, t);
    auto& c = caches();
    {
        std::unique_lock lock(c.mu);
        auto it = c.elems.find(key);
        if (it != c.elems.end()) return it->second;
    }
    ShuffleElem acc = shuffle_unit(n, +1);
    for (size_t s = 0; s < t.comps.size(); ++s)
        acc = shuffle_product(acc, *f_plus_cached(n, t.path[s], t.path[s + 1], t.comps[s]));
    auto e = std::make_shared<const ShuffleElem>(std::move(acc));
    std::unique_lock lock(c.mu);
    return c.elems.emplace(key, std::move(e)).first->second;
}

std::string trunc_key(const WTruncation& t) {
    std::ostringstream os;
    os << t.n << "/" << t.i << "," << t.j << "," << t.k << "/" << t.win.S << ","
       << t.win.effective_B(t.n);
    return os.str();
}

// The summed truncation as a single explicit element: sum_T coeff_T X_T.
std::shared_ptr<const ShuffleElem> trunc_elem(const WTruncation& t) {
    std::string key = "T:" + trunc_key(t);
    auto& c = caches();
    {
        std::unique_lock lock(c.mu);
        auto it = c.elems.find(key);
        if (it != c.elems.end()) return it->second;
    }
    ShuffleElem acc;
    acc.n = t.n;
    acc.sign = +1;
    acc.k = t.k;
    acc.value = TensorRat(t.n, t.k);
    for (const auto& term : t.terms) {
        auto e = term_elem(t.n, term);
        acc.value = acc.value + e->value.scale(RatFun(term.coeff));
    }
    auto e = std::make_shared<const ShuffleElem>(std::move(acc));
    std::unique_lock lock(c.mu);
    return c.elems.emplace(key, std::move(e)).first->second;
}

std::shared_ptr<const ShuffleElem> trunc_product_elem(const WTruncation& a,
                                                      const WTruncation& b) {
    std::string key = "TP:" + trunc_key(a) + "*" + trunc_key(b);
    auto& c = caches();
    {
        std::unique_lock lock(c.mu);
        auto it = c.elems.find(key);
        if (it != c.elems.end()) return it->second;
    }
    auto ea = trunc_elem(a), eb = trunc_elem(b);
    auto e = std::make_shared<const ShuffleElem>(shuffle_product(*ea, *eb));
    std::unique_lock lock(c.mu);
    return c.elems.emplace(key, std::move(e)).first->second;
}

Scalar pair_cached(int n, const std::string& elem_key, const ShuffleElem& elem,
                   const Word& jword) {
    std::string key = elem_key + "@" + word_key(n, jword);
    auto& c = caches();
    {
        std::unique_lock lock(c.mu);
        auto it = c.pairs.find(key);
        if (it != c.pairs.end()) return it->second;
    }
    Scalar v = pair_P2(n, elem, jword);
    std::unique_lock lock(c.mu);
    return c.pairs.emplace(key, std::move(v)).first->second;
}

// <W_a W_b, J> for two truncations (either may be the k = 0 identity).
Scalar pair_trunc_product(const WTruncation& a, const WTruncation& b, const Word& j) {
    if (a.terms.empty() || b.terms.empty()) return Scalar(0);
    auto prod = trunc_product_elem(a, b);
    std::string key = "TP:" + trunc_key(a) + "*" + trunc_key(b);
    return pair_cached(a.n, key, *prod, j);
}

}  // namespace

Scalar w_pair(const WTruncation& wt, const Word& jword) {
    if (wt.terms.empty()) return Scalar(0);
    auto e = trunc_elem(wt);
    return pair_cached(wt.n, "T:" + trunc_key(wt), *e, jword);
}

Scalar w_pair_product(const WTruncation& a, const WTruncation& b, const Word& jword) {
    return pair_trunc_product(a, b, jword);
}

std::string pair_w_check(int n, int k, int i, int j) {
    // Left side: the t = 1 term of W^{(k)}_{ij} pairs with the single minus
    // generator via the basic pairing value; every longer term has at least
    // two distinct slopes and pairs to zero against a single-slope
    // generator. Right side: (q^2-1)^k times the closed-form matrix of the
    // generator at 1/y, transposed.
    int ib = residue_1n(i, n), jb = residue_1n(j, n);
    long a = alpha_v({{i - j, k}});
    Scalar lhs = Scalar::p_frac2((int)(a - (long)(k - 1) * ib - jb)) *
                 (Scalar(1) - Scalar::q(-2));
    TensorRat syn = xk_single(n, FMinusFactor{j, i, k}, kY, Scalar(1));
    int w = winding(j, n) - winding(i, n);
    RatFun entry = syn.at((uint32_t)(jb - 1), (uint32_t)(ib - 1));
    if (w != 0) entry = entry * RatFun(Poly::var(kY, -w));  // strip y^w
    Scalar rhs = (Scalar::q(2) - Scalar(1)).pow(k) * entry.to_scalar();
    if (lhs == rhs) return {};
    return "pair_w mismatch at class (" + std::to_string(i) + "," + std::to_string(j) +
           "), k=" + std::to_string(k) + ": lhs " + lhs.str() + " vs rhs " + rhs.str();
}

// ---------------------------------------------------------------------------

namespace {

struct ClassInfo {
    int ibar, delta;
    int lift_i() const { return ibar; }
    int lift_j() const { return ibar - delta; }
    int xpow(int n) const { return -winding(ibar - delta, n); }
};

std::vector<ClassInfo> class_list(int n, int K, int S) {
    std::vector<ClassInfo> out;
    if (K == 0) {
        for (int i = 1; i <= n; ++i) out.push_back({i, 0});
        return out;
    }
    for (int i = 1; i <= n; ++i)
        for (int d = -S * K; d <= S * K; ++d) out.push_back({i, d});
    return out;
}

bool hdeg_matches(int n, const ClassInfo& a, const ClassInfo& b,
                  const std::vector<int>& h) {
    auto va = arc_vec(n, a.lift_i(), a.lift_j());
    auto vb = arc_vec(n, b.lift_i(), b.lift_j());
    for (int c = 0; c < n; ++c)
        if (va[c] + vb[c] != h[c]) return false;
    return true;
}

void add_contribution(XYWindow& win, int alpha, int beta, const TensorRat& m,
                      const Scalar& s) {
    if (s.is_zero() || m.is_zero()) return;
    TensorRat scaled = m.scale(RatFun(s));
    auto key = std::make_pair(alpha, beta);
    auto it = win.find(key);
    if (it == win.end())
        win.emplace(key, scaled);
    else {
        it->second = it->second + scaled;
        if (it->second.is_zero()) win.erase(it);
    }
}

}  // namespace

WRelOutcome wrels_check(const WRelParams& p) {
    const int n = p.n, k = p.k, kp = p.kp, N = p.N;
    if (k > kp) throw std::domain_error("wrels_check requires k <= k'");
    if ((int)p.jword.size() != k + kp)
        throw std::domain_error("J-word length must be k + k'");
    WRelOutcome out;
    // <X+, J> is nonzero only when hdeg X+ = -hdeg J, and hdeg of a product
    // of W coefficients is minus the sum of its class arcs; so the class
    // arcs must sum to word_hdeg(J).
    std::vector<int> h = word_hdeg(n, p.jword);

    auto trunc = [&](int K, const ClassInfo& c) {
        if (p.quotient_r >= 0 && K > p.quotient_r) {
            WTruncation empty;
            empty.n = n;
            empty.k = K;
            return empty;
        }
        return w_truncate(n, c.lift_i(), c.lift_j(), K, p.win);
    };

    // -- A and B sides ------------------------------------------------------
    for (const ClassInfo& c1 : class_list(n, k, p.win.S)) {
        for (const ClassInfo& c2 : class_list(n, kp, p.win.S)) {
            if (!hdeg_matches(n, c1, c2, h)) continue;
            WTruncation t1 = trunc(k, c1), t2 = trunc(kp, c2);
            if (t1.terms.empty() || t2.terms.empty()) continue;
            Scalar sA = pair_trunc_product(t1, t2, p.jword);
            Scalar sB = pair_trunc_product(t2, t1, p.jword);
            int d = c1.xpow(n), dp = c2.xpow(n);
            TensorRat e1 = TensorRat::unit(n, residue_1n(c1.lift_i(), n),
                                           residue_1n(c1.lift_j(), n))
                               .embed({1}, 2);
            TensorRat e2 = TensorRat::unit(n, residue_1n(c2.lift_i(), n),
                                           residue_1n(c2.lift_j(), n))
                               .embed({2}, 2);
            if (!sA.is_zero()) {
                RatFun u = arg_var(kU);
                TensorRat mA = make_R(n, u.inv() * RatFun(Scalar::p_pow(n, 2 * (k - kp))))
                                   .embed({1, 2}, 2) *
                               e1 *
                               make_R21(n, u * RatFun(Scalar::p_pow(n, 2 * kp)))
                                   .embed({1, 2}, 2) *
                               e2;
                RatFun fs(1);
                for (int i = kp - k + 1; i <= kp - 1; ++i)
                    fs = fs * make_f(n, u.inv() * RatFun(Scalar::p_pow(n, -2 * i)));
                mA = mA.scale(fs);
                // x^d y^{d'} u^s with u = y/x, |u| small: alpha = d - s
                for (int alpha = -N; alpha <= N; ++alpha) {
                    int s = d - alpha, beta = dp + s;
                    if (s < 0 || std::abs(beta) > N) continue;
                    TensorRat coeff = mA.map_entries([&](const RatFun& v) {
                        return RatFun(v.series_coeff(kU, s, +1).to_scalar());
                    });
                    add_contribution(out.A, alpha, beta, coeff, sA);
                }
            }
            if (!sB.is_zero()) {
                RatFun u = arg_var(kU);
                TensorRat mB = e2 *
                               make_R(n, u.inv() * RatFun(Scalar::p_pow(n, 2 * k)))
                                   .embed({1, 2}, 2) *
                               e1 * make_R21(n, u).embed({1, 2}, 2);
                RatFun fs(1);
                for (int i = 1; i <= k - 1; ++i)
                    fs = fs * make_f(n, u * RatFun(Scalar::p_pow(n, -2 * i)));
                mB = mB.scale(fs);
                // |u| large: u^{-s}: alpha = d + s
                for (int alpha = -N; alpha <= N; ++alpha) {
                    int s = alpha - d, beta = dp - s;
                    if (s < 0 || std::abs(beta) > N) continue;
                    TensorRat coeff = mB.map_entries([&](const RatFun& v) {
                        return RatFun(v.series_coeff(kU, -s, -1).to_scalar());
                    });
                    add_contribution(out.B, alpha, beta, coeff, sB);
                }
            }
        }
    }

    // -- RHS ----------------------------------------------------------------
    std::vector<int> avals;
    for (int a = -kp; a <= k - kp - 1; ++a) avals.push_back(a);
    for (int a = 1; a <= k; ++a) avals.push_back(a);
    for (int a : avals) {
        int K1 = kp + a, K2 = k - a;
        for (const ClassInfo& c1 : class_list(n, K1, p.win.S)) {
            for (const ClassInfo& c2 : class_list(n, K2, p.win.S)) {
                if (!hdeg_matches(n, c1, c2, h)) continue;
                WTruncation t1 = trunc(K1, c1), t2 = trunc(K2, c2);
                if (t1.terms.empty() || t2.terms.empty()) continue;
                Scalar s = pair_trunc_product(t1, t2, p.jword);
                if (s.is_zero()) continue;
                int d = c1.xpow(n), dp = c2.xpow(n);
                TensorRat e1 = TensorRat::unit(n, residue_1n(c1.lift_i(), n),
                                               residue_1n(c1.lift_j(), n))
                                   .embed({1}, 2);
                TensorRat e2 = TensorRat::unit(n, residue_1n(c2.lift_i(), n),
                                               residue_1n(c2.lift_j(), n))
                                   .embed({2}, 2);
                TensorRat m = make_perm(n).embed({1, 2}, 2) * e1 *
                              make_R21(n, arg_const(Scalar::p_pow(n, 2 * k)))
                                  .embed({1, 2}, 2) *
                              e2;
                Scalar fs = Scalar::q(-1) - Scalar::q(1);
                for (int i = 1; i <= k - 1; ++i)
                    fs = fs * make_f(n, arg_const(Scalar::p_pow(n, -2 * i))).to_scalar();
                m = m.scale(RatFun(fs));
                int sgn = a > 0 ? 1 : -1;
                for (int alpha = -N; alpha <= N; ++alpha) {
                    int mm = alpha - d, beta = dp - mm;
                    if (std::abs(beta) > N) continue;
                    Scalar c = s * Scalar::p_pow(n, 2 * a * mm) * Scalar(sgn);
                    add_contribution(out.RHS, alpha, beta, m, c);
                }
            }
        }
    }

    // -- compare ------------------------------------------------------------
    out.pass = true;
    for (int alpha = -N; alpha <= N; ++alpha)
        for (int beta = -N; beta <= N; ++beta) {
            auto key = std::make_pair(alpha, beta);
            TensorRat lhs(n, 2), rhs(n, 2);
            if (auto it = out.A.find(key); it != out.A.end()) lhs = it->second;
            if (auto it = out.B.find(key); it != out.B.end()) lhs = lhs - it->second;
            if (auto it = out.RHS.find(key); it != out.RHS.end()) rhs = it->second;
            TensorRat diff = lhs - rhs;
            if (!diff.is_zero()) {
                out.pass = false;
                const auto& [rc, v] = *diff.entries().begin();
                std::ostringstream os;
                auto rd = diff.digits(rc.first), cd = diff.digits(rc.second);
                os << "x^" << alpha << " y^" << beta << " entry (";
                for (int x : rd) os << x;
                os << "|";
                for (int x : cd) os << x;
                os << "): (A-B) - RHS = " << v.str();
                out.witnesses.push_back(os.str());
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Rational reconstruction of the paired A-side (n = 1).

namespace {

// Solve for Q of degree dq with Q(0) = 1 such that (Q * C) has zero
// coefficients in degrees dp+1..M; empty on failure.
std::vector<Scalar> pade_denominator(const std::vector<Scalar>& c, int dp, int dq) {
    int M = (int)c.size() - 1;
    int rows = M - dp, cols = dq;
    if (rows < cols) return {};
    std::vector<std::vector<Scalar>> A(rows, std::vector<Scalar>(cols + 1, Scalar(0)));
    for (int r = 0; r < rows; ++r) {
        int s = dp + 1 + r;
        for (int j = 1; j <= dq; ++j)
            A[r][j - 1] = (s - j >= 0 && s - j <= M) ? c[s - j] : Scalar(0);
        A[r][cols] = -c[s];
    }
    std::vector<int> where(cols, -1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (!A[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[piv], A[row]);
        Scalar inv = A[row][col].inv();
        for (int cc = col; cc <= cols; ++cc) A[row][cc] = A[row][cc] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || A[r][col].is_zero()) continue;
            Scalar f = A[r][col];
            for (int cc = col; cc <= cols; ++cc) A[r][cc] = A[r][cc] - f * A[row][cc];
        }
        where[col] = row++;
    }
    for (int r = row; r < rows; ++r)
        if (!A[r][cols].is_zero()) return {};  // inconsistent
    std::vector<Scalar> q(dq + 1, Scalar(0));
    q[0] = Scalar(1);
    for (int col = 0; col < cols; ++col)
        q[col + 1] = where[col] >= 0 ? A[where[col]][cols] : Scalar(0);
    return q;
}

}  // namespace

ReconOutcome residues_crosscheck(const WRelParams& p, int series_len) {
    ReconOutcome oc;
    if (p.n != 1) {
        oc.status = ReconOutcome::kInconclusive;
        oc.detail = "reconstruction implemented for n = 1";
        return oc;
    }
    const int n = 1, k = p.k, kp = p.kp;
    // n = 1: arcs are -delta, so delta + delta' = -word_hdeg.
    std::vector<int> h = word_hdeg(n, p.jword);
    int htot = -h[0];

    // paired A-side as a Laurent series in u = y/x (times x^{htot})
    std::map<int, Scalar> series;
    bool any = false;
    int lmin = 0;
    for (const ClassInfo& c1 : class_list(n, k, p.win.S)) {
        ClassInfo c2{1, htot - c1.delta};
        if (std::abs(c2.delta) > p.win.S * kp) continue;
        WTruncation t1 = w_truncate(n, c1.lift_i(), c1.lift_j(), k, p.win);
        WTruncation t2 = w_truncate(n, c2.lift_i(), c2.lift_j(), kp, p.win);
        if (t1.terms.empty() || t2.terms.empty()) continue;
        Scalar sA = pair_trunc_product(t1, t2, p.jword);
        if (sA.is_zero()) continue;
        int dp = c2.xpow(n);
        RatFun u = arg_var(kU);
        RatFun mA = make_R(n, u.inv() * RatFun(Scalar::p_pow(n, 2 * (k - kp)))).at(0, 0) *
                    make_R21(n, u * RatFun(Scalar::p_pow(n, 2 * kp))).at(0, 0);
        for (int i = kp - k + 1; i <= kp - 1; ++i)
            mA = mA * make_f(n, u.inv() * RatFun(Scalar::p_pow(n, -2 * i)));
        if (!any || dp < lmin) lmin = dp;
        any = true;
        for (auto& [e, cf] : mA.series(kU, 0, series_len, +1))
            series[dp + e] += sA * cf.to_scalar();
    }
    if (!any) {
        oc.status = ReconOutcome::kInconclusive;
        oc.detail = "empty A-side";
        return oc;
    }

    // coefficient vector from lmin with a held-out validation tail
    int usable = series_len - 2;
    std::vector<Scalar> c;
    for (int l = lmin; l <= lmin + usable; ++l) {
        auto it = series.find(l);
        c.push_back(it == series.end() ? Scalar(0) : it->second);
    }
    int M = (int)c.size() - 1;
    std::vector<Scalar> q;
    int dq = 0, dp_deg = 0;
    for (dq = 2; dq <= 4; ++dq) {
        dp_deg = M - dq - 2;
        if (dp_deg < 0) break;
        q = pade_denominator(c, dp_deg, dq);
        if (!q.empty()) break;
    }
    if (q.empty()) {
        oc.status = ReconOutcome::kInconclusive;
        oc.detail = "pade reconstruction overflow";
        return oc;
    }
    RatFun Q(0), P(0);
    for (int idx = 0; idx < (int)q.size(); ++idx)
        Q += RatFun(q[idx]) * RatFun(Poly::var(kU, idx));
    {
        RatFun C(0);
        for (int idx = 0; idx <= M; ++idx) C += RatFun(c[idx]) * RatFun(Poly::var(kU, idx));
        RatFun QC = Q * C;
        for (auto& [e, cf] : QC.series(kU, 0, dp_deg, +1))
            P += RatFun(cf.to_scalar()) * RatFun(Poly::var(kU, e));
    }
    RatFun G = RatFun(Poly::var(kU, lmin)) * P / Q;
    {
        auto expand = G.series(kU, lmin, lmin + series_len, +1);
        for (int l = lmin; l <= lmin + series_len; ++l) {
            Scalar want = series.count(l) ? series[l] : Scalar(0);
            RatFun got;
            if (auto it = expand.find(l); it != expand.end()) got = it->second;
            if (got != RatFun(want)) {
                oc.status = ReconOutcome::kInconclusive;
                oc.detail = "reconstruction does not reproduce the series";
                return oc;
            }
        }
    }

    // pole set: every u-dependent denominator factor must be a simple zero
    // at u = p^{2a} for an allowed a
    std::vector<int> avals;
    for (int a = -kp; a <= k - kp - 1; ++a) avals.push_back(a);
    for (int a = 1; a <= k; ++a) avals.push_back(a);
    std::map<int, bool> seen;
    for (const auto& [f, mult] : G.fac()) {
        if (!f.involves(kU)) continue;
        bool matched = false;
        for (int a : avals) {
            Mono pm = Mono::var(kQ, 2 * a * n) * Mono::var(kT, 2 * a * n);
            if (f.subst_mono(kU, pm).is_zero()) {
                if (mult != 1) {
                    oc.status = ReconOutcome::kFail;
                    oc.detail = "pole of order > 1 at a=" + std::to_string(a);
                    return oc;
                }
                seen[a] = true;
                matched = true;
                break;
            }
        }
        if (!matched) {
            oc.status = ReconOutcome::kFail;
            oc.detail = "unexpected pole factor " + f.str();
            return oc;
        }
    }
    // residues: Res_{u=p^{2a}} G/u = -sgn(a) sum_pairs p^{2 a d'} m_a s_pair
    for (int a : avals) {
        Scalar want(0);
        int K1 = kp + a, K2 = k - a;
        for (const ClassInfo& c1 : class_list(n, K1, p.win.S)) {
            ClassInfo c2{1, htot - c1.delta};
            if (K2 > 0 && std::abs(c2.delta) > p.win.S * K2) continue;
            if (K2 == 0 && c2.delta != 0) continue;
            WTruncation t1 = w_truncate(n, c1.lift_i(), c1.lift_j(), K1, p.win);
            WTruncation t2 = w_truncate(n, c2.lift_i(), c2.lift_j(), K2, p.win);
            if (t1.terms.empty() || t2.terms.empty()) continue;
            Scalar s = pair_trunc_product(t1, t2, p.jword);
            if (s.is_zero()) continue;
            Scalar m = Scalar::q(-1) - Scalar::q(1);
            for (int i = 1; i <= k - 1; ++i)
                m = m * make_f(n, arg_const(Scalar::p_pow(n, -2 * i))).to_scalar();
            m = m * make_R21(n, arg_const(Scalar::p_pow(n, 2 * k))).at(0, 0).to_scalar();
            want += s * m * Scalar::p_pow(n, 2 * a * c2.xpow(n));
        }
        want = want * Scalar(a > 0 ? -1 : 1);
        RatFun got = residue_simple(G / RatFun(Poly::var(kU)), kU,
                                    Scalar::p_pow(n, 2 * a), -1);
        if (got != RatFun(want)) {
            oc.status = ReconOutcome::kFail;
            oc.detail = "residue mismatch at a=" + std::to_string(a);
            return oc;
        }
    }
    // regular at u = 1
    for (const auto& [f, mult] : G.fac()) {
        if (f.involves(kU) && f.subst_mono(kU, Mono()).is_zero()) {
            oc.status = ReconOutcome::kFail;
            oc.detail = "pole at u = 1";
            return oc;
        }
    }
    oc.status = ReconOutcome::kPass;
    std::ostringstream os;
    os << "poles at u = p^{2a}, a in {";
    bool firsty = true;
    for (auto& [a, _] : seen) {
        if (!firsty) os << ", ";
        os << a;
        firsty = false;
    }
    os << "}";
    oc.detail = os.str();
    return oc;
}

}  // namespace wsh
