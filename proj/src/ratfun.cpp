#include "wshuffle/ratfun.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace wsh {

namespace {

// Split off the (q,t)-content: p = content(q,t) * rest with the gcd of the
// qt-coefficients of rest equal to 1.
std::pair<Poly, Poly> qt_content_split(const Poly& p) {
    if (p.is_zero()) return {Poly(), Poly(1)};
    std::map<Mono, Poly, MonoGrlexLess> groups;
    for (const auto& t : p.terms()) {
        Mono rest = t.m, qt = Mono::one();
        qt.e[kQ] = rest.e[kQ];
        qt.e[kT] = rest.e[kT];
        rest.e[kQ] = rest.e[kT] = 0;
        groups[rest] += Poly(qt, t.c);
    }
    // gcd the small groups first; the running content usually collapses to a
    // monomial or 1 before the large groups are touched
    std::vector<const Poly*> ordered;
    ordered.reserve(groups.size());
    for (const auto& [m, c] : groups) ordered.push_back(&c);
    std::sort(ordered.begin(), ordered.end(),
              [](const Poly* a, const Poly* b) { return a->size() < b->size(); });
    Poly content;
    for (const Poly* c : ordered) {
        content = poly_gcd(content, *c);
        if (content.is_one()) break;
    }
    if (content.is_one() || content.is_zero()) {
        Poly c(p.terms().front().c < 0 ? -1 : 1);
        return {c, p.terms().front().c < 0 ? -p : p};
    }
    if (p.terms().front().c < 0) content = -content;
    return {content, *p.divide_exact(content)};
}

bool poly_grlex_less(const Poly& a, const Poly& b) {
    MonoGrlexLess less;
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (!(ia->m == ib->m)) return less(ia->m, ib->m);
        if (ia->c != ib->c) return ia->c < ib->c;
    }
    return a.terms().size() < b.terms().size();
}

}  // namespace

RatFun::RatFun(const Poly& p) : sc_(1), num_(p) { normalize(); }

RatFun::RatFun(const Poly& num, const std::vector<std::pair<Poly, int>>& fac,
               const Scalar& sc)
    : sc_(sc), num_(num), fac_(fac) {
    normalize();
}

void RatFun::normalize() {
    // Denominator factors: fold monomial and (q,t) content into sc_/num_,
    // keep a sign-normalized proper polynomial per factor.
    std::vector<std::pair<Poly, int>> fac;
    for (auto& [f, m] : fac_) {
        if (m == 0) continue;
        if (f.is_zero()) throw PolyDivByZero();
        Poly g = f;
        Mono mc = g.mono_content();
        if (!mc.is_one()) {
            g = g.mul_mono(mc.inv());
            num_ = num_.mul_mono(mc.pow(m).inv());
        }
        if (g.only_vars_qt()) {
            sc_ = sc_ / Scalar(g, Poly(1)).pow(m);
            continue;
        }
        auto [c, rest] = qt_content_split(g);
        if (!c.is_one()) {
            sc_ = sc_ / Scalar(c, Poly(1)).pow(m);
            g = rest;
        }
        fac.push_back({g, m});
    }
    fac_ = std::move(fac);

    if (num_.is_zero() || sc_.is_zero()) {
        sc_ = Scalar(0);
        num_ = Poly(1);
        fac_.clear();
        return;
    }

    // Cancel factors dividing the numerator.
    for (auto& [f, m] : fac_) {
        while (m > 0) {
            auto q = num_.divide_exact(f);
            if (!q) break;
            num_ = *q;
            --m;
        }
    }
    fac_.erase(std::remove_if(fac_.begin(), fac_.end(),
                              [](const auto& fm) { return fm.second == 0; }),
               fac_.end());

    auto [c, rest] = qt_content_split(num_);
    sc_ = sc_ * Scalar(c, Poly(1));
    num_ = rest;
    if (sc_.is_zero()) {
        num_ = Poly(1);
        fac_.clear();
        return;
    }

    // Merge equal factors and sort for a deterministic form.
    std::sort(fac_.begin(), fac_.end(),
              [](const auto& a, const auto& b) { return poly_grlex_less(a.first, b.first); });
    std::vector<std::pair<Poly, int>> merged;
    for (auto& fm : fac_) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(fm);
    }
    fac_ = std::move(merged);
}

Scalar RatFun::to_scalar() const {
    if (!fac_.empty() || !num_.only_vars_qt())
        throw std::domain_error("rational function is not a scalar: " + str());
    return sc_ * Scalar(num_, Poly(1));
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.sc_ = -r.sc_;
    return r;
}

RatFun RatFun::operator*(const RatFun& o) const {
    if (is_zero() || o.is_zero()) return RatFun();
    RatFun r;
    r.sc_ = sc_ * o.sc_;
    r.num_ = num_ * o.num_;
    r.fac_ = fac_;
    r.fac_.insert(r.fac_.end(), o.fac_.begin(), o.fac_.end());
    r.normalize();
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // Least common multiple of the two factored denominators.
    std::vector<std::pair<Poly, int>> lcm = fac_;
    for (const auto& [f, m] : o.fac_) {
        bool found = false;
        for (auto& [g, k] : lcm)
            if (g == f) {
                k = std::max(k, m);
                found = true;
                break;
            }
        if (!found) lcm.push_back({f, m});
    }
    auto comp = [&](const std::vector<std::pair<Poly, int>>& own) {
        Poly c(1);
        for (const auto& [f, m] : lcm) {
            int have = 0;
            for (const auto& [g, k] : own)
                if (g == f) have = k;
            for (int i = have; i < m; ++i) c *= f;
        }
        return c;
    };
    // sc = p/q per side; combined over q_a q_b.
    const Poly& pa = sc_.num();
    const Poly& qa = sc_.den();
    const Poly& pb = o.sc_.num();
    const Poly& qb = o.sc_.den();
    Poly num = pa * qb * num_ * comp(fac_) + pb * qa * o.num_ * comp(o.fac_);
    RatFun r;
    r.sc_ = Scalar(Poly(1), qa * qb);
    r.num_ = num;
    r.fac_ = lcm;
    r.normalize();
    return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::inv() const {
    if (is_zero()) throw PolyDivByZero();
    RatFun r;
    r.sc_ = sc_.inv();
    r.num_ = Poly(1);
    for (const auto& [f, m] : fac_)
        for (int i = 0; i < m; ++i) r.num_ *= f;
    r.fac_ = {{num_, 1}};
    r.normalize();
    return r;
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inv(); }

RatFun RatFun::pow(int k) const {
    if (k == 0) return RatFun(1);
    RatFun base = k > 0 ? *this : inv();
    int e = k > 0 ? k : -k;
    RatFun r(1);
    while (e) {
        if (e & 1) r *= base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool RatFun::involves(int v) const {
    if (num_.involves(v)) return true;
    for (const auto& [f, m] : fac_)
        if (f.involves(v)) return true;
    return false;
}

RatFun RatFun::subst_mono(int v, const Mono& m, const mpz_class& c) const {
    if (is_zero()) return *this;
    RatFun r;
    r.sc_ = sc_;
    r.num_ = num_.subst_mono(v, m, c);
    for (const auto& [f, k] : fac_) {
        Poly g = f.subst_mono(v, m, c);
        if (g.is_zero()) throw PolyDivByZero();
        r.fac_.push_back({g, k});
    }
    r.normalize();
    return r;
}

RatFun RatFun::subst_scalar(int v, const Scalar& c, int w) const {
    if (is_zero()) return *this;
    // Fast path: c is a (q,t) monomial over a unit denominator.
    if (c.num().is_monomial() && c.den().is_one() &&
        (c.num().lead().c == 1 || c.num().lead().c == -1)) {
        Mono m = w >= 0 ? c.num().lead().m * Mono::var(w) : c.num().lead().m;
        return subst_mono(v, m, c.num().lead().c);
    }
    auto subst_poly = [&](const Poly& p) {
        RatFun acc;
        for (const auto& [e, slice] : p.slices(v)) {
            RatFun piece = RatFun(slice) * RatFun(c.pow(e));
            if (w >= 0 && e != 0) piece = piece * RatFun(Poly::var(w, e));
            acc += piece;
        }
        return acc;
    };
    RatFun r = subst_poly(num_) * RatFun(sc_);
    for (const auto& [f, k] : fac_) {
        RatFun g = subst_poly(f);
        if (g.is_zero()) throw PolyDivByZero();
        r = r / g.pow(k);
    }
    return r;
}

RatFun RatFun::rename_vars(const std::array<int, kNumVars>& to) const {
    if (is_zero()) return *this;
    RatFun r;
    r.sc_ = sc_;
    r.num_ = num_.rename_vars(to);
    for (const auto& [f, m] : fac_) r.fac_.push_back({f.rename_vars(to), m});
    r.normalize();
    return r;
}

std::pair<Poly, Poly> RatFun::as_fraction() const {
    Poly num = num_ * sc_.num();
    Poly den = sc_.den();
    for (const auto& [f, m] : fac_)
        for (int i = 0; i < m; ++i) den *= f;
    // Push Laurent monomial parts to the opposite side.
    Mono mn = num.mono_content(), md = den.mono_content();
    num = num.mul_mono(mn.inv());
    den = den.mul_mono(md.inv());
    Mono shift = mn / md;
    Mono up = Mono::one(), down = Mono::one();
    for (int v = 0; v < kNumVars; ++v)
        (shift.e[v] >= 0 ? up.e[v] : down.e[v]) = shift.e[v];
    return {num.mul_mono(up), den.mul_mono(down.inv())};
}

std::string RatFun::str() const {
    auto [num, den] = as_fraction();
    if (den.is_one()) return num.str();
    return num.str() + " / " + den.str();
}

std::optional<uint64_t> RatFun::eval_mod(const std::array<uint64_t, kNumVars>& pt,
                                         uint64_t p) const {
    auto mulmod = [p](uint64_t a, uint64_t b) {
        return static_cast<uint64_t>((__uint128_t)a * b % p);
    };
    auto invmod = [&](uint64_t a) -> std::optional<uint64_t> {
        if (a == 0) return std::nullopt;
        uint64_t r = 1;
        unsigned long k = p - 2;
        uint64_t base = a;
        while (k) {
            if (k & 1) r = mulmod(r, base);
            base = mulmod(base, base);
            k >>= 1;
        }
        return r;
    };
    uint64_t n = num_.eval_mod(pt, p);
    n = mulmod(n, sc_.num().eval_mod(pt, p));
    uint64_t d = sc_.den().eval_mod(pt, p);
    for (const auto& [f, m] : fac_) {
        uint64_t fe = f.eval_mod(pt, p);
        for (int i = 0; i < m; ++i) d = mulmod(d, fe);
    }
    auto di = invmod(d);
    if (!di) return std::nullopt;
    return mulmod(n, *di);
}

// ---------------------------------------------------------------------------
// Series expansion machinery.

namespace {

// Truncated Laurent series in one variable with RatFun coefficients.
// Represents sum_{e >= base} c_e v^e (dir=+1) or e <= base (dir=-1), with
// coefficients stored for relative offsets 0..len-1.
struct VSeries {
    int base = 0;
    std::vector<RatFun> c;  // c[i] multiplies v^(base + dir*i)
};

VSeries series_mul(const VSeries& a, const VSeries& b, size_t len) {
    VSeries r;
    r.base = a.base + b.base;
    r.c.assign(len, RatFun());
    for (size_t i = 0; i < a.c.size() && i < len; ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size() && i + j < len; ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return r;
}

}  // namespace

int RatFun::series_ord(int v, int dir) const {
    int ord = dir > 0 ? num_.min_deg(v) : num_.max_deg(v);
    for (const auto& [f, m] : fac_)
        ord -= m * (dir > 0 ? f.min_deg(v) : f.max_deg(v));
    return ord;
}

namespace {

// Series expansion with all coefficients kept as plain polynomials; valid
// when every v-dependent factor has a monomial extreme slice (true for the
// two-term factors the R-matrix toolkit produces). Coefficients of v^e go
// into out[e - base] for dir = +1, out[base - e] for dir = -1.
bool poly_series(const Poly& num, const std::vector<std::pair<Poly, int>>& vdep,
                 int v, int dir, size_t len, int& base_out, std::vector<Poly>& out) {
    for (const auto& [f, m] : vdep) {
        auto sl = f.slices(v);
        const Poly& lead = dir > 0 ? sl.begin()->second : sl.rbegin()->second;
        if (!lead.is_monomial()) return false;
    }
    auto mul_trunc = [&](const std::vector<Poly>& a, const std::vector<Poly>& b) {
        std::vector<Poly> r(len);
        for (size_t i = 0; i < a.size() && i < len; ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < b.size() && i + j < len; ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    };
    int base;
    std::vector<Poly> acc(len);
    {
        auto sl = num.slices(v);
        base = dir > 0 ? sl.begin()->first : sl.rbegin()->first;
        for (const auto& [e, p] : sl) {
            size_t off = (size_t)(dir > 0 ? e - base : base - e);
            if (off < len) acc[off] += p;
        }
    }
    for (const auto& [f, m] : vdep) {
        auto sl = f.slices(v);
        int fb = dir > 0 ? sl.begin()->first : sl.rbegin()->first;
        const Poly& lead = dir > 0 ? sl.begin()->second : sl.rbegin()->second;
        // 1/lead as a Laurent monomial with integer denominator folded into
        // a pending divisor (handled by keeping it symbolic): leads here are
        // +-(monomial), so the inverse is exact after sign.
        const Term& lt = lead.lead();
        bool neg = lt.c < 0;
        if (!(lt.c == 1 || lt.c == -1)) {
            // rare integer leading coefficient: fall back
            return false;
        }
        Mono linv = lt.m.inv();
        std::vector<Poly> rest(len);
        bool nontrivial = false;
        for (const auto& [e, p] : sl) {
            if (e == fb) continue;
            size_t off = (size_t)(dir > 0 ? e - fb : fb - e);
            if (off < len) {
                Poly piece = p.mul_mono(linv);
                if (!neg) piece = -piece;
                rest[off] += piece;  // -(rest/lead)
                nontrivial = true;
            }
        }
        std::vector<Poly> inv1(len);
        inv1[0] = Poly(Mono::one(), neg ? -1 : 1).mul_mono(linv);
        if (nontrivial) {
            std::vector<Poly> geom(len);
            geom[0] = Poly(1);
            std::vector<Poly> pw = rest;
            for (size_t j = 1; j < len; ++j) {
                bool anyt = false;
                for (size_t i = 0; i < len; ++i)
                    if (!pw[i].is_zero()) {
                        geom[i] += pw[i];
                        anyt = true;
                    }
                if (!anyt) break;
                pw = mul_trunc(pw, rest);
            }
            inv1 = mul_trunc(inv1, geom);
        }
        base -= fb;
        for (int i = 0; i < m; ++i) acc = mul_trunc(acc, inv1);
    }
    base_out = base;
    out = std::move(acc);
    return true;
}

}  // namespace

std::map<int, RatFun> RatFun::series(int v, int lo, int hi, int dir) const {
    std::map<int, RatFun> out;
    if (is_zero()) return out;
    assert(dir == 1 || dir == -1);

    std::vector<std::pair<Poly, int>> vfree, vdep;
    for (const auto& [f, m] : fac_)
        (f.involves(v) ? vdep : vfree).push_back({f, m});

    int ord = series_ord(v, dir);
    // Number of series coefficients needed to reach the far end of [lo,hi].
    int far = dir > 0 ? hi : lo;
    long lenl = dir > 0 ? (long)far - ord + 1 : (long)ord - far + 1;
    if (lenl <= 0) return out;
    size_t len = (size_t)lenl;

    // Fast path: all factor leads are monomials, so the convolution stays in
    // polynomial space and the carried part multiplies once at the end.
    {
        int base;
        std::vector<Poly> coeffs;
        if (poly_series(num_, vdep, v, dir, len, base, coeffs)) {
            RatFun carried(Poly(1), vfree, sc_);
            for (size_t i = 0; i < len; ++i) {
                int e = base + (dir > 0 ? (int)i : -(int)i);
                if (e < lo || e > hi || coeffs[i].is_zero()) continue;
                out[e] = RatFun(coeffs[i]) * carried;
            }
            return out;
        }
    }

    // Numerator slices as a (finite) series in v.
    VSeries acc;
    {
        auto sl = num_.slices(v);
        int base = dir > 0 ? sl.begin()->first : sl.rbegin()->first;
        acc.base = base;
        acc.c.assign(len, RatFun());
        for (const auto& [e, p] : sl) {
            size_t off = (size_t)(dir > 0 ? e - base : base - e);
            if (off < len) acc.c[off] += RatFun(p);
        }
    }

    for (const auto& [f, m] : vdep) {
        auto sl = f.slices(v);
        int fb = dir > 0 ? sl.begin()->first : sl.rbegin()->first;
        const Poly& lead = dir > 0 ? sl.begin()->second : sl.rbegin()->second;
        RatFun lead_inv = RatFun(lead).inv();
        // 1/f = v^{-fb} * lead_inv * sum_j (-(rest/lead) v^{rel})^j
        VSeries inv1;
        inv1.base = -fb;
        inv1.c.assign(len, RatFun());
        inv1.c[0] = lead_inv;
        VSeries rest;  // -(rest/lead), relative offsets
        rest.base = 0;
        rest.c.assign(len, RatFun());
        bool nontrivial = false;
        for (const auto& [e, p] : sl) {
            if (e == fb) continue;
            size_t off = (size_t)(dir > 0 ? e - fb : fb - e);
            if (off < len) {
                rest.c[off] += RatFun(p) * lead_inv * RatFun(-1);
                nontrivial = true;
            }
        }
        if (nontrivial) {
            VSeries geom;  // sum rest^j, truncated
            geom.base = 0;
            geom.c.assign(len, RatFun());
            geom.c[0] = RatFun(1);
            VSeries pw = rest;
            for (size_t j = 1; j < len; ++j) {
                bool any = false;
                for (size_t i = 0; i < len; ++i)
                    if (!pw.c[i].is_zero()) {
                        geom.c[i] += pw.c[i];
                        any = true;
                    }
                if (!any) break;
                pw = series_mul(pw, rest, len);
            }
            inv1 = series_mul(inv1, geom, len);
        }
        for (int i = 0; i < m; ++i) acc = series_mul(acc, inv1, len);
    }

    RatFun carried(Poly(1), vfree, sc_);
    for (size_t i = 0; i < len; ++i) {
        int e = acc.base + (dir > 0 ? (int)i : -(int)i);
        if (dir > 0 ? (e < lo || e > hi) : (e < lo || e > hi)) continue;
        if (acc.c[i].is_zero()) continue;
        out[e] = acc.c[i] * carried;
    }
    return out;
}

RatFun RatFun::series_coeff(int v, int e, int dir) const {
    auto m = series(v, e, e, dir);
    auto it = m.find(e);
    return it == m.end() ? RatFun() : it->second;
}

// ---------------------------------------------------------------------------

RatFun SeriesWindow::at(const std::vector<int>& e) const {
    auto it = coeff.find(e);
    return it == coeff.end() ? RatFun() : it->second;
}

SeriesWindow SeriesWindow::mul(const SeriesWindow& o) const {
    SeriesWindow r;
    r.regime = regime;
    r.N = N;
    for (const auto& [ea, ca] : coeff)
        for (const auto& [eb, cb] : o.coeff) {
            std::vector<int> e(ea.size());
            bool ok = true;
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (std::abs(e[i]) > N) ok = false;
            }
            if (!ok) continue;
            RatFun prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = r.coeff.find(e);
            if (it == r.coeff.end())
                r.coeff.emplace(e, prod);
            else {
                it->second += prod;
                if (it->second.is_zero()) r.coeff.erase(it);
            }
        }
    return r;
}

namespace {

void expand_rec(const RatFun& f, const std::vector<int>& regime, size_t i, int N,
                std::vector<int>& exps, SeriesWindow& out) {
    if (i == regime.size()) {
        if (!f.is_zero()) out.coeff.emplace(exps, f);
        return;
    }
    // regime lists smallest first; expanding in regime[i] treats it as the
    // smallest among the remaining variables.
    auto sl = f.series(regime[i], -N, N, +1);
    for (auto& [e, c] : sl) {
        exps[i] = e;
        expand_rec(c, regime, i + 1, N, exps, out);
    }
    exps[i] = 0;
}

}  // namespace

SeriesWindow expand_regime(const RatFun& f, const std::vector<int>& regime, int N) {
    SeriesWindow w;
    w.regime = regime;
    w.N = N;
    std::vector<int> exps(regime.size(), 0);
    expand_rec(f, regime, 0, N, exps, w);
    return w;
}

RatFun residue_simple(const RatFun& f, int zi, const Scalar& c, int zj) {
    // Multiply by the locus binomial, then specialize; a surviving vanishing
    // factor signals a pole of order >= 2.
    RatFun lin;
    if (zj >= 0)
        lin = RatFun(Poly::var(zi)) - RatFun(c) * RatFun(Poly::var(zj));
    else
        lin = RatFun(Poly::var(zi)) - RatFun(c);
    RatFun g = f * lin;
    try {
        return g.subst_scalar(zi, c, zj);
    } catch (const PolyDivByZero&) {
        std::ostringstream os;
        os << "pole of order >= 2 at " << var_name(zi) << " = " << c.str();
        if (zj >= 0) os << "*" << var_name(zj);
        throw HigherOrderPole(os.str());
    }
}

RatFun constant_term_iterated_rf(const RatFun& f, const std::vector<int>& order) {
    RatFun g = f;
    for (int v : order) g = g.series_coeff(v, 0, +1);
    return g;
}

Scalar constant_term_iterated(const RatFun& f, const std::vector<int>& order) {
    return constant_term_iterated_rf(f, order).to_scalar();
}

RatFun iterated_residue_collection(const RatFun& f, const std::vector<int>& groups,
                                   const Scalar& step) {
    RatFun g = f;
    int base = 1;
    std::vector<int> bases;
    for (int lambda : groups) {
        if (lambda < 1) throw std::domain_error("group sizes must be >= 1");
        for (int m = 1; m < lambda; ++m)
            g = residue_simple(g, z_var(base + m), step.pow(m), z_var(base));
        bases.push_back(base);
        base += lambda;
    }
    for (size_t s = 0; s < bases.size(); ++s)
        if (bases[s] != (int)s + 1)
            g = g.subst_mono(z_var(bases[s]), Mono::var(z_var((int)s + 1)));
    return g;
}

}  // namespace wsh
