#include "wshuffle/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace wsh {

namespace {
const char* kNames[kNumVars] = {"q", "t", "z1", "z2", "z3", "z4", "z5",
                                "z6", "z7", "z8", "x",  "y",  "u",  "beta"};
}

int z_var(int i) {
    if (i < 1 || i > 8) throw std::out_of_range("z index out of range");
    return 1 + i;
}

const char* var_name(int v) { return kNames[v]; }

int var_by_name(const std::string& name) {
    for (int v = 0; v < kNumVars; ++v)
        if (name == kNames[v]) return v;
    return -1;
}

Mono Mono::var(int v, int exp) {
    Mono m;
    m.e[v] = static_cast<int16_t>(exp);
    return m;
}

bool Mono::is_one() const {
    for (auto x : e)
        if (x) return false;
    return true;
}

int Mono::total_deg() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
    return r;
}

Mono Mono::operator/(const Mono& o) const {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
    return r;
}

Mono Mono::pow(int k) const {
    Mono r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<int16_t>(e[i] * k);
    return r;
}

Mono Mono::inv() const { return Mono{}.operator/(*this); }

bool Mono::divides(const Mono& o) const {
    for (int i = 0; i < kNumVars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

std::string Mono::str() const {
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += kNames[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

bool MonoGrlexLess::operator()(const Mono& a, const Mono& b) const {
    int da = a.total_deg(), db = b.total_deg();
    if (da != db) return da < db;
    for (int i = 0; i < kNumVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

Poly::Poly(long v) {
    if (v) terms_.push_back({Mono::one(), mpz_class(v)});
}

Poly::Poly(const mpz_class& v) {
    if (v != 0) terms_.push_back({Mono::one(), v});
}

Poly::Poly(const Mono& m, const mpz_class& c) {
    if (c != 0) terms_.push_back({m, c});
}

Poly Poly::var(int v, int exp) { return Poly(Mono::var(v, exp), 1); }

Poly Poly::from_terms(std::vector<Term> ts) {
    Poly p;
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c == 1;
}

bool Poly::is_integer() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

const Term& Poly::lead() const {
    if (terms_.empty()) throw std::logic_error("lead of zero polynomial");
    return terms_.front();
}

void Poly::normalize() {
    MonoGrlexLess less;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return less(b.m, a.m); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    MonoGrlexLess less;
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && less(o.terms_[j].m, terms_[i].m))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || less(terms_[i].m, o.terms_[j].m)) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            mpz_class c = terms_[i].c + o.terms_[j].c;
            if (c != 0) r.terms_.push_back({terms_[i].m, std::move(c)});
            ++i, ++j;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    if (o.is_monomial()) {
        Poly r(*this);
        for (auto& t : r.terms_) {
            t.m = t.m * o.terms_[0].m;
            t.c *= o.terms_[0].c;
        }
        return r;
    }
    if (is_monomial()) return o * *this;
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc.push_back({a.m * b.m, a.c * b.c});
    return from_terms(std::move(acc));
}

Poly Poly::mul_mono(const Mono& m) const {
    Poly r(*this);
    for (auto& t : r.terms_) t.m = t.m * m;
    return r;
}

Poly Poly::mul_int(const mpz_class& c) const {
    if (c == 0) return Poly();
    Poly r(*this);
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

int Poly::max_deg(int v) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.m.e[v] > d) d = t.m.e[v];
        first = false;
    }
    return d;
}

int Poly::min_deg(int v) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.m.e[v] < d) d = t.m.e[v];
        first = false;
    }
    return d;
}

bool Poly::only_vars_qt() const {
    for (const auto& t : terms_)
        for (int v = 2; v < kNumVars; ++v)
            if (t.m.e[v]) return false;
    return true;
}

int Poly::total_deg() const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        int td = t.m.total_deg();
        if (first || td > d) d = td;
        first = false;
    }
    return d;
}

Mono Poly::mono_content() const {
    if (terms_.empty()) return Mono::one();
    Mono m = terms_[0].m;
    for (const auto& t : terms_)
        for (int v = 0; v < kNumVars; ++v)
            m.e[v] = std::min(m.e[v], t.m.e[v]);
    return m;
}

mpz_class Poly::int_content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    if (!terms_.empty() && terms_.front().c < 0) g = -g;
    return g;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw PolyDivByZero();
    if (is_zero()) return Poly();
    if (d.is_monomial()) {
        Poly r(*this);
        mpz_class q, rem;
        for (auto& t : r.terms_) {
            t.m = t.m / d.terms_[0].m;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.c.get_mpz_t(),
                        d.terms_[0].c.get_mpz_t());
            if (rem != 0) return std::nullopt;
            t.c = q;
        }
        return r;
    }
    // Cheap necessary condition: the degree span per variable must dominate
    // the divisor's span.
    for (int v = 0; v < kNumVars; ++v)
        if (max_deg(v) - min_deg(v) < d.max_deg(v) - d.min_deg(v))
            return std::nullopt;
    // Shift Laurent operands to true polynomials; the quotient absorbs the
    // monomial difference.
    Mono msn = mono_content(), msd = d.mono_content();
    Poly dd = d.mul_mono(msd.inv());
    Mono back = msn / msd;
    std::map<Mono, mpz_class, MonoGrlexLess> rem;
    {
        Mono inv = msn.inv();
        for (const auto& t : terms_) rem.emplace(t.m * inv, t.c);
    }
    const Term& dl = dd.lead();
    std::vector<Term> quot;
    mpz_class qc, qr;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        Mono rm = it->first;
        mpz_class rc = std::move(it->second);
        rem.erase(it);
        if (rc == 0) continue;
        if (!dl.m.divides(rm)) return std::nullopt;
        mpz_fdiv_qr(qc.get_mpz_t(), qr.get_mpz_t(), rc.get_mpz_t(),
                    dl.c.get_mpz_t());
        if (qr != 0) return std::nullopt;
        Mono qm = rm / dl.m;
        // rem -= quotient term * dd; the lead cancels by construction
        for (size_t ti = 1; ti < dd.terms().size(); ++ti)
            rem[qm * dd.terms()[ti].m] -= qc * dd.terms()[ti].c;
        quot.push_back({qm, std::move(qc)});
    }
    return from_terms(std::move(quot)).mul_mono(back);
}

Poly Poly::subst_mono(int v, const Mono& m, const mpz_class& c) const {
    std::vector<Term> out;
    mpz_class pw;
    for (const auto& t : terms_) {
        int e = t.m.e[v];
        Term nt;
        nt.m = t.m;
        nt.m.e[v] = 0;
        nt.m = nt.m * m.pow(e);
        if (e >= 0) {
            mpz_pow_ui(pw.get_mpz_t(), c.get_mpz_t(), e);
            nt.c = t.c * pw;
        } else {
            if (c != 1 && c != -1)
                throw std::domain_error("negative power of non-unit in substitution");
            nt.c = (c == -1 && (e % 2)) ? -t.c : t.c;
        }
        out.push_back(std::move(nt));
    }
    return from_terms(std::move(out));
}

Poly Poly::subst_zero(int v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.m.e[v] < 0) throw PolyDivByZero();
        if (t.m.e[v] == 0) out.push_back(t);
    }
    return from_terms(std::move(out));
}

Poly Poly::rename_vars(const std::array<int, kNumVars>& to) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt;
        nt.c = t.c;
        for (int v = 0; v < kNumVars; ++v)
            nt.m.e[to[v]] = static_cast<int16_t>(nt.m.e[to[v]] + t.m.e[v]);
        out.push_back(std::move(nt));
    }
    return from_terms(std::move(out));
}

std::map<int, Poly> Poly::slices(int v) const {
    std::map<int, Poly> out;
    for (const auto& t : terms_) {
        Term nt = t;
        int e = nt.m.e[v];
        nt.m.e[v] = 0;
        out[e] += Poly(nt.m, nt.c);
    }
    return out;
}

std::map<int, Poly> Poly::homogeneous_parts(const std::vector<int>& vars) const {
    std::map<int, Poly> out;
    for (const auto& t : terms_) {
        int d = 0;
        for (int v : vars) d += t.m.e[v];
        out[d] += Poly(t.m, t.c);
    }
    return out;
}

uint64_t Poly::eval_mod(const std::array<uint64_t, kNumVars>& pt, uint64_t p) const {
    auto mulmod = [p](uint64_t a, uint64_t b) {
        return static_cast<uint64_t>((__uint128_t)a * b % p);
    };
    auto powmod = [&](uint64_t b, long e) {
        bool invert = e < 0;
        unsigned long ee = invert ? -e : e;
        uint64_t r = 1;
        while (ee) {
            if (ee & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            ee >>= 1;
        }
        if (invert) {
            // Fermat inverse.
            uint64_t inv = 1, base = r;
            unsigned long k = p - 2;
            while (k) {
                if (k & 1) inv = mulmod(inv, base);
                base = mulmod(base, base);
                k >>= 1;
            }
            return inv;
        }
        return r;
    };
    uint64_t acc = 0;
    for (const auto& t : terms_) {
        mpz_class cm = t.c % mpz_class(p);
        if (cm < 0) cm += p;
        uint64_t v = cm.get_ui();
        for (int i = 0; i < kNumVars; ++i)
            if (t.m.e[i]) v = mulmod(v, powmod(pt[i], t.m.e[i]));
        acc = (acc + v) % p;
    }
    return acc;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpz_class a = t.c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (t.m.is_one()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << t.m.str();
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GCD: content/primitive-part recursion with a subresultant PRS in a chosen
// main variable. Operands here are small (q,t)-polynomials or occasional
// cancellation probes, so the textbook algorithm is enough.

namespace {

// View p as univariate in v with Poly coefficients (v-free).
std::map<int, Poly> univ(const Poly& p, int v) { return p.slices(v); }

Poly from_univ(const std::map<int, Poly>& u, int v) {
    Poly r;
    for (const auto& [e, c] : u) r += c.mul_mono(Mono::var(v, e));
    return r;
}

int univ_deg(const std::map<int, Poly>& u) { return u.empty() ? -1 : u.rbegin()->first; }

Poly univ_lead(const std::map<int, Poly>& u) {
    return u.empty() ? Poly() : u.rbegin()->second;
}

Poly content_wrt(const Poly& p, int v) {
    Poly g;
    for (const auto& [e, c] : univ(p, v)) g = poly_gcd(g, c);
    return g;
}

// Pseudo-remainder of a by b in variable v (both true polynomials in v).
Poly pseudo_rem(Poly a, const Poly& b, int v) {
    auto ub = univ(b, v);
    int db = univ_deg(ub);
    Poly lb = univ_lead(ub);
    while (true) {
        auto ua = univ(a, v);
        int da = univ_deg(ua);
        if (a.is_zero() || da < db) return a;
        Poly la = univ_lead(ua);
        a = a * lb - b * la.mul_mono(Mono::var(v, da - db));
    }
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    auto norm = [](Poly p) {
        if (p.is_zero()) return p;
        p = p.mul_mono(p.mono_content().inv());
        mpz_class c = p.int_content();
        return *p.divide_exact(Poly(c));
    };
    if (a.is_zero()) return norm(b);
    if (b.is_zero()) return norm(a);
    Mono shared = a.mono_content();
    {
        Mono mb = b.mono_content();
        for (int v = 0; v < kNumVars; ++v) shared.e[v] = std::min(shared.e[v], mb.e[v]);
    }
    Poly pa = a.mul_mono(a.mono_content().inv());
    Poly pb = b.mul_mono(b.mono_content().inv());
    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), pa.int_content().get_mpz_t(), pb.int_content().get_mpz_t());
    pa = *pa.divide_exact(Poly(pa.int_content()));
    pb = *pb.divide_exact(Poly(pb.int_content()));

    Poly g;
    if (pa.is_integer() || pb.is_integer()) {
        g = Poly(1);
    } else {
        // Main variable: present in both, smallest combined degree.
        int v = -1, best = 0;
        for (int i = 0; i < kNumVars; ++i) {
            int da = pa.max_deg(i), db = pb.max_deg(i);
            if (da > 0 && db > 0 && (v < 0 || da + db < best)) {
                v = i;
                best = da + db;
            }
        }
        if (v < 0) {
            g = Poly(1);  // no shared variable
        } else {
            Poly ca = content_wrt(pa, v), cb = content_wrt(pb, v);
            Poly cg = poly_gcd(ca, cb);
            Poly u = *pa.divide_exact(ca), w = *pb.divide_exact(cb);
            if (univ_deg(univ(u, v)) < univ_deg(univ(w, v))) std::swap(u, w);
            // Primitive PRS: strip the full coefficient content each step.
            while (!w.is_zero()) {
                Poly r = pseudo_rem(u, w, v);
                u = std::move(w);
                if (r.is_zero()) {
                    w = Poly();
                } else {
                    r = norm(r);
                    w = *r.divide_exact(content_wrt(r, v));
                }
            }
            u = norm(*u.divide_exact(content_wrt(u, v)));
            // PRS yields a gcd candidate; verify (guards against content slip).
            if (pa.divide_exact(u) && pb.divide_exact(u))
                g = cg * u;
            else
                g = cg;
        }
    }
    return norm(g).mul_int(ic).mul_mono(shared);
}

}  // namespace wsh
