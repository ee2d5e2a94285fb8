#include "wshuffle/scalar.hpp"

#include <sstream>

namespace wsh {

namespace {

// Lex order on (deg q, deg t); used for the sign normalization and for the
// canonical printing order of scalars.
bool qt_lex_less(const Mono& a, const Mono& b) {
    if (a.e[kQ] != b.e[kQ]) return a.e[kQ] < b.e[kQ];
    return a.e[kT] < b.e[kT];
}

const Term* qt_greatest(const Poly& p) {
    const Term* best = nullptr;
    for (const auto& t : p.terms())
        if (!best || qt_lex_less(best->m, t.m)) best = &t;
    return best;
}

std::string qt_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::vector<const Term*> ts;
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [](const Term* a, const Term* b) { return qt_lex_less(b->m, a->m); });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : ts) {
        mpz_class a = t->c;
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
        if (t->m.is_one())
            os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << t->m.str();
        }
    }
    return os.str();
}

}  // namespace

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PolyDivByZero();
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    // Clear Laurent monomial parts, pushing the net shift to the proper side.
    Mono mn = num_.mono_content(), md = den_.mono_content();
    num_ = num_.mul_mono(mn.inv());
    den_ = den_.mul_mono(md.inv());
    Mono shift = mn / md;
    Mono up = Mono::one(), down = Mono::one();
    for (int v = 0; v < kNumVars; ++v)
        (shift.e[v] >= 0 ? up.e[v] : down.e[v]) = shift.e[v];
    num_ = num_.mul_mono(up);
    den_ = den_.mul_mono(down.inv());

    Poly g = poly_gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    if (qt_greatest(den_)->c < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Poly g = poly_gcd(den_, o.den_);
    Poly db = *o.den_.divide_exact(g);
    Poly da = *den_.divide_exact(g);
    return Scalar(num_ * db + o.num_ * da, den_ * db);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    return Scalar(*num_.divide_exact(g1) * *o.num_.divide_exact(g2),
                  *den_.divide_exact(g2) * *o.den_.divide_exact(g1));
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw PolyDivByZero();
    return *this * o.inv();
}

Scalar Scalar::inv() const {
    if (is_zero()) throw PolyDivByZero();
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
    if (k == 0) return Scalar(1);
    Scalar base = k > 0 ? *this : inv();
    int e = k > 0 ? k : -k;
    Scalar r(1);
    while (e) {
        if (e & 1) r *= base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string Scalar::str() const {
    if (den_.is_one()) return qt_str(num_);
    return qt_str(num_) + " / " + qt_str(den_);
}

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar scalar_div(const Scalar& a, const Scalar& b) { return a / b; }

}  // namespace wsh
