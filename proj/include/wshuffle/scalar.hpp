#pragma once

#include "wshuffle/poly.hpp"

namespace wsh {

// Element of Q(q, t). The field tower is parameterized by n through
// qbar = t^n and p = q^n t^n, so every fractional power appearing in the
// source formulas (qbar^{2i/n}, p^{2/n}) is an honest Laurent monomial here.
// Invariants: reduced fraction, true polynomials (no negative exponents),
// denominator nonzero with positive lexicographically-greatest monomial,
// zero is (0, 1).
class Scalar {
  public:
    Scalar() : num_(), den_(1) {}
    Scalar(long v) : num_(v), den_(1) {}
    Scalar(const mpz_class& v) : num_(v), den_(1) {}
    Scalar(Poly num, Poly den);

    static Scalar q(int e = 1) { return Scalar(Poly::var(kQ, e), Poly(1)); }
    static Scalar t(int e = 1) { return Scalar(Poly::var(kT, e), Poly(1)); }
    // qbar^e with qbar = t^n
    static Scalar qbar(int n, int e = 1) { return t(n * e); }
    // p^(2e/n) = (q t)^(2e); integer p-powers are p_pow(n, e) = (qt)^(ne).
    static Scalar p_frac2(int e) { return Scalar(Poly::var(kQ, 2 * e) * Poly::var(kT, 2 * e), Poly(1)); }
    static Scalar p_pow(int n, int e) { return Scalar(Poly::var(kQ, n * e) * Poly::var(kT, n * e), Poly(1)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inv() const;
    Scalar pow(int k) const;

    // Canonical text form: monomials sorted by (deg q, deg t) descending,
    // decimal integer coefficients, "num / den" when den != 1.
    std::string str() const;

  private:
    void normalize();
    Poly num_, den_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_div(const Scalar& a, const Scalar& b);  // throws PolyDivByZero

}  // namespace wsh
