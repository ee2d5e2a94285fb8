#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wsh {

// Fixed variable registry. Slots 0,1 are the ground-field variables (q, t
// with qbar = t^n); z1..z8 are spectral variables; x, y, u serve the
// two-current relations; beta is the classical-limit symbol.
inline constexpr int kNumVars = 14;
inline constexpr int kQ = 0;
inline constexpr int kT = 1;
inline constexpr int kX = 10;
inline constexpr int kY = 11;
inline constexpr int kU = 12;
inline constexpr int kBeta = 13;

int z_var(int i);  // z_i, 1-based, i <= 8
const char* var_name(int v);
int var_by_name(const std::string& name);  // -1 if unknown

// Exponent vector; negative entries are allowed (Laurent monomials).
struct Mono {
    std::array<int16_t, kNumVars> e{};

    static Mono one() { return Mono{}; }
    static Mono var(int v, int exp = 1);

    bool is_one() const;
    int total_deg() const;
    Mono operator*(const Mono& o) const;
    Mono operator/(const Mono& o) const;
    Mono pow(int k) const;
    Mono inv() const;
    bool operator==(const Mono& o) const { return e == o.e; }
    bool divides(const Mono& o) const;  // componentwise <=
    std::string str() const;
};

// Graded-lex: total degree first, then variable index / exponent.
struct MonoGrlexLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

struct Term {
    Mono m;
    mpz_class c;
    bool operator==(const Term& o) const { return m == o.m && c == o.c; }
};

// Sparse Laurent polynomial with big-integer coefficients, terms sorted in
// descending graded-lex order, no zero coefficients stored.
class Poly {
  public:
    Poly() = default;
    explicit Poly(long v);
    explicit Poly(const mpz_class& v);
    Poly(const Mono& m, const mpz_class& c);
    static Poly var(int v, int exp = 1);
    static Poly from_terms(std::vector<Term> ts);  // normalizes

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_integer() const;
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    const Term& lead() const;  // greatest monomial

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return terms_ == terms2(o); }

    Poly mul_mono(const Mono& m) const;
    Poly mul_int(const mpz_class& c) const;

    // Degree range of variable v across all terms; (0,0) when absent.
    int max_deg(int v) const;
    int min_deg(int v) const;
    bool involves(int v) const { return max_deg(v) != 0 || min_deg(v) != 0; }
    bool only_vars_qt() const;
    int total_deg() const;

    // Componentwise-min monomial (the monomial content part).
    Mono mono_content() const;
    mpz_class int_content() const;  // gcd of coefficients, sign of lead

    // Exact division; nullopt if not divisible. Both sides may be Laurent.
    std::optional<Poly> divide_exact(const Poly& d) const;

    // Substitute z[v] := c * prod(m) where c is an integer and m a monomial.
    Poly subst_mono(int v, const Mono& m, const mpz_class& c = 1) const;
    // Substitute z[v] := 0 (drops terms with positive exponent; negative
    // exponent on v raises).
    Poly subst_zero(int v) const;

    // Simultaneous variable renaming: exponent of v moves to slot to[v].
    Poly rename_vars(const std::array<int, kNumVars>& to) const;

    // Slice decomposition along variable v: map exponent -> coefficient poly.
    std::map<int, Poly> slices(int v) const;

    // Split into homogeneous components of total degree over the given vars.
    std::map<int, Poly> homogeneous_parts(const std::vector<int>& vars) const;

    uint64_t eval_mod(const std::array<uint64_t, kNumVars>& pt, uint64_t p) const;

    std::string str() const;

  private:
    static const std::vector<Term>& terms2(const Poly& p) { return p.terms_; }
    void normalize();
    std::vector<Term> terms_;
};

// Multivariate GCD over Z (positive-leading normalization). Operands may be
// Laurent; the result carries no monomial part beyond the shared one.
Poly poly_gcd(const Poly& a, const Poly& b);

struct PolyDivByZero : std::domain_error {
    PolyDivByZero() : std::domain_error("division by zero") {}
};

}  // namespace wsh
