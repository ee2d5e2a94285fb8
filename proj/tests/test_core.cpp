#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wshuffle/prob.hpp"
#include "wshuffle/ratfun.hpp"

using namespace wsh;

namespace {

Scalar rand_scalar(SplitMix64& rng) {
    auto rand_poly = [&](bool nonzero) {
        Poly p;
        int terms = rng.range(1, 3);
        for (int i = 0; i < terms; ++i) {
            Mono m;
            m.e[kQ] = (int16_t)rng.range(-2, 3);
            m.e[kT] = (int16_t)rng.range(-2, 3);
            p += Poly(m, rng.range(-4, 4));
        }
        if (nonzero && p.is_zero()) p += Poly(1);
        return p;
    };
    Poly den = rand_poly(true);
    return Scalar(rand_poly(false), den);
}

}  // namespace

TEST_CASE("scalar arithmetic basics") {
    // q * q^{-1} = 1
    CHECK((Scalar::q(1) * Scalar::q(-1)).is_one());
    // (q^2 - 1)/(q - 1) = q + 1
    Scalar a(Poly::var(kQ, 2) - Poly(1), Poly::var(kQ) - Poly(1));
    CHECK(a == Scalar::q() + Scalar(1));
    // p(n=2) = q^2 t^2
    CHECK(Scalar::p_pow(2, 1) == Scalar::q(2) * Scalar::t(2));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), PolyDivByZero);
}

TEST_CASE("scalar canonical form and field axioms") {
    SplitMix64 rng(20260809);
    for (int i = 0; i < 40; ++i) {
        Scalar a = rand_scalar(rng), b = rand_scalar(rng), c = rand_scalar(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b * c) == (a * b) * c);
        CHECK((a - a).is_zero());
        CHECK((a - a) == Scalar(0));
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
}

TEST_CASE("scalar canonical string") {
    Scalar s = (Scalar(1) - Scalar::q(-2));
    CHECK(s.str() == "q^2 - 1 / q^2");
    CHECK(Scalar(0).str() == "0");
    CHECK((Scalar::q(2) * Scalar::t(1)).str() == "q^2*t");
}

static RatFun ratio_yx() { return RatFun(Poly(Mono::var(kY) / Mono::var(kX), 1)); }

TEST_CASE("expand_regime examples") {
    RatFun f = (RatFun(1) - ratio_yx()).inv();
    // |x| >> |y| : y is smallest
    SeriesWindow w = expand_regime(f, {kY, kX}, 2);
    // expect 1 + y/x + (y/x)^2
    CHECK(w.at({0, 0}) == RatFun(1));
    CHECK(w.at({1, -1}) == RatFun(1));
    CHECK(w.at({2, -2}) == RatFun(1));
    CHECK(w.at({1, 0}).is_zero());
    CHECK((int)w.coeff.size() == 3);

    // |x| << |y| : x smallest; expect -x/y - (x/y)^2
    SeriesWindow w2 = expand_regime(f, {kX, kY}, 2);
    CHECK(w2.at({1, -1}) == RatFun(-1));
    CHECK(w2.at({2, -2}) == RatFun(-1));
    CHECK(w2.at({0, 0}).is_zero());
}

TEST_CASE("rational function identity: two expansions differ by -delta * Res") {
    // F(z) = 1/(1-z), pole at z = 1 with Res_{z=1} F/z = -1.
    RatFun f = (RatFun(1) - RatFun(Poly::var(kX))).inv();
    int N = 4;
    auto lo = expand_regime(f, {kX}, N);                     // |z| << 1
    RatFun finv = f.subst_mono(kX, Mono::var(kX, -1));       // not used; guard
    (void)finv;
    SeriesWindow hi;
    hi.regime = {kX};
    hi.N = N;
    for (int e = -N; e <= N; ++e) {
        RatFun c = f.series_coeff(kX, e, -1);
        if (!c.is_zero()) hi.coeff[{e}] = c;
    }
    RatFun res = residue_simple(f * RatFun(Poly::var(kX)).inv(), kX, Scalar(1), -1);
    CHECK(res == RatFun(-1));
    for (int e = -N; e <= N; ++e) {
        RatFun diff = lo.at({e}) - hi.at({e});
        // -(sum over poles) delta(z/1) * Res = +1 at every power
        CHECK(diff == -res);
    }
}

TEST_CASE("expand is multiplicative within window") {
    RatFun f = (RatFun(1) - ratio_yx()).inv();
    RatFun g = (RatFun(1) - ratio_yx() * RatFun(Scalar::q(2))).inv();
    int N = 3;
    auto wf = expand_regime(f, {kY, kX}, N);
    auto wg = expand_regime(g, {kY, kX}, N);
    auto wfg = expand_regime(f * g, {kY, kX}, N);
    auto prod = wf.mul(wg);
    // both series are supported on e_y >= 0, so the product is complete
    // throughout the window
    for (const auto& [e, c] : wfg.coeff) CHECK(prod.at(e) == c);
    for (const auto& [e, c] : prod.coeff) CHECK(wfg.at(e) == c);
}

TEST_CASE("residue_simple") {
    // Res_{x=1} 1/(1-x) = -1
    RatFun f = (RatFun(1) - RatFun(Poly::var(kX))).inv();
    CHECK(residue_simple(f, kX, Scalar(1), -1) == RatFun(-1));
    // regular function -> 0
    RatFun g = RatFun(Poly::var(kX, 2)) + RatFun(1);
    CHECK(residue_simple(g, kX, Scalar(1), -1).is_zero());
    // n=1 specialization of the R-matrix residue: Res_{x=1} (q - x/q)/(1-x)
    RatFun h = (RatFun(Scalar::q()) - RatFun(Poly::var(kX)) * RatFun(Scalar::q(-1))) *
               (RatFun(1) - RatFun(Poly::var(kX))).inv();
    CHECK(residue_simple(h, kX, Scalar(1), -1) == RatFun(Scalar::q(-1) - Scalar::q()));
    // higher-order pole -> error
    RatFun d = (RatFun(1) - RatFun(Poly::var(kX))).inv().pow(2);
    CHECK_THROWS_AS(residue_simple(d, kX, Scalar(1), -1), HigherOrderPole);
}

TEST_CASE("constant term extraction") {
    CHECK(constant_term_iterated(RatFun(1), {z_var(1), z_var(2)}) == Scalar(1));
    RatFun z12 = RatFun(Poly(Mono::var(z_var(1)) / Mono::var(z_var(2)), 1));
    CHECK(constant_term_iterated(z12, {z_var(1), z_var(2)}).is_zero());
    RatFun f = (RatFun(1) - z12).inv();
    CHECK(constant_term_iterated(f, {z_var(1), z_var(2)}) == Scalar(1));
    // reversed order: now z2 is smallest, 1/(1 - z1/z2) = -z2/z1 (1 + ...)
    CHECK(constant_term_iterated(f, {z_var(2), z_var(1)}).is_zero());
}

TEST_CASE("iterated residue collection") {
    int z1 = z_var(1), z2 = z_var(2), z3 = z_var(3);
    // single-variable group: relabel only
    RatFun f = RatFun(Poly::var(z1, 2));
    CHECK(iterated_residue_collection(f, {1}, Scalar::t(2)) == f);
    // F = 1/(z2 - z1 s): residue at z2 = z1 s is 1
    Scalar s = Scalar::t(2);
    RatFun g = (RatFun(Poly::var(z2)) - RatFun(s) * RatFun(Poly::var(z1))).inv();
    CHECK(iterated_residue_collection(g, {2}, s) == RatFun(1));
    // chain of length 3 on a product of simple factors = product of residues
    RatFun h = g * (RatFun(Poly::var(z3)) - RatFun(s * s) * RatFun(Poly::var(z1))).inv() *
               RatFun(Poly::var(z3));
    RatFun step1 = residue_simple(h, z2, s, z1);
    RatFun step2 = residue_simple(step1, z3, s * s, z1);
    RatFun direct = iterated_residue_collection(h, {3}, s);
    CHECK(direct == step2);
    CHECK(direct == RatFun(Poly::var(z1)) * RatFun(s * s));
}

TEST_CASE("probabilistic equality oracle agrees with exact equality") {
    CHECK(miller_rabin_is_prime(kDefaultPrime));
    SplitMix64 rng(42);
    for (int i = 0; i < 20; ++i) {
        Scalar a = rand_scalar(rng), b = rand_scalar(rng);
        RatFun fa(a), fb(b);
        RatFun prod = fa * fb, prod2 = fb * fa;
        CHECK(prob_equal(prod, prod2, 7 + i));
        bool exact = (fa == fb);
        bool prob = prob_equal(fa, fb, 1000 + i);
        if (exact) CHECK(prob);
        if (!prob) CHECK(!exact);
        // distinct pairs should be caught
        if (!exact) CHECK(!prob_equal(fa, fb, 2000 + i));
    }
}
