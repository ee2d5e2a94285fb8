#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wshuffle/rmatrix.hpp"

using namespace wsh;

TEST_CASE("R matrix entries") {
    // n=1: R(x) is the scalar (q - x/q)/(1-x)
    TensorRat r1 = make_R(1, arg_var(kX));
    RatFun expect = (RatFun(Scalar::q()) - RatFun(Poly::var(kX)) * RatFun(Scalar::q(-1))) *
                    (RatFun(1) - RatFun(Poly::var(kX))).inv();
    CHECK(r1.at(0, 0) == expect);

    // n=2: E_12 tensor E_21 entry is (q - q^-1) x / (1-x); E_21 tensor E_12
    // entry is (q - q^-1)/(1-x)
    TensorRat r2 = make_R(2, arg_var(kX));
    RatFun off = (RatFun(Scalar::q()) - RatFun(Scalar::q(-1))) *
                 (RatFun(1) - RatFun(Poly::var(kX))).inv();
    CHECK(r2.at(0 * 2 + 1, 1 * 2 + 0) == off * RatFun(Poly::var(kX)));
    CHECK(r2.at(1 * 2 + 0, 0 * 2 + 1) == off);
    // E_11 tensor E_22 diagonal entry is 1
    CHECK(r2.at(0 * 2 + 1, 0 * 2 + 1) == RatFun(1));

    // colon operator
    TensorRat colon = make_colon(2);
    CHECK(colon.at(0 * 2 + 1, 1 * 2 + 0) == RatFun(Scalar::q(-1) - Scalar::q()));
}

TEST_CASE("R triangular at 0 and infinity") {
    for (int n : {2, 3}) {
        TensorRat r = make_R(n, arg_var(kX));
        TensorRat at0 = r.map_entries([](const RatFun& v) {
            return v.series_coeff(kX, 0, +1);
        });
        TensorRat atinf = r.map_entries([](const RatFun& v) {
            return v.series_coeff(kX, 0, -1);
        });
        for (const auto& [rc, v] : at0.entries()) {
            auto rd = at0.digits(rc.first), cd = at0.digits(rc.second);
            CHECK(rd[0] >= cd[0]);  // lower triangular in the first index
        }
        for (const auto& [rc, v] : atinf.entries()) {
            auto rd = atinf.digits(rc.first), cd = atinf.digits(rc.second);
            CHECK(rd[0] <= cd[0]);
        }
    }
}

TEST_CASE("permute_conj") {
    int n = 2;
    // (12) (E_12 tensor E_21) (12) = E_21 tensor E_12
    TensorRat e12 = TensorRat::unit(n, 1, 2), e21 = TensorRat::unit(n, 2, 1);
    TensorRat x = e12.tensor(e21);
    CHECK(x.permute_conj({2, 1}) == e21.tensor(e12));
    // identity permutation
    CHECK(x.permute_conj({1, 2}) == x);
    // group action: conj(sigma tau) = conj(sigma) of conj(tau)
    TensorRat y = e12.tensor(e21).tensor(TensorRat::unit(n, 1, 1));
    std::vector<int> s = {2, 3, 1}, t = {2, 1, 3};
    std::vector<int> st(3);
    for (int a = 0; a < 3; ++a) st[a] = s[t[a] - 1];
    CHECK(y.permute_conj(st) == y.permute_conj(t).permute_conj(s));
    // (ab) R_ac(x) = R_bc(x) (ab) on three factors
    TensorRat perm12 = make_perm(n).embed({1, 2}, 3);
    TensorRat r13 = make_R(n, arg_var(kX)).embed({1, 3}, 3);
    TensorRat r23 = make_R(n, arg_var(kX)).embed({2, 3}, 3);
    CHECK(perm12 * r13 == r23 * perm12);
}

TEST_CASE("embed") {
    int n = 2;
    CHECK(TensorRat::identity(n, 1).embed({2}, 3) == TensorRat::identity(n, 3));
    TensorRat e12 = TensorRat::unit(n, 1, 2);
    TensorRat want = TensorRat::identity(n, 1).tensor(e12);
    CHECK(e12.embed({2}, 2) == want);
    CHECK_THROWS(e12.tensor(e12).embed({1, 1}, 2));
    // embed-then-multiply on disjoint positions commutes
    TensorRat a = make_R(n, arg_var(kX)).embed({1, 2}, 3);
    TensorRat b = TensorRat::unit(n, 2, 1).embed({3}, 3);
    CHECK(a * b == b * a);
}

TEST_CASE("transpose and trace") {
    int n = 2;
    CHECK(TensorRat::unit(n, 1, 2).partial_transpose({1}) == TensorRat::unit(n, 2, 1));
    CHECK(TensorRat::identity(n, 3).trace() == RatFun(8));
    // Tr_1(R(x)) is diagonal and matches the explicit entry sum
    TensorRat r = make_R(n, arg_var(kX));
    TensorRat tr1 = r.trace_over({1});
    for (const auto& [rc, v] : tr1.entries()) CHECK(rc.first == rc.second);
    for (int j = 1; j <= n; ++j) {
        RatFun sum;
        for (int i = 1; i <= n; ++i)
            sum += r.at((uint32_t)((i - 1) * n + (j - 1)), (uint32_t)((i - 1) * n + (j - 1)));
        CHECK(tr1.at((uint32_t)(j - 1), (uint32_t)(j - 1)) == sum);
    }
    // trace over an embedded identity factor scales by n
    TensorRat x = make_R(n, arg_var(kX)).embed({1, 2}, 3);
    CHECK(x.trace_over({3}) == make_R(n, arg_var(kX)).scale(RatFun(n)));
}

TEST_CASE("structural checks n = 1..3") {
    for (int n : {1, 2, 3}) {
        CAPTURE(n);
        CHECK(check_ybe(n) == "");
        CHECK(check_unitarity(n) == "");
        CHECK(check_R_residue(n) == "");
        CHECK(check_property(n) == "");
        CHECK(check_elem2(n) == "");
        CHECK(check_elem3(n) == "");
        CHECK(check_elem1(n, 0xC0FFEE + n) == "");
    }
}

TEST_CASE("unitarity scalar is f") {
    // n=2 unitarity: R12(z) R21(1/z) has every diagonal entry equal to f(z)
    TensorRat prod = make_R(2, arg_var(kX)) * make_R21(2, arg_var(kX).inv());
    RatFun f = make_f(2, arg_var(kX));
    CHECK(prod.at(0, 0) == f);
    CHECK(prod.at(3, 3) == f);
}

TEST_CASE("Qbar pole matches Rtilde pole") {
    // Qbar^+ and Rtilde^+ have (up to scalar) the same simple pole/residue
    // at x = qbar^{-2}.
    int n = 2;
    Scalar locus = Scalar::t(-2 * n);
    TensorRat rt = make_Rtilde_plus(n, arg_var(kX));
    TensorRat qb = make_Qbar_plus(n, arg_var(kX));
    TensorRat res_rt = rt.map_entries(
        [&](const RatFun& v) { return residue_simple(v, kX, locus, -1); });
    TensorRat res_qb = qb.map_entries(
        [&](const RatFun& v) { return residue_simple(v, kX, locus, -1); });
    REQUIRE(!res_rt.is_zero());
    REQUIRE(!res_qb.is_zero());
    // proportionality: res_rt = c * res_qb for one scalar c
    const auto& [rc0, v0] = *res_qb.entries().begin();
    RatFun c = res_rt.at(rc0.first, rc0.second) / v0;
    CHECK(res_rt == res_qb.map_entries([&](const RatFun& v) { return v * c; }));
}
