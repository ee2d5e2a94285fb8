#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wshuffle/pairing.hpp"
#include "wshuffle/prob.hpp"

using namespace wsh;

namespace {

bool class_eq(int n, int i, int j, int a, int b) {
    return (a - i) == (b - j) && (a - i) % n == 0;
}

Word random_word(int n, int len, SplitMix64& rng) {
    Word w;
    for (int s = 0; s < len; ++s) {
        WordLetter l;
        l.u = rng.range(1, n);
        l.v = rng.range(1, n);
        l.e = rng.range(-1, 1);
        l.c = Scalar(rng.range(1, 3)) * Scalar::q(rng.range(-1, 1));
        w.push_back(l);
    }
    return w;
}

}  // namespace

TEST_CASE("pairing of unit elements") {
    ShuffleElem one_minus = shuffle_unit(2, -1);
    CHECK(pair_P1(2, {}, one_minus) == Scalar(1));
    ShuffleElem one_plus = shuffle_unit(2, +1);
    CHECK(pair_P2(2, one_plus, {}) == Scalar(1));
    // degree mismatch pairs to zero
    CHECK(pair_P1(2, {f_plus1_letter(2, 1, 2)}, one_minus).is_zero());
}

TEST_CASE("the basic pairing value (k = 1)") {
    Scalar expect = Scalar(1) - Scalar::q(-2);
    for (int n : {1, 2}) {
        for (int i = 1; i <= n; ++i)
            for (int j = i - 2; j <= i + 2; ++j)
                for (int a = 1; a <= n; ++a)
                    for (int b = a - 2; b <= a + 2; ++b) {
                        // <F^{(1)}_{ij}, F^{(-1)}_{ab}> is (1-q^{-2}) exactly
                        // when (a,b) is the class (j,i)
                        Scalar via_p1 =
                            pair_P1(n, {f_plus1_letter(n, i, j)}, make_F(n, -1, a, b, 1));
                        Scalar via_p2 =
                            pair_P2(n, make_F(n, +1, i, j, 1), {f_minus1_letter(n, a, b)});
                        Scalar want = class_eq(n, a, b, j, i) ? expect : Scalar(0);
                        CHECK(via_p1 == want);
                        CHECK(via_p2 == want);
                    }
    }
}

TEST_CASE("P1 and P2 agree on monomial word pairs") {
    SplitMix64 rng(987654321);
    int checked = 0;
    for (int n : {1, 2}) {
        for (int len = 1; len <= 3; ++len) {
            int reps = len == 3 ? (n == 2 ? 2 : 4) : 6;
            for (int r = 0; r < reps; ++r) {
                Word iw = random_word(n, len, rng);
                Word jw = random_word(n, len, rng);
                Scalar p1 = pair_P1(n, iw, word_elem(n, -1, jw));
                Scalar p2 = pair_P2(n, word_elem(n, +1, iw), jw);
                CHECK(p1 == p2);
                ++checked;
            }
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("pairing is bilinear") {
    int n = 2;
    SplitMix64 rng(5150);
    Word iw = random_word(n, 2, rng);
    Word jw = random_word(n, 2, rng);
    Word jw2 = random_word(n, 2, rng);
    ShuffleElem x = word_elem(n, -1, jw), y = word_elem(n, -1, jw2);
    Scalar c = Scalar::q(1) + Scalar::t(-1);
    ShuffleElem cx = x;
    cx.value = x.value.scale(RatFun(c));
    CHECK(pair_P1(n, iw, cx) == c * pair_P1(n, iw, x));
    ShuffleElem sum = x;
    sum.value = x.value + y.value;
    CHECK(pair_P1(n, iw, sum) == pair_P1(n, iw, x) + pair_P1(n, iw, y));
}

TEST_CASE("stringing arcs: the combinatorial pairing against the integral") {
    int n = 2;
    Scalar base = Scalar(1) - Scalar::q(-2);

    // t = 1 reduces to the basic value
    CHECK(pair_combinatorial(n, 1, 2, 1, {{2, 1, 1}}) == base);
    CHECK(pair_combinatorial(n, 1, 2, 1, {{1, 2, 1}}).is_zero());

    // t = 2, slope 1: <F^{(2)}_{31}, F_{12}^{(-1)} F_{23}^{(-1)}> = (1-q^{-2})^2
    ShuffleElem f31 = make_F(n, +1, 3, 1, 2);
    Word stringing = {f_minus1_letter(n, 1, 2), f_minus1_letter(n, 2, 3)};
    Scalar got = pair_P2(n, f31, stringing);
    CHECK(got == base * base);
    CHECK(pair_combinatorial(n, 3, 1, 2, {{1, 2, 1}, {2, 3, 1}}) == base * base);

    // non-stringing configurations pair to zero
    Word broken = {f_minus1_letter(n, 1, 2), f_minus1_letter(n, 1, 2)};
    CHECK(pair_P2(n, f31, broken).is_zero());
    CHECK(pair_combinatorial(n, 3, 1, 2, {{1, 2, 1}, {1, 2, 1}}).is_zero());
    // wrong order does not string to [j;i)
    Word reversed = {f_minus1_letter(n, 2, 3), f_minus1_letter(n, 1, 2)};
    CHECK(pair_P2(n, f31, reversed).is_zero());
}

TEST_CASE("mu = 0 stringing (Cartan-type arcs)") {
    // slope 0: F^{(1)}_{ii} against F^{(-1)}_{jj}; arcs are empty, so the
    // pairing is (1-q^{-2}) exactly when i = j as residues
    int n = 2;
    Scalar base = Scalar(1) - Scalar::q(-2);
    CHECK(pair_P2(n, make_F(n, +1, 1, 1, 1), {f_minus1_letter(n, 1, 1)}) == base);
    CHECK(pair_P2(n, make_F(n, +1, 1, 1, 1), {f_minus1_letter(n, 2, 2)}).is_zero());
    CHECK(pair_combinatorial(n, 1, 1, 1, {{1, 1, 1}}) == base);
    CHECK(pair_combinatorial(n, 1, 1, 1, {{2, 2, 1}}).is_zero());
}
