#pragma once

#include "wshuffle/shuffle.hpp"

namespace wsh {

// One letter of a degree-1 word: the End(V) Laurent monomial c E_{uv} z^e.
struct WordLetter {
    int u = 1, v = 1;  // 1..n
    int e = 0;         // z exponent
    Scalar c = Scalar(1);
};
using Word = std::vector<WordLetter>;

std::vector<int> word_hdeg(int n, const Word& w);  // in Z^n
ShuffleElem word_elem(int n, int sign, const Word& w);  // shuffle product of letters

// Horizontal degree of an explicit element (entry bookkeeping; throws on
// non-homogeneous input).
std::vector<int> elem_hdeg(const ShuffleElem& x);

// The trace-residue pairing. pair_P1 takes a plus word against an explicit
// minus element; pair_P2 an explicit plus element against a minus word.
// Degree-mismatched arguments pair to zero.
Scalar pair_P1(int n, const Word& iword, const ShuffleElem& xminus);
Scalar pair_P2(int n, const ShuffleElem& xplus, const Word& jword);

// Closed combinatorial pairing of a plus generator against a word of minus
// generators on one slope: (1 - q^{-2})^t when the arcs string together to
// form [j;i), 0 otherwise.
Scalar pair_combinatorial(int n, int i, int j, int k,
                          const std::vector<FMinusFactor>& minus_word);

// Word for the minus generator F^{(-1)}_{ij} (a single Laurent monomial).
WordLetter f_minus1_letter(int n, int i, int j);
// Word for the plus generator F^{(1)}_{ij}.
WordLetter f_plus1_letter(int n, int i, int j);

}  // namespace wsh
