#pragma once

#include "wshuffle/rmatrix.hpp"

namespace wsh {

// The matrix shuffle algebra: symmetric End(V^{tensor k})-valued rational
// functions in z_1..z_k with the R-matrix-twisted product. Elements carry
// their sign (+ for the plus algebra, - for the minus one); the sign selects
// which Rtilde enters the product.

struct ShuffleElem {
    int n = 1;
    int sign = +1;  // +1: plus algebra, -1: minus algebra
    int k = 0;      // vertical degree magnitude
    TensorRat value;  // arity k, variables z_1..z_k

    bool is_unit() const { return k == 0; }
};

// Permutations of {1..k} as vectors sigma with sigma[a-1] = sigma(a).
std::vector<std::vector<int>> all_permutations(int k);
std::vector<int> reduced_word(const std::vector<int>& sigma);  // letters s_i
std::vector<std::vector<int>> all_reduced_words(const std::vector<int>& sigma);

// Braid lift R_sigma from a reduced word: crossings emit R_{ab}(z_a/z_b) on
// the strand labels they swap, multiplied left to right.
TensorRat braid_lift_word(int n, int k, const std::vector<int>& word);
TensorRat braid_lift(int n, const std::vector<int>& sigma);

// R_{omega_k} = prod_{i<j} R_ij(z_i/z_j), the lift of the longest element.
TensorRat make_R_omega(int n, int k);

// X -> sigma X sigma^{-1} with variables renamed z_a -> z_{sigma(a)}.
TensorRat permute_with_vars(const TensorRat& x, const std::vector<int>& sigma);

// Sym X = sum_sigma R_sigma X_{sigma(...)}(z_{sigma(...)}) R_sigma^{-1}.
TensorRat symmetrize(const TensorRat& x);

// Whether x satisfies the symmetry identity for every sigma in S(k).
bool is_symmetric_elem(const TensorRat& x);

ShuffleElem shuffle_unit(int n, int sign);
ShuffleElem shuffle_product(const ShuffleElem& x, const ShuffleElem& y);

// The generators F_{ij}^{(sign k)} for a class (i,j) given by any integer
// lift; k >= 1.
ShuffleElem make_F(int n, int sign, int i, int j, int k);

// Degree bookkeeping: hdeg in Z^n, vdeg = sign*k, slope = |hdeg|/vdeg.
struct DegreeInfo {
    std::vector<int> hdeg;
    int vdeg = 0;
    bool slope_defined = false;
    int slope_num = 0, slope_den = 1;  // reduced, den > 0
};
// Throws std::domain_error on non-homogeneous input.
DegreeInfo degree_slope(const ShuffleElem& x);

// Integer arc [i;j) in Z^n.
std::vector<int> arc_vec(int n, int i, int j);

// The X^(k)(y) functional on words of minus generators, computed from the
// closed-form single-factor value and the multiplicative shift rule
// (X*X')^{(k+k')}(y) = X^{(k)}(y) X'^{(k')}(y p^{-2k}).
struct FMinusFactor {
    int i = 0, j = 0;  // generator F^{(-k)}_{ij}
    int k = 1;
};
// Single-factor value at argument coeff * y^{pm 1}: the matrix is a monomial
// in y; yvar names the variable used.
TensorRat xk_single(int n, const FMinusFactor& f, int yvar, const Scalar& shift);
TensorRat xk_functional(int n, const std::vector<FMinusFactor>& word, int yvar);

}  // namespace wsh
