#pragma once

#include "wshuffle/tensor.hpp"

namespace wsh {

// Trigonometric R-matrix toolkit. All constructors take the spectral
// argument as an explicit rational function, so R_{ab}(z_a/z_b) is
// make_R(n, ratio(a,b)) embedded at (a,b).

RatFun arg_var(int v);                       // the variable itself
RatFun arg_ratio(int va, int vb);            // z_a / z_b
RatFun arg_scaled(const Scalar& c, int v);   // c * v
RatFun arg_const(const Scalar& c);

// R(x) on V tensor V
TensorRat make_R(int n, const RatFun& x);
// R_{21}: the two tensor factors switched
TensorRat make_R21(int n, const RatFun& x);
// Rtilde^+(x) = R_21(1/(x qbar^2)), Rtilde^-(x) = D_2 R_21(p^2/x) D_2^{-1}
TensorRat make_Rtilde_plus(int n, const RatFun& x);
TensorRat make_Rtilde_minus(int n, const RatFun& x);
// f(x) = (1 - x q^2)(1 - x q^-2)/(1 - x)^2
RatFun make_f(int n, const RatFun& x);
// D = diag(q^2, ..., q^{2n})
TensorRat make_D(int n);
// colon operator (q^{-1} - q)(12)
TensorRat make_colon(int n);
// permutation (12) on V tensor V
TensorRat make_perm(int n);
// A = sum_{ij} E_ij tensor E_ij
TensorRat make_A(int n);
// Qbar^{+-}(x), the single-pole companions of Rtilde^{+-}
TensorRat make_Qbar_plus(int n, const RatFun& x);
TensorRat make_Qbar_minus(int n, const RatFun& x);

// Extended elementary matrix E_ij = E_{ibar jbar} w^{floor((i-1)/n) -
// floor((j-1)/n)} for integer i, j and variable (or ratio) w.
int residue_1n(int i, int n);             // representative in {1..n}
int winding(int i, int n);                // floor((i-1)/n)
TensorRat make_E_ext(int n, int i, int j, int var, const RatFun& coeff = RatFun(1));

// Structural checks; each returns an empty string on success or a witness
// description naming the first offending entry.
std::string check_ybe(int n);
std::string check_unitarity(int n);
std::string check_R_residue(int n);
std::string check_property(int n);
std::string check_elem2(int n);
std::string check_elem3(int n);
std::string check_elem1(int n, uint64_t seed);

}  // namespace wsh
