#pragma once

#include "wshuffle/rmatrix.hpp"

namespace wsh {

// Truncated expansion in the classical-limit parameter eps (order <= 2),
// with q = e^eps and p = e^(eps beta); beta stays symbolic. Coefficients
// are End(V tensor V)-valued rational functions in the spectral variables
// and beta over Q.
struct EpsSeries {
    std::array<TensorRat, 3> c;

    EpsSeries() = default;
    explicit EpsSeries(int n) : c{TensorRat(n, 2), TensorRat(n, 2), TensorRat(n, 2)} {}
    EpsSeries operator+(const EpsSeries& o) const;
    EpsSeries operator-(const EpsSeries& o) const;
    EpsSeries operator*(const EpsSeries& o) const;  // truncated at eps^2
    bool order0_zero() const { return c[0].is_zero(); }
};

// eps-expansion of an End(V tensor V) matrix whose entries are rational in
// q and one placeholder variable w; the placeholder is replaced by
// arg * p^{2 pshift} with p = e^(eps beta), and q by e^eps.
EpsSeries eps_expand_matrix(const TensorRat& m, int wvar, const RatFun& arg, int pshift);

// R(z p^{2s}) as an eps-series (entries rational in z = arg and beta).
EpsSeries eps_R(int n, const RatFun& arg, int pshift = 0);

// The closed-form first-order matrix Rbar(z) = sum E_ij (x) E_ji
// (z^{delta_{i<=j}} + z^{delta_{i<j}}) / (1 - z).
TensorRat rbar_formula(int n, const RatFun& arg);
TensorRat rbar21_formula(int n, const RatFun& arg);

// Rbar(arg p^{2s}) expanded in eps (the argument shift is the only source
// of eps-dependence).
EpsSeries eps_rbar(int n, const RatFun& arg, int pshift, bool swap21);

// Classical-limit identity suite; returns one line per failed identity.
std::vector<std::string> check_limit_identities(int n);

}  // namespace wsh
