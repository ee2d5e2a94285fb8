#include "wshuffle/limit.hpp"

namespace wsh {

EpsSeries EpsSeries::operator+(const EpsSeries& o) const {
    EpsSeries r;
    for (int i = 0; i < 3; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

EpsSeries EpsSeries::operator-(const EpsSeries& o) const {
    EpsSeries r;
    for (int i = 0; i < 3; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

EpsSeries EpsSeries::operator*(const EpsSeries& o) const {
    EpsSeries r;
    r.c[0] = c[0] * o.c[0];
    r.c[1] = c[0] * o.c[1] + c[1] * o.c[0];
    r.c[2] = c[0] * o.c[2] + c[1] * o.c[1] + c[2] * o.c[0];
    return r;
}

namespace {

// eps-expansion of a single polynomial: each monomial q^a w^b rest becomes
// rest w^b exp(eps (a + 2 s b beta)) after q -> e^eps, w -> w p^{2s}; the
// exponential is truncated at eps^2 (the 1/2 lives in a scalar).
std::array<RatFun, 3> eps_poly(const Poly& p, int wvar, int pshift) {
    std::array<RatFun, 3> out{RatFun(0), RatFun(0), RatFun(0)};
    Scalar half(Poly(1), Poly(2));
    for (const auto& t : p.terms()) {
        int a = t.m.e[kQ];
        int b = wvar >= 0 ? t.m.e[wvar] : 0;
        Mono rest = t.m;
        rest.e[kQ] = 0;
        RatFun base = RatFun(Poly(rest, t.c));
        // L = a + 2 s b beta
        RatFun L = RatFun(Scalar(a)) +
                   RatFun(Scalar(2L * pshift * b)) * RatFun(Poly::var(kBeta));
        out[0] += base;
        out[1] += base * L;
        out[2] += base * L * L * RatFun(half);
    }
    return out;
}

std::array<RatFun, 3> eps_ratfun(const RatFun& f, int wvar, int pshift) {
    auto [nump, denp] = f.as_fraction();
    auto N = eps_poly(nump, wvar, pshift);
    auto D = eps_poly(denp, wvar, pshift);
    if (D[0].is_zero()) throw std::domain_error("eps expansion hits a pole at eps = 0");
    std::array<RatFun, 3> E;
    E[0] = N[0] / D[0];
    E[1] = (N[1] - E[0] * D[1]) / D[0];
    E[2] = (N[2] - E[1] * D[1] - E[0] * D[2]) / D[0];
    return E;
}

}  // namespace

EpsSeries eps_expand_matrix(const TensorRat& m, int wvar, const RatFun& arg,
                            int pshift) {
    auto sub_poly = [&](const Poly& p) {
        RatFun s(0);
        for (const auto& [deg, slice] : p.slices(wvar))
            s += RatFun(slice) * arg.pow(deg);
        return s;
    };
    EpsSeries out(m.n());
    for (const auto& [rc, v] : m.entries()) {
        auto e = eps_ratfun(v, wvar, pshift);
        for (int i = 0; i < 3; ++i) {
            if (e[i].is_zero()) continue;
            // substitute the placeholder by the actual argument (the p-shift
            // already entered through the eps-coefficients)
            RatFun val = e[i];
            if (val.involves(wvar)) {
                auto [np, dp] = val.as_fraction();
                val = sub_poly(np) / sub_poly(dp);
            }
            out.c[i].add(rc.first, rc.second, val);
        }
    }
    return out;
}

EpsSeries eps_R(int n, const RatFun& arg, int pshift) {
    return eps_expand_matrix(make_R(n, arg_var(kX)), kX, arg, pshift);
}

TensorRat rbar_formula(int n, const RatFun& arg) {
    TensorRat r(n, 2);
    RatFun pole = (RatFun(1) - arg).inv();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            RatFun num = (i <= j ? arg : RatFun(1)) + (i < j ? arg : RatFun(1));
            r.add((uint32_t)((i - 1) * n + (j - 1)), (uint32_t)((j - 1) * n + (i - 1)),
                  num * pole);
        }
    return r;
}

TensorRat rbar21_formula(int n, const RatFun& arg) {
    return rbar_formula(n, arg).permute_conj({2, 1});
}

EpsSeries eps_rbar(int n, const RatFun& arg, int pshift, bool swap21) {
    TensorRat base = rbar_formula(n, arg_var(kX));
    if (swap21) base = base.permute_conj({2, 1});
    return eps_expand_matrix(base, kX, arg, pshift);
}

std::vector<std::string> check_limit_identities(int n) {
    std::vector<std::string> fails;
    RatFun z = arg_var(kX);

    // R(z) = 1 + eps Rbar(z) + O(eps^2)
    EpsSeries r = eps_R(n, z, 0);
    if (!(r.c[0] == TensorRat::identity(n, 2)))
        fails.push_back("R(z) does not reduce to the identity at eps^0");
    if (!(r.c[1] == rbar_formula(n, z)))
        fails.push_back("eps^1 coefficient of R(z) differs from Rbar(z)");

    // Rbar_21(1/z) = -Rbar_12(z)
    if (!(rbar21_formula(n, z.inv()) == -rbar_formula(n, z)))
        fails.push_back("Rbar_21(1/z) != -Rbar_12(z)");

    // Rbar_12(z p^2) - Rbar_12(z) = 4 eps beta (12) z/(1-z)^2 + O(eps^2)
    {
        EpsSeries shifted = eps_rbar(n, z, 1, false);
        EpsSeries plain = eps_rbar(n, z, 0, false);
        EpsSeries diff = shifted - plain;
        if (!diff.c[0].is_zero())
            fails.push_back("Rbar(z p^2) - Rbar(z) has a nonzero eps^0 part");
        RatFun want = RatFun(4) * RatFun(Poly::var(kBeta)) * z *
                      (RatFun(1) - z).inv().pow(2);
        if (!(diff.c[1] == make_perm(n).scale(want)))
            fails.push_back("eps^1 of Rbar(z p^2) - Rbar(z) != 4 beta (12) z/(1-z)^2");
    }

    // four-lines bookkeeping with x, y
    RatFun xy = arg_ratio(kX, kY), yx = arg_ratio(kY, kX);
    EpsSeries r21_yp2x = eps_rbar(n, yx, 1, true);
    EpsSeries r12_xy = eps_rbar(n, xy, 0, false);
    EpsSeries r21_yx = eps_rbar(n, yx, 0, true);
    EpsSeries r12_xp2y = eps_rbar(n, xy, 1, false);

    // first/third-row brackets: Rbar_21(y p^2/x) Rbar_12(x/y) -
    // Rbar_21(y/x) Rbar_12(x p^2/y) vanishes mod eps
    {
        EpsSeries lhs = r21_yp2x * r12_xy - r21_yx * r12_xp2y;
        if (!lhs.c[0].is_zero())
            fails.push_back("squiggly row 1/3 combination does not vanish mod eps");
    }
    // second-row bracket with a free Lambda on one side: both coefficient
    // matrices [Rbar_21(y p^2/x) + Rbar_12(x/y)] (right multiplier) and
    // [Rbar_21(y/x) + Rbar_12(x p^2/y)] (left multiplier) vanish mod eps
    {
        EpsSeries right = r21_yp2x + r12_xy;
        EpsSeries left = r21_yx + r12_xp2y;
        if (!right.c[0].is_zero() || !left.c[0].is_zero())
            fails.push_back("squiggly row 2 coefficients do not vanish mod eps");
    }
    // right-hand side bracket vanishes to order eps^2, so its 1/eps multiple
    // is O(eps)
    {
        EpsSeries rhs = (r12_xp2y - r12_xy) - (r21_yp2x - r21_yx);
        if (!rhs.c[0].is_zero() || !rhs.c[1].is_zero())
            fails.push_back("four-lines right-hand side does not vanish to eps^2");
    }
    return fails;
}

}  // namespace wsh
