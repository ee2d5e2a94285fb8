#include "wshuffle/shuffle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace wsh {

namespace {

long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
long ceil_div(long a, long b) { return -floor_div(-a, b); }

std::array<int, kNumVars> identity_map() {
    std::array<int, kNumVars> to{};
    std::iota(to.begin(), to.end(), 0);
    return to;
}

}  // namespace

std::vector<int> arc_vec(int n, int i, int j) {
    std::vector<int> v(n, 0);
    if (i <= j)
        for (int a = i; a < j; ++a) v[residue_1n(a, n) - 1] += 1;
    else
        for (int a = j; a < i; ++a) v[residue_1n(a, n) - 1] -= 1;
    return v;
}

std::vector<std::vector<int>> all_permutations(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> reduced_word(const std::vector<int>& sigma) {
    // Sort sigma to the identity by adjacent swaps at descents; the reversed
    // swap sequence rebuilds sigma from the identity in inv(sigma) letters.
    std::vector<int> arr = sigma, word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < (int)arr.size(); ++i) {
            if (arr[i] > arr[i + 1]) {
                std::swap(arr[i], arr[i + 1]);
                word.push_back(i + 1);
                moved = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<std::vector<int>> all_reduced_words(const std::vector<int>& sigma) {
    bool is_id = true;
    for (int p = 0; p < (int)sigma.size(); ++p)
        if (sigma[p] != p + 1) is_id = false;
    if (is_id) return {{}};
    std::vector<std::vector<int>> out;
    for (int i = 0; i + 1 < (int)sigma.size(); ++i) {
        if (sigma[i] > sigma[i + 1]) {
            std::vector<int> shorter = sigma;
            std::swap(shorter[i], shorter[i + 1]);
            for (auto w : all_reduced_words(shorter)) {
                w.push_back(i + 1);
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

TensorRat braid_lift_word(int n, int k, const std::vector<int>& word) {
    std::vector<int> arr(k);
    std::iota(arr.begin(), arr.end(), 1);
    TensorRat r = TensorRat::identity(n, k);
    for (int i : word) {
        int a = arr[i - 1], b = arr[i];
        r = r * make_R(n, arg_ratio(z_var(a), z_var(b))).embed({a, b}, k);
        std::swap(arr[i - 1], arr[i]);
    }
    return r;
}

namespace {

// Inverse braid lift via unitarity: R_12(z)^{-1} = R_21(1/z) / f(z).
TensorRat braid_lift_word_inv(int n, int k, const std::vector<int>& word) {
    std::vector<int> arr(k);
    std::iota(arr.begin(), arr.end(), 1);
    std::vector<TensorRat> factors;
    for (int i : word) {
        int a = arr[i - 1], b = arr[i];
        RatFun z = arg_ratio(z_var(a), z_var(b));
        TensorRat inv = make_R21(n, z.inv()).embed({a, b}, k);
        factors.push_back(inv.scale(make_f(n, z).inv()));
        std::swap(arr[i - 1], arr[i]);
    }
    TensorRat r = TensorRat::identity(n, k);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) r = r * *it;
    return r;
}

}  // namespace

TensorRat braid_lift(int n, const std::vector<int>& sigma) {
    return braid_lift_word(n, (int)sigma.size(), reduced_word(sigma));
}

TensorRat make_R_omega(int n, int k) {
    TensorRat r = TensorRat::identity(n, k);
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j <= k; ++j)
            r = r * make_R(n, arg_ratio(z_var(i), z_var(j))).embed({i, j}, k);
    return r;
}

TensorRat permute_with_vars(const TensorRat& x, const std::vector<int>& sigma) {
    auto to = identity_map();
    for (int a = 1; a <= (int)sigma.size(); ++a) to[z_var(a)] = z_var(sigma[a - 1]);
    return x.permute_conj(sigma).map_entries(
        [&](const RatFun& v) { return v.rename_vars(to); });
}

TensorRat symmetrize(const TensorRat& x) {
    int k = x.arity(), n = x.n();
    TensorRat sum(n, k);
    for (const auto& sigma : all_permutations(k)) {
        std::vector<int> word = reduced_word(sigma);
        TensorRat rs = braid_lift_word(n, k, word);
        TensorRat rsi = braid_lift_word_inv(n, k, word);
        sum = sum + rs * permute_with_vars(x, sigma) * rsi;
    }
    return sum;
}

bool is_symmetric_elem(const TensorRat& x) {
    int k = x.arity(), n = x.n();
    for (const auto& sigma : all_permutations(k)) {
        std::vector<int> word = reduced_word(sigma);
        TensorRat rs = braid_lift_word(n, k, word);
        TensorRat rsi = braid_lift_word_inv(n, k, word);
        if (x != rs * permute_with_vars(x, sigma) * rsi) return false;
    }
    return true;
}

ShuffleElem shuffle_unit(int n, int sign) {
    ShuffleElem e;
    e.n = n;
    e.sign = sign;
    e.k = 0;
    e.value = TensorRat::identity(n, 0);
    return e;
}

ShuffleElem shuffle_product(const ShuffleElem& x, const ShuffleElem& y) {
    if (x.sign != y.sign || x.n != y.n)
        throw std::domain_error("shuffle product needs matching sign and n");
    if (x.k == 0) return y;
    if (y.k == 0) return x;
    int n = x.n, k = x.k, l = y.k, m = k + l;
    auto rt = [&](const RatFun& z) {
        return x.sign > 0 ? make_Rtilde_plus(n, z) : make_Rtilde_minus(n, z);
    };

    TensorRat sum(n, m);
    std::vector<int> sel(m, 0);
    std::fill(sel.begin(), sel.begin() + k, 1);
    std::sort(sel.begin(), sel.end());
    do {
        std::vector<int> A, B;
        for (int p = 0; p < m; ++p) (sel[p] ? A : B).push_back(p + 1);
        // A ascending = a_1 < ... < a_k, B ascending = b_1 < ... < b_l

        TensorRat term = TensorRat::identity(n, m);
        // i = k..1, j = 1..l, only the pairs with a_i < b_j
        for (int i = k; i >= 1; --i)
            for (int j = 1; j <= l; ++j)
                if (A[i - 1] < B[j - 1])
                    term = term * make_R(n, arg_ratio(z_var(A[i - 1]), z_var(B[j - 1])))
                                      .embed({A[i - 1], B[j - 1]}, m);
        // X at positions A with variables renamed z_c -> z_{a_c}
        auto tox = identity_map();
        for (int c = 1; c <= k; ++c) tox[z_var(c)] = z_var(A[c - 1]);
        TensorRat xe = x.value
                           .map_entries([&](const RatFun& v) { return v.rename_vars(tox); })
                           .embed(A, m);
        term = term * xe;
        // i = 1..k, j = l..1, all pairs, Rtilde
        for (int i = 1; i <= k; ++i)
            for (int j = l; j >= 1; --j)
                term = term * rt(arg_ratio(z_var(A[i - 1]), z_var(B[j - 1])))
                                  .embed({A[i - 1], B[j - 1]}, m);
        auto toy = identity_map();
        for (int c = 1; c <= l; ++c) toy[z_var(c)] = z_var(B[c - 1]);
        TensorRat ye = y.value
                           .map_entries([&](const RatFun& v) { return v.rename_vars(toy); })
                           .embed(B, m);
        term = term * ye;
        // i = k..1, j = 1..l, only the pairs with a_i > b_j
        for (int i = k; i >= 1; --i)
            for (int j = 1; j <= l; ++j)
                if (A[i - 1] > B[j - 1])
                    term = term * make_R(n, arg_ratio(z_var(A[i - 1]), z_var(B[j - 1])))
                                      .embed({A[i - 1], B[j - 1]}, m);
        sum = sum + term;
    } while (std::next_permutation(sel.begin(), sel.end()));

    ShuffleElem out;
    out.n = n;
    out.sign = x.sign;
    out.k = m;
    out.value = sum;
    return out;
}

ShuffleElem make_F(int n, int sign, int i, int j, int k) {
    if (k < 1) throw std::domain_error("F generator needs k >= 1");
    auto t_of = [&](int a) { return i + (int)ceil_div((long)(j - i) * a, k); };

    // The a = 1 factor has an empty bracket and no Qbar companion; the
    // calibration target is the pairing value (1 - q^{-2}) at k = 1.
    TensorRat m = TensorRat::identity(n, k);
    for (int a = 1; a <= k; ++a) {
        if (a >= 2) {
            for (int b = 1; b <= a - 2; ++b) {
                RatFun z = arg_ratio(z_var(b), z_var(a));
                TensorRat rt = sign > 0 ? make_Rtilde_plus(n, z) : make_Rtilde_minus(n, z);
                m = m * rt.embed({b, a}, k);
            }
            RatFun z = arg_ratio(z_var(a - 1), z_var(a));
            TensorRat qb = sign > 0 ? make_Qbar_plus(n, z) : make_Qbar_minus(n, z);
            m = m * qb.embed({a - 1, a}, k);
        }
        int ta1 = t_of(a - 1), ta = t_of(a);
        Scalar coeff = sign > 0 ? Scalar::t(2 * residue_1n(ta, n))
                                : Scalar::t(-2 * residue_1n(ta1, n));
        m = m * make_E_ext(n, ta1, ta, z_var(a), RatFun(coeff)).embed({a}, k);
    }
    TensorRat val = symmetrize(make_R_omega(n, k) * m);
    if (sign < 0) val = val.scale(RatFun(Scalar::q(-2 * k)));

    ShuffleElem f;
    f.n = n;
    f.sign = sign;
    f.k = k;
    f.value = val;
    return f;
}

DegreeInfo degree_slope(const ShuffleElem& x) {
    int n = x.n, k = x.k;
    DegreeInfo info;
    info.vdeg = x.sign * k;
    std::vector<int> zs;
    for (int a = 1; a <= k; ++a) zs.push_back(z_var(a));

    bool have = false;
    for (const auto& [rc, v] : x.value.entries()) {
        auto rd = x.value.digits(rc.first), cd = x.value.digits(rc.second);
        int den_deg = 0;
        for (const auto& [f, mult] : v.fac()) {
            auto parts = f.homogeneous_parts(zs);
            if (parts.size() != 1)
                throw std::domain_error("non-homogeneous denominator factor");
            den_deg += mult * parts.begin()->first;
        }
        for (const auto& [d, part] : v.num().homogeneous_parts(zs)) {
            std::vector<int> h(n, d - den_deg);
            for (int a = 0; a < k; ++a) {
                auto arc = arc_vec(n, rd[a], cd[a]);
                for (int c = 0; c < n; ++c) h[c] -= arc[c];
            }
            if (!have) {
                info.hdeg = h;
                have = true;
            } else if (info.hdeg != h) {
                throw std::domain_error("non-homogeneous shuffle element");
            }
        }
    }
    if (!have) throw std::domain_error("degree of the zero element is undefined");
    int total = 0;
    for (int c : info.hdeg) total += c;
    int den = info.vdeg;
    info.slope_defined = den != 0;
    if (den != 0) {
        int g = std::gcd(std::abs(total), std::abs(den));
        if (g == 0) g = 1;
        info.slope_num = total / g;
        info.slope_den = den / g;
        if (info.slope_den < 0) {
            info.slope_den = -info.slope_den;
            info.slope_num = -info.slope_num;
        }
    }
    return info;
}

TensorRat xk_single(int n, const FMinusFactor& f, int yvar, const Scalar& shift) {
    int i = f.i, j = f.j, k = f.k;
    int w = winding(i, n) - winding(j, n);
    int ib = residue_1n(i, n), jb = residue_1n(j, n);
    long g = std::gcd(std::abs((long)(i - j)), (long)k);
    long m = -(long)k * (i - j) - k + (i - j) + g - 2L * (k - 1) * jb - 2L * ib;
    // p^{m/n} = (q t)^m
    Scalar c = Scalar::q(-2 * k) * (Scalar(1) - Scalar::q(-2)).pow(-k + 1) *
               Scalar(Poly(Mono::var(kQ, (int)m) * Mono::var(kT, (int)m), 1), Poly(1));
    c = c * shift.pow(w);
    RatFun entry = RatFun(c);
    if (w != 0) entry = entry * RatFun(Poly::var(yvar, w));
    return TensorRat::unit(n, ib, jb, entry);
}

TensorRat xk_functional(int n, const std::vector<FMinusFactor>& word, int yvar) {
    TensorRat x = TensorRat::identity(n, 1);
    int kacc = 0;
    for (const auto& f : word) {
        Scalar shift = Scalar::p_pow(n, -2 * kacc);
        x = x * xk_single(n, f, yvar, shift);
        kacc += f.k;
    }
    return x;
}

}  // namespace wsh
