#include "wshuffle/pairing.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace wsh {

std::vector<int> word_hdeg(int n, const Word& w) {
    std::vector<int> h(n, 0);
    for (const auto& l : w) {
        auto arc = arc_vec(n, l.u, l.v);
        for (int c = 0; c < n; ++c) h[c] += l.e - arc[c];
    }
    return h;
}

ShuffleElem word_elem(int n, int sign, const Word& w) {
    ShuffleElem acc = shuffle_unit(n, sign);
    for (const auto& l : w) {
        ShuffleElem letter;
        letter.n = n;
        letter.sign = sign;
        letter.k = 1;
        RatFun entry = RatFun(l.c);
        if (l.e != 0) entry = entry * RatFun(Poly::var(z_var(1), l.e));
        letter.value = TensorRat::unit(n, l.u, l.v, entry);
        acc = shuffle_product(acc, letter);
    }
    return acc;
}

std::vector<int> elem_hdeg(const ShuffleElem& x) { return degree_slope(x).hdeg; }

namespace {

// The word-dependent left part of the trace integrand is reused across many
// explicit elements; memoize it per (n, sign, word).
const TensorRat& word_prefix(int n, const Word& word, int sign_rt) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<TensorRat>> cache;
    std::ostringstream os;
    os << n << "/" << sign_rt << "/";
    for (const auto& l : word) os << l.u << "," << l.v << "," << l.e << "," << l.c.str() << ";";
    std::string key = os.str();
    {
        std::unique_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    int k = (int)word.size();
    TensorRat m = make_R_omega(n, k);
    for (int a = 1; a <= k; ++a) {
        const WordLetter& l = word[a - 1];
        RatFun entry = RatFun(l.c);
        if (l.e != 0) entry = entry * RatFun(Poly::var(z_var(a), l.e));
        m = m * TensorRat::unit(n, l.u, l.v, entry).embed({a}, k);
        for (int b = a + 1; b <= k; ++b) {
            RatFun z = arg_ratio(z_var(a), z_var(b));
            TensorRat rt = sign_rt > 0 ? make_Rtilde_plus(n, z) : make_Rtilde_minus(n, z);
            m = m * rt.embed({a, b}, k);
        }
    }
    std::unique_lock lock(mu);
    return *cache.emplace(key, std::make_unique<TensorRat>(std::move(m))).first->second;
}

const RatFun& f_product_inv(int n, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<RatFun>> cache;
    std::unique_lock lock(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return *it->second;
    RatFun finv(1);
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j <= k; ++j)
            finv = finv * make_f(n, arg_ratio(z_var(i), z_var(j))).inv();
    return *cache.emplace(std::make_pair(n, k), std::make_unique<RatFun>(std::move(finv)))
                .first->second;
}

Scalar pair_trace(int n, const Word& word, const ShuffleElem& x, int sign_rt) {
    int k = x.k;
    if ((int)word.size() != k) return Scalar(0);
    if (k == 0) return x.value.at(0, 0).to_scalar();

    TensorRat m = word_prefix(n, word, sign_rt) * x.value;
    RatFun g = m.trace();
    if (g.is_zero()) return Scalar(0);
    g = g * f_product_inv(n, k);
    std::vector<int> order;
    for (int a = 1; a <= k; ++a) order.push_back(z_var(a));
    Scalar ct = constant_term_iterated(g, order);
    return (Scalar::q(2) - Scalar(1)).pow(k) * ct;
}

}  // namespace

Scalar pair_P1(int n, const Word& iword, const ShuffleElem& xminus) {
    if (xminus.sign >= 0) throw std::domain_error("pair_P1 expects a minus element");
    return pair_trace(n, iword, xminus, +1);
}

Scalar pair_P2(int n, const ShuffleElem& xplus, const Word& jword) {
    if (xplus.sign <= 0) throw std::domain_error("pair_P2 expects a plus element");
    return pair_trace(n, jword, xplus, -1);
}

Scalar pair_combinatorial(int n, int i, int j, int k,
                          const std::vector<FMinusFactor>& word) {
    int t = (int)word.size();
    int ksum = 0;
    for (const auto& f : word) ksum += f.k;
    if (ksum != k) return Scalar(0);
    // common slope: (i-j)/k = (b_s-a_s)/k_s for all s
    for (const auto& f : word)
        if ((long)(i - j) * f.k != (long)(f.j - f.i) * k) return Scalar(0);
    // arcs must string along the path j -> i: endpoints chain through
    if (t > 0) {
        if (residue_1n(word[0].i, n) != residue_1n(j, n)) return Scalar(0);
        if (residue_1n(word[t - 1].j, n) != residue_1n(i, n)) return Scalar(0);
    }
    for (int s = 0; s + 1 < t; ++s)
        if (residue_1n(word[s].j, n) != residue_1n(word[s + 1].i, n)) return Scalar(0);
    // and sum to [j;i)
    std::vector<int> sum(n, 0);
    for (const auto& f : word) {
        auto arc = arc_vec(n, f.i, f.j);
        for (int c = 0; c < n; ++c) sum[c] += arc[c];
    }
    if (sum != arc_vec(n, j, i)) return Scalar(0);
    return (Scalar(1) - Scalar::q(-2)).pow(t);
}

WordLetter f_minus1_letter(int n, int i, int j) {
    WordLetter l;
    l.u = residue_1n(i, n);
    l.v = residue_1n(j, n);
    l.e = winding(i, n) - winding(j, n);
    l.c = Scalar::q(-2) * Scalar::t(-2 * residue_1n(i, n));
    return l;
}

WordLetter f_plus1_letter(int n, int i, int j) {
    WordLetter l;
    l.u = residue_1n(i, n);
    l.v = residue_1n(j, n);
    l.e = winding(i, n) - winding(j, n);
    l.c = Scalar::t(2 * residue_1n(j, n));
    return l;
}

}  // namespace wsh
