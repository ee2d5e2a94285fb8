#include "wshuffle/miura.hpp"

#include <functional>
#include <sstream>

namespace wsh {

FreePoly FreePoly::lam(int i, int m) {
    FreePoly p;
    p.terms_[FreeWord{{LamSym{i, m}}, 0}] = 1;
    return p;
}

FreePoly FreePoly::shift_op() {
    FreePoly p;
    p.terms_[FreeWord{{}, 1}] = 1;
    return p;
}

FreePoly FreePoly::term(FreeWord w, const mpz_class& c) {
    FreePoly p;
    if (c != 0) p.terms_[std::move(w)] = c;
    return p;
}

void FreePoly::add_term(FreeWord w, const mpz_class& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(std::move(w), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
    FreePoly r(*this);
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
    FreePoly r(*this);
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

FreePoly FreePoly::operator*(const FreePoly& o) const {
    FreePoly r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            // D^p Lam^{(i)}(m) = Lam^{(i)}(m + p) D^p
            FreeWord w = wa;
            for (const LamSym& s : wb.lams) w.lams.push_back({s.i, s.m + wa.dpow});
            w.dpow += wb.dpow;
            r.add_term(std::move(w), ca * cb);
        }
    return r;
}

FreePoly FreePoly::shift_args(int s) const {
    FreePoly r;
    for (const auto& [w, c] : terms_) {
        FreeWord nw = w;
        for (auto& l : nw.lams) l.m += s;
        r.terms_[std::move(nw)] = c;
    }
    return r;
}

std::string FreePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*";
        for (const auto& l : w.lams) os << "L" << l.i << "(" << l.m << ")";
        if (w.dpow) os << "D^" << w.dpow;
        if (w.lams.empty() && !w.dpow) os << "1";
    }
    return os.str();
}

FreeWord normalize_word(const std::vector<LamSym>& raw, SplitMix64* rng) {
    // i = 0 encodes D. Apply D-pushing rewrites until none are left; the
    // rewrite chosen each step may be randomized to exercise confluence.
    std::vector<LamSym> w = raw;
    while (true) {
        std::vector<int> sites;
        for (int p = 0; p + 1 < (int)w.size(); ++p)
            if (w[p].i == 0 && w[p + 1].i != 0) sites.push_back(p);
        if (sites.empty()) break;
        int p = rng ? sites[rng->below(sites.size())] : sites.front();
        std::swap(w[p], w[p + 1]);
        w[p].m += 1;
    }
    FreeWord out;
    for (const auto& s : w) {
        if (s.i == 0)
            out.dpow += 1;
        else
            out.lams.push_back(s);
    }
    return out;
}

std::map<int, FreePoly> miura_expand(int r) {
    FreePoly prod(1);
    for (int i = 1; i <= r; ++i)
        prod = prod * (FreePoly::lam(i, r - i) - FreePoly::shift_op());
    // prod = sum_m w_m(x) D^m and the defining expansion reads
    // sum_k (-D)^{r-k} Wbar^{(k)}(x), so
    // Wbar^{(k)}(x) = (-1)^{r-k} w_{r-k}(x p^{-2(r-k)}).
    std::map<int, FreePoly> by_dpow;
    for (const auto& [w, c] : prod.terms()) {
        FreeWord stripped = w;
        int m = stripped.dpow;
        stripped.dpow = 0;
        by_dpow[m] = by_dpow[m] + FreePoly::term(std::move(stripped), c);
    }
    std::map<int, FreePoly> wbar;
    for (auto& [m, poly] : by_dpow) {
        FreePoly shifted = poly.shift_args(-m);
        if (m % 2) shifted = FreePoly(0) - shifted;
        wbar[r - m] = shifted;
    }
    return wbar;
}

FreePoly miura_bar_w(int r, int k) {
    if (k == 0) return FreePoly(1);
    if (k > r) return FreePoly(0);
    FreePoly sum;
    std::vector<int> idx(k);
    // iterate over 1 <= i_1 < ... < i_k <= r
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            FreePoly term(1);
            for (int a = 0; a < k; ++a) term = term * FreePoly::lam(idx[a], k - 1 - a);
            sum = sum + term;
            return;
        }
        for (int i = start; i <= r; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 1);
    return sum;
}

std::string miura_check(int r) {
    auto wbar = miura_expand(r);
    for (int k = 0; k <= r + 1; ++k) {
        FreePoly want = miura_bar_w(r, k);
        FreePoly got = wbar.count(k) ? wbar[k] : FreePoly(0);
        if (!(got == want)) {
            std::ostringstream os;
            os << "miura mismatch at r=" << r << ", k=" << k << ": got " << got.str()
               << ", want " << want.str();
            return os.str();
        }
    }
    return {};
}

}  // namespace wsh
