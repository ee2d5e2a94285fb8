#include "wshuffle/tensor.hpp"

#include <cassert>
#include <sstream>

namespace wsh {

namespace {
uint32_t ipow(int n, int k) {
    uint32_t r = 1;
    while (k--) r *= (uint32_t)n;
    return r;
}
const RatFun kZero{};
}  // namespace

int TensorRat::dim() const { return (int)ipow(n_, k_); }

TensorRat TensorRat::identity(int n, int k) {
    TensorRat t(n, k);
    uint32_t d = ipow(n, k);
    for (uint32_t i = 0; i < d; ++i) t.ent_[{i, i}] = RatFun(1);
    return t;
}

TensorRat TensorRat::unit(int n, int i, int j, const RatFun& c) {
    TensorRat t(n, 1);
    if (!c.is_zero()) t.ent_[{(uint32_t)(i - 1), (uint32_t)(j - 1)}] = c;
    return t;
}

void TensorRat::set(uint32_t r, uint32_t c, const RatFun& v) {
    if (v.is_zero())
        ent_.erase({r, c});
    else
        ent_[{r, c}] = v;
}

void TensorRat::add(uint32_t r, uint32_t c, const RatFun& v) {
    if (v.is_zero()) return;
    auto it = ent_.find({r, c});
    if (it == ent_.end()) {
        ent_.emplace(std::make_pair(r, c), v);
    } else {
        it->second += v;
        if (it->second.is_zero()) ent_.erase(it);
    }
}

const RatFun& TensorRat::at(uint32_t r, uint32_t c) const {
    auto it = ent_.find({r, c});
    return it == ent_.end() ? kZero : it->second;
}

std::vector<int> TensorRat::digits(uint32_t idx) const {
    std::vector<int> d(k_);
    for (int a = k_ - 1; a >= 0; --a) {
        d[a] = (int)(idx % n_) + 1;
        idx /= n_;
    }
    return d;
}

uint32_t TensorRat::index(const std::vector<int>& dig) const {
    uint32_t idx = 0;
    for (int a = 0; a < k_; ++a) idx = idx * n_ + (uint32_t)(dig[a] - 1);
    return idx;
}

TensorRat TensorRat::operator+(const TensorRat& o) const {
    assert(n_ == o.n_ && k_ == o.k_);
    TensorRat r(*this);
    for (const auto& [rc, v] : o.ent_) r.add(rc.first, rc.second, v);
    return r;
}

TensorRat TensorRat::operator-(const TensorRat& o) const { return *this + (-o); }

TensorRat TensorRat::operator-() const {
    TensorRat r(n_, k_);
    for (const auto& [rc, v] : ent_) r.ent_[rc] = -v;
    return r;
}

TensorRat TensorRat::scale(const RatFun& c) const {
    TensorRat r(n_, k_);
    if (c.is_zero()) return r;
    for (const auto& [rc, v] : ent_) {
        RatFun w = v * c;
        if (!w.is_zero()) r.ent_[rc] = w;
    }
    return r;
}

TensorRat TensorRat::operator*(const TensorRat& o) const {
    assert(n_ == o.n_ && k_ == o.k_);
    // Group right factor by row for sparse row-column matching.
    std::map<uint32_t, std::vector<std::pair<uint32_t, const RatFun*>>> by_row;
    for (const auto& [rc, v] : o.ent_) by_row[rc.first].push_back({rc.second, &v});
    TensorRat r(n_, k_);
    for (const auto& [rc, v] : ent_) {
        auto it = by_row.find(rc.second);
        if (it == by_row.end()) continue;
        for (const auto& [c2, v2] : it->second) r.add(rc.first, c2, v * *v2);
    }
    return r;
}

bool TensorRat::operator==(const TensorRat& o) const {
    return (*this - o).is_zero();
}

TensorRat TensorRat::embed(const std::vector<int>& positions, int big_k) const {
    assert((int)positions.size() == k_);
    {
        std::vector<int> s = positions;
        std::sort(s.begin(), s.end());
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] == s[i + 1]) throw std::domain_error("repeated embed position");
        if (!s.empty() && (s.front() < 1 || s.back() > big_k))
            throw std::domain_error("embed position out of range");
    }
    TensorRat r(n_, big_k);
    uint32_t rest = ipow(n_, big_k - k_);
    std::vector<int> free_slots;
    {
        std::vector<bool> used(big_k + 1, false);
        for (int p : positions) used[p] = true;
        for (int p = 1; p <= big_k; ++p)
            if (!used[p]) free_slots.push_back(p);
    }
    for (const auto& [rc, v] : ent_) {
        auto rd = digits(rc.first), cd = digits(rc.second);
        for (uint32_t f = 0; f < rest; ++f) {
            std::vector<int> rr(big_k), cc(big_k);
            uint32_t ff = f;
            for (int a = (int)free_slots.size() - 1; a >= 0; --a) {
                int val = (int)(ff % n_) + 1;
                ff /= n_;
                rr[free_slots[a] - 1] = val;
                cc[free_slots[a] - 1] = val;
            }
            for (int a = 0; a < k_; ++a) {
                rr[positions[a] - 1] = rd[a];
                cc[positions[a] - 1] = cd[a];
            }
            r.ent_[{r.index(rr), r.index(cc)}] = v;
        }
    }
    return r;
}

TensorRat TensorRat::permute_conj(const std::vector<int>& sigma) const {
    assert((int)sigma.size() == k_);
    TensorRat r(n_, k_);
    for (const auto& [rc, v] : ent_) {
        auto rd = digits(rc.first), cd = digits(rc.second);
        std::vector<int> rr(k_), cc(k_);
        for (int a = 0; a < k_; ++a) {
            rr[sigma[a] - 1] = rd[a];
            cc[sigma[a] - 1] = cd[a];
        }
        r.ent_[{r.index(rr), r.index(cc)}] = v;
    }
    return r;
}

TensorRat TensorRat::partial_transpose(const std::vector<int>& positions) const {
    std::vector<bool> flip(k_ + 1, false);
    for (int p : positions) flip[p] = true;
    TensorRat r(n_, k_);
    for (const auto& [rc, v] : ent_) {
        auto rd = digits(rc.first), cd = digits(rc.second);
        for (int a = 0; a < k_; ++a)
            if (flip[a + 1]) std::swap(rd[a], cd[a]);
        r.ent_[{r.index(rd), r.index(cd)}] = v;
    }
    return r;
}

TensorRat TensorRat::transpose() const {
    std::vector<int> all(k_);
    for (int a = 0; a < k_; ++a) all[a] = a + 1;
    return partial_transpose(all);
}

TensorRat TensorRat::trace_over(const std::vector<int>& positions) const {
    std::vector<bool> traced(k_ + 1, false);
    for (int p : positions) traced[p] = true;
    TensorRat r(n_, k_ - (int)positions.size());
    for (const auto& [rc, v] : ent_) {
        auto rd = digits(rc.first), cd = digits(rc.second);
        bool diag = true;
        std::vector<int> rr, cc;
        for (int a = 0; a < k_; ++a) {
            if (traced[a + 1]) {
                if (rd[a] != cd[a]) {
                    diag = false;
                    break;
                }
            } else {
                rr.push_back(rd[a]);
                cc.push_back(cd[a]);
            }
        }
        if (diag) r.add(r.index(rr), r.index(cc), v);
    }
    return r;
}

RatFun TensorRat::trace() const {
    RatFun t;
    for (const auto& [rc, v] : ent_)
        if (rc.first == rc.second) t += v;
    return t;
}

TensorRat TensorRat::tensor(const TensorRat& o) const {
    assert(n_ == o.n_);
    TensorRat r(n_, k_ + o.k_);
    uint32_t od = ipow(o.n_, o.k_);
    for (const auto& [rc, v] : ent_)
        for (const auto& [rc2, v2] : o.ent_) {
            RatFun w = v * v2;
            if (!w.is_zero())
                r.ent_[{rc.first * od + rc2.first, rc.second * od + rc2.second}] = w;
        }
    return r;
}

TensorRat TensorRat::map_entries(const std::function<RatFun(const RatFun&)>& f) const {
    TensorRat r(n_, k_);
    for (const auto& [rc, v] : ent_) {
        RatFun w = f(v);
        if (!w.is_zero()) r.ent_[rc] = w;
    }
    return r;
}

std::string TensorRat::str() const {
    std::ostringstream os;
    os << "TensorRat(n=" << n_ << ", k=" << k_ << ")";
    for (const auto& [rc, v] : ent_) {
        auto rd = digits(rc.first), cd = digits(rc.second);
        os << "\n  E";
        for (size_t a = 0; a < rd.size(); ++a)
            os << "[" << rd[a] << cd[a] << "]";
        os << " : " << v.str();
    }
    return os.str();
}

}  // namespace wsh
