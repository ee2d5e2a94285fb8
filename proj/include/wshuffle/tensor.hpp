#pragma once

#include "wshuffle/ratfun.hpp"

#include <functional>

namespace wsh {

// Element of End(V^{tensor k})(z_1,...): sparse map from (row, column)
// multi-indices to rational functions. Multi-indices over {1..n}^k are
// flattened in row-major order; no zero entries are stored.
class TensorRat {
  public:
    TensorRat() : n_(1), k_(0) {}
    TensorRat(int n, int k) : n_(n), k_(k) {}

    static TensorRat identity(int n, int k);
    // Elementary matrix E_{ij} in End(V), 1-based indices.
    static TensorRat unit(int n, int i, int j, const RatFun& c = RatFun(1));

    int n() const { return n_; }
    int arity() const { return k_; }
    int dim() const;
    const std::map<std::pair<uint32_t, uint32_t>, RatFun>& entries() const {
        return ent_;
    }
    bool is_zero() const { return ent_.empty(); }

    void set(uint32_t r, uint32_t c, const RatFun& v);
    void add(uint32_t r, uint32_t c, const RatFun& v);
    const RatFun& at(uint32_t r, uint32_t c) const;  // 0-based flattened

    std::vector<int> digits(uint32_t idx) const;  // 1-based per factor
    uint32_t index(const std::vector<int>& dig) const;

    TensorRat operator+(const TensorRat& o) const;
    TensorRat operator-(const TensorRat& o) const;
    TensorRat operator*(const TensorRat& o) const;  // matrix product
    TensorRat operator-() const;
    TensorRat scale(const RatFun& c) const;
    bool operator==(const TensorRat& o) const;
    bool operator!=(const TensorRat& o) const { return !(*this == o); }

    // Image under End(V^k) -> End(V^N), factor i -> factor positions[i]
    // (1-based), identity elsewhere. Variables are not renamed.
    TensorRat embed(const std::vector<int>& positions, int big_k) const;

    // sigma X sigma^{-1}: the factor in slot a moves to slot sigma(a).
    // Variables are not renamed.
    TensorRat permute_conj(const std::vector<int>& sigma) const;

    // Entrywise transpose on the selected factors (1-based positions).
    TensorRat partial_transpose(const std::vector<int>& positions) const;
    TensorRat transpose() const;

    // Partial trace over the selected factors; arity drops.
    TensorRat trace_over(const std::vector<int>& positions) const;
    RatFun trace() const;

    // Tensor product, this in factors 1..k, o in k+1..k+l.
    TensorRat tensor(const TensorRat& o) const;

    TensorRat map_entries(const std::function<RatFun(const RatFun&)>& f) const;

    std::string str() const;

  private:
    int n_, k_;
    std::map<std::pair<uint32_t, uint32_t>, RatFun> ent_;
};

}  // namespace wsh
