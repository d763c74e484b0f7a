#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfind/cyclotomic.hpp"
#include "hopfind/errors.hpp"
#include "hopfind/linalg.hpp"

namespace hopfind {

/// An element of H^(x)m stored sparsely: a map from m-tuples of basis indices
/// to nonzero coefficients. Keys iterate in lexicographic order, so every
/// traversal is deterministic.
class SparseTensor {
 public:
  using Key = std::vector<unsigned>;

  SparseTensor(unsigned arity, unsigned dim) : arity_(arity), dim_(dim) {
    if (arity_ < 1) throw usage_error("SparseTensor: arity must be >= 1");
  }

  static SparseTensor from_vector(const Vector& x) {
    SparseTensor t(1, static_cast<unsigned>(x.dim()));
    for (unsigned i = 0; i < x.dim(); ++i)
      if (!x[i].is_zero()) t.terms_.emplace(Key{i}, x[i]);
    return t;
  }

  unsigned arity() const { return arity_; }
  unsigned dim() const { return dim_; }
  const std::map<Key, CycNum>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& key, const CycNum& c) {
    if (key.size() != arity_) throw usage_error("SparseTensor: key arity mismatch");
    for (unsigned i : key)
      if (i >= dim_) throw usage_error("SparseTensor: index out of range");
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  void add_tensor(const SparseTensor& o) {
    if (o.arity_ != arity_ || o.dim_ != dim_) throw usage_error("SparseTensor: shape mismatch");
    for (const auto& [k, c] : o.terms_) add(k, c);
  }

  SparseTensor scaled(const CycNum& c) const {
    SparseTensor t(arity_, dim_);
    if (c.is_zero()) return t;
    for (const auto& [k, v] : terms_) t.terms_.emplace(k, v * c);
    return t;
  }

  /// Cyclic shift moving the first slot to the end:
  /// v_1 (x) v_2 (x) ... (x) v_m  ->  v_2 (x) ... (x) v_m (x) v_1.
  SparseTensor rotate_left() const {
    SparseTensor t(arity_, dim_);
    for (const auto& [k, c] : terms_) {
      Key nk(k.begin() + 1, k.end());
      nk.push_back(k.front());
      t.terms_.emplace(std::move(nk), c);
    }
    return t;
  }

  /// Slot-wise image under a linear map: entry j of `slot` is replaced by
  /// the column expansion M e_j = sum_p M(p, j) e_p.
  SparseTensor apply_matrix_to_slot(unsigned slot, const Matrix& m) const {
    if (slot >= arity_) throw usage_error("SparseTensor: slot out of range");
    if (m.rows() != dim_ || m.cols() != dim_) throw usage_error("SparseTensor: matrix size mismatch");
    SparseTensor t(arity_, dim_);
    for (const auto& [k, c] : terms_) {
      for (unsigned p = 0; p < dim_; ++p) {
        const CycNum& mpj = m(p, k[slot]);
        if (mpj.is_zero()) continue;
        Key nk = k;
        nk[slot] = p;
        t.add(nk, c * mpj);
      }
    }
    return t;
  }

  friend bool operator==(const SparseTensor& a, const SparseTensor& b) {
    return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparseTensor& a, const SparseTensor& b) { return !(a == b); }

 private:
  unsigned arity_;
  unsigned dim_;
  std::map<Key, CycNum> terms_;
};

}  // namespace hopfind
