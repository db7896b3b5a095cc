#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvecert/algebra/sparse.hpp"
#include "curvecert/errors.hpp"

namespace curvecert::algebra {

/// A subspace V of the Laurent-series space of r branches that contains
/// every monomial t^e with e >= top. Stored as the reduced echelon basis of
/// V modulo that tail: each row has pivot coefficient 1 at its smallest
/// coordinate and vanishes at every other row's pivot, so the row set is
/// canonical.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  Subspace(int branches, int top) : branches_(branches), top_(top) {
    if (branches < 1 || branches > kMaxBranches) throw DomainError("branch count out of range");
  }

  [[nodiscard]] int branches() const { return branches_; }
  [[nodiscard]] int top() const { return top_; }
  [[nodiscard]] int dim() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] const std::map<Key, SparseVec<S>>& rows() const { return rows_; }

  /// Remainder of v modulo V: zero iff v lies in V.
  [[nodiscard]] SparseVec<S> reduce(SparseVec<S> v) const {
    truncate(v, top_);
    // Rows vanish at each other's pivots, so v's pivot-column coefficients
    // are final and can all be read off before subtracting.
    std::vector<std::pair<const SparseVec<S>*, S>> hits;
    for (const auto& [k, c] : v.entries) {
      auto it = rows_.find(k);
      if (it != rows_.end()) hits.emplace_back(&it->second, c);
    }
    for (const auto& [row, c] : hits) axpy(v, S(-c), *row);
    return v;
  }

  [[nodiscard]] bool contains(const SparseVec<S>& v) const { return reduce(v).empty(); }

  [[nodiscard]] bool contains_monomial(int b, int e) const {
    if (e >= top_) return true;
    auto it = rows_.find(make_key(e, b));
    return it != rows_.end() && it->second.size() == 1;
  }

  /// Adds v to the span; returns false when it was already there.
  bool insert(SparseVec<S> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const Key p = v.pivot();
    const S inv = S(1) / v.entries.front().second;
    scale(v, inv);
    for (auto& [k, row] : rows_) {
      if (const S* c = row.find(p)) {
        S coef = -*c;
        axpy(row, coef, v);
      }
    }
    rows_.emplace(p, std::move(v));
    return true;
  }

  void insert_monomial(int b, int e) {
    if (e < top_) insert(SparseVec<S>::unit(make_key(e, b)));
  }

  /// Least exponent present in V, or top when V is just the tail.
  [[nodiscard]] int low() const { return rows_.empty() ? top_ : key_exp(rows_.begin()->first); }

  /// Least exponent appearing on branch b (valuation of the projection).
  [[nodiscard]] int low(int b) const {
    int lo = top_;
    for (const auto& [k, row] : rows_) lo = std::min(lo, branch_low(row, b, top_));
    return lo;
  }

  /// Least c such that every e_b t^m with c <= m lies in V.
  [[nodiscard]] int saturation(int b) const {
    int m = top_;
    while (contains_monomial(b, m - 1)) --m;
    return m;
  }

  friend bool operator==(const Subspace& x, const Subspace& y) {
    if (x.top_ != y.top_) {
      throw WindowMismatch("windows t^" + std::to_string(x.top_) + " and t^" + std::to_string(y.top_));
    }
    return x.branches_ == y.branches_ && x.rows_ == y.rows_;
  }

 private:
  int branches_ = 1;
  int top_ = 0;
  std::map<Key, SparseVec<S>> rows_;
};

inline Subspace<RatFunc> extend(const Subspace<Rational>& v) {
  Subspace<RatFunc> r(v.branches(), v.top());
  for (const auto& [k, row] : v.rows()) r.insert(extend(row));
  return r;
}

/// Multiplies every element of V by u. Valuations of u must be finite; a
/// negative valuation pulls tail monomials down into the window, a positive
/// one needs V saturated far enough below the top to keep the tail intact.
template <class S>
Subspace<S> multiply(const SparseVec<S>& u, const Subspace<S>& v) {
  const int top = v.top();
  Subspace<S> out(v.branches(), top);
  std::vector<int> val(static_cast<std::size_t>(v.branches()));
  for (int b = 0; b < v.branches(); ++b) {
    val[static_cast<std::size_t>(b)] = branch_low(u, b, top);
    if (val[static_cast<std::size_t>(b)] >= top) {
      throw ZeroDivisorMultiplier("multiplier vanishes on branch " + std::to_string(b));
    }
  }
  for (int b = 0; b < v.branches(); ++b) {
    const int vb = val[static_cast<std::size_t>(b)];
    if (vb > 0 && v.saturation(b) > top - vb) {
      throw PrecisionExceeded("branch " + std::to_string(b) + " not saturated below t^" + std::to_string(top - vb));
    }
  }
  for (const auto& [k, row] : v.rows()) out.insert(multiply(u, row, top));
  for (int b = 0; b < v.branches(); ++b) {
    for (int m = top + val[static_cast<std::size_t>(b)]; m < top; ++m) out.insert_monomial(b, m);
  }
  return out;
}

/// Incremental elimination over images of a list of unknowns: records which
/// combinations of the unknowns map to zero.
template <class S>
class KernelBuilder {
 public:
  /// Adds the image of the next unknown. Returns true when it was independent.
  bool add(SparseVec<S> image) {
    SparseVec<S> combo = SparseVec<S>::unit(static_cast<Key>(count_++));
    while (!image.empty()) {
      auto it = pivots_.find(image.pivot());
      if (it == pivots_.end()) break;
      const S c = -image.entries.front().second;
      axpy(image, c, it->second.first);
      axpy(combo, c, it->second.second);
    }
    if (image.empty()) {
      kernel_.push_back(std::move(combo));
      return false;
    }
    const S inv = S(1) / image.entries.front().second;
    scale(image, inv);
    scale(combo, inv);
    const Key p = image.pivot();
    pivots_.emplace(p, std::make_pair(std::move(image), std::move(combo)));
    return true;
  }

  [[nodiscard]] int rank() const { return static_cast<int>(pivots_.size()); }
  /// Kernel vectors, keyed by unknown index.
  [[nodiscard]] const std::vector<SparseVec<S>>& kernel() const { return kernel_; }

 private:
  std::size_t count_ = 0;
  std::map<Key, std::pair<SparseVec<S>, SparseVec<S>>> pivots_;
  std::vector<SparseVec<S>> kernel_;
};

}  // namespace curvecert::algebra
