#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "curvecert/arith/series.hpp"

namespace curvecert::algebra {

using arith::Rational;
using arith::RatFunc;
using arith::is_zero;

/// Coordinate e_b t^e packed so that integer order is (exponent, branch) order.
using Key = std::int64_t;
inline constexpr int kMaxBranches = 16;

inline constexpr Key make_key(int e, int b) { return static_cast<Key>(e) * kMaxBranches + b; }
inline constexpr int key_exp(Key k) { return static_cast<int>(k >> 4); }
inline constexpr int key_branch(Key k) { return static_cast<int>(k & 15); }

/// Finite linear combination of coordinates, sorted by key, no zero entries.
template <class S>
struct SparseVec {
  std::vector<std::pair<Key, S>> entries;

  [[nodiscard]] bool empty() const { return entries.empty(); }
  [[nodiscard]] std::size_t size() const { return entries.size(); }
  [[nodiscard]] Key pivot() const { return entries.front().first; }

  [[nodiscard]] const S* find(Key k) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), k,
                               [](const auto& e, Key key) { return e.first < key; });
    return (it != entries.end() && it->first == k) ? &it->second : nullptr;
  }

  static SparseVec from_map(std::map<Key, S>&& m) {
    SparseVec v;
    v.entries.reserve(m.size());
    for (auto& [k, c] : m) {
      if (!is_zero(c)) v.entries.emplace_back(k, std::move(c));
    }
    return v;
  }

  static SparseVec unit(Key k, S c = S(1)) {
    SparseVec v;
    if (!is_zero(c)) v.entries.emplace_back(k, std::move(c));
    return v;
  }

  friend bool operator==(const SparseVec& x, const SparseVec& y) { return x.entries == y.entries; }
};

/// y += c * x.
template <class S>
void axpy(SparseVec<S>& y, const S& c, const SparseVec<S>& x) {
  if (is_zero(c) || x.empty()) return;
  std::vector<std::pair<Key, S>> out;
  out.reserve(y.entries.size() + x.entries.size());
  auto i = y.entries.begin();
  auto j = x.entries.begin();
  while (i != y.entries.end() || j != x.entries.end()) {
    if (j == x.entries.end() || (i != y.entries.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == y.entries.end() || j->first < i->first) {
      out.emplace_back(j->first, c * j->second);
      ++j;
    } else {
      S v = i->second + c * j->second;
      if (!is_zero(v)) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  y.entries = std::move(out);
}

template <class S>
void scale(SparseVec<S>& v, const S& c) {
  for (auto& e : v.entries) e.second = c * e.second;
}

/// Drops coordinates with exponent >= top.
template <class S>
void truncate(SparseVec<S>& v, int top) {
  auto it = std::lower_bound(v.entries.begin(), v.entries.end(), make_key(top, 0),
                             [](const auto& e, Key key) { return e.first < key; });
  v.entries.erase(it, v.entries.end());
}

/// Componentwise product, discarding exponents >= top.
template <class S>
SparseVec<S> multiply(const SparseVec<S>& x, const SparseVec<S>& y, int top) {
  std::map<Key, S> acc;
  for (const auto& [kx, cx] : x.entries) {
    const int bx = key_branch(kx);
    const int ex = key_exp(kx);
    for (const auto& [ky, cy] : y.entries) {
      if (key_branch(ky) != bx) continue;
      const int e = ex + key_exp(ky);
      if (e >= top) continue;
      auto [it, fresh] = acc.try_emplace(make_key(e, bx), cx * cy);
      if (!fresh) it->second += cx * cy;
    }
  }
  return SparseVec<S>::from_map(std::move(acc));
}

/// Minimum exponent present on branch b, or `none` if the branch is empty.
template <class S>
int branch_low(const SparseVec<S>& v, int b, int none) {
  for (const auto& [k, c] : v.entries) {
    if (key_branch(k) == b) return key_exp(k);
  }
  return none;
}

/// Coordinates of an element below `top`; throws PrecisionExceeded when some
/// branch is not known that far.
template <class S>
SparseVec<S> to_sparse(const arith::MultiBranchElement<S>& x, int top) {
  if (x.branches() > kMaxBranches) throw DomainError("too many branches");
  std::map<Key, S> m;
  for (int b = 0; b < x.branches(); ++b) {
    const auto& s = x.branch(b);
    if (s.precision() < top) {
      throw PrecisionExceeded("branch " + std::to_string(b) + " known to t^" + std::to_string(s.precision()) +
                              ", window needs t^" + std::to_string(top));
    }
    if (s.is_zero()) continue;
    for (int e = s.low_order(); e < std::min(top, s.high_order()); ++e) {
      S c = s.coeff(e);
      if (!is_zero(c)) m.emplace(make_key(e, b), std::move(c));
    }
  }
  return SparseVec<S>::from_map(std::move(m));
}

template <class S>
arith::MultiBranchElement<S> to_element(const SparseVec<S>& v, int branches) {
  arith::MultiBranchElement<S> x(branches);
  for (const auto& [k, c] : v.entries) x.add_term(key_branch(k), key_exp(k), c);
  return x;
}

inline SparseVec<RatFunc> extend(const SparseVec<Rational>& v) {
  SparseVec<RatFunc> r;
  r.entries.reserve(v.entries.size());
  for (const auto& [k, c] : v.entries) r.entries.emplace_back(k, RatFunc(c));
  return r;
}

inline SparseVec<Rational> specialize(const SparseVec<RatFunc>& v, const Rational* at) {
  std::map<Key, Rational> m;
  for (const auto& [k, c] : v.entries) m.emplace(k, at ? c.eval(*at) : c.eval_at_zero());
  return SparseVec<Rational>::from_map(std::move(m));
}

}  // namespace curvecert::algebra
