#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "curvecert/arith/rational.hpp"
#include "curvecert/arith/rational_function.hpp"
#include "curvecert/errors.hpp"

namespace curvecert::arith {

/// Precision value of a series whose coefficients are all known.
inline constexpr int kExact = INT_MAX / 4;

inline int add_precision(int a, int b) {
  if (a >= kExact || b >= kExact) return kExact;
  return a + b;
}

/// Laurent series in t truncated at an absolute precision: coefficients of
/// t^e for e >= precision() are unknown. Stored with no leading or trailing
/// zeros; the zero series has no coefficients.
template <class S>
class TruncSeries {
 public:
  TruncSeries() = default;
  explicit TruncSeries(int precision) : prec_(precision) {}
  TruncSeries(int low, std::vector<S> coeffs, int precision = kExact)
      : low_(low), coeffs_(std::move(coeffs)), prec_(precision) {
    normalize();
  }

  static TruncSeries monomial(S c, int e, int precision = kExact) {
    return TruncSeries(e, std::vector<S>{std::move(c)}, precision);
  }
  static TruncSeries constant(S c) { return monomial(std::move(c), 0); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_exact() const { return prec_ >= kExact; }
  [[nodiscard]] int precision() const { return prec_; }
  /// Valuation; for the zero series this is the precision (nothing below is known to be nonzero).
  [[nodiscard]] int low_order() const { return is_zero() ? prec_ : low_; }
  /// One past the highest stored exponent.
  [[nodiscard]] int high_order() const { return low_ + static_cast<int>(coeffs_.size()); }
  [[nodiscard]] const std::vector<S>& coeffs() const { return coeffs_; }
  [[nodiscard]] const S& leading() const { return coeffs_.front(); }

  [[nodiscard]] S coeff(int n) const {
    if (n >= prec_) {
      throw PrecisionExceeded("coefficient of t^" + std::to_string(n) + " requested at precision " +
                              std::to_string(prec_));
    }
    if (n < low_ || n >= high_order()) return S(0);
    return coeffs_[static_cast<std::size_t>(n - low_)];
  }

  TruncSeries truncated(int precision) const {
    TruncSeries r = *this;
    r.prec_ = std::min(prec_, precision);
    r.normalize();
    return r;
  }

  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) { return combine(x, y, false); }
  friend TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) { return combine(x, y, true); }

  friend TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
    const int prec = std::min(add_precision(x.prec_, y.low_order()), add_precision(y.prec_, x.low_order()));
    if (x.is_zero() || y.is_zero()) return TruncSeries(prec);
    const int low = x.low_ + y.low_;
    int len = static_cast<int>(x.coeffs_.size() + y.coeffs_.size()) - 1;
    if (prec < kExact) len = std::min(len, std::max(0, prec - low));
    std::vector<S> out(static_cast<std::size_t>(len), S(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (is_zero_scalar(x.coeffs_[i])) continue;
      for (std::size_t j = 0; j < y.coeffs_.size() && static_cast<int>(i + j) < len; ++j) {
        out[i + j] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    return TruncSeries(low, std::move(out), prec);
  }

  friend TruncSeries operator*(const S& c, const TruncSeries& x) {
    if (is_zero_scalar(c)) return TruncSeries(x.prec_);
    TruncSeries r = x;
    for (auto& v : r.coeffs_) v = c * v;
    return r;
  }

  friend bool operator==(const TruncSeries& x, const TruncSeries& y) {
    return x.prec_ == y.prec_ && x.low_order() == y.low_order() && x.coeffs_ == y.coeffs_;
  }

  /// Inverse; exact inputs are expanded up to the absolute precision cap.
  [[nodiscard]] TruncSeries inverse(int cap) const {
    if (is_zero()) throw NotAUnit("zero series has no inverse");
    const int v = low_;
    int prec = std::min(cap, prec_ < kExact ? prec_ - 2 * v : kExact);
    const int len = std::max(0, prec + v);  // coefficients for exponents -v .. prec-1
    const S inv0 = S(1) / coeffs_[0];
    std::vector<S> out(static_cast<std::size_t>(len), S(0));
    for (int k = 0; k < len; ++k) {
      S acc = (k == 0) ? S(1) : S(0);
      for (int j = 1; j <= k && j < static_cast<int>(coeffs_.size()); ++j) {
        acc -= coeffs_[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
      }
      out[static_cast<std::size_t>(k)] = acc * inv0;
    }
    return TruncSeries(-v, std::move(out), prec);
  }

 private:
  static bool is_zero_scalar(const S& c) { return arith::is_zero(c); }

  static TruncSeries combine(const TruncSeries& x, const TruncSeries& y, bool subtract) {
    const int prec = std::min(x.prec_, y.prec_);
    if (x.is_zero() && y.is_zero()) return TruncSeries(prec);
    int low = INT_MAX, high = INT_MIN;
    for (const TruncSeries* s : {&x, &y}) {
      if (s->is_zero()) continue;
      low = std::min(low, s->low_);
      high = std::max(high, s->high_order());
    }
    high = std::min(high, std::max(low, prec));
    std::vector<S> out(static_cast<std::size_t>(std::max(0, high - low)), S(0));
    for (int e = low; e < high; ++e) {
      S v = x.raw(e);
      if (subtract) v -= y.raw(e);
      else v += y.raw(e);
      out[static_cast<std::size_t>(e - low)] = std::move(v);
    }
    return TruncSeries(low, std::move(out), prec);
  }

  [[nodiscard]] S raw(int e) const {
    if (e < low_ || e >= high_order()) return S(0);
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }

  void normalize() {
    if (prec_ < kExact) {
      const int keep = std::max(0, std::min(static_cast<int>(coeffs_.size()), prec_ - low_));
      coeffs_.resize(static_cast<std::size_t>(keep));
    }
    while (!coeffs_.empty() && is_zero_scalar(coeffs_.back())) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && is_zero_scalar(coeffs_[lead])) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  int low_ = 0;
  std::vector<S> coeffs_;
  int prec_ = kExact;
};

/// One truncated series per branch of the normalization.
template <class S>
class MultiBranchElement {
 public:
  MultiBranchElement() = default;
  explicit MultiBranchElement(int branches) : parts_(static_cast<std::size_t>(branches)) {}
  explicit MultiBranchElement(std::vector<TruncSeries<S>> parts) : parts_(std::move(parts)) {}

  static MultiBranchElement one(int branches) {
    MultiBranchElement x(branches);
    for (auto& p : x.parts_) p = TruncSeries<S>::constant(S(1));
    return x;
  }
  static MultiBranchElement monomial(int branches, int branch, int e, S c = S(1)) {
    MultiBranchElement x(branches);
    x.parts_[static_cast<std::size_t>(branch)] = TruncSeries<S>::monomial(std::move(c), e);
    return x;
  }
  /// Uniform t^e on every branch.
  static MultiBranchElement uniform(int branches, int e) {
    MultiBranchElement x(branches);
    for (auto& p : x.parts_) p = TruncSeries<S>::monomial(S(1), e);
    return x;
  }

  [[nodiscard]] int branches() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] const TruncSeries<S>& branch(int b) const { return parts_.at(static_cast<std::size_t>(b)); }
  TruncSeries<S>& branch(int b) { return parts_.at(static_cast<std::size_t>(b)); }
  [[nodiscard]] const std::vector<TruncSeries<S>>& parts() const { return parts_; }

  [[nodiscard]] int precision() const {
    int p = kExact;
    for (const auto& s : parts_) p = std::min(p, s.precision());
    return p;
  }
  [[nodiscard]] bool is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(), [](const auto& s) { return s.is_zero(); });
  }
  /// Nonzero on every branch, so multiplication by it is injective.
  [[nodiscard]] bool is_nonzerodivisor() const {
    return std::none_of(parts_.begin(), parts_.end(), [](const auto& s) { return s.is_zero(); });
  }

  /// Adds c * e_b t^e in place.
  void add_term(int b, int e, const S& c) {
    auto& p = parts_.at(static_cast<std::size_t>(b));
    p = p + TruncSeries<S>::monomial(c, e);
  }

  MultiBranchElement operator-() const {
    MultiBranchElement r = *this;
    for (auto& p : r.parts_) p = -p;
    return r;
  }
  friend MultiBranchElement operator+(const MultiBranchElement& x, const MultiBranchElement& y) {
    return zip(x, y, [](const auto& a, const auto& b) { return a + b; });
  }
  friend MultiBranchElement operator-(const MultiBranchElement& x, const MultiBranchElement& y) {
    return zip(x, y, [](const auto& a, const auto& b) { return a - b; });
  }
  friend MultiBranchElement operator*(const MultiBranchElement& x, const MultiBranchElement& y) {
    return zip(x, y, [](const auto& a, const auto& b) { return a * b; });
  }
  friend MultiBranchElement operator*(const S& c, const MultiBranchElement& x) {
    MultiBranchElement r = x;
    for (auto& p : r.parts_) p = c * p;
    return r;
  }
  friend bool operator==(const MultiBranchElement& x, const MultiBranchElement& y) { return x.parts_ == y.parts_; }

 private:
  template <class F>
  static MultiBranchElement zip(const MultiBranchElement& x, const MultiBranchElement& y, F f) {
    if (x.branches() != y.branches()) throw DomainError("branch counts differ");
    MultiBranchElement r(x.branches());
    for (std::size_t i = 0; i < x.parts_.size(); ++i) r.parts_[i] = f(x.parts_[i], y.parts_[i]);
    return r;
  }

  std::vector<TruncSeries<S>> parts_;
};

using Element = MultiBranchElement<Rational>;
using DeformElement = MultiBranchElement<RatFunc>;

template <class S>
MultiBranchElement<S> series_mul(const MultiBranchElement<S>& x, const MultiBranchElement<S>& y) {
  return x * y;
}

/// Two-sided inverse; exact inputs are expanded up to absolute precision `cap`.
template <class S>
MultiBranchElement<S> series_inverse(const MultiBranchElement<S>& x, int cap) {
  MultiBranchElement<S> r(x.branches());
  for (int b = 0; b < x.branches(); ++b) {
    if (x.branch(b).is_zero()) throw NotAUnit("branch " + std::to_string(b) + " is zero");
    r.branch(b) = x.branch(b).inverse(cap);
  }
  return r;
}

template <class S>
S coeff(const MultiBranchElement<S>& x, int branch, int n) {
  if (branch < 0 || branch >= x.branches()) throw DomainError("branch index out of range");
  return x.branch(branch).coeff(n);
}

/// Substitutes a = 0 coefficientwise.
inline Element eval_a_zero(const DeformElement& x) {
  Element r(x.branches());
  for (int b = 0; b < x.branches(); ++b) {
    const auto& s = x.branch(b);
    std::vector<Rational> cs;
    cs.reserve(s.coeffs().size());
    for (const auto& c : s.coeffs()) cs.push_back(c.eval_at_zero());
    r.branch(b) = TruncSeries<Rational>(s.is_zero() ? 0 : s.low_order(), std::move(cs), s.precision());
  }
  return r;
}

/// Substitutes a = value coefficientwise.
inline Element eval_a(const DeformElement& x, const Rational& value) {
  Element r(x.branches());
  for (int b = 0; b < x.branches(); ++b) {
    const auto& s = x.branch(b);
    std::vector<Rational> cs;
    cs.reserve(s.coeffs().size());
    for (const auto& c : s.coeffs()) cs.push_back(c.eval(value));
    r.branch(b) = TruncSeries<Rational>(s.is_zero() ? 0 : s.low_order(), std::move(cs), s.precision());
  }
  return r;
}

inline DeformElement extend_scalars(const Element& x) {
  DeformElement r(x.branches());
  for (int b = 0; b < x.branches(); ++b) {
    const auto& s = x.branch(b);
    std::vector<RatFunc> cs(s.coeffs().begin(), s.coeffs().end());
    r.branch(b) = TruncSeries<RatFunc>(s.is_zero() ? 0 : s.low_order(), std::move(cs), s.precision());
  }
  return r;
}

/// Human-readable form such as "(t^3, -t^2 + 2*t)".
template <class S>
std::string to_string(const MultiBranchElement<S>& x, char var = 't');

extern template std::string to_string(const MultiBranchElement<Rational>&, char);
extern template std::string to_string(const MultiBranchElement<RatFunc>&, char);

}  // namespace curvecert::arith
