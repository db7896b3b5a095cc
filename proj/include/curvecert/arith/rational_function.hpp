#pragma once

#include <string>

#include "curvecert/arith/polynomial.hpp"
#include "curvecert/arith/rational.hpp"

namespace curvecert::arith {

/// Element of Q(a): the scalars of the generic fiber of a one-parameter
/// deformation. Stored reduced, denominator monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}                  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}      // NOLINT(google-explicit-constructor)
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}      // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);

  static RatFunc a() { return RatFunc(Poly::variable()); }

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.is_one(); }

  /// True when the value at a = 0 is defined.
  [[nodiscard]] bool regular_at_zero() const { return !is_zero_at_zero(den_); }
  /// Value at a = 0; throws PoleAtZero when the denominator vanishes there.
  [[nodiscard]] Rational eval_at_zero() const;
  [[nodiscard]] Rational eval(const Rational& x) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc x, const RatFunc& y) { return x += y; }
  friend RatFunc operator-(RatFunc x, const RatFunc& y) { return x -= y; }
  friend RatFunc operator*(RatFunc x, const RatFunc& y) { return x *= y; }
  friend RatFunc operator/(RatFunc x, const RatFunc& y) { return x /= y; }
  friend bool operator==(const RatFunc& x, const RatFunc& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  static bool is_zero_at_zero(const Poly& p) { return p.is_zero() || arith::is_zero(p.coeff(0)); }
  void normalize();

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline RatFunc inverse(const RatFunc& x) { return RatFunc(1) / x; }
inline std::string to_string(const RatFunc& x) { return x.to_string(); }

}  // namespace curvecert::arith
