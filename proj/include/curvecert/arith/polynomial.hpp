#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvecert/arith/rational.hpp"

namespace curvecert::arith {

/// Univariate polynomial in the deformation parameter a, coefficients stored
/// from the constant term upwards with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(Rational c);                   // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(Rational c, int degree);
  static Poly variable() { return monomial(Rational(1), 1); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational coeff(int i) const;
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }
  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] bool is_one() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);
  friend bool operator==(const Poly& x, const Poly& y) { return x.coeffs_ == y.coeffs_; }

  /// Euclidean division; divisor must be nonzero.
  [[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  [[nodiscard]] Poly monic() const;

  [[nodiscard]] std::string to_string(char var = 'a') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) is 0.
Poly gcd(Poly x, Poly y);

}  // namespace curvecert::arith
