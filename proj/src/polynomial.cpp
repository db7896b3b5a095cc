#include "curvecert/arith/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "curvecert/errors.hpp"

namespace curvecert::arith {

Poly::Poly(Rational c) {
  if (!arith::is_zero(c)) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Rational c, int degree) {
  Poly p;
  if (arith::is_zero(c)) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = std::move(c);
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && arith::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
  Poly r;
  if (x.is_zero() || y.is_zero()) return r;
  r.coeffs_.assign(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (arith::is_zero(x.coeffs_[i])) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  r.trim();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (arith::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  Poly rem = *this;
  Poly quo;
  const int dd = divisor.degree();
  if (rem.degree() < dd) return {quo, rem};
  quo.coeffs_.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational(0));
  const Rational lead_inv = Rational(1) / divisor.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    Rational c = rem.leading() * lead_inv;
    for (int i = 0; i <= dd; ++i) {
      rem.coeffs_[static_cast<std::size_t>(i + shift)] -= c * divisor.coeffs_[static_cast<std::size_t>(i)];
    }
    quo.coeffs_[static_cast<std::size_t>(shift)] = std::move(c);
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r *= Rational(1) / leading();
  return r;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (arith::is_zero(c)) continue;
    Rational mag = abs(c);
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (i == 0 || !unit) {
      if (i > 0 && mag.get_den() != 1) {
        os << '(' << mag.get_str() << ')';
      } else {
        os << mag.get_str();
      }
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Poly gcd(Poly x, Poly y) {
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace curvecert::arith
