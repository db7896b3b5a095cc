#include "curvecert/arith/rational_function.hpp"

#include <algorithm>

#include "curvecert/errors.hpp"

namespace curvecert::arith {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  if (!(den_.leading() == 1)) {
    const Rational inv = Rational(1) / den_.leading();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFunc::eval_at_zero() const {
  if (!regular_at_zero()) throw PoleAtZero("coefficient " + to_string() + " has a pole at a=0");
  return num_.coeff(0) / den_.coeff(0);
}

Rational RatFunc::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (arith::is_zero(d)) throw PoleAtZero("coefficient " + to_string() + " has a pole at a=" + x.get_str());
  return num_.eval(x) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying so intermediate degrees stay small.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n1 = g1.is_one() ? num_ : num_.divmod(g1).first;
  Poly d2 = g1.is_one() ? o.den_ : o.den_.divmod(g1).first;
  Poly n2 = g2.is_one() ? o.num_ : o.num_.divmod(g2).first;
  Poly d1 = g2.is_one() ? den_ : den_.divmod(g2).first;
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (!(den_.leading() == 1)) {
    const Rational inv = Rational(1) / den_.leading();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError("division by zero in Q(a)");
  RatFunc inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  if (!(inv.den_.leading() == 1)) {
    const Rational c = Rational(1) / inv.den_.leading();
    inv.num_ *= c;
    inv.den_ *= c;
  }
  return *this *= inv;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const Poly& p) {
    std::string s = p.to_string();
    const bool simple = p.coeffs().size() == 1 ||
                        (p.coeffs().size() >= 2 && p.degree() >= 1 &&
                         std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                       [](const Rational& c) { return !arith::is_zero(c); }) == 1);
    return simple ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace curvecert::arith
