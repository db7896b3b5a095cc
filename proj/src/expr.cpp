#include "curvecert/arith/expr.hpp"

#include <cctype>
#include <string>

#include "curvecert/errors.hpp"

namespace curvecert::arith {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  bool saw_a = false;

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " in '" + std::string(s_) + "' at offset " + std::to_string(pos_));
  }

  RatFunc expr() {
    RatFunc v = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      RatFunc rhs = term();
      if (c == '+') v += rhs;
      else v -= rhs;
    }
    return v;
  }

  RatFunc term() {
    RatFunc v = unary();
    for (;;) {
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        RatFunc rhs = unary();
        if (c == '*') {
          v *= rhs;
        } else {
          if (rhs.is_zero()) fail("division by zero");
          v /= rhs;
        }
      } else if (c == 'a' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  RatFunc unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    long k = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      k = k * 10 + (s_[pos_++] - '0');
      if (k > 1000) fail("exponent too large");
    }
    RatFunc r(1);
    for (long i = 0; i < k; ++i) r *= base;
    if (neg) {
      if (r.is_zero()) fail("zero raised to a negative power");
      r = inverse(r);
    }
    return r;
  }

  RatFunc atom() {
    const char c = peek();
    if (c == 'a') {
      ++pos_;
      saw_a = true;
      return RatFunc::a();
    }
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_deform_scalar(std::string_view text) {
  Parser p(text);
  return p.parse();
}

Rational parse_field_scalar(std::string_view text) {
  Parser p(text);
  RatFunc v = p.parse();
  if (p.saw_a || !v.is_polynomial() || !v.num().is_constant()) {
    throw ParseError("field scalar may not mention a: '" + std::string(text) + "'");
  }
  return v.num().coeff(0);
}

}  // namespace curvecert::arith
