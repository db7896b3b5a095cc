#include "curvecert/arith/rational.hpp"

#include <cctype>

#include "curvecert/errors.hpp"

namespace curvecert::arith {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  // mpq_set_str accepts "num/den" and rejects garbage with -1.
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  }
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace curvecert::arith
