#include "curvecert/arith/series.hpp"

#include <sstream>

namespace curvecert::arith {
namespace {

std::string scalar_text(const Rational& c) { return c.get_str(); }
std::string scalar_text(const RatFunc& c) { return c.to_string(); }
bool is_plain(const Rational&) { return true; }
bool is_plain(const RatFunc& c) { return c.is_polynomial() && c.num().is_constant(); }

template <class S>
std::string series_text(const TruncSeries<S>& s, char var) {
  std::ostringstream os;
  bool first = true;
  for (int e = s.low_order(); !s.is_zero() && e < s.high_order(); ++e) {
    S c = s.coeff(e);
    if (is_zero(c)) continue;
    std::string body = scalar_text(c);
    bool neg = false;
    if (is_plain(c) && body.front() == '-') {
      neg = true;
      body.erase(body.begin());
    } else if (!is_plain(c)) {
      body = "(" + body + ")";
    }
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << body;
      continue;
    }
    if (body != "1") os << body << '*';
    os << var;
    if (e != 1) os << '^' << e;
  }
  if (first) os << '0';
  if (!s.is_exact()) os << " + O(" << var << '^' << s.precision() << ')';
  return os.str();
}

}  // namespace

template <class S>
std::string to_string(const MultiBranchElement<S>& x, char var) {
  if (x.branches() == 1) return series_text(x.branch(0), var);
  std::string out = "(";
  for (int b = 0; b < x.branches(); ++b) {
    if (b) out += ", ";
    out += series_text(x.branch(b), var);
  }
  return out + ")";
}

template std::string to_string(const MultiBranchElement<Rational>&, char);
template std::string to_string(const MultiBranchElement<RatFunc>&, char);

}  // namespace curvecert::arith
