#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace curvecert::arith {

/// Exact element of the base field. mpq_class keeps values canonical (lowest
/// terms, positive denominator) as long as every constructed value is
/// canonicalized, which parse_rational guarantees.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational inverse(const Rational& q) { return Rational(1) / q; }

}  // namespace curvecert::arith
