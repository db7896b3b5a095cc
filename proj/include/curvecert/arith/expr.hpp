#pragma once

#include <string_view>

#include "curvecert/arith/rational_function.hpp"

namespace curvecert::arith {

/// Parses a coefficient such as "(a-1)/a", "-3/4" or "a^-1 + 2a". Grammar:
/// sums and products of integer literals, the symbol a and parenthesised
/// subexpressions, with integer exponents (negative allowed) and juxtaposition
/// read as multiplication. Throws ParseError.
RatFunc parse_deform_scalar(std::string_view text);

/// Same grammar, rejecting any occurrence of a.
Rational parse_field_scalar(std::string_view text);

}  // namespace curvecert::arith
