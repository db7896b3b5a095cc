#pragma once

// gtest printers for engine types, so failures show values instead of bytes.

#include <ostream>

#include "curvecert/arith/series.hpp"

namespace curvecert::arith {

inline void PrintTo(const RatFunc& x, std::ostream* os) { *os << x.to_string(); }

template <class S>
void PrintTo(const MultiBranchElement<S>& x, std::ostream* os) {
  *os << to_string(x) << " [prec " << x.precision() << "]";
}

template <class S>
void PrintTo(const TruncSeries<S>& x, std::ostream* os) {
  *os << to_string(MultiBranchElement<S>(std::vector<TruncSeries<S>>{x})) << " [prec " << x.precision() << "]";
}

}  // namespace curvecert::arith
