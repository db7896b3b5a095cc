#pragma once

#include <vector>

#include "curvecert/arith/series.hpp"

namespace curvecert::arith {

/// One monomial c * e_branch * t^exp of a sparse term list.
template <class S>
struct Term {
  int branch = 0;
  int exp = 0;
  S coeff = S(1);
};

template <class S>
MultiBranchElement<S> from_terms(int branches, const std::vector<Term<S>>& terms) {
  MultiBranchElement<S> x(branches);
  for (const auto& t : terms) {
    if (t.branch < 0 || t.branch >= branches) throw DomainError("term branch out of range");
    x.add_term(t.branch, t.exp, t.coeff);
  }
  return x;
}

/// Shorthand for exact elements: {{branch, exp, coeff}, ...}.
inline Element elem(int branches, const std::vector<Term<Rational>>& terms) { return from_terms(branches, terms); }
inline DeformElement delem(int branches, const std::vector<Term<RatFunc>>& terms) {
  return from_terms(branches, terms);
}

/// Nonzero terms of an element in (exp, branch) order.
template <class S>
std::vector<Term<S>> to_terms(const MultiBranchElement<S>& x) {
  std::vector<Term<S>> out;
  int lo = kExact, hi = -kExact;
  for (int b = 0; b < x.branches(); ++b) {
    if (x.branch(b).is_zero()) continue;
    lo = std::min(lo, x.branch(b).low_order());
    hi = std::max(hi, x.branch(b).high_order());
  }
  for (int e = lo; e < hi; ++e) {
    for (int b = 0; b < x.branches(); ++b) {
      const auto& s = x.branch(b);
      if (s.is_zero() || e < s.low_order() || e >= s.high_order()) continue;
      S c = s.coeff(e);
      if (!is_zero(c)) out.push_back({b, e, c});
    }
  }
  return out;
}

}  // namespace curvecert::arith
