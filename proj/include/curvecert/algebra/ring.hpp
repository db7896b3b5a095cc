#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curvecert/algebra/subspace.hpp"
#include "curvecert/arith/series.hpp"

namespace curvecert::algebra {

using arith::Element;

/// Truncation parameters: series are carried to t^precision and subspace
/// comparisons happen below top() = precision - guard.
struct Window {
  int precision = 40;
  int guard = 8;
  [[nodiscard]] int top() const { return precision - guard; }
};

/// A reduced curve germ presented as a subring of a product of power series
/// rings k[[t]], one per branch. Immutable once built.
class SubringRep {
 public:
  /// Multiplicative closure of {1} and the generators inside the window.
  /// Throws DegenerateGenerators, NoStabilization, PrecisionExceeded.
  static SubringRep span(int branches, const std::vector<Element>& generators, Window window,
                         std::string name = {});

  /// Wraps a subspace already known to be a subring (e.g. an endomorphism
  /// ring). Throws DomainError if it has negative exponents or misses 1.
  static SubringRep from_subspace(Subspace<Rational> basis, int guard, std::string name = {});

  [[nodiscard]] int branches() const { return basis_.branches(); }
  [[nodiscard]] int top() const { return basis_.top(); }
  [[nodiscard]] int guard() const { return guard_; }
  [[nodiscard]] const Subspace<Rational>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<int>& conductor() const { return conductor_; }
  [[nodiscard]] const std::vector<Element>& generators() const { return generators_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  SubringRep() = default;
  void finish();

  Subspace<Rational> basis_;
  std::vector<int> conductor_;
  std::vector<Element> generators_;
  std::string name_;
  int guard_ = 8;
};

using RingPtr = std::shared_ptr<const SubringRep>;

/// Membership in R. Throws PrecisionExceeded if x is not known up to the window top.
bool contains(const SubringRep& r, const Element& x);

int delta_invariant(const SubringRep& r);
int embedding_dimension(const SubringRep& r);
int conductor_length(const SubringRep& r);

/// Jacobson radical: elements with zero constant term on every branch.
Subspace<Rational> maximal_ideal(const SubringRep& r);

/// Finite R-module generating set of a subspace that is an R-module: rows
/// below the per-branch saturation plus a run of monomials above it.
std::vector<SparseVec<Rational>> module_generators(const Subspace<Rational>& v, const SubringRep& r);

/// Span of x*y for x in xs and y in the rows of v, plus the tail monomials
/// forced by negative valuations of either factor.
Subspace<Rational> product_span(const std::vector<SparseVec<Rational>>& xs, const Subspace<Rational>& v);

/// Branch sets of the local factors, read off the exponent-0 idempotents.
std::vector<std::vector<int>> local_blocks(const SubringRep& r);
bool is_local(const SubringRep& r);

/// Image of R under projection onto a subset of branches (renumbered 0..).
SubringRep project(const SubringRep& r, const std::vector<int>& branches);

/// Values of the projection of R onto one branch below its conductor,
/// together with that conductor.
struct BranchSemigroup {
  std::vector<int> values;
  int conductor = 0;
  friend bool operator==(const BranchSemigroup&, const BranchSemigroup&) = default;
  friend auto operator<=>(const BranchSemigroup&, const BranchSemigroup&) = default;
};
BranchSemigroup branch_semigroup(const SubringRep& r, int branch);

/// The subspace cut back to a smaller window.
Subspace<Rational> restrict_window(const Subspace<Rational>& v, int top);

}  // namespace curvecert::algebra
