#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curvecert/algebra/ring.hpp"

namespace curvecert::modules {

using algebra::Element;
using algebra::RingPtr;
using algebra::SparseVec;
using algebra::SubringRep;
using algebra::Subspace;
using arith::Rational;

/// A finitely generated R-submodule of the total fraction ring, stored as its
/// canonical span in the ring's window together with R-module generators.
class ModuleRep {
 public:
  ModuleRep(RingPtr ring, Subspace<Rational> basis, std::vector<SparseVec<Rational>> generators)
      : ring_(std::move(ring)), basis_(std::move(basis)), generators_(std::move(generators)) {}

  [[nodiscard]] const RingPtr& ring_ptr() const { return ring_; }
  [[nodiscard]] const SubringRep& ring() const { return *ring_; }
  [[nodiscard]] const Subspace<Rational>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<SparseVec<Rational>>& generators() const { return generators_; }
  [[nodiscard]] int branches() const { return basis_.branches(); }
  [[nodiscard]] int low() const { return basis_.low(); }

 private:
  RingPtr ring_;
  Subspace<Rational> basis_;
  std::vector<SparseVec<Rational>> generators_;
};

/// R-span of the generators. Throws NotTorsionFree when the span misses a branch.
ModuleRep module_span(const RingPtr& ring, const std::vector<Element>& gens);

/// Wraps a subspace known to be an R-module.
ModuleRep module_from_subspace(const RingPtr& ring, Subspace<Rational> basis);

/// The ring itself as a module over a (sub)ring.
ModuleRep ring_as_module(const RingPtr& over, const SubringRep& ring);

/// The same subspace regarded as a module over a subring `over`.
ModuleRep push_forward(const RingPtr& over, const ModuleRep& m);

/// Throws WindowMismatch if the windows differ.
bool module_equal(const ModuleRep& a, const ModuleRep& b);

/// u*M for a nonzerodivisor u. Throws ZeroDivisorMultiplier, PrecisionExceeded.
ModuleRep scalar_mul(const Element& u, const ModuleRep& m);

/// {f : f*M1 in M2} inside the window.
ModuleRep hom_module(const ModuleRep& m1, const ModuleRep& m2);

/// Hom(M, M) as a subring.
SubringRep endomorphism_ring(const ModuleRep& m);

/// dim M / mM where m is the Jacobson radical of the ring.
int minimal_generators(const ModuleRep& m);

/// A generating set of minimal size: basis rows independent modulo m*M.
std::vector<SparseVec<Rational>> minimal_generating_set(const ModuleRep& m);

/// Residue-pairing construction of the dualizing module, shifted into the
/// normalization by a uniform power of t.
ModuleRep dualizing_module(const RingPtr& ring);

/// Span of Hom(M1, M2) * M1.
ModuleRep hom_image(const ModuleRep& hom, const ModuleRep& m1);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Inconclusive };
std::string to_string(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  std::optional<Element> witness;  // u with u*M1 = M2
  std::string reason;
  [[nodiscard]] bool isomorphic() const { return verdict == IsoVerdict::Isomorphic; }
};

inline constexpr int kIsoRetries = 8;

/// Randomized search for u in Hom(M1, M2) with u*M1 = M2.
IsoResult is_isomorphic(const ModuleRep& m1, const ModuleRep& m2, std::mt19937_64& rng, int retries = kIsoRetries);

}  // namespace curvecert::modules
