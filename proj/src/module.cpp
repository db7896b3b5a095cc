#include "curvecert/modules/module.hpp"

#include <algorithm>

namespace curvecert::modules {

using algebra::Key;
using algebra::key_branch;
using algebra::key_exp;
using algebra::KernelBuilder;
using algebra::make_key;

namespace {

Key constraint_key(std::size_t gen, Key k) {
  return (static_cast<Key>(gen) << 24) + (k + (Key{1} << 22));
}

}  // namespace

ModuleRep module_span(const RingPtr& ring, const std::vector<Element>& gens) {
  const int r = ring->branches();
  const int top = ring->top();
  if (gens.empty()) throw NotTorsionFree("no generators");
  Subspace<Rational> basis(r, top);
  std::vector<SparseVec<Rational>> sparse;
  std::vector<bool> seen(static_cast<std::size_t>(r), false);
  for (const auto& g : gens) {
    if (g.branches() != r) throw DomainError("generator has the wrong branch count");
    SparseVec<Rational> v = algebra::to_sparse(g, top);
    for (int b = 0; b < r; ++b) {
      if (!g.branch(b).is_zero()) seen[static_cast<std::size_t>(b)] = true;
    }
    sparse.push_back(std::move(v));
  }
  for (int b = 0; b < r; ++b) {
    if (!seen[static_cast<std::size_t>(b)]) throw NotTorsionFree("span vanishes on branch " + std::to_string(b));
  }
  basis = algebra::product_span(sparse, ring->basis());
  return ModuleRep(ring, std::move(basis), std::move(sparse));
}

ModuleRep module_from_subspace(const RingPtr& ring, Subspace<Rational> basis) {
  auto gens = algebra::module_generators(basis, *ring);
  return ModuleRep(ring, std::move(basis), std::move(gens));
}

ModuleRep ring_as_module(const RingPtr& over, const SubringRep& ring) {
  return module_from_subspace(over, ring.basis());
}

ModuleRep push_forward(const RingPtr& over, const ModuleRep& m) { return module_from_subspace(over, m.basis()); }

bool module_equal(const ModuleRep& a, const ModuleRep& b) {
  if (a.branches() != b.branches()) throw DomainError("modules over different branch counts");
  return a.basis() == b.basis();
}

ModuleRep scalar_mul(const Element& u, const ModuleRep& m) {
  if (!u.is_nonzerodivisor()) throw ZeroDivisorMultiplier("multiplier " + arith::to_string(u) + " vanishes on a branch");
  const int need = m.basis().top() - std::min(0, m.low());
  SparseVec<Rational> us = algebra::to_sparse(u, need);
  return module_from_subspace(m.ring_ptr(), algebra::multiply(us, m.basis()));
}

ModuleRep hom_module(const ModuleRep& m1, const ModuleRep& m2) {
  const int r = m1.branches();
  const int top = m1.basis().top();
  if (m2.basis().top() != top) throw WindowMismatch("hom between different windows");
  int c1 = 0, c2 = 0;
  for (int b = 0; b < r; ++b) {
    c1 = std::max(c1, m1.basis().saturation(b));
    c2 = std::max(c2, m2.basis().saturation(b));
  }
  // f*M1 in M2 forces val f >= low(M2) - c1; anything of valuation >= c2 - low(M1) works.
  const int lo = m2.low() - c1;
  const int hi = c2 - m1.low();
  if (top + lo < c2 || hi > top) {
    throw NoStabilization("window t^" + std::to_string(top) + " too small for Hom; raise the precision");
  }
  const auto& gens = m1.generators();
  std::vector<std::pair<int, int>> unknowns;
  KernelBuilder<Rational> kb;
  for (int e = lo; e < hi; ++e) {
    for (int b = 0; b < r; ++b) {
      unknowns.emplace_back(b, e);
      const SparseVec<Rational> mono = SparseVec<Rational>::unit(make_key(e, b));
      std::map<Key, Rational> image;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        SparseVec<Rational> rem = m2.basis().reduce(algebra::multiply(mono, gens[j], top));
        for (auto& [k, c] : rem.entries) image.emplace(constraint_key(j, k), std::move(c));
      }
      kb.add(SparseVec<Rational>::from_map(std::move(image)));
    }
  }
  Subspace<Rational> out(r, top);
  for (const auto& combo : kb.kernel()) {
    std::map<Key, Rational> f;
    for (const auto& [idx, c] : combo.entries) {
      const auto& [b, e] = unknowns[static_cast<std::size_t>(idx)];
      f.emplace(make_key(e, b), c);
    }
    out.insert(SparseVec<Rational>::from_map(std::move(f)));
  }
  for (int b = 0; b < r; ++b) {
    for (int e = hi; e < top; ++e) out.insert_monomial(b, e);
  }
  return module_from_subspace(m1.ring_ptr(), std::move(out));
}

SubringRep endomorphism_ring(const ModuleRep& m) {
  ModuleRep h = hom_module(m, m);
  return SubringRep::from_subspace(h.basis(), m.ring().guard());
}

int minimal_generators(const ModuleRep& m) {
  Subspace<Rational> rad = algebra::maximal_ideal(m.ring());
  Subspace<Rational> mm = algebra::product_span(algebra::module_generators(rad, m.ring()), m.basis());
  return m.basis().dim() - mm.dim();
}

std::vector<SparseVec<Rational>> minimal_generating_set(const ModuleRep& m) {
  Subspace<Rational> rad = algebra::maximal_ideal(m.ring());
  Subspace<Rational> span = algebra::product_span(algebra::module_generators(rad, m.ring()), m.basis());
  std::vector<SparseVec<Rational>> out;
  for (const auto& [k, row] : m.basis().rows()) {
    if (span.insert(row)) out.push_back(row);
  }
  return out;
}

ModuleRep dualizing_module(const RingPtr& ring) {
  const int r = ring->branches();
  const int top = ring->top();
  int big_c = 0;
  for (int c : ring->conductor()) big_c = std::max(big_c, c);
  // Unknown h = sum h_{b,e} e_b t^e, e in [-C, -1]; the residue of h*g on
  // branch b picks out g's coefficient of t^{-1-e}.
  std::vector<std::pair<int, int>> unknowns;
  KernelBuilder<Rational> kb;
  std::vector<const SparseVec<Rational>*> rows;
  for (const auto& [k, row] : ring->basis().rows()) {
    if (key_exp(k) < big_c) rows.push_back(&row);
  }
  for (int e = -big_c; e < 0; ++e) {
    for (int b = 0; b < r; ++b) {
      unknowns.emplace_back(b, e);
      std::map<Key, Rational> image;
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (const Rational* c = rows[j]->find(make_key(-1 - e, b))) image.emplace(static_cast<Key>(j), *c);
      }
      kb.add(SparseVec<Rational>::from_map(std::move(image)));
    }
  }
  Subspace<Rational> w(r, top);
  for (int b = 0; b < r; ++b) {
    for (int e = 0; e < top; ++e) w.insert_monomial(b, e);
  }
  for (const auto& combo : kb.kernel()) {
    std::map<Key, Rational> h;
    for (const auto& [idx, c] : combo.entries) {
      const auto& [b, e] = unknowns[static_cast<std::size_t>(idx)];
      h.emplace(make_key(e, b), c);
    }
    w.insert(SparseVec<Rational>::from_map(std::move(h)));
  }
  SparseVec<Rational> shift;
  for (int b = 0; b < r; ++b) shift.entries.emplace_back(make_key(big_c, b), Rational(1));
  return module_from_subspace(ring, algebra::multiply(shift, w));
}

ModuleRep hom_image(const ModuleRep& hom, const ModuleRep& m1) {
  auto gens = algebra::module_generators(hom.basis(), hom.ring());
  return module_from_subspace(m1.ring_ptr(), algebra::product_span(gens, m1.basis()));
}

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "isomorphic";
    case IsoVerdict::NotIsomorphic: return "not isomorphic";
    case IsoVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

IsoResult is_isomorphic(const ModuleRep& m1, const ModuleRep& m2, std::mt19937_64& rng, int retries) {
  IsoResult res;
  if (m1.branches() != m2.branches()) throw DomainError("modules over different branch counts");
  ModuleRep h = hom_module(m1, m2);
  if (!module_equal(hom_image(h, m1), m2)) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "Hom(M1,M2)*M1 is a proper submodule of M2";
    return res;
  }
  const auto gens = algebra::module_generators(h.basis(), h.ring());
  std::uniform_int_distribution<int> coef(1, 64);
  std::bernoulli_distribution sign(0.5);
  for (int attempt = 0; attempt < retries; ++attempt) {
    SparseVec<Rational> u;
    for (const auto& g : gens) {
      const int c = coef(rng);
      algebra::axpy(u, Rational(sign(rng) ? c : -c), g);
    }
    bool nzd = true;
    for (int b = 0; b < m1.branches(); ++b) nzd = nzd && algebra::branch_low(u, b, m1.basis().top()) < m1.basis().top();
    if (!nzd) continue;
    try {
      Subspace<Rational> image = algebra::multiply(u, m1.basis());
      if (image == m2.basis()) {
        res.verdict = IsoVerdict::Isomorphic;
        res.witness = algebra::to_element(u, m1.branches());
        res.reason = "witness found on attempt " + std::to_string(attempt + 1);
        return res;
      }
    } catch (const PrecisionExceeded&) {
      continue;
    }
  }
  if (minimal_generators(m1) != minimal_generators(m2)) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "minimal generator counts differ";
    return res;
  }
  SubringRep e1 = endomorphism_ring(m1);
  if (!(e1.basis() == endomorphism_ring(m2).basis())) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "endomorphism rings differ";
    return res;
  }
  // An isomorphism of fractional ideals is multiplication by a unit, so it is
  // also linear over the common endomorphism ring E.
  auto e = std::make_shared<const SubringRep>(std::move(e1));
  if (minimal_generators(module_from_subspace(e, m1.basis())) != minimal_generators(module_from_subspace(e, m2.basis()))) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "minimal generator counts over the endomorphism ring differ";
    return res;
  }
  res.reason = "no witness after " + std::to_string(retries) + " generic elements";
  return res;
}

}  // namespace curvecert::modules
