#include <gtest/gtest.h>

#include <random>

#include "curvecert/arith/terms.hpp"
#include "curvecert/catalog/catalog.hpp"
#include "curvecert/modules/module.hpp"
#include "support.hpp"

namespace {

using namespace curvecert;
using namespace curvecert::modules;
using algebra::Window;
using arith::elem;

const std::vector<int> kN = {1, 2, 3, 4, 5, 6};

const catalog::Catalog& reference() {
  static const catalog::Catalog cat = catalog::Catalog::reference(kN, Window{});
  return cat;
}

RingPtr ring(const std::string& id) { return reference().ring(id); }

Element t1(int e) { return elem(1, {{0, e, 1}}); }
Element one(int r) { return Element::one(r); }

std::string end_id(const ModuleRep& m) { return catalog::join_ids(reference().classify(endomorphism_ring(m))); }

TEST(ModuleSpan, MonomialExamples) {
  const RingPtr e6 = ring("E6(1)");
  const ModuleRep m = module_span(e6, {one(1), t1(2)});
  EXPECT_TRUE(m.basis().contains_monomial(0, 0));
  EXPECT_FALSE(m.basis().contains_monomial(0, 1));
  for (int e = 2; e < 10; ++e) EXPECT_TRUE(m.basis().contains_monomial(0, e)) << e;
  EXPECT_FALSE(module_equal(module_span(e6, {one(1), t1(1)}), m));

  // Over E8 = <3,5,7>, t^4 is not in R + R t^2.
  const RingPtr e8 = ring("E8(1)");
  EXPECT_FALSE(module_equal(module_span(e8, {one(1), t1(2), t1(4)}), module_span(e8, {one(1), t1(2)})));
  EXPECT_THROW(module_span(ring("A1"), {elem(2, {{0, 0, 1}})}), NotTorsionFree);
}

TEST(Hom, RingIsIdentity) {
  for (const char* id : {"E6(1)", "E7(1)", "AnL-odd(n=3)"}) {
    const RingPtr r = ring(id);
    const ModuleRep rm = module_span(r, {one(r->branches())});
    const ModuleRep m = module_span(r, {one(r->branches()), elem(r->branches(), {{0, 1, 1}})});
    EXPECT_TRUE(module_equal(hom_module(rm, m), m)) << id;
    EXPECT_TRUE(module_equal(hom_module(rm, rm), rm)) << id;
  }
}

TEST(Hom, EndomorphismRings) {
  EXPECT_EQ(end_id(module_span(ring("E6(1)"), {one(1), t1(2)})), "A2");
  EXPECT_EQ(end_id(module_span(ring("E8(1)"), {one(1), t1(1)})), "E6(1)");
  EXPECT_EQ(end_id(module_span(ring("E7(1)"), {one(2), elem(2, {{0, 1, 1}}), elem(2, {{0, 2, 1}})})), "A1");
  EXPECT_EQ(end_id(module_span(ring("E6(1)"), {one(1)})), "E6(1)");
}

TEST(Hom, CompositionLandsInHom) {
  const RingPtr r = ring("E8(1)");
  const ModuleRep m1 = module_span(r, {one(1), t1(1)});
  const ModuleRep m2 = module_span(r, {one(1), t1(2)});
  const ModuleRep m3 = module_span(r, {one(1), t1(1), t1(2)});
  const ModuleRep h12 = hom_module(m1, m2), h23 = hom_module(m2, m3), h13 = hom_module(m1, m3);
  for (const auto& [k1, f] : h12.basis().rows()) {
    for (const auto& [k2, g] : h23.basis().rows()) {
      EXPECT_TRUE(h13.basis().contains(algebra::multiply(f, g, r->top())));
    }
  }
  // f * M1 lies in M2 for every f in Hom(M1, M2).
  const ModuleRep img = hom_image(h12, m1);
  for (const auto& [k, row] : img.basis().rows()) EXPECT_TRUE(m2.basis().contains(row));
}

TEST(MinimalGenerators, Examples) {
  for (const char* id : {"E6(1)", "E7(1)", "E8(1)", "AnL-even(n=2)", "AnL-odd(n=3)", "AnL-even(n=6)"}) {
    const RingPtr r = ring(id);
    const ModuleRep w = dualizing_module(r);
    // Table 1 rings are not Gorenstein and have type 2.
    EXPECT_EQ(minimal_generators(w), 2) << id;
    EXPECT_EQ(minimal_generators(module_span(r, {one(r->branches())})), 1) << id;
    EXPECT_EQ(static_cast<int>(minimal_generating_set(w).size()), minimal_generators(w)) << id;
  }
  // The normalization of the node needs the two idempotents.
  const RingPtr node = ring("A1");
  EXPECT_EQ(minimal_generators(module_span(node, {elem(2, {{0, 0, 1}}), elem(2, {{1, 0, 1}})})), 2);
}

TEST(Dualizing, GorensteinRingsAreSelfDual) {
  std::mt19937_64 rng(1);
  for (const char* id : {"A2", "A3", "A4", "A1", "sm"}) {
    const RingPtr r = ring(id);
    const IsoResult res = is_isomorphic(dualizing_module(r), module_span(r, {one(r->branches())}), rng);
    EXPECT_TRUE(res.isomorphic()) << id << ": " << res.reason;
  }
  for (const char* id : {"E6(1)", "E7(1)", "E8(1)"}) {
    const RingPtr r = ring(id);
    const IsoResult res = is_isomorphic(dualizing_module(r), module_span(r, {one(r->branches())}), rng);
    EXPECT_EQ(res.verdict, IsoVerdict::NotIsomorphic) << id;
  }
}

TEST(Isomorphism, WitnessIsChecked) {
  std::mt19937_64 rng(2);
  const RingPtr e6 = ring("E6(1)");
  const ModuleRep rm = module_span(e6, {one(1)});
  // R + R t^5 = R in E6 (t^5 is already in R).
  const IsoResult a = is_isomorphic(module_span(e6, {one(1), t1(5)}), rm, rng);
  ASSERT_TRUE(a.isomorphic());
  ASSERT_TRUE(a.witness.has_value());
  const IsoResult b = is_isomorphic(dualizing_module(e6), module_span(e6, {one(1), t1(1)}), rng);
  ASSERT_TRUE(b.isomorphic()) << b.reason;
  EXPECT_TRUE(module_equal(scalar_mul(*b.witness, dualizing_module(e6)), module_span(e6, {one(1), t1(1)})));

  // A2 v L: R + R(t,0) is not the dualizing module.
  const RingPtr a2vl = ring("AnL-even(n=2)");
  const IsoResult c = is_isomorphic(module_span(a2vl, {one(2), elem(2, {{0, 1, 1}})}), dualizing_module(a2vl), rng);
  EXPECT_EQ(c.verdict, IsoVerdict::NotIsomorphic) << c.reason;
}

TEST(ModuleProperty, UnitTwistsAreIsomorphic) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-4, 4);
  for (const char* id : {"E6(1)", "E7(1)", "AnL-odd(n=3)"}) {
    const RingPtr r = ring(id);
    const int nb = r->branches();
    const ModuleRep m = module_span(r, {one(nb), elem(nb, {{0, 1, 1}})});
    for (int i = 0; i < 4; ++i) {
      std::vector<arith::Term<Rational>> terms;
      for (int b = 0; b < nb; ++b) {
        terms.push_back({b, 0, Rational(1 + std::abs(c(rng)))});
        terms.push_back({b, 1, Rational(c(rng))});
        terms.push_back({b, 3, Rational(c(rng))});
      }
      const Element u = elem(nb, terms) * arith::MultiBranchElement<Rational>::uniform(nb, c(rng) % 3);
      const ModuleRep um = scalar_mul(u, m);
      EXPECT_EQ(minimal_generators(um), minimal_generators(m));
      EXPECT_EQ(endomorphism_ring(um).basis(), endomorphism_ring(m).basis()) << id;
      EXPECT_TRUE(is_isomorphic(m, um, rng).isomorphic()) << id;
    }
  }
}

TEST(ModuleProperty, EndIsARingContainingR) {
  for (const auto& row : catalog::catalog_modules({2, 3})) {
    const RingPtr r = ring(row.ring_id);
    const ModuleRep m = module_span(r, row.generators);
    const SubringRep e = endomorphism_ring(m);
    for (const auto& [k, x] : r->basis().rows()) EXPECT_TRUE(e.basis().contains(x)) << row.id;
    for (const auto& [k1, x] : e.basis().rows()) {
      for (const auto& [k2, y] : m.basis().rows()) {
        EXPECT_TRUE(m.basis().contains(algebra::multiply(x, y, r->top()))) << row.id;
      }
    }
  }
}

TEST(ModuleErrors, ZeroDivisorAndWindows) {
  const RingPtr node = ring("A1");
  const ModuleRep m = module_span(node, {one(2)});
  EXPECT_THROW(scalar_mul(elem(2, {{0, 0, 1}}), m), ZeroDivisorMultiplier);
  const RingPtr big = catalog::build_ring(reference().entry("A1"), Window{60, 8});
  EXPECT_THROW(module_equal(m, module_span(big, {one(2)})), WindowMismatch);
}

}  // namespace
