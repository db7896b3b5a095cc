#include <gtest/gtest.h>

#include <set>

#include "curvecert/arith/terms.hpp"
#include "curvecert/catalog/catalog.hpp"
#include "support.hpp"

namespace {

using namespace curvecert;
using namespace curvecert::catalog;
using algebra::Window;
using arith::elem;

const std::vector<int> kN = {1, 2, 3, 4, 5, 6};

const Catalog& reference() {
  static const Catalog cat = Catalog::reference(kN, Window{});
  return cat;
}

std::string classify_gens(int branches, const std::vector<Element>& gens) {
  return join_ids(reference().classify(SubringRep::span(branches, gens, Window{})));
}

TEST(Catalog, FingerprintsAreDistinct) {
  std::set<Fingerprint> seen;
  for (const auto& e : reference().entries()) {
    EXPECT_TRUE(seen.insert(reference().fingerprint_of(e.id)).second) << e.id;
  }
  // Table 1 at every supported n.
  EXPECT_NO_THROW(Catalog::reference({1, 2, 3, 4, 5, 6, 7, 8}, Window{}));
}

TEST(Catalog, DuplicateFingerprintsAreRejected) {
  auto rings = catalog_rings({2});
  CatalogEntry twin = rings.front();
  twin.id = "twin";
  rings.push_back(twin);
  EXPECT_THROW(Catalog(rings, Window{}), AmbiguousFingerprint);
}

TEST(Catalog, UnsupportedN) {
  EXPECT_THROW(catalog_rings({9}), UnsupportedN);
  EXPECT_THROW(catalog_modules({0}), UnsupportedN);
  EXPECT_THROW(Catalog::reference({12}, Window{}), UnsupportedN);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_gens(1, {elem(1, {{0, 3, 1}}), elem(1, {{0, 5, 1}}), elem(1, {{0, 7, 1}})}), "E8(1)");
  EXPECT_EQ(classify_gens(2, {elem(2, {{0, 1, 1}}), elem(2, {{1, 1, 1}})}), "A1");
  EXPECT_EQ(classify_gens(1, {elem(1, {{0, 1, 1}})}), "sm");
  EXPECT_EQ(classify_gens(1, {elem(1, {{0, 2, 1}}), elem(1, {{0, 5, 1}})}), "A4");
  // A coordinate change does not move the class: (t^3 + t^4, t^4, t^5) is still E6.
  EXPECT_EQ(classify_gens(1, {elem(1, {{0, 3, 1}, {0, 4, 1}}), elem(1, {{0, 4, 1}}), elem(1, {{0, 5, 1}})}),
            "E6(1)");
  // <4,5,6,7> is not in the catalog.
  EXPECT_EQ(classify_gens(1, {elem(1, {{0, 4, 1}}), elem(1, {{0, 5, 1}}), elem(1, {{0, 6, 1}}), elem(1, {{0, 7, 1}})}),
            "Unknown");
}

TEST(Classify, ProductsListEachFactor) {
  // A2 on branch 0 and a smooth branch 1, with both idempotents.
  const std::string id = classify_gens(2, {elem(2, {{0, 0, 1}}), elem(2, {{0, 2, 1}}), elem(2, {{0, 3, 1}}),
                                           elem(2, {{1, 1, 1}})});
  EXPECT_NE(id.find("A2"), std::string::npos);
  EXPECT_NE(id.find("sm"), std::string::npos);
  EXPECT_NE(id.find("∪"), std::string::npos);
}

TEST(Classify, EveryCatalogRingIsItself) {
  for (const auto& e : reference().entries()) {
    EXPECT_EQ(reference().classify_local(*reference().ring(e.id)), e.id);
  }
}

TEST(Components, Reports) {
  const ComponentReport e8 = component_report("E8(1)", reference());
  EXPECT_EQ(e8.components, 2);
  EXPECT_FALSE(e8.smoothable_only);
  for (const char* id : {"E6(1)", "E7(1)", "AnL-even(n=4)", "AnL-odd(n=5)"}) {
    EXPECT_EQ(component_report(id, reference()).components, 2) << id;
  }
  for (const char* id : {"A1", "A2", "A5", "sm"}) {
    const ComponentReport r = component_report(id, reference());
    EXPECT_EQ(r.components, 1) << id;
    EXPECT_TRUE(r.smoothable_only);
  }
  EXPECT_THROW(component_report("A2 ∪ sm", reference()), NotApplicable);
}

TEST(Table2, EveryRowPasses) {
  for (const auto& m : catalog_modules(kN)) {
    const Table2Row row = verify_table2_row(m, reference(), 1);
    EXPECT_TRUE(row.pass()) << m.id << ": " << row.detail;
  }
}

TEST(Table2, RowsHaveExactlyOneFlagOrNone) {
  for (const auto& m : catalog_modules(kN)) EXPECT_FALSE(m.is_ring_flag && m.is_dualizing_flag) << m.id;
}

TEST(Table2Property, EndRingsGrowDownEachBlock) {
  // Within a subdivision, rows are listed with End rings increasing and
  // delta(End) decreasing.
  const auto modules = catalog_modules({2, 3, 4, 5});
  std::vector<Table2Row> rows;
  for (const auto& m : modules) rows.push_back(verify_table2_row(m, reference(), 3));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const Table2Row& a = rows[i - 1];
    const Table2Row& b = rows[i];
    if (a.ring_id != b.ring_id || a.subdivision != b.subdivision) continue;
    EXPECT_GT(a.end_delta, b.end_delta) << a.presentation << " then " << b.presentation;
    for (const auto& [k, x] : a.end_ring->basis().rows()) {
      EXPECT_TRUE(b.end_ring->basis().contains(x)) << a.presentation << " then " << b.presentation;
    }
  }
  for (const auto& r : rows) EXPECT_LE(r.end_delta, r.ring_delta) << r.presentation;
}

TEST(Table2, SeedDoesNotChangeVerdicts) {
  for (const auto& m : catalog_modules({3})) {
    EXPECT_EQ(verify_table2_row(m, reference(), 1).pass(), verify_table2_row(m, reference(), 99).pass()) << m.id;
  }
}

}  // namespace
