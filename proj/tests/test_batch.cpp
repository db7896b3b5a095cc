#include <gtest/gtest.h>

#include <set>

#include "curvecert/batch/batch.hpp"

namespace {

using namespace curvecert;

const std::vector<int> kN = {1, 2, 3, 4, 5, 6};

TEST(ItemSeed, DistinctAndStable) {
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < 1000; ++i) EXPECT_TRUE(seen.insert(batch::item_seed(42, i)).second);
  EXPECT_EQ(batch::item_seed(42, 7), batch::item_seed(42, 7));
  EXPECT_NE(batch::item_seed(42, 7), batch::item_seed(43, 7));
}

TEST(VerifyAll, ParallelMatchesSerial) {
  const auto certs = certify::builtin_certificates(kN);
  const auto par = batch::verify_all(certs, algebra::Window{}, 5);
  const auto ser = batch::verify_all_serial(certs, algebra::Window{}, 5);
  ASSERT_EQ(par.size(), certs.size());
  ASSERT_EQ(ser.size(), certs.size());
  for (std::size_t i = 0; i < certs.size(); ++i) {
    EXPECT_EQ(par[i].id, certs[i].id);
    EXPECT_EQ(par[i].id, ser[i].id);
    ASSERT_EQ(par[i].stages.size(), ser[i].stages.size());
    for (std::size_t s = 0; s < par[i].stages.size(); ++s) {
      EXPECT_EQ(par[i].stages[s].passed, ser[i].stages[s].passed) << certs[i].id;
      EXPECT_EQ(par[i].stages[s].detail, ser[i].stages[s].detail) << certs[i].id;
    }
  }
}

TEST(VerifyAll, BrokenItemDoesNotStopTheBatch) {
  auto certs = certify::builtin_certificates({2});
  certs[1].functional.clear();  // length mismatch: the context refuses it
  const auto reps = batch::verify_all(certs, algebra::Window{}, 0);
  ASSERT_EQ(reps.size(), certs.size());
  EXPECT_FALSE(reps[1].pass());
  EXPECT_EQ(reps[1].stages.size(), 4u);
  EXPECT_TRUE(reps[0].pass());
  EXPECT_TRUE(reps[2].pass());
}

TEST(Table2, ParallelMatchesSerial) {
  const auto cat = catalog::Catalog::reference(kN, algebra::Window{});
  const auto modules = catalog::catalog_modules(kN);
  const auto par = batch::table2(modules, cat, 9);
  const auto ser = batch::table2_serial(modules, cat, 9);
  ASSERT_EQ(par.size(), modules.size());
  ASSERT_EQ(ser.size(), modules.size());
  for (std::size_t i = 0; i < modules.size(); ++i) {
    EXPECT_EQ(par[i].ring_id, modules[i].ring_id);
    EXPECT_EQ(par[i].presentation, ser[i].presentation);
    EXPECT_EQ(par[i].computed_end, ser[i].computed_end);
    EXPECT_EQ(par[i].pass(), ser[i].pass());
    EXPECT_EQ(par[i].detail, ser[i].detail);
    EXPECT_TRUE(par[i].pass()) << par[i].presentation;
  }
}

}  // namespace
