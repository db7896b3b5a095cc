#include <gtest/gtest.h>

#include <set>

#include "curvecert/certify/certificate.hpp"
#include "curvecert/io/json_io.hpp"
#include "support.hpp"

namespace {

using namespace curvecert;
using namespace curvecert::certify;
using algebra::Subspace;
using arith::delem;
using arith::elem;

const RatFunc kA = RatFunc::a();
const std::vector<int> kN = {1, 2, 3, 4, 5, 6};

Certificate builtin(const std::string& id) {
  for (auto& c : builtin_certificates(kN)) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("no certificate " + id);
}

TEST(Builtins, CountsAndIds) {
  EXPECT_EQ(builtin_certificates(kN).size(), 29u);
  EXPECT_EQ(builtin_certificates({2, 4, 6}).size(), 5u + 9u);
  EXPECT_EQ(builtin_certificates({3, 3, 3}).size(), 5u + 5u);
  EXPECT_TRUE(builtin_certificates({}).empty());
  EXPECT_THROW(builtin_certificates({9}), UnsupportedN);
  std::set<std::string> ids;
  for (const auto& c : builtin_certificates(kN)) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
}

TEST(Builtins, KnownOutcomes) {
  // Every instance passes except the n = 1 dual-number and fat-plane
  // certificates, whose claimed special fiber is not the kernel.
  const std::set<std::string> known_fail = {"AnL-odd(n=1)#1", "AnL-odd(n=1)#2"};
  for (const auto& c : builtin_certificates(kN)) {
    const CertificateReport r = verify_certificate(c);
    ASSERT_EQ(r.stages.size(), 4u);
    if (known_fail.count(c.id)) {
      EXPECT_EQ(r.first_failure(), 3) << c.id;
    } else {
      EXPECT_TRUE(r.pass()) << c.id << " stage " << r.first_failure() << ": "
                            << (r.pass() ? "" : r.stages[static_cast<std::size_t>(r.first_failure() - 1)].detail);
    }
  }
}

TEST(Builtins, DualizingTargetsAreTheFirstInstances) {
  std::set<std::string> dualizing;
  for (const auto& c : builtin_certificates(kN)) {
    if (c.generic_target == GenericTarget::Dualizing) dualizing.insert(c.id);
  }
  std::set<std::string> expected = {"E6(1)#1", "E7(1)#1", "E8(1)#1"};
  for (int n : kN) expected.insert(catalog::avl_id(n) + "#1");
  EXPECT_EQ(dualizing, expected);
}

TEST(Linearity, E6PointTarget) {
  const CertificateContext ctx(builtin("E6(1)#1"), Window{});
  EXPECT_TRUE(check_linearity(ctx).passed);
  EXPECT_EQ(ctx.reach(), 3);

  // x_1 - a x_3 is not R-linear: t^3 * 1 maps to -a while t^3 acts as 0.
  Certificate bad = builtin("E6(1)#1");
  bad.functional = {{{0, 1, 1}, {0, 3, -kA}}};
  const StageResult s = check_linearity(CertificateContext(bad, Window{}));
  EXPECT_FALSE(s.passed);
  EXPECT_NE(s.detail.find("phi(r*x)"), std::string::npos);
  EXPECT_EQ(verify_certificate(bad).first_failure(), 1);
}

TEST(Linearity, EvenFirstInstance) {
  const CertificateContext ctx(builtin("AnL-even(n=2)#1"), Window{});
  EXPECT_TRUE(check_linearity(ctx).passed);
  const auto k0 = kernel_special(ctx);
  const auto expected = modules::module_span(ctx.ring(), {Element::one(2), elem(2, {{0, 1, 1}})});
  EXPECT_TRUE(modules::module_equal(k0, expected));
}

TEST(Linearity, AlgebraMapChecksUnitAndProducts) {
  Certificate c = builtin("E8(1)#2");
  EXPECT_TRUE(check_linearity(CertificateContext(c, Window{})).passed);
  // phi(1) must be the unit of Q.
  c.functional[0] = {{0, 0, 2}};
  const StageResult s = check_linearity(CertificateContext(c, Window{}));
  EXPECT_FALSE(s.passed);
}

TEST(Surjectivity, Ranks) {
  const StageResult fat = check_surjectivity(CertificateContext(builtin("E8(1)#2"), Window{}));
  EXPECT_TRUE(fat.passed);
  EXPECT_NE(fat.detail.find("rank over Q(a) 3, at a=0 3"), std::string::npos) << fat.detail;
  const StageResult jet = check_surjectivity(CertificateContext(builtin("AnL-odd(n=3)#3"), Window{}));
  EXPECT_TRUE(jet.passed);
  EXPECT_NE(jet.detail.find("length(Q) 2"), std::string::npos) << jet.detail;

  // Scaling by a kills the special fiber only.
  const Certificate scaled = mutate(builtin("E6(1)#1"), Mutation::Functional);
  const StageResult s = check_surjectivity(CertificateContext(scaled, Window{}));
  EXPECT_FALSE(s.passed);
  EXPECT_NE(s.detail.find("RankDrop at special fiber"), std::string::npos);

  // A pole at a = 0 is a rank drop at the special fiber as well.
  Certificate pole = builtin("E6(1)#1");
  pole.functional = {{{0, 0, RatFunc(1) / kA}}};
  const StageResult p = check_surjectivity(CertificateContext(pole, Window{}));
  EXPECT_FALSE(p.passed);
  EXPECT_NE(p.detail.find("RankDrop at special fiber"), std::string::npos);
}

TEST(Kernels, PointTargetHasCorankOne) {
  const CertificateContext ctx(builtin("E6(1)#1"), Window{});
  const int p = ctx.source().basis().dim();
  EXPECT_EQ(p - kernel_special(ctx).basis().dim(), 1);
  EXPECT_EQ(p - kernel_generic(ctx).dim(), 1);
}

TEST(Kernels, KernelsAreKilled) {
  for (const char* id : {"E7(1)#2", "AnL-even(n=4)#2", "AnL-odd(n=5)#3"}) {
    const CertificateContext ctx(builtin(id), Window{});
    const auto k0 = kernel_special(ctx);
    const auto kg = kernel_generic(ctx);
    for (const auto& [k, row] : k0.basis().rows()) {
      for (const auto& v : ctx.apply(row)) EXPECT_TRUE(v.eval_at_zero() == 0) << id;
    }
    for (const auto& [k, row] : kg.rows()) {
      // apply() takes exact vectors; evaluate the functional by hand.
      for (const auto& f : ctx.cert().functional) {
        RatFunc acc;
        for (const auto& t : f) {
          if (const RatFunc* c = row.find(algebra::make_key(t.exp, t.branch))) acc += t.coeff * *c;
        }
        EXPECT_TRUE(acc.is_zero()) << id;
      }
    }
  }
}

TEST(SpecialFiber, WrongFiberFails) {
  Certificate c = builtin("E8(1)#1");
  c.special_fiber = {Element::one(1), elem(1, {{0, 2, 1}})};
  const StageResult s = check_special_fiber(CertificateContext(c, Window{}));
  EXPECT_FALSE(s.passed);
  EXPECT_FALSE(s.detail.empty());
  EXPECT_EQ(verify_certificate(c).first_failure(), 3);
}

TEST(GenericFiber, MultiplierMapsKernelOntoOmega) {
  const Certificate c = builtin("E8(1)#1");
  const CertificateContext ctx(c, Window{});
  const Subspace<RatFunc> kg = kernel_generic(ctx);
  const auto u = algebra::to_sparse(delem(1, {{0, 0, kA}, {0, 2, -1}}), ctx.top());
  const auto target = modules::module_span(ctx.ring(), {Element::one(1), elem(1, {{0, 2, 1}})});
  EXPECT_EQ(algebra::multiply(u, kg), algebra::extend(target.basis()));
  EXPECT_TRUE(check_generic_fiber(ctx, 0).passed);
}

TEST(GenericFiber, WrongMultiplierFails) {
  Certificate c = builtin("E6(1)#1");
  c.generic_multiplier = delem(1, {{0, 0, 1}, {0, 2, -RatFunc(1) / kA}});
  EXPECT_EQ(verify_certificate(c).first_failure(), 4);
}

TEST(GenericFiber, TargetPresentationIsChecked) {
  Certificate ring_target = builtin("E7(1)#2");
  ring_target.generic_target_module = {Element::one(2), elem(2, {{0, 1, 1}})};
  const StageResult a = check_generic_fiber(CertificateContext(ring_target, Window{}), 0);
  EXPECT_FALSE(a.passed);
  EXPECT_NE(a.detail.find("does not span R"), std::string::npos);

  Certificate omega = builtin("E6(1)#1");
  omega.generic_target_module = {Element::one(1)};
  const StageResult b = check_generic_fiber(CertificateContext(omega, Window{}), 0);
  EXPECT_FALSE(b.passed);
  EXPECT_NE(b.detail.find("not isomorphic"), std::string::npos) << b.detail;
}

TEST(Mutations, EachFailsAtItsStage) {
  for (const auto& c : builtin_certificates(kN)) {
    for (Mutation m : {Mutation::Functional, Mutation::SpecialMultiplier, Mutation::GenericMultiplier}) {
      const CertificateReport r = verify_certificate(mutate(c, m));
      const int st = designated_stage(m);
      EXPECT_FALSE(r.stages[static_cast<std::size_t>(st - 1)].passed) << c.id << " " << to_string(m);
    }
  }
}

TEST(WindowStability, VerdictsAndKernels) {
  for (const auto& c : builtin_certificates({1, 2, 3, 4})) {
    const CertificateReport a = verify_certificate(c, Window{40, 8});
    const CertificateReport b = verify_certificate(c, Window{60, 8});
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(a.stages[i].passed, b.stages[i].passed) << c.id << " stage " << i + 1;
    const CertificateContext small(c, Window{40, 8}), big(c, Window{60, 8});
    EXPECT_EQ(algebra::restrict_window(kernel_special(big).basis(), small.top()), kernel_special(small).basis()) << c.id;
  }
}

TEST(Context, RejectsMalformedCertificates) {
  Certificate c = builtin("E6(1)#1");
  c.functional.push_back(c.functional.front());
  EXPECT_THROW(CertificateContext(c, Window{}), DomainError);
  c = builtin("E6(1)#1");
  c.functional = {{{0, 100, 1}}};
  EXPECT_THROW(CertificateContext(c, Window{}), DomainError);
  c = builtin("E8(1)#2");
  c.action = {ActionMap::Kind::JetOfBranch, 0};
  EXPECT_THROW(CertificateContext(c, Window{}), DomainError);
}

TEST(Permute, SwapIsAnInvolution) {
  const Certificate c = builtin("AnL-odd(n=5)#3");
  const Certificate twice = permute_branches(permute_branches(c, {1, 0, 2}, "x"), {1, 0, 2}, c.id);
  EXPECT_EQ(io::certificate_json(twice), io::certificate_json(c));
  EXPECT_TRUE(verify_certificate(permute_branches(c, {1, 0, 2}, "swap")).pass());
}

TEST(Json, RoundTrip) {
  for (const auto& c : builtin_certificates({2, 3})) {
    const io::json j = io::certificate_json(c);
    const Certificate back = io::parse_certificate(io::json::parse(j.dump()));
    EXPECT_EQ(io::certificate_json(back), j) << c.id;
    EXPECT_EQ(verify_certificate(back).pass(), verify_certificate(c).pass()) << c.id;
  }
}

TEST(Json, ShippedCertificatesPass) {
  for (const char* f : {"e6_1.json", "e8_1_2.json", "anl_odd3_5.json"}) {
    const auto j = io::read_json_file(std::string(CURVECERT_DATA_DIR) + "/certificates/" + f);
    EXPECT_TRUE(verify_certificate(io::parse_certificate(j)).pass()) << f;
  }
}

TEST(Json, Errors) {
  EXPECT_THROW(io::read_json_file(std::string(CURVECERT_DATA_DIR) + "/nope.json"), ParseError);
  io::json j = io::certificate_json(builtin("E6(1)#1"));
  j["target"]["shape"] = "torus";
  EXPECT_THROW(io::parse_certificate(j), ParseError);
  j = io::certificate_json(builtin("E6(1)#1"));
  j["ring"] = "Q8";
  EXPECT_THROW(io::parse_certificate(j), ParseError);
  j = io::certificate_json(builtin("E6(1)#1"));
  j["source"] = {{{0, 0, "1/"}}};
  EXPECT_THROW(io::parse_certificate(j), ParseError);
}

}  // namespace
