// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes or fails only in the way
// recorded as a known defect of the input data (see README, "Known
// results"); --strict makes any FAIL fatal.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "curvecert/batch/batch.hpp"
#include "curvecert/catalog/catalog.hpp"
#include "curvecert/certify/certificate.hpp"

namespace {

using namespace curvecert;
using algebra::Element;
using algebra::Window;

const std::vector<int> kN = {1, 2, 3, 4, 5, 6};

struct Outcome {
  bool pass = false;
  bool known = false;  // failure matches the recorded known outcome exactly
  std::string detail;
};

const catalog::Catalog& reference() {
  static const catalog::Catalog cat = catalog::Catalog::reference(kN, Window{});
  return cat;
}

// 1. Certificate suite.
Outcome certificate_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto certs = certify::builtin_certificates(kN);
  const auto reports = batch::verify_all(certs, Window{}, 0);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  int passed = 0;
  std::set<std::string> failed;
  bool stage3_only = true;
  for (const auto& r : reports) {
    if (r.pass()) {
      ++passed;
    } else {
      failed.insert(r.id);
      stage3_only = stage3_only && r.first_failure() == 3;
    }
  }
  std::ostringstream d;
  d << passed << "/" << certs.size() << " pass in " << secs << " s";
  for (const auto& id : failed) d << "; " << id << " fails";
  Outcome o;
  o.pass = certs.size() == 29 && passed == 29 && secs < 30.0;
  const std::set<std::string> known = {"AnL-odd(n=1)#1", "AnL-odd(n=1)#2"};
  o.known = !o.pass && certs.size() == 29 && failed == known && stage3_only && secs < 30.0;
  o.detail = d.str();
  return o;
}

// 2. Table 2 regeneration.
Outcome table2() {
  const auto rows = batch::table2(catalog::catalog_modules(kN), reference(), 0);
  int passed = 0;
  std::string first;
  for (const auto& r : rows) {
    if (r.pass()) ++passed;
    else if (first.empty()) first = "; first failure " + r.ring_id + ": " + r.presentation + " (" + r.detail + ")";
  }
  return {passed == static_cast<int>(rows.size()) && !rows.empty(), false,
          std::to_string(passed) + "/" + std::to_string(rows.size()) + " rows" + first};
}

// 3. Dualizing cross-validation. The dualizing row of R in Table 2 is the
// dualizing-flagged row whose End ring is R itself.
Outcome dualizing() {
  std::mt19937_64 rng(3);
  int checked = 0;
  std::string bad;
  const auto modules = catalog::catalog_modules(kN);
  for (const auto& e : reference().entries()) {
    if (!e.table1) continue;
    const auto r = reference().ring(e.id);
    int rows = 0;
    for (const auto& m : modules) {
      if (m.ring_id != e.id || !m.is_dualizing_flag || m.expected_end != std::vector<std::string>{e.id}) continue;
      ++rows;
      const auto res = modules::is_isomorphic(modules::dualizing_module(r), modules::module_span(r, m.generators), rng);
      if (!res.isomorphic() && bad.empty()) bad = "; " + m.id + ": " + res.reason;
    }
    ++checked;
    if (rows != 1 && bad.empty()) bad = "; " + e.id + " has " + std::to_string(rows) + " dualizing rows";
  }
  int ade = 0;
  for (const auto& e : reference().entries()) {
    if (e.table1) continue;
    const auto r = reference().ring(e.id);
    const auto res = modules::is_isomorphic(modules::dualizing_module(r),
                                            modules::module_span(r, {Element::one(r->branches())}), rng);
    ++ade;
    if (!res.isomorphic() && bad.empty()) bad = "; omega vs R for " + e.id + ": " + res.reason;
  }
  return {bad.empty() && checked > 0, false,
          std::to_string(checked) + " Table 1 rings, " + std::to_string(ade) + " Gorenstein rings" + bad};
}

// 4. Gorenstein double-check.
Outcome gorenstein() {
  std::string bad;
  int n = 0;
  for (const auto& e : reference().entries()) {
    const auto r = reference().ring(e.id);
    const int ee = modules::minimal_generators(modules::dualizing_module(r));
    const int delta = algebra::delta_invariant(*r);
    const int cl = algebra::conductor_length(*r);
    ++n;
    if ((ee == 1) != (cl == 2 * delta) && bad.empty()) {
      bad = "; " + e.id + ": e=" + std::to_string(ee) + ", c=" + std::to_string(cl) + ", delta=" + std::to_string(delta);
    }
    if (e.table1) {
      const int ed = algebra::embedding_dimension(*r);
      if ((ee != 2 || ed != 3) && bad.empty()) {
        bad = "; " + e.id + ": e=" + std::to_string(ee) + ", embdim=" + std::to_string(ed);
      }
    }
  }
  return {bad.empty(), false, std::to_string(n) + " catalog rings" + bad};
}

// 5. Induction ordering.
Outcome induction() {
  const auto rows = batch::table2(catalog::catalog_modules(kN), reference(), 0);
  std::string bad;
  int links = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (!r.end_ring) {
      if (bad.empty()) bad = "; no End ring for " + r.presentation;
      continue;
    }
    const bool is_r = r.end_ring->basis() == reference().ring(r.ring_id)->basis();
    if (!is_r && r.end_delta >= r.ring_delta && bad.empty()) bad = "; delta(End) not smaller: " + r.presentation;
    if (i == 0) continue;
    const auto& p = rows[i - 1];
    if (p.ring_id != r.ring_id || p.subdivision != r.subdivision || !p.end_ring) continue;
    ++links;
    for (const auto& [k, x] : p.end_ring->basis().rows()) {
      if (!r.end_ring->basis().contains(x)) {
        if (bad.empty()) bad = "; End(" + p.presentation + ") not inside End(" + r.presentation + ")";
        break;
      }
    }
  }
  return {bad.empty(), false, std::to_string(rows.size()) + " modules, " + std::to_string(links) + " chain links" + bad};
}

// 6. Component reports.
Outcome components() {
  std::string bad;
  int t1 = 0, planar = 0;
  for (const auto& e : reference().entries()) {
    const auto& f = reference().fingerprint_of(e.id);
    const bool is_planar = f.embdim <= 2;
    if (!e.table1 && !is_planar) continue;
    const auto rep = catalog::component_report(e.id, reference());
    const int want = e.table1 ? 2 : 1;
    (e.table1 ? t1 : planar)++;
    if (rep.components != want && bad.empty()) bad = "; " + e.id + " reports " + std::to_string(rep.components);
  }
  return {bad.empty(), false,
          std::to_string(t1) + " Table 1 ids with 2, " + std::to_string(planar) + " planar ids with 1" + bad};
}

// Canonical basis cut back to a smaller window.
algebra::Subspace<arith::RatFunc> restrict_generic(const algebra::Subspace<arith::RatFunc>& v, int top) {
  algebra::Subspace<arith::RatFunc> out(v.branches(), top);
  for (const auto& [k, row] : v.rows()) {
    if (algebra::key_exp(k) < top) out.insert(row);
  }
  return out;
}

// 7. Robustness.
Outcome robustness() {
  std::string bad;
  int mutations = 0, compared = 0;
  for (const auto& c : certify::builtin_certificates(kN)) {
    for (auto m : {certify::Mutation::Functional, certify::Mutation::SpecialMultiplier,
                   certify::Mutation::GenericMultiplier}) {
      const auto rep = certify::verify_certificate(certify::mutate(c, m));
      ++mutations;
      if (rep.stages[static_cast<std::size_t>(certify::designated_stage(m) - 1)].passed && bad.empty()) {
        bad = "; " + c.id + " survives " + certify::to_string(m);
      }
    }
    const Window small{40, 8}, big{60, 8};
    const auto a = certify::verify_certificate(c, small);
    const auto b = certify::verify_certificate(c, big);
    for (std::size_t i = 0; i < 4; ++i) {
      if (a.stages[i].passed != b.stages[i].passed && bad.empty()) {
        bad = "; " + c.id + " stage " + std::to_string(i + 1) + " differs between N=40 and N=60";
      }
    }
    const certify::CertificateContext cs(c, small), cb(c, big);
    const int top = cs.top();
    const bool same = algebra::restrict_window(cb.ring()->basis(), top) == cs.ring()->basis() &&
                      algebra::restrict_window(cb.source().basis(), top) == cs.source().basis() &&
                      algebra::restrict_window(certify::kernel_special(cb).basis(), top) ==
                          certify::kernel_special(cs).basis() &&
                      restrict_generic(certify::kernel_generic(cb), top) == certify::kernel_generic(cs);
    ++compared;
    if (!same && bad.empty()) bad = "; " + c.id + " canonical bases differ between N=40 and N=60";
  }
  return {bad.empty(), false,
          std::to_string(mutations) + " mutations, " + std::to_string(compared) + " window comparisons" + bad};
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"certificate suite", certificate_suite}, {"Table 2 regeneration", table2},
      {"dualizing cross-validation", dualizing}, {"Gorenstein double-check", gorenstein},
      {"induction ordering", induction},         {"component reports", components},
      {"robustness", robustness},
  };
  int hard_failures = 0, known = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %zu %s: %s%s (%s)\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                o.known ? " [known, input defect]" : "", o.detail.c_str());
    if (!o.pass) (o.known ? known : hard_failures)++;
  }
  std::fflush(stdout);
  if (strict) return hard_failures + known == 0 ? 0 : 1;
  return hard_failures == 0 ? 0 : 1;
}
