#include "curvecert/catalog/catalog.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "curvecert/arith/terms.hpp"

namespace curvecert::catalog {

using arith::elem;
using arith::Rational;
namespace mod = modules;

std::string avl_id(int k) {
  if (k == 0) return "A1";
  return std::string(k % 2 == 0 ? "AnL-even" : "AnL-odd") + "(n=" + std::to_string(k) + ")";
}

std::string a_id(int k) { return k == 0 ? "sm" : "A" + std::to_string(k); }

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += " ∪ ";
    out += ids[i];
  }
  return out;
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream os;
  os << "r=" << f.branches << " delta=" << f.delta << " embdim=" << f.embdim << " e=" << f.e << " S=";
  for (std::size_t i = 0; i < f.semigroups.size(); ++i) {
    if (i) os << '|';
    os << '<';
    for (std::size_t j = 0; j < f.semigroups[i].values.size(); ++j) {
      if (j) os << ',';
      os << f.semigroups[i].values[j];
    }
    os << ";c=" << f.semigroups[i].conductor << '>';
  }
  return os.str();
}

Fingerprint local_fingerprint(const SubringRep& r) {
  if (!algebra::is_local(r)) throw DomainError("fingerprint of a non-local ring; split it into blocks first");
  Fingerprint f;
  f.branches = r.branches();
  f.delta = algebra::delta_invariant(r);
  f.embdim = algebra::embedding_dimension(r);
  auto ptr = std::make_shared<const SubringRep>(r);
  f.e = mod::minimal_generators(mod::dualizing_module(ptr));
  for (int b = 0; b < r.branches(); ++b) f.semigroups.push_back(algebra::branch_semigroup(r, b));
  std::sort(f.semigroups.begin(), f.semigroups.end());
  return f;
}

std::vector<Fingerprint> fingerprint(const SubringRep& r) {
  std::vector<Fingerprint> out;
  const auto blocks = algebra::local_blocks(r);
  if (blocks.size() == 1) {
    out.push_back(local_fingerprint(r));
    return out;
  }
  for (const auto& b : blocks) out.push_back(local_fingerprint(algebra::project(r, b)));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxN) throw UnsupportedN("n=" + std::to_string(n) + " outside 1.." + std::to_string(kMaxN));
}

CatalogEntry ring_entry(std::string id, int r, std::vector<Element> gens, bool table1) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = EntryKind::Ring;
  e.branches = r;
  e.generators = std::move(gens);
  e.table1 = table1;
  return e;
}

CatalogEntry a_entry(int k) {
  if (k == 0) return ring_entry("sm", 1, {elem(1, {{0, 1, 1}})}, false);
  if (k % 2 == 0) return ring_entry(a_id(k), 1, {elem(1, {{0, 2, 1}}), elem(1, {{0, k + 1, 1}})}, false);
  const int m = (k + 1) / 2;
  return ring_entry(a_id(k), 2, {elem(2, {{0, 1, 1}, {1, 1, 1}}), elem(2, {{0, m, 1}, {1, m, -1}})}, false);
}

CatalogEntry avl_entry(int n) {
  if (n % 2 == 0) {
    return ring_entry(avl_id(n), 2, {elem(2, {{0, n + 1, 1}}), elem(2, {{0, 2, 1}}), elem(2, {{1, 1, 1}})}, true);
  }
  const int m = (n + 1) / 2;
  return ring_entry(avl_id(n), 3,
                    {elem(3, {{0, m, 1}, {1, m, -1}}), elem(3, {{0, 1, 1}, {1, 1, 1}}), elem(3, {{2, 1, 1}})}, true);
}

CatalogEntry e6_entry() {
  return ring_entry("E6(1)", 1, {elem(1, {{0, 3, 1}}), elem(1, {{0, 4, 1}}), elem(1, {{0, 5, 1}})}, true);
}
CatalogEntry e7_entry() {
  return ring_entry("E7(1)", 2, {elem(2, {{0, 2, 1}, {1, 1, 1}}), elem(2, {{0, 3, 1}}), elem(2, {{0, 4, 1}})}, true);
}
CatalogEntry e8_entry() {
  return ring_entry("E8(1)", 1, {elem(1, {{0, 3, 1}}), elem(1, {{0, 5, 1}}), elem(1, {{0, 7, 1}})}, true);
}

std::string gen_text(const Element& g) {
  bool is_one = true;
  for (int b = 0; b < g.branches(); ++b) {
    const auto& s = g.branch(b);
    is_one = is_one && !s.is_zero() && s.low_order() == 0 && s.coeffs().size() == 1 && s.leading() == 1;
  }
  if (is_one) return "R";
  return "R*" + arith::to_string(g);
}

}  // namespace

std::string describe_generators(const std::vector<Element>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? " + " : "") + gen_text(gens[i]);
  return out;
}

namespace {

class ModuleBuilder {
 public:
  ModuleBuilder(std::vector<CatalogEntry>& out, std::string ring_id, int r) : out_(out), ring_id_(std::move(ring_id)), r_(r) {}

  void row(int subdivision, std::vector<Element> gens, std::vector<std::string> end, bool ring_flag,
           std::string presentation = {}) {
    CatalogEntry e;
    e.kind = EntryKind::Module;
    e.ring_id = ring_id_;
    e.branches = r_;
    if (presentation.empty()) {
      presentation = describe_generators(gens);
    }
    e.presentation = std::move(presentation);
    e.id = ring_id_ + ": " + e.presentation;
    e.generators = std::move(gens);
    e.expected_end = std::move(end);
    e.is_ring_flag = ring_flag;
    e.is_dualizing_flag = !ring_flag;
    e.subdivision = subdivision;
    out_.push_back(std::move(e));
  }

  [[nodiscard]] Element one() const { return Element::one(r_); }
  [[nodiscard]] Element mono(int b, int e) const { return Element::monomial(r_, b, e); }
  [[nodiscard]] Element sum(std::vector<arith::Term<Rational>> t) const { return elem(r_, t); }

 private:
  std::vector<CatalogEntry>& out_;
  std::string ring_id_;
  int r_;
};

void even_rows(std::vector<CatalogEntry>& out, int n) {
  ModuleBuilder mb(out, avl_id(n), 2);
  for (int k = n + 1; k >= 1; k -= 2) mb.row(1, {mb.one(), mb.mono(0, k)}, {avl_id(k - 1)}, true);
  for (int k = n - 1; k >= 1; k -= 2) mb.row(2, {mb.mono(0, 0), mb.sum({{0, k, 1}, {1, 0, 1}})}, {avl_id(k + 1)}, false);
  mb.row(3, {mb.one(), mb.mono(0, 0)}, {a_id(n), "sm"}, true);
  for (int k = n - 1; k >= 1; k -= 2) mb.row(3, {mb.one(), mb.mono(0, 0), mb.mono(0, k)}, {a_id(k - 1), "sm"}, true);
}

void odd_rows(std::vector<CatalogEntry>& out, int n) {
  const int m = (n + 1) / 2;
  ModuleBuilder mb(out, avl_id(n), 3);
  for (int j = m; j >= 1; --j) mb.row(1, {mb.one(), mb.mono(0, j)}, {avl_id(2 * j - 1)}, true);
  for (int j = m - 1; j >= 0; --j) {
    mb.row(2, {mb.sum({{0, 0, 1}, {1, 0, 1}}), mb.sum({{0, j, 1}, {2, 0, 1}})}, {avl_id(2 * j + 1)}, false);
  }
  mb.row(3, {mb.one(), mb.mono(0, 0)}, {"A1", "sm"}, true);
  mb.row(4, {mb.one(), mb.mono(1, 0)}, {"A1", "sm"}, true);
  mb.row(5, {mb.one(), mb.mono(2, 0)}, {a_id(n), "sm"}, true);
  for (int j = m - 1; j >= 1; --j) {
    mb.row(5, {mb.one(), mb.mono(2, 0), mb.mono(0, j)}, {a_id(2 * j - 1), "sm"}, true);
  }
  mb.row(5, {mb.mono(0, 0), mb.mono(1, 0), mb.mono(2, 0)}, {"sm", "sm", "sm"}, true, "R~");
}

void e6_rows(std::vector<CatalogEntry>& out) {
  ModuleBuilder mb(out, "E6(1)", 1);
  mb.row(1, {mb.one(), mb.mono(0, 5)}, {"E6(1)"}, true);
  mb.row(1, {mb.one(), mb.mono(0, 2)}, {"A2"}, true);
  mb.row(1, {mb.one(), mb.mono(0, 1), mb.mono(0, 2)}, {"sm"}, true);
  mb.row(2, {mb.one(), mb.mono(0, 1)}, {"E6(1)"}, false);
}

void e7_rows(std::vector<CatalogEntry>& out) {
  ModuleBuilder mb(out, "E7(1)", 2);
  mb.row(1, {mb.one(), mb.mono(0, 4)}, {"E7(1)"}, true);
  mb.row(1, {mb.one(), mb.mono(0, 2)}, {avl_id(2)}, true);
  mb.row(1, {mb.one(), mb.mono(0, 1), mb.mono(0, 2)}, {"A1"}, true);
  mb.row(2, {mb.one(), mb.mono(0, 1)}, {"E7(1)"}, false);
  mb.row(2, {mb.mono(0, 0), mb.sum({{0, 1, 1}, {1, 0, 1}})}, {avl_id(2)}, false);
  mb.row(3, {mb.one(), mb.mono(0, 0)}, {"A2", "sm"}, true);
  mb.row(3, {mb.one(), mb.mono(0, 0), mb.mono(0, 1)}, {"sm", "sm"}, true);
}

void e8_rows(std::vector<CatalogEntry>& out) {
  ModuleBuilder mb(out, "E8(1)", 1);
  mb.row(1, {mb.one(), mb.mono(0, 7)}, {"E8(1)"}, true);
  mb.row(1, {mb.one(), mb.mono(0, 4)}, {"E6(1)"}, true);
  mb.row(1, {mb.one(), mb.mono(0, 2), mb.mono(0, 4)}, {"A2"}, true);
  mb.row(1, {mb.one(), mb.mono(0, 1), mb.mono(0, 2)}, {"sm"}, true, "R~");
  mb.row(2, {mb.one(), mb.mono(0, 2)}, {"E8(1)"}, false);
  mb.row(2, {mb.one(), mb.mono(0, 1)}, {"E6(1)"}, false);
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<CatalogEntry> catalog_rings(const std::vector<int>& n_values) {
  const auto ns = sorted_unique(n_values);
  int k_max = 2;
  for (int n : ns) {
    check_n(n);
    k_max = std::max(k_max, n);
  }
  std::vector<CatalogEntry> out;
  for (int n : ns) out.push_back(avl_entry(n));
  out.push_back(e6_entry());
  out.push_back(e7_entry());
  out.push_back(e8_entry());
  out.push_back(a_entry(0));
  for (int k = 1; k <= k_max; ++k) out.push_back(a_entry(k));
  return out;
}

std::vector<CatalogEntry> catalog_modules(const std::vector<int>& n_values) {
  std::vector<CatalogEntry> out;
  for (int n : sorted_unique(n_values)) {
    check_n(n);
    if (n % 2 == 0) even_rows(out, n);
    else odd_rows(out, n);
  }
  e6_rows(out);
  e7_rows(out);
  e8_rows(out);
  return out;
}

RingPtr build_ring(const CatalogEntry& e, Window window) {
  return std::make_shared<const SubringRep>(SubringRep::span(e.branches, e.generators, window, e.id));
}

Catalog::Catalog(std::vector<CatalogEntry> rings, Window window) : entries_(std::move(rings)), window_(window) {
  std::map<Fingerprint, std::string> seen;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.kind != EntryKind::Ring) throw DomainError("catalog holds ring entries only");
    if (!index_.emplace(e.id, i).second) throw DomainError("duplicate catalog id " + e.id);
    rings_.push_back(build_ring(e, window));
    const auto fps = fingerprint(*rings_.back());
    if (fps.size() != 1) throw DomainError("catalog ring " + e.id + " is not local");
    fingerprints_.push_back(fps.front());
    auto [it, fresh] = seen.emplace(fps.front(), e.id);
    if (!fresh) throw AmbiguousFingerprint(it->second + " and " + e.id + " share " + to_string(fps.front()));
  }
}

Catalog Catalog::reference(const std::vector<int>& n_values, Window window) {
  int k_max = 2;
  for (int n : n_values) {
    check_n(n);
    k_max = std::max(k_max, n);
  }
  std::vector<int> all;
  for (int k = 1; k <= k_max; ++k) all.push_back(k);
  return Catalog(catalog_rings(all), window);
}

const CatalogEntry& Catalog::entry(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("unknown catalog id " + id);
  return entries_[it->second];
}

RingPtr Catalog::ring(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("unknown catalog id " + id);
  return rings_[it->second];
}

const Fingerprint& Catalog::fingerprint_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("unknown catalog id " + id);
  return fingerprints_[it->second];
}

std::string Catalog::classify_local(const SubringRep& r) const {
  const Fingerprint f = local_fingerprint(r);
  std::vector<std::string> hits;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (fingerprints_[i] == f) hits.push_back(entries_[i].id);
  }
  if (hits.size() > 1) throw AmbiguousFingerprint(join_ids(hits));
  return hits.empty() ? "Unknown" : hits.front();
}

std::vector<std::string> Catalog::classify(const SubringRep& r) const {
  const auto blocks = algebra::local_blocks(r);
  if (blocks.size() == 1) return {classify_local(r)};
  std::vector<std::pair<Fingerprint, std::string>> parts;
  for (const auto& b : blocks) {
    SubringRep p = algebra::project(r, b);
    parts.emplace_back(local_fingerprint(p), classify_local(p));
  }
  std::sort(parts.begin(), parts.end());
  std::vector<std::string> ids;
  for (auto& p : parts) ids.push_back(p.second);
  return ids;
}

std::vector<Fingerprint> Catalog::expected_fingerprint(const std::vector<std::string>& ids) const {
  std::vector<Fingerprint> out;
  for (const auto& id : ids) out.push_back(fingerprint_of(id));
  std::sort(out.begin(), out.end());
  return out;
}

ComponentReport component_report(const std::string& id, const Catalog& catalog) {
  if (id.find("∪") != std::string::npos || id.find(" u ") != std::string::npos) {
    throw NotApplicable(id + " names a product of local rings, not a single singularity");
  }
  const auto& e = catalog.entry(id);
  const auto& f = catalog.fingerprint_of(id);
  ComponentReport rep;
  rep.id = id;
  if (f.embdim <= 2) {
    rep.components = 1;
    rep.smoothable_only = true;
    rep.non_smoothable_description = "none (planar, so the compactified Jacobian is irreducible)";
  } else if (e.table1) {
    rep.components = 2;
    rep.smoothable_only = false;
    rep.non_smoothable_description = "closure of the ω-twist locus (sheaves locally isomorphic to the dualizing sheaf)";
  } else {
    throw NotApplicable(id + " is non-planar but outside the finite-type list");
  }
  return rep;
}

Table2Row verify_table2_row(const CatalogEntry& module, const Catalog& catalog, std::uint64_t seed) {
  Table2Row row;
  row.ring_id = module.ring_id;
  row.presentation = module.presentation;
  row.subdivision = module.subdivision;
  row.expected_end = module.expected_end;
  row.ring_flag = module.is_ring_flag;
  row.dualizing_flag = module.is_dualizing_flag;

  std::mt19937_64 rng(seed);
  const RingPtr ring = catalog.ring(module.ring_id);
  row.ring_delta = algebra::delta_invariant(*ring);
  const mod::ModuleRep m = mod::module_span(ring, module.generators);
  auto end = std::make_shared<const SubringRep>(mod::endomorphism_ring(m));
  row.end_ring = end;
  row.end_delta = algebra::delta_invariant(*end);
  const auto fps = fingerprint(*end);
  row.end_matches = (fps == catalog.expected_fingerprint(module.expected_end));
  row.computed_end = catalog.classify(*end);

  const mod::ModuleRep as_ring = mod::ring_as_module(ring, *end);
  const mod::ModuleRep as_omega = mod::push_forward(ring, mod::dualizing_module(end));
  bool gorenstein = true;
  for (const auto& f : fps) gorenstein = gorenstein && f.e == 1;

  std::ostringstream detail;
  if (module.is_ring_flag) {
    const auto iso = mod::is_isomorphic(m, as_ring, rng);
    row.flag_verified = iso.isomorphic();
    detail << "ring: " << mod::to_string(iso.verdict);
    if (iso.witness) detail << " via " << arith::to_string(*iso.witness);
    if (!gorenstein) {
      const auto other = mod::is_isomorphic(m, as_omega, rng);
      row.other_flag_refuted = other.verdict == mod::IsoVerdict::NotIsomorphic;
      detail << "; dualizing: " << mod::to_string(other.verdict);
    }
  } else {
    const auto iso = mod::is_isomorphic(m, as_omega, rng);
    row.flag_verified = iso.isomorphic();
    detail << "dualizing: " << mod::to_string(iso.verdict);
    if (iso.witness) detail << " via " << arith::to_string(*iso.witness);
    const auto other = mod::is_isomorphic(m, as_ring, rng);
    row.other_flag_refuted = other.verdict == mod::IsoVerdict::NotIsomorphic;
    detail << "; ring: " << mod::to_string(other.verdict);
  }
  row.detail = detail.str();
  return row;
}

}  // namespace curvecert::catalog
