#include "curvecert/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "curvecert/arith/expr.hpp"
#include "curvecert/arith/terms.hpp"

namespace curvecert::io {

using arith::Rational;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

template <class S, class Parse>
arith::MultiBranchElement<S> parse_terms(const json& j, int branches, Parse parse) {
  if (!j.is_array()) throw ParseError("term list must be an array");
  std::vector<arith::Term<S>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw ParseError("term must be [branch, exponent, coefficient]");
    const int b = as_int(t[0], "term branch");
    const int e = as_int(t[1], "term exponent");
    if (b < 0 || b >= branches) throw ParseError("term branch " + std::to_string(b) + " out of range");
    S c;
    if (t[2].is_number_integer()) {
      c = S(Rational(t[2].get<long>()));
    } else if (t[2].is_string()) {
      c = parse(t[2].get<std::string>());
    } else {
      throw ParseError("term coefficient must be an integer or a string");
    }
    terms.push_back({b, e, c});
  }
  return arith::from_terms(branches, terms);
}

template <class S>
json terms_json(const arith::MultiBranchElement<S>& x) {
  json out = json::array();
  for (const auto& t : arith::to_terms(x)) out.push_back({t.branch, t.exp, arith::to_string(t.coeff)});
  return out;
}

std::vector<arith::Element> parse_element_list(const json& j, int branches) {
  if (!j.is_array()) throw ParseError("generator list must be an array");
  std::vector<arith::Element> out;
  for (const auto& g : j) out.push_back(parse_element(g, branches));
  return out;
}

json element_list_json(const std::vector<arith::Element>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(element_json(x));
  return out;
}

catalog::CatalogEntry ring_ref(const json& j) {
  if (j.is_string()) return builtin_ring(j.get<std::string>());
  return parse_ring(j);
}

}  // namespace

arith::Element parse_element(const json& j, int branches) {
  return parse_terms<Rational>(j, branches, [](const std::string& s) { return arith::parse_field_scalar(s); });
}

arith::DeformElement parse_deform_element(const json& j, int branches) {
  return parse_terms<arith::RatFunc>(j, branches, [](const std::string& s) { return arith::parse_deform_scalar(s); });
}

json element_json(const arith::Element& x) { return terms_json(x); }
json element_json(const arith::DeformElement& x) { return terms_json(x); }

catalog::CatalogEntry parse_ring(const json& j) {
  catalog::CatalogEntry e;
  e.kind = catalog::EntryKind::Ring;
  e.id = j.contains("name") ? as_string(j.at("name"), "name") : std::string("user ring");
  e.branches = as_int(field(j, "branches"), "branches");
  if (e.branches < 1 || e.branches > algebra::kMaxBranches) throw ParseError("branches out of range");
  e.generators = parse_element_list(field(j, "generators"), e.branches);
  if (j.contains("table1")) e.table1 = j.at("table1").get<bool>();
  return e;
}

json ring_json(const catalog::CatalogEntry& e) {
  return {{"name", e.id}, {"branches", e.branches}, {"generators", element_list_json(e.generators)}};
}

catalog::CatalogEntry builtin_ring(const std::string& id) {
  std::vector<int> all;
  for (int n = 1; n <= catalog::kMaxN; ++n) all.push_back(n);
  for (auto& e : catalog::catalog_rings(all)) {
    if (e.id == id) return e;
  }
  throw ParseError("unknown ring id '" + id + "'");
}

catalog::CatalogEntry parse_module(const json& j, catalog::CatalogEntry& ring) {
  ring = ring_ref(field(j, "ring"));
  catalog::CatalogEntry m;
  m.kind = catalog::EntryKind::Module;
  m.ring_id = ring.id;
  m.branches = ring.branches;
  m.generators = parse_element_list(field(j, "generators"), ring.branches);
  m.presentation = j.contains("name") ? as_string(j.at("name"), "name") : catalog::describe_generators(m.generators);
  m.id = ring.id + ": " + m.presentation;
  if (j.contains("end")) m.expected_end = j.at("end").get<std::vector<std::string>>();
  if (j.contains("ring_flag")) m.is_ring_flag = j.at("ring_flag").get<bool>();
  if (j.contains("dualizing_flag")) m.is_dualizing_flag = j.at("dualizing_flag").get<bool>();
  if (j.contains("subdivision")) m.subdivision = as_int(j.at("subdivision"), "subdivision");
  return m;
}

CatalogFile parse_catalog(const json& j) {
  CatalogFile out;
  if (j.contains("rings")) {
    for (const auto& r : j.at("rings")) out.rings.push_back(parse_ring(r));
  }
  if (j.contains("modules")) {
    for (const auto& mj : j.at("modules")) {
      // Module rows may name a ring defined earlier in the same file.
      catalog::CatalogEntry ring;
      json copy = mj;
      const json& rr = field(mj, "ring");
      if (rr.is_string()) {
        for (const auto& r : out.rings) {
          if (r.id == rr.get<std::string>()) copy["ring"] = ring_json(r);
        }
      }
      out.modules.push_back(parse_module(copy, ring));
      out.modules.back().ring_id = ring.id;
    }
  }
  return out;
}

certify::Certificate parse_certificate(const json& j) {
  using namespace certify;
  Certificate c;
  c.id = j.contains("id") ? as_string(j.at("id"), "id") : std::string("certificate");
  const catalog::CatalogEntry ring = ring_ref(field(j, "ring"));
  c.ring_id = ring.id;
  c.branches = ring.branches;
  c.ring_generators = ring.generators;
  const int r = c.branches;

  c.source = parse_element_list(field(j, "source"), r);
  const json& t = field(j, "target");
  c.target.shape = parse_shape(as_string(field(t, "shape"), "target shape"));
  if (c.target.shape == QuotientTarget::Shape::Jet) c.target.m = as_int(field(t, "m"), "jet order");
  if (c.target.m < 1) throw ParseError("jet order must be positive");

  const json& f = field(j, "functional");
  if (!f.is_array()) throw ParseError("functional must be an array of term lists");
  for (const auto& form : f) {
    LinearForm lf;
    for (const auto& term : arith::to_terms(parse_deform_element(form, r))) lf.push_back(term);
    c.functional.push_back(std::move(lf));
  }

  const json& a = field(j, "action");
  c.action.kind = parse_action(as_string(field(a, "kind"), "action kind"));
  c.action.branch = a.contains("branch") ? as_int(a.at("branch"), "action branch") : 0;
  if (j.contains("algebra_map")) c.is_algebra_map = j.at("algebra_map").get<bool>();

  c.special_fiber = parse_element_list(field(j, "special_fiber"), r);
  c.special_multiplier = parse_element(field(j, "special_multiplier"), r);

  const std::string gt = as_string(field(j, "generic_target"), "generic_target");
  if (gt == "ring") {
    c.generic_target = GenericTarget::Ring;
  } else if (gt == "dualizing") {
    c.generic_target = GenericTarget::Dualizing;
  } else {
    throw ParseError("generic_target must be 'ring' or 'dualizing'");
  }
  if (j.contains("generic_target_module")) {
    c.generic_target_module = parse_element_list(j.at("generic_target_module"), r);
  } else if (c.generic_target == GenericTarget::Ring) {
    c.generic_target_module = {arith::Element::one(r)};
  } else {
    throw ParseError("a dualizing target needs generic_target_module");
  }
  c.generic_multiplier = parse_deform_element(field(j, "generic_multiplier"), r);

  const std::string dir = j.contains("direction") ? as_string(j.at("direction"), "direction") : "kernel_to_target";
  if (dir == "kernel_to_target") {
    c.direction = Direction::KernelToTarget;
  } else if (dir == "target_to_kernel") {
    c.direction = Direction::TargetToKernel;
  } else {
    throw ParseError("direction must be 'kernel_to_target' or 'target_to_kernel'");
  }
  if (j.contains("note")) c.note = as_string(j.at("note"), "note");
  return c;
}

json certificate_json(const certify::Certificate& c) {
  using namespace certify;
  json functional = json::array();
  for (const auto& form : c.functional) {
    json terms = json::array();
    for (const auto& t : form) terms.push_back({t.branch, t.exp, t.coeff.to_string()});
    functional.push_back(std::move(terms));
  }
  catalog::CatalogEntry ring;
  ring.id = c.ring_id;
  ring.branches = c.branches;
  ring.generators = c.ring_generators;
  json j = {
      {"id", c.id},
      {"ring", ring_json(ring)},
      {"source", element_list_json(c.source)},
      {"target", {{"shape", to_string(c.target.shape)}, {"m", c.target.m}}},
      {"functional", std::move(functional)},
      {"action", {{"kind", to_string(c.action.kind)}, {"branch", c.action.branch}}},
      {"algebra_map", c.is_algebra_map},
      {"special_fiber", element_list_json(c.special_fiber)},
      {"special_multiplier", element_json(c.special_multiplier)},
      {"generic_target", to_string(c.generic_target)},
      {"generic_target_module", element_list_json(c.generic_target_module)},
      {"generic_multiplier", element_json(c.generic_multiplier)},
      {"direction", to_string(c.direction)},
  };
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace curvecert::io
