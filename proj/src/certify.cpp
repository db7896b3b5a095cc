#include "curvecert/certify/certificate.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "curvecert/catalog/catalog.hpp"

namespace curvecert::certify {

using algebra::Key;
using algebra::KernelBuilder;
using algebra::key_branch;
using algebra::key_exp;
using algebra::make_key;
using algebra::SparseVec;
using algebra::Subspace;
using arith::delem;
using arith::elem;

int QuotientTarget::length() const {
  switch (shape) {
    case Shape::Point: return 1;
    case Shape::DualNumbers: return 2;
    case Shape::FatPlane: return 3;
    case Shape::Jet: return m;
  }
  return 0;
}

std::string to_string(QuotientTarget::Shape s) {
  switch (s) {
    case QuotientTarget::Shape::Point: return "point";
    case QuotientTarget::Shape::DualNumbers: return "dual_numbers";
    case QuotientTarget::Shape::FatPlane: return "fat_plane";
    case QuotientTarget::Shape::Jet: return "jet";
  }
  return "?";
}

QuotientTarget::Shape parse_shape(const std::string& s) {
  for (auto v : {QuotientTarget::Shape::Point, QuotientTarget::Shape::DualNumbers, QuotientTarget::Shape::FatPlane,
                 QuotientTarget::Shape::Jet}) {
    if (to_string(v) == s) return v;
  }
  throw ParseError("unknown target shape '" + s + "'");
}

std::string to_string(ActionMap::Kind k) {
  switch (k) {
    case ActionMap::Kind::AlgebraMap: return "algebra_map";
    case ActionMap::Kind::ConstantTerm: return "constant_term";
    case ActionMap::Kind::JetOfBranch: return "jet_of_branch";
  }
  return "?";
}

ActionMap::Kind parse_action(const std::string& s) {
  for (auto v : {ActionMap::Kind::AlgebraMap, ActionMap::Kind::ConstantTerm, ActionMap::Kind::JetOfBranch}) {
    if (to_string(v) == s) return v;
  }
  throw ParseError("unknown action map '" + s + "'");
}

std::string to_string(GenericTarget g) { return g == GenericTarget::Ring ? "ring" : "dualizing"; }
std::string to_string(Direction d) {
  return d == Direction::KernelToTarget ? "kernel_to_target" : "target_to_kernel";
}

namespace {

using QVec = std::vector<RatFunc>;

std::string q_text(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

template <class S>
std::string vec_text(const SparseVec<S>& v, int branches) {
  return arith::to_string(algebra::to_element(v, branches));
}

SparseVec<RatFunc> q_sparse(QVec v) {
  std::map<Key, RatFunc> m;
  for (std::size_t i = 0; i < v.size(); ++i) m.emplace(static_cast<Key>(i), std::move(v[i]));
  return SparseVec<RatFunc>::from_map(std::move(m));
}

SparseVec<Rational> q_sparse_at_zero(const QVec& v) {
  std::map<Key, Rational> m;
  for (std::size_t i = 0; i < v.size(); ++i) m.emplace(static_cast<Key>(i), v[i].eval_at_zero());
  return SparseVec<Rational>::from_map(std::move(m));
}

bool q_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const RatFunc& c) { return c.is_zero(); });
}

int min_exp(const SparseVec<Rational>& v, int none) { return v.empty() ? none : key_exp(v.pivot()); }

std::vector<const SparseVec<Rational>*> rows_of(const Subspace<Rational>& v) {
  std::vector<const SparseVec<Rational>*> out;
  for (const auto& [k, row] : v.rows()) out.push_back(&row);
  return out;
}

/// First row of a that b misses, or empty.
template <class S>
std::string first_missing(const Subspace<S>& a, const Subspace<S>& b, const std::string& a_name,
                          const std::string& b_name) {
  for (const auto& [k, row] : a.rows()) {
    if (!b.contains(row)) return a_name + " contains " + vec_text(row, a.branches()) + " not in " + b_name;
  }
  return {};
}

template <class S>
std::string difference_witness(const Subspace<S>& a, const Subspace<S>& b, const std::string& a_name,
                               const std::string& b_name) {
  std::string w = first_missing(a, b, a_name, b_name);
  if (w.empty()) w = first_missing(b, a, b_name, a_name);
  return w;
}

Element permute(const Element& x, const std::vector<int>& perm) {
  std::vector<arith::TruncSeries<Rational>> parts(x.parts().size());
  for (std::size_t b = 0; b < parts.size(); ++b) parts[static_cast<std::size_t>(perm[b])] = x.parts()[b];
  return Element(std::move(parts));
}

DeformElement permute(const DeformElement& x, const std::vector<int>& perm) {
  std::vector<arith::TruncSeries<RatFunc>> parts(x.parts().size());
  for (std::size_t b = 0; b < parts.size(); ++b) parts[static_cast<std::size_t>(perm[b])] = x.parts()[b];
  return DeformElement(std::move(parts));
}

}  // namespace

CertificateContext::CertificateContext(const Certificate& cert, Window window)
    : cert_(cert),
      ring_(std::make_shared<const algebra::SubringRep>(
          algebra::SubringRep::span(cert.branches, cert.ring_generators, window, cert.ring_id))),
      source_(modules::module_span(ring_, cert.source)) {
  const int len = cert_.target.length();
  if (len < 1) throw DomainError("target has length " + std::to_string(len));
  if (static_cast<int>(cert_.functional.size()) != len) {
    throw DomainError("functional has " + std::to_string(cert_.functional.size()) + " coordinates, target length " +
                      std::to_string(len));
  }
  if (cert_.action.kind == ActionMap::Kind::JetOfBranch && cert_.target.shape != QuotientTarget::Shape::Jet &&
      cert_.target.shape != QuotientTarget::Shape::Point) {
    throw DomainError("jet action needs a jet or point target");
  }
  if (cert_.action.branch < 0 || cert_.action.branch >= cert_.branches) throw DomainError("action branch out of range");
  for (const auto& form : cert_.functional) {
    for (const auto& t : form) {
      if (t.branch < 0 || t.branch >= cert_.branches) throw DomainError("functional branch out of range");
      if (t.exp >= top()) {
        throw DomainError("functional reads t^" + std::to_string(t.exp) + " beyond the window top " +
                          std::to_string(top()));
      }
      reach_ = std::max(reach_, t.exp + 1);
    }
  }
}

QVec CertificateContext::apply(const SparseVec<Rational>& x) const {
  QVec out(cert_.functional.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& t : cert_.functional[i]) {
      if (const Rational* c = x.find(make_key(t.exp, t.branch))) out[i] += t.coeff * RatFunc(*c);
    }
  }
  return out;
}

QVec CertificateContext::act(const SparseVec<Rational>& r) const {
  const auto len = static_cast<std::size_t>(cert_.target.length());
  QVec out(len);
  switch (cert_.action.kind) {
    case ActionMap::Kind::AlgebraMap: return apply(r);
    case ActionMap::Kind::ConstantTerm:
      if (const Rational* c = r.find(make_key(0, cert_.action.branch))) out[0] = RatFunc(*c);
      return out;
    case ActionMap::Kind::JetOfBranch:
      for (std::size_t j = 0; j < len; ++j) {
        if (const Rational* c = r.find(make_key(static_cast<int>(j), cert_.action.branch))) out[j] = RatFunc(*c);
      }
      return out;
  }
  return out;
}

QVec CertificateContext::q_mul(const QVec& x, const QVec& y) const {
  const std::size_t len = x.size();
  QVec out(len);
  if (cert_.target.shape == QuotientTarget::Shape::Jet) {
    for (std::size_t i = 0; i < len; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < len; ++j) out[i + j] += x[i] * y[j];
    }
    return out;
  }
  // point, dual numbers, fat plane: coordinates 1.. span a square-zero ideal.
  out[0] = x[0] * y[0];
  for (std::size_t i = 1; i < len; ++i) out[i] = x[0] * y[i] + x[i] * y[0];
  return out;
}

StageResult check_linearity(const CertificateContext& ctx) {
  StageResult res{1, "linearity", true, {}};
  const auto& cert = ctx.cert();
  const int r = cert.branches;
  const int top = ctx.top();
  const int k = ctx.reach();
  const auto p_rows = rows_of(ctx.source().basis());
  const int p_low = ctx.source().low();

  std::vector<SparseVec<Rational>> r_elems;
  for (const auto& [key, row] : ctx.ring()->basis().rows()) r_elems.push_back(row);
  // Tail monomials of R only matter if P reaches below zero.
  for (int b = 0; b < r; ++b) {
    for (int e = top; e < k - p_low; ++e) r_elems.push_back(SparseVec<Rational>::unit(make_key(e, b)));
  }

  std::vector<QVec> phi_p;
  phi_p.reserve(p_rows.size());
  for (const auto* x : p_rows) phi_p.push_back(ctx.apply(*x));

  // Pairs where r*x starts at or beyond the functional's reach and alpha(r)
  // vanishes have both sides zero.
  for (const auto& re : r_elems) {
    const QVec ar = ctx.act(re);
    const bool ar_zero = q_zero(ar);
    for (std::size_t i = 0; i < p_rows.size(); ++i) {
      if (ar_zero && min_exp(re, top) + min_exp(*p_rows[i], top) >= k) continue;
      const QVec lhs = ctx.apply(algebra::multiply(re, *p_rows[i], k));
      const QVec rhs = ctx.q_mul(ar, phi_p[i]);
      if (lhs != rhs) {
        res.passed = false;
        res.detail = "r = " + vec_text(re, r) + ", x = " + vec_text(*p_rows[i], r) + ": phi(r*x) = " + q_text(lhs) +
                     " but alpha(r)*phi(x) = " + q_text(rhs);
        return res;
      }
    }
  }

  if (cert.is_algebra_map) {
    QVec unit(phi_p.empty() ? 0 : phi_p.front().size());
    if (!unit.empty()) unit[0] = RatFunc(1);
    std::map<Key, Rational> one_map;
    for (int b = 0; b < r; ++b) one_map.emplace(make_key(0, b), Rational(1));
    const QVec phi_one = ctx.apply(SparseVec<Rational>::from_map(std::move(one_map)));
    if (phi_one != unit) {
      res.passed = false;
      res.detail = "phi(1) = " + q_text(phi_one) + ", expected " + q_text(unit);
      return res;
    }
    for (std::size_t i = 0; i < p_rows.size(); ++i) {
      for (std::size_t j = i; j < p_rows.size(); ++j) {
        const QVec rhs = ctx.q_mul(phi_p[i], phi_p[j]);
        if (q_zero(rhs) && min_exp(*p_rows[i], top) + min_exp(*p_rows[j], top) >= k) continue;
        const QVec lhs = ctx.apply(algebra::multiply(*p_rows[i], *p_rows[j], k));
        if (lhs != rhs) {
          res.passed = false;
          res.detail = "x = " + vec_text(*p_rows[i], r) + ", y = " + vec_text(*p_rows[j], r) + ": phi(x*y) = " +
                       q_text(lhs) + " but phi(x)*phi(y) = " + q_text(rhs);
          return res;
        }
      }
    }
  }
  res.detail = std::to_string(r_elems.size()) + " x " + std::to_string(p_rows.size()) + " basis pairs";
  return res;
}

namespace {

void require_regular_at_zero(const Certificate& cert) {
  for (std::size_t i = 0; i < cert.functional.size(); ++i) {
    for (const auto& t : cert.functional[i]) {
      if (!t.coeff.regular_at_zero()) {
        throw PoleAtZero("functional coordinate " + std::to_string(i) + " coefficient " + t.coeff.to_string() +
                         " of x_{" + std::to_string(t.branch) + "," + std::to_string(t.exp) + "}");
      }
    }
  }
}

}  // namespace

StageResult check_surjectivity(const CertificateContext& ctx) {
  StageResult res{2, "surjectivity", true, {}};
  const int len = ctx.cert().target.length();
  KernelBuilder<RatFunc> gen;
  for (const auto& [k, row] : ctx.source().basis().rows()) gen.add(q_sparse(ctx.apply(row)));
  try {
    require_regular_at_zero(ctx.cert());
  } catch (const PoleAtZero& e) {
    res.passed = false;
    res.detail = std::string("RankDrop at special fiber: ") + e.what();
    return res;
  }
  KernelBuilder<Rational> sp;
  for (const auto& [k, row] : ctx.source().basis().rows()) sp.add(q_sparse_at_zero(ctx.apply(row)));
  const std::string ranks = "rank over Q(a) " + std::to_string(gen.rank()) + ", at a=0 " + std::to_string(sp.rank()) +
                            ", length(Q) " + std::to_string(len);
  if (gen.rank() != len) {
    res.passed = false;
    res.detail = "RankDrop at generic fiber: " + ranks;
  } else if (sp.rank() != len) {
    res.passed = false;
    res.detail = "RankDrop at special fiber: " + ranks;
  } else {
    res.detail = ranks;
  }
  return res;
}

modules::ModuleRep kernel_special(const CertificateContext& ctx) {
  require_regular_at_zero(ctx.cert());
  const auto rows = rows_of(ctx.source().basis());
  KernelBuilder<Rational> kb;
  for (const auto* x : rows) kb.add(q_sparse_at_zero(ctx.apply(*x)));
  Subspace<Rational> out(ctx.cert().branches, ctx.top());
  for (const auto& combo : kb.kernel()) {
    SparseVec<Rational> v;
    for (const auto& [idx, c] : combo.entries) algebra::axpy(v, c, *rows[static_cast<std::size_t>(idx)]);
    out.insert(std::move(v));
  }
  return modules::module_from_subspace(ctx.ring(), std::move(out));
}

Subspace<RatFunc> kernel_generic(const CertificateContext& ctx) {
  const auto rows = rows_of(ctx.source().basis());
  KernelBuilder<RatFunc> kb;
  for (const auto* x : rows) kb.add(q_sparse(ctx.apply(*x)));
  Subspace<RatFunc> out(ctx.cert().branches, ctx.top());
  for (const auto& combo : kb.kernel()) {
    SparseVec<RatFunc> v;
    for (const auto& [idx, c] : combo.entries) algebra::axpy(v, c, algebra::extend(*rows[static_cast<std::size_t>(idx)]));
    out.insert(std::move(v));
  }
  return out;
}

StageResult check_special_fiber(const CertificateContext& ctx) {
  StageResult res{3, "special-fiber", true, {}};
  const auto& cert = ctx.cert();
  const int len = cert.target.length();
  const modules::ModuleRep k0 = kernel_special(ctx);
  const int codim = ctx.source().basis().dim() - k0.basis().dim();
  if (!cert.special_multiplier.is_nonzerodivisor()) {
    res.passed = false;
    res.detail = "special multiplier " + arith::to_string(cert.special_multiplier) + " is a zero divisor";
    return res;
  }
  const modules::ModuleRep m = modules::module_span(ctx.ring(), cert.special_fiber);
  const modules::ModuleRep sm = modules::scalar_mul(cert.special_multiplier, m);
  if (!(sm.basis() == k0.basis())) {
    res.passed = false;
    res.detail = difference_witness(sm.basis(), k0.basis(), "s*M", "ker phi_0");
    return res;
  }
  if (codim != len) {
    res.passed = false;
    res.detail = "dim P/ker phi_0 = " + std::to_string(codim) + ", length(Q) = " + std::to_string(len);
    return res;
  }
  res.detail = "s*M = ker phi_0, codimension " + std::to_string(codim);
  return res;
}

StageResult check_generic_fiber(const CertificateContext& ctx, std::uint64_t seed) {
  StageResult res{4, "generic-fiber", true, {}};
  const auto& cert = ctx.cert();
  const int len = cert.target.length();
  const int top = ctx.top();
  const Subspace<RatFunc> kg = kernel_generic(ctx);
  const int codim = ctx.source().basis().dim() - kg.dim();
  const modules::ModuleRep t = modules::module_span(ctx.ring(), cert.generic_target_module);

  // The target presentation must really be R or omega.
  if (cert.generic_target == GenericTarget::Ring) {
    if (!(t.basis() == ctx.ring()->basis())) {
      res.passed = false;
      res.detail = "generic target module does not span R";
      return res;
    }
  } else {
    std::mt19937_64 rng(seed);
    const auto iso = modules::is_isomorphic(t, modules::dualizing_module(ctx.ring()), rng);
    if (iso.verdict != modules::IsoVerdict::Isomorphic) {
      res.passed = false;
      res.detail = "generic target presentation vs residue omega: " + modules::to_string(iso.verdict) + " (" +
                   iso.reason + ")";
      return res;
    }
  }

  const DeformElement& u = cert.generic_multiplier;
  if (!u.is_nonzerodivisor()) {
    res.passed = false;
    res.detail = "generic multiplier " + arith::to_string(u) + " is not invertible over Q(a)";
    return res;
  }
  const Subspace<RatFunc> text = algebra::extend(t.basis());
  const bool k2t = cert.direction == Direction::KernelToTarget;
  const Subspace<RatFunc>& from = k2t ? kg : text;
  const Subspace<RatFunc>& to = k2t ? text : kg;
  const SparseVec<RatFunc> us = algebra::to_sparse(u, top - std::min(0, from.low()));
  const Subspace<RatFunc> image = algebra::multiply(us, from);
  if (!(image == to)) {
    res.passed = false;
    res.detail = k2t ? difference_witness(image, to, "u*ker phi_a", "target")
                     : difference_witness(image, to, "u*target", "ker phi_a");
    return res;
  }
  if (codim != len) {
    res.passed = false;
    res.detail = "dim P/ker phi_a = " + std::to_string(codim) + ", length(Q) = " + std::to_string(len);
    return res;
  }
  res.detail = std::string(k2t ? "u*ker phi_a = " : "u*target = ker phi_a, target ") + to_string(cert.generic_target) +
               (k2t ? " target" : "") + ", codimension " + std::to_string(codim);
  return res;
}

bool CertificateReport::pass() const {
  return std::all_of(stages.begin(), stages.end(), [](const StageResult& s) { return s.passed; });
}

int CertificateReport::first_failure() const {
  for (const auto& s : stages) {
    if (!s.passed) return s.stage;
  }
  return 0;
}

CertificateReport verify_certificate(const Certificate& cert, Window window, std::uint64_t seed) {
  CertificateReport rep;
  rep.id = cert.id;
  const CertificateContext ctx(cert, window);
  auto guarded = [&](int stage, const char* name, auto&& fn) {
    try {
      rep.stages.push_back(fn());
    } catch (const Error& e) {
      rep.stages.push_back(StageResult{stage, name, false, e.what()});
    }
  };
  guarded(1, "linearity", [&] { return check_linearity(ctx); });
  guarded(2, "surjectivity", [&] { return check_surjectivity(ctx); });
  guarded(3, "special-fiber", [&] { return check_special_fiber(ctx); });
  guarded(4, "generic-fiber", [&] { return check_generic_fiber(ctx, seed); });
  return rep;
}

std::string to_string(Mutation m) {
  switch (m) {
    case Mutation::Functional: return "functional";
    case Mutation::SpecialMultiplier: return "special-multiplier";
    case Mutation::GenericMultiplier: return "generic-multiplier";
  }
  return "?";
}

int designated_stage(Mutation m) {
  switch (m) {
    case Mutation::Functional: return 2;
    case Mutation::SpecialMultiplier: return 3;
    case Mutation::GenericMultiplier: return 4;
  }
  return 0;
}

Certificate mutate(const Certificate& c, Mutation m) {
  Certificate out = c;
  out.id = c.id + "~" + to_string(m);
  switch (m) {
    case Mutation::Functional: {
      // Scale the part that must survive at a = 0: for an algebra map the
      // coordinates past the unit, otherwise everything.
      const std::size_t from = c.is_algebra_map ? 1 : 0;
      for (std::size_t i = from; i < out.functional.size(); ++i) {
        for (auto& t : out.functional[i]) t.coeff *= RatFunc::a();
      }
      break;
    }
    case Mutation::SpecialMultiplier:
      out.special_multiplier = Element::uniform(c.branches, 1) * c.special_multiplier;
      break;
    case Mutation::GenericMultiplier:
      out.generic_multiplier = DeformElement::uniform(c.branches, 1) * c.generic_multiplier;
      break;
  }
  return out;
}

Certificate permute_branches(const Certificate& c, const std::vector<int>& perm, std::string id) {
  if (static_cast<int>(perm.size()) != c.branches) throw DomainError("permutation has the wrong length");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (int b = 0; b < c.branches; ++b) {
    if (check[static_cast<std::size_t>(b)] != b) throw DomainError("not a permutation");
  }
  Certificate out = c;
  out.id = std::move(id);
  for (auto& x : out.source) x = permute(x, perm);
  for (auto& form : out.functional) {
    for (auto& t : form) t.branch = perm[static_cast<std::size_t>(t.branch)];
    // Keep the (exponent, branch) order the parser produces.
    std::sort(form.begin(), form.end(),
              [](const auto& x, const auto& y) { return std::pair(x.exp, x.branch) < std::pair(y.exp, y.branch); });
  }
  out.action.branch = perm[static_cast<std::size_t>(c.action.branch)];
  for (auto& x : out.special_fiber) x = permute(x, perm);
  out.special_multiplier = permute(c.special_multiplier, perm);
  for (auto& x : out.generic_target_module) x = permute(x, perm);
  out.generic_multiplier = permute(c.generic_multiplier, perm);
  return out;
}

// ---------------------------------------------------------------------------
// Built-in instances.

namespace {

catalog::CatalogEntry ring_for(const std::string& id, int n) {
  for (auto& e : catalog::catalog_rings({n})) {
    if (e.id == id) return e;
  }
  throw DomainError("no catalog ring " + id);
}

Certificate base(const std::string& ring_id, int n, int index) {
  const auto e = ring_for(ring_id, n);
  Certificate c;
  c.id = ring_id + "#" + std::to_string(index);
  c.ring_id = ring_id;
  c.branches = e.branches;
  c.ring_generators = e.generators;
  return c;
}

LinearForm form(std::vector<arith::Term<RatFunc>> terms) {
  // Merge repeated coordinates so the form is canonical.
  std::map<std::pair<int, int>, RatFunc> m;
  for (auto& t : terms) m[{t.exp, t.branch}] += t.coeff;
  LinearForm out;
  for (auto& [k, c] : m) {
    if (!c.is_zero()) out.push_back({k.second, k.first, c});
  }
  return out;
}

Element one(int r) { return Element::one(r); }
const RatFunc kA = RatFunc::a();

std::vector<Certificate> e_certificates() {
  std::vector<Certificate> out;
  {
    // P = normalization, Q = k acting through f(0).
    Certificate c = base("E6(1)", 1, 1);
    c.source = {elem(1, {{0, 0, 1}}), elem(1, {{0, 1, 1}}), elem(1, {{0, 2, 1}})};
    c.functional = {form({{0, 1, 1}, {0, 2, -kA}})};
    c.action = {ActionMap::Kind::ConstantTerm, 0};
    c.special_fiber = {one(1), elem(1, {{0, 2, 1}})};
    c.special_multiplier = one(1);
    c.generic_target = GenericTarget::Dualizing;
    c.generic_target_module = {one(1), elem(1, {{0, 1, 1}})};
    c.generic_multiplier = delem(1, {{0, 0, 1}, {0, 1, -RatFunc(1) / kA}});
    out.push_back(std::move(c));
  }
  {
    // Q = k acting through f(0).
    Certificate c = base("E7(1)", 1, 1);
    c.source = {one(2), elem(2, {{0, 1, 1}}), elem(2, {{0, 2, 1}})};
    c.functional = {form({{0, 1, 1}, {0, 2, -kA}, {1, 1, kA}})};
    c.action = {ActionMap::Kind::ConstantTerm, 0};
    c.special_fiber = {one(2), elem(2, {{0, 2, 1}})};
    c.special_multiplier = one(2);
    c.generic_target = GenericTarget::Dualizing;
    c.generic_target_module = {one(2), elem(2, {{0, 1, 1}})};
    c.generic_multiplier = delem(2, {{0, 0, 1}, {0, 1, -RatFunc(1) / kA}, {1, 0, 1}});
    out.push_back(std::move(c));
  }
  {
    Certificate c = base("E7(1)", 1, 2);
    c.source = {one(2), elem(2, {{0, 1, 1}})};
    c.functional = {form({{0, 0, 1}, {0, 1, -kA}})};
    c.action = {ActionMap::Kind::ConstantTerm, 0};
    c.special_fiber = {elem(2, {{0, 0, 1}}), elem(2, {{0, 1, 1}, {1, 0, 1}})};
    c.special_multiplier = elem(2, {{0, 1, 1}, {1, 1, 1}});
    c.generic_target = GenericTarget::Ring;
    c.generic_target_module = {one(2)};
    c.generic_multiplier = delem(2, {{0, 0, kA * kA}, {0, 1, -kA}, {0, 2, 1}, {1, 0, kA * kA}});
    out.push_back(std::move(c));
  }
  {
    Certificate c = base("E8(1)", 1, 1);
    c.source = {one(1), elem(1, {{0, 2, 1}}), elem(1, {{0, 4, 1}})};
    c.functional = {form({{0, 2, 1}, {0, 4, -kA}})};
    c.action = {ActionMap::Kind::ConstantTerm, 0};
    c.special_fiber = {one(1), elem(1, {{0, 4, 1}})};
    c.special_multiplier = one(1);
    c.generic_target = GenericTarget::Dualizing;
    c.generic_target_module = {one(1), elem(1, {{0, 2, 1}})};
    c.generic_multiplier = delem(1, {{0, 0, kA}, {0, 2, -1}});
    out.push_back(std::move(c));
  }
  {
    // Algebra map R -> k[e1,e2]/(e1,e2)^2; R acts through phi itself.
    Certificate c = base("E8(1)", 1, 2);
    c.source = {one(1)};
    c.target = {QuotientTarget::Shape::FatPlane, 1};
    c.functional = {form({{0, 0, 1}}), form({{0, 3, 1}, {0, 5, kA}}), form({{0, 7, 1}})};
    c.action = {ActionMap::Kind::AlgebraMap, 0};
    c.is_algebra_map = true;
    c.special_fiber = {one(1), elem(1, {{0, 1, 1}})};
    c.special_multiplier = elem(1, {{0, 5, 1}});
    c.generic_target = GenericTarget::Ring;
    c.generic_target_module = {one(1)};
    c.generic_multiplier = delem(1, {{0, -3, kA}, {0, -1, 1}, {0, 1, RatFunc(1) / kA}});
    c.note = "generic multiplier uses +t^-1; the printed -t^-1 does not map the kernel onto R";
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Certificate> even_certificates(int n) {
  const std::string id = catalog::avl_id(n);
  std::vector<Certificate> out;
  {
    // Q = k acting through (f,g)(0).
    Certificate c = base(id, n, 1);
    c.source = {one(2), elem(2, {{0, 0, 1}}), elem(2, {{0, n - 1, 1}})};
    c.functional = {form({{0, 0, 1}, {1, 0, kA - 1}, {0, n - 1, -kA}})};
    c.action = {ActionMap::Kind::ConstantTerm, 0};
    c.special_fiber = {one(2), elem(2, {{0, n - 1, 1}})};
    c.special_multiplier = one(2);
    c.generic_target = GenericTarget::Dualizing;
    c.generic_target_module = {elem(2, {{0, 0, 1}}), elem(2, {{0, n - 1, 1}, {1, 0, 1}})};
    c.generic_multiplier = delem(2, {{0, 0, kA}, {0, n - 1, -1}, {1, 0, kA - 1}});
    out.push_back(std::move(c));
  }
  {
    // Algebra map onto the fat plane.
    Certificate c = base(id, n, 2);
    c.source = {one(2)};
    c.target = {QuotientTarget::Shape::FatPlane, 1};
    c.functional = {form({{0, 0, 1}}), form({{0, 2, 1}, {0, n + 1, kA}}), form({{1, 1, 1}, {0, n + 1, kA - 1}})};
    c.action = {ActionMap::Kind::AlgebraMap, 0};
    c.is_algebra_map = true;
    c.special_fiber = {elem(2, {{0, 0, 1}}), elem(2, {{0, n - 3, 1}, {1, 0, 1}})};
    c.special_multiplier = elem(2, {{0, 4, 1}, {1, 1, 1}});
    c.generic_target = GenericTarget::Ring;
    c.generic_target_module = {one(2)};
    c.generic_multiplier = delem(2, {{0, n + 1, 1}, {0, 2, -kA}, {1, 1, 1 - kA}});
    c.direction = Direction::TargetToKernel;
    out.push_back(std::move(c));
  }
  {
    // Q = k acting through (f,g)(0).
    Certificate c = base(id, n, 3);
    c.source = {one(2), elem(2, {{0, 0, 1}})};
    c.functional = {form({{1, 0, 1 - kA}, {0, 0, -kA}})};
    c.action = {ActionMap::Kind::ConstantTerm, 0};
    c.special_fiber = c.source;
    c.special_multiplier = elem(2, {{0, 0, 1}, {1, 1, 1}});
    c.generic_target = GenericTarget::Ring;
    c.generic_target_module = {one(2)};
    c.generic_multiplier = delem(2, {{0, 0, kA}, {1, 0, 1 - kA}});
    out.push_back(std::move(c));
  }
  return out;
}

Certificate odd_jet(const std::string& id, int n, int m, int index) {
  // Q = k[t]/t^m acting through the jet of the first branch.
  Certificate c = base(id, n, index);
  c.source = {one(3), elem(3, {{0, 0, 1}})};
  c.target = m == 1 ? QuotientTarget{QuotientTarget::Shape::Point, 1} : QuotientTarget{QuotientTarget::Shape::Jet, m};
  for (int j = 0; j < m; ++j) c.functional.push_back(form({{0, j, 1 + kA}, {1, j, -kA}}));
  c.action = {ActionMap::Kind::JetOfBranch, 0};
  c.special_fiber = c.source;
  c.special_multiplier = elem(3, {{0, m, 1}, {1, 0, 1}, {2, 0, 1}});
  c.generic_target = GenericTarget::Ring;
  c.generic_target_module = {one(3)};
  c.generic_multiplier = delem(3, {{0, 0, RatFunc(1) / kA + 1}, {1, 0, 1}, {2, 0, 1}});
  c.note = "multipliers (t^m,1,1) and (a^-1+1,1,1); the printed (t^(m-1),1,1) and (a^-1-1,1,1) fail";
  return c;
}

std::vector<Certificate> odd_certificates(int n) {
  const std::string id = catalog::avl_id(n);
  const int m = (n + 1) / 2;
  std::vector<Certificate> out;
  {
    // Algebra map onto the dual numbers.
    Certificate c = base(id, n, 1);
    c.source = {one(3)};
    c.target = {QuotientTarget::Shape::DualNumbers, 1};
    c.functional = {form({{0, 0, 1}}),
                    form({{0, 1, 1}, {1, 1, 1}, {2, 1, kA - 2}, {0, m, -kA}, {1, m, kA}})};
    c.action = {ActionMap::Kind::AlgebraMap, 0};
    c.is_algebra_map = true;
    c.special_fiber = {one(3), elem(3, {{0, m - 1, 1}})};
    c.special_multiplier = elem(3, {{0, 1, 1}, {1, 1, 1}, {2, 1, 1}});
    c.generic_target = GenericTarget::Dualizing;
    c.generic_target_module = {elem(3, {{0, 0, 1}, {1, 0, 1}}), elem(3, {{0, m - 1, 1}, {2, 0, 1}})};
    c.generic_multiplier = delem(3, {{0, -1, kA}, {0, m - 2, -1}, {1, -1, kA}, {1, m - 2, 1}, {2, -1, kA - 2}});
    if (n == 1) c.note = "at n = 1 the claimed special fiber is not the kernel; see the ledger";
    out.push_back(std::move(c));
  }
  {
    // Algebra map onto the fat plane.
    Certificate c = base(id, n, 2);
    c.source = {one(3)};
    c.target = {QuotientTarget::Shape::FatPlane, 1};
    c.functional = {form({{0, 0, 1}}), form({{0, m, 1 + kA}, {1, m, -1 - kA}, {2, 1, -1}}),
                    form({{0, 1, 1 + kA}, {1, 1, 1 + kA}, {2, 1, -kA}})};
    c.action = {ActionMap::Kind::AlgebraMap, 0};
    c.is_algebra_map = true;
    c.special_fiber = {elem(3, {{0, 0, 1}, {1, 0, 1}}), elem(3, {{0, m - 2, 1}, {2, 0, 1}})};
    c.special_multiplier = elem(3, {{0, 2, 1}, {1, 2, 1}, {2, 1, 1}});
    c.generic_target = GenericTarget::Ring;
    c.generic_target_module = {one(3)};
    // (a + t^(m-1), a - t^(m-1), 1 + a) * (t, t, 2t)
    c.generic_multiplier = delem(3, {{0, 1, kA}, {0, m, 1}, {1, 1, kA}, {1, m, -1}, {2, 1, 2 + 2 * kA}});
    c.direction = Direction::TargetToKernel;
    if (n == 1) c.note = "at n = 1 the claimed special fiber is not the kernel; see the ledger";
    out.push_back(std::move(c));
  }
  out.push_back(odd_jet(id, n, m, 3));
  // The f <-> g swap keeps the jet target.
  out.push_back(permute_branches(odd_jet(id, n, m, 4), {1, 0, 2}, id + "#4"));
  // The f <-> h swap: the third branch is smooth and meets the others
  // transversally, so only the point target survives (no displayed formula).
  out.push_back(permute_branches(odd_jet(id, n, 1, 5), {2, 1, 0}, id + "#5"));
  out.back().note = "point target for the f <-> h swap, following the prose";
  return out;
}

}  // namespace

std::vector<Certificate> builtin_certificates(const std::vector<int>& n_values) {
  std::vector<int> ns = n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (int n : ns) {
    if (n < 1 || n > catalog::kMaxN) {
      throw UnsupportedN("n=" + std::to_string(n) + " outside 1.." + std::to_string(catalog::kMaxN));
    }
  }
  std::vector<Certificate> out;
  if (ns.empty()) return out;
  out = e_certificates();
  for (int n : ns) {
    auto more = n % 2 == 0 ? even_certificates(n) : odd_certificates(n);
    for (auto& c : more) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace curvecert::certify
