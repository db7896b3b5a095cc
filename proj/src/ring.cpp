#include "curvecert/algebra/ring.hpp"

#include <algorithm>
#include <deque>

namespace curvecert::algebra {

SubringRep SubringRep::span(int branches, const std::vector<Element>& generators, Window window,
                            std::string name) {
  if (window.guard < 1 || window.top() < 1) throw DomainError("window needs precision > guard >= 1");
  SubringRep r;
  r.name_ = std::move(name);
  r.guard_ = window.guard;
  r.generators_ = generators;
  const int top = window.top();

  std::vector<SparseVec<Rational>> gens;
  std::vector<bool> seen(static_cast<std::size_t>(branches), false);
  for (const auto& g : generators) {
    if (g.branches() != branches) throw DomainError("generator has the wrong branch count");
    for (int b = 0; b < branches; ++b) {
      const auto& s = g.branch(b);
      if (!s.is_zero() && s.low_order() < 0) throw DomainError("ring generators must have nonnegative valuation");
      if (!s.is_zero()) seen[static_cast<std::size_t>(b)] = true;
    }
    gens.push_back(to_sparse(g, window.precision));
    truncate(gens.back(), top);
  }
  for (int b = 0; b < branches; ++b) {
    if (!seen[static_cast<std::size_t>(b)]) {
      throw DegenerateGenerators("every generator vanishes on branch " + std::to_string(b));
    }
  }

  r.basis_ = Subspace<Rational>(branches, top);
  SparseVec<Rational> one;
  for (int b = 0; b < branches; ++b) one.entries.emplace_back(make_key(0, b), Rational(1));
  std::deque<SparseVec<Rational>> work{one};
  r.basis_.insert(one);
  while (!work.empty()) {
    SparseVec<Rational> v = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) {
      SparseVec<Rational> w = multiply(v, g, top);
      if (r.basis_.insert(w)) work.push_back(std::move(w));
    }
  }
  r.finish();
  return r;
}

SubringRep SubringRep::from_subspace(Subspace<Rational> basis, int guard, std::string name) {
  SubringRep r;
  r.name_ = std::move(name);
  r.guard_ = guard;
  r.basis_ = std::move(basis);
  if (r.basis_.low() < 0) throw DomainError("a subring cannot contain negative powers of t");
  SparseVec<Rational> one;
  for (int b = 0; b < r.basis_.branches(); ++b) one.entries.emplace_back(make_key(0, b), Rational(1));
  if (!r.basis_.contains(one)) throw DomainError("subspace does not contain 1");
  r.finish();
  return r;
}

void SubringRep::finish() {
  conductor_.clear();
  for (int b = 0; b < branches(); ++b) {
    const int c = basis_.saturation(b);
    if (top() - c < guard_) {
      throw NoStabilization("branch " + std::to_string(b) + " saturates only at t^" + std::to_string(c) +
                            " with window top t^" + std::to_string(top()) + "; raise the precision");
    }
    conductor_.push_back(c);
  }
}

bool contains(const SubringRep& r, const Element& x) {
  if (x.branches() != r.branches()) throw DomainError("branch count mismatch");
  return r.basis().contains(to_sparse(x, r.top()));
}

int delta_invariant(const SubringRep& r) { return r.branches() * r.top() - r.basis().dim(); }

int conductor_length(const SubringRep& r) {
  int s = 0;
  for (int c : r.conductor()) s += c;
  return s;
}

Subspace<Rational> maximal_ideal(const SubringRep& r) {
  Subspace<Rational> m(r.branches(), r.top());
  for (const auto& [k, row] : r.basis().rows()) {
    if (key_exp(k) >= 1) m.insert(row);
  }
  return m;
}

std::vector<SparseVec<Rational>> module_generators(const Subspace<Rational>& v, const SubringRep& r) {
  std::vector<SparseVec<Rational>> out;
  std::vector<int> sat(static_cast<std::size_t>(v.branches()));
  for (int b = 0; b < v.branches(); ++b) sat[static_cast<std::size_t>(b)] = v.saturation(b);
  for (const auto& [k, row] : v.rows()) {
    if (key_exp(k) < sat[static_cast<std::size_t>(key_branch(k))]) out.push_back(row);
  }
  // Every e_b t^j with j >= c_b lies in R, so a run of c_b monomials above the
  // saturation point generates the rest of the tail.
  for (int b = 0; b < v.branches(); ++b) {
    const int s = sat[static_cast<std::size_t>(b)];
    const int run = std::max(1, r.conductor()[static_cast<std::size_t>(b)]);
    for (int e = s; e < std::min(v.top(), s + run); ++e) out.push_back(SparseVec<Rational>::unit(make_key(e, b)));
  }
  return out;
}

Subspace<Rational> product_span(const std::vector<SparseVec<Rational>>& xs, const Subspace<Rational>& v) {
  const int top = v.top();
  Subspace<Rational> out(v.branches(), top);
  for (const auto& x : xs) {
    for (const auto& [k, row] : v.rows()) {
      if (key_exp(x.pivot()) + key_exp(k) >= top) continue;
      out.insert(multiply(x, row, top));
    }
  }
  for (int b = 0; b < v.branches(); ++b) {
    int lo = std::min(0, v.low(b));
    for (const auto& x : xs) lo = std::min(lo, branch_low(x, b, 0));
    for (int e = top + lo; e < top; ++e) out.insert_monomial(b, e);
  }
  return out;
}

int embedding_dimension(const SubringRep& r) {
  Subspace<Rational> m = maximal_ideal(r);
  Subspace<Rational> m2 = product_span(module_generators(m, r), m);
  return m.dim() - m2.dim();
}

std::vector<std::vector<int>> local_blocks(const SubringRep& r) {
  std::vector<std::vector<int>> blocks;
  for (const auto& [k, row] : r.basis().rows()) {
    if (key_exp(k) != 0) break;
    std::vector<int> support;
    for (const auto& [kk, c] : row.entries) {
      if (key_exp(kk) == 0) support.push_back(key_branch(kk));
    }
    blocks.push_back(std::move(support));
  }
  return blocks;
}

bool is_local(const SubringRep& r) { return local_blocks(r).size() == 1; }

SubringRep project(const SubringRep& r, const std::vector<int>& branches) {
  std::vector<int> index(static_cast<std::size_t>(r.branches()), -1);
  for (std::size_t i = 0; i < branches.size(); ++i) index[static_cast<std::size_t>(branches[i])] = static_cast<int>(i);
  Subspace<Rational> out(static_cast<int>(branches.size()), r.top());
  for (const auto& [k, row] : r.basis().rows()) {
    std::map<Key, Rational> m;
    for (const auto& [kk, c] : row.entries) {
      const int nb = index[static_cast<std::size_t>(key_branch(kk))];
      if (nb >= 0) m.emplace(make_key(key_exp(kk), nb), c);
    }
    out.insert(SparseVec<Rational>::from_map(std::move(m)));
  }
  return SubringRep::from_subspace(std::move(out), r.guard());
}

BranchSemigroup branch_semigroup(const SubringRep& r, int branch) {
  SubringRep p = project(r, {branch});
  BranchSemigroup s;
  s.conductor = p.conductor()[0];
  for (const auto& [k, row] : p.basis().rows()) {
    if (key_exp(k) < s.conductor) s.values.push_back(key_exp(k));
  }
  return s;
}

Subspace<Rational> restrict_window(const Subspace<Rational>& v, int top) {
  Subspace<Rational> out(v.branches(), top);
  for (const auto& [k, row] : v.rows()) {
    if (key_exp(k) < top) out.insert(row);
  }
  return out;
}

}  // namespace curvecert::algebra
