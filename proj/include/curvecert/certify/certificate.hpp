#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvecert/algebra/ring.hpp"
#include "curvecert/arith/terms.hpp"
#include "curvecert/modules/module.hpp"

namespace curvecert::certify {

using algebra::Element;
using algebra::Window;
using arith::DeformElement;
using arith::RatFunc;
using arith::Rational;

/// Finite-length quotient Q that the deformation maps onto.
struct QuotientTarget {
  enum class Shape { Point, DualNumbers, FatPlane, Jet };
  Shape shape = Shape::Point;
  int m = 1;  // jet order, Jet only

  [[nodiscard]] int length() const;
  friend bool operator==(const QuotientTarget&, const QuotientTarget&) = default;
};

std::string to_string(QuotientTarget::Shape s);
QuotientTarget::Shape parse_shape(const std::string& s);

/// How R acts on Q. AlgebraMap: through the functional itself (Q is a
/// quotient algebra of R). ConstantTerm: through evaluation at t = 0 on one
/// branch. JetOfBranch: through truncation mod t^length(Q) on one branch.
struct ActionMap {
  enum class Kind { AlgebraMap, ConstantTerm, JetOfBranch };
  Kind kind = Kind::ConstantTerm;
  int branch = 0;
  friend bool operator==(const ActionMap&, const ActionMap&) = default;
};

std::string to_string(ActionMap::Kind k);
ActionMap::Kind parse_action(const std::string& s);

enum class GenericTarget { Ring, Dualizing };
enum class Direction { KernelToTarget, TargetToKernel };

std::string to_string(GenericTarget g);
std::string to_string(Direction d);

/// One output coordinate of the functional: sum of coeff * x_{branch, exp}.
using LinearForm = std::vector<arith::Term<RatFunc>>;

/// A deformation phi_a : P[[a]] -> Q[[a]] together with the claimed special
/// fiber M (up to the multiplier s) and generic fiber (R or omega, up to u).
struct Certificate {
  std::string id;
  std::string ring_id;
  int branches = 1;
  std::vector<Element> ring_generators;

  std::vector<Element> source;  // generators of P over R
  QuotientTarget target;
  std::vector<LinearForm> functional;  // one form per coordinate of Q
  ActionMap action;
  bool is_algebra_map = false;

  std::vector<Element> special_fiber;  // generators of M
  Element special_multiplier;

  GenericTarget generic_target = GenericTarget::Ring;
  std::vector<Element> generic_target_module;  // R: {1}; omega: explicit presentation
  DeformElement generic_multiplier;
  Direction direction = Direction::KernelToTarget;

  std::string note;
};

/// The 29 built-in instances at the requested n (even n for A_n v L even, odd
/// n for A_n v L odd; the E rings once). Throws UnsupportedN outside 1..8.
std::vector<Certificate> builtin_certificates(const std::vector<int>& n_values);

/// Relabels branches (old b becomes perm[b]) in every piece of data except the
/// ring, which must be invariant for the result to make sense.
Certificate permute_branches(const Certificate& c, const std::vector<int>& perm, std::string id);

struct StageResult {
  int stage = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertificateReport {
  std::string id;
  std::vector<StageResult> stages;  // always all four
  [[nodiscard]] bool pass() const;
  /// 0 when every stage passed.
  [[nodiscard]] int first_failure() const;
};

/// Everything the stages share: ring, source span and functional matrices.
class CertificateContext {
 public:
  CertificateContext(const Certificate& cert, Window window);

  [[nodiscard]] const Certificate& cert() const { return cert_; }
  [[nodiscard]] const algebra::RingPtr& ring() const { return ring_; }
  [[nodiscard]] const modules::ModuleRep& source() const { return source_; }
  [[nodiscard]] int top() const { return ring_->top(); }

  /// phi_a(x) for an exact vector.
  [[nodiscard]] std::vector<RatFunc> apply(const algebra::SparseVec<Rational>& x) const;
  /// alpha(r) in Q over Q(a).
  [[nodiscard]] std::vector<RatFunc> act(const algebra::SparseVec<Rational>& r) const;
  /// Product in Q.
  [[nodiscard]] std::vector<RatFunc> q_mul(const std::vector<RatFunc>& x, const std::vector<RatFunc>& y) const;
  /// One past the largest exponent the functional reads.
  [[nodiscard]] int reach() const { return reach_; }

 private:
  Certificate cert_;
  algebra::RingPtr ring_;
  modules::ModuleRep source_;
  int reach_ = 0;
};

StageResult check_linearity(const CertificateContext& ctx);
StageResult check_surjectivity(const CertificateContext& ctx);

/// Kernel of phi_0. Throws PoleAtZero if the functional has a pole at a = 0.
modules::ModuleRep kernel_special(const CertificateContext& ctx);
/// Kernel of phi_a over Q(a), as a canonical span with the same window.
algebra::Subspace<RatFunc> kernel_generic(const CertificateContext& ctx);

StageResult check_special_fiber(const CertificateContext& ctx);
StageResult check_generic_fiber(const CertificateContext& ctx, std::uint64_t seed);

/// Runs all four stages; exceptions inside a stage become a FAIL of that stage.
CertificateReport verify_certificate(const Certificate& cert, Window window = {}, std::uint64_t seed = 0);

enum class Mutation { Functional, SpecialMultiplier, GenericMultiplier };
std::string to_string(Mutation m);
Certificate mutate(const Certificate& c, Mutation m);
int designated_stage(Mutation m);

}  // namespace curvecert::certify
