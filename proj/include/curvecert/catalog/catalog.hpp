#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "curvecert/algebra/ring.hpp"
#include "curvecert/modules/module.hpp"

namespace curvecert::catalog {

using algebra::Element;
using algebra::RingPtr;
using algebra::SubringRep;
using algebra::Window;

enum class EntryKind { Ring, Module };

struct CatalogEntry {
  std::string id;
  EntryKind kind = EntryKind::Ring;
  std::string ring_id;  // parent ring, module entries only
  int branches = 1;
  std::vector<Element> generators;
  std::string presentation;               // display form, e.g. "R + R*(t^2,0)"
  std::vector<std::string> expected_end;  // several ids: product ring
  bool is_ring_flag = false;
  bool is_dualizing_flag = false;
  bool table1 = false;  // ring entries: non-planar finite-type singularity
  int subdivision = 0;  // module entries: block within the ring's table
};

/// Local invariants used to recognise a germ.
struct Fingerprint {
  int branches = 0;
  int delta = 0;
  int embdim = 0;
  int e = 0;
  std::vector<algebra::BranchSemigroup> semigroups;  // sorted
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

std::string to_string(const Fingerprint& f);

/// Fingerprint of a local ring. Throws DomainError for product rings.
Fingerprint local_fingerprint(const SubringRep& r);

/// One fingerprint per local factor, sorted.
std::vector<Fingerprint> fingerprint(const SubringRep& r);

inline constexpr int kMaxN = 8;

/// Catalog identifiers of the parameterised families.
std::string avl_id(int k);  // A_k v L; k = 0 is the node A1
std::string a_id(int k);    // A_k; k = 0 is the smooth branch
std::string join_ids(const std::vector<std::string>& ids);

/// Table 1 at the requested n plus the ADE rings A_k (k up to max(max n, 2))
/// and the smooth branch. Throws UnsupportedN outside 1..8.
std::vector<CatalogEntry> catalog_rings(const std::vector<int>& n_values);

/// Table 2 module rows for every Table 1 ring at the requested n.
std::vector<CatalogEntry> catalog_modules(const std::vector<int>& n_values);

/// Ring entries with their spans and fingerprints, pairwise distinct.
class Catalog {
 public:
  /// Throws AmbiguousFingerprint when two ids share a fingerprint.
  Catalog(std::vector<CatalogEntry> rings, Window window);

  /// Built-in catalog large enough to name every End ring of Table 2 at n_values.
  static Catalog reference(const std::vector<int>& n_values, Window window);

  [[nodiscard]] const std::vector<CatalogEntry>& entries() const { return entries_; }
  [[nodiscard]] const CatalogEntry& entry(const std::string& id) const;
  [[nodiscard]] bool has(const std::string& id) const { return index_.count(id) != 0; }
  [[nodiscard]] RingPtr ring(const std::string& id) const;
  [[nodiscard]] const Fingerprint& fingerprint_of(const std::string& id) const;
  [[nodiscard]] Window window() const { return window_; }

  /// Catalog id whose fingerprint matches the local ring, or "Unknown".
  [[nodiscard]] std::string classify_local(const SubringRep& r) const;
  /// Ids of the local factors (sorted like their fingerprints).
  [[nodiscard]] std::vector<std::string> classify(const SubringRep& r) const;

  /// Sorted fingerprint list of a product of catalog rings.
  [[nodiscard]] std::vector<Fingerprint> expected_fingerprint(const std::vector<std::string>& ids) const;

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t> index_;
  std::vector<RingPtr> rings_;
  std::vector<Fingerprint> fingerprints_;
  Window window_;
};

RingPtr build_ring(const CatalogEntry& e, Window window);

/// Display form of a generator list, e.g. "R + R*(t^2,0)".
std::string describe_generators(const std::vector<Element>& gens);

/// Singular id or ring classification for the components command.
struct ComponentReport {
  std::string id;
  int components = 0;
  bool smoothable_only = false;
  std::string non_smoothable_description;
};

/// Throws NotApplicable for product ids or ids outside the catalog's scope.
ComponentReport component_report(const std::string& id, const Catalog& catalog);

struct Table2Row {
  std::string ring_id;
  std::string presentation;
  int subdivision = 0;
  std::vector<std::string> expected_end;
  std::vector<std::string> computed_end;
  int end_delta = 0;
  bool end_matches = false;
  bool ring_flag = false;       // printed flag
  bool dualizing_flag = false;  // printed flag
  bool flag_verified = false;   // printed flag witnessed by an isomorphism
  bool other_flag_refuted = true;
  std::string detail;
  std::shared_ptr<const SubringRep> end_ring;
  int ring_delta = 0;
  [[nodiscard]] bool pass() const { return end_matches && flag_verified && other_flag_refuted; }
};

/// Checks one Table 2 row; randomness only in the isomorphism search.
Table2Row verify_table2_row(const CatalogEntry& module, const Catalog& catalog, std::uint64_t seed);

}  // namespace curvecert::catalog
