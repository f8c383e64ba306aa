#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "notpowers/errors.hpp"

namespace notpowers {

/// Group elements are dense indices into the Cayley table. The identity is
/// always element 0 (tables whose identity sits elsewhere are relabeled on
/// construction).
using element_t = std::int32_t;

inline constexpr element_t kIdentityElement = 0;

struct ValidationOptions {
  /// Orders up to this get a full O(n^3) associativity check; larger tables
  /// get a fixed number of seeded random spot checks instead.
  int assoc_full_check_cap = 512;
  int assoc_spot_checks = 1000;
};

/// A finite group given by its full multiplication table.
///
/// Construction validates the group axioms (closure, identity, inverses,
/// associativity) and precomputes inverses and element orders. Operations on
/// elements are O(1) table lookups.
class FiniteGroup {
 public:
  /// Validates `flat` (row-major, side `order`) as a group table and takes
  /// ownership of it. Throws NotClosedError, NoIdentityError, NoInverseError
  /// or NotAssociativeError.
  static FiniteGroup from_table(std::vector<element_t> flat, int order, std::string label = "",
                                const ValidationOptions& opts = {});

  int order() const { return order_; }

  element_t mul(element_t a, element_t b) const { return table_[size_t(a) * order_ + b]; }

  element_t inverse(element_t x) const { return inverse_[x]; }

  /// g^{-1} x g
  element_t conjugate(element_t g, element_t x) const { return mul(mul(inverse_[g], x), g); }

  bool commutes(element_t a, element_t b) const { return mul(a, b) == mul(b, a); }

  int element_order(element_t x) const { return element_order_[x]; }

  const std::vector<int>& element_orders() const { return element_order_; }

  bool is_abelian() const { return abelian_; }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Row-major table, identity already at index 0.
  const std::vector<element_t>& table() const { return table_; }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  bool abelian_ = false;
  std::string label_;
  std::vector<element_t> table_;
  std::vector<element_t> inverse_;
  std::vector<int> element_order_;
};

/// Generating set of permutations on {0, ..., degree-1}.
struct PermutationGenSet {
  int degree = 0;
  std::vector<std::vector<element_t>> generators;  // each a bijective image array
};

/// A subgroup of a fixed parent group, stored as a sorted member list plus a
/// membership bitmask. The parent must outlive the subgroup.
class Subgroup {
 public:
  /// Validates the member list: sorted, unique, contains the identity, closed
  /// under products and inverses, and of order dividing the parent's.
  Subgroup(const FiniteGroup& parent, std::vector<element_t> members);

  const FiniteGroup& parent() const { return *parent_; }
  int order() const { return int(members_.size()); }
  const std::vector<element_t>& members() const { return members_; }

  bool contains(element_t x) const { return (mask_[size_t(x) >> 6] >> (x & 63)) & 1; }

  bool is_whole_group() const { return order() == parent_->order(); }
  bool is_trivial() const { return order() == 1; }

  bool same_members(const Subgroup& other) const { return mask_ == other.mask_; }

 private:
  const FiniteGroup* parent_;
  std::vector<element_t> members_;
  std::vector<std::uint64_t> mask_;
};

struct ConjugacyClass {
  element_t representative = 0;     // smallest member
  std::vector<element_t> members;  // sorted ascending
  int element_order = 1;           // common order of all members
};

struct QuotientResult {
  FiniteGroup group;
  std::vector<element_t> projection;  // projection[x] = coset index of x
};

/// Validates a square Cayley table and builds the group. The outer vector must
/// have n rows of n entries each.
FiniteGroup build_from_cayley(const std::vector<std::vector<element_t>>& table,
                              std::string label = "", const ValidationOptions& opts = {});

/// Enumerates the closure of the generators under composition (BFS, identity
/// first) and builds the resulting group. Throws CapExceededError if the
/// closure grows past `closure_cap` elements.
FiniteGroup build_from_permutations(const PermutationGenSet& gens, int closure_cap = 5000,
                                    std::string label = "");

/// x^k for k >= 0 by binary exponentiation; power(G, x, 0) is the identity.
element_t power(const FiniteGroup& g, element_t x, long long k);

Subgroup center(const FiniteGroup& g);

Subgroup centralizer(const FiniteGroup& g, element_t x);

/// All conjugacy classes, ordered by smallest member; class members sorted.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// Smallest subgroup containing `generators` (empty set gives the trivial
/// subgroup).
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const element_t> generators);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// Largest subgroup in which h is normal.
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

/// G/N with cosets labeled by the smallest parent element they contain,
/// renumbered so the coset of the identity is 0. Throws NotNormalError.
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

/// Pairs (a, b) indexed as a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// N x| H for a right action of H on N by automorphisms: action[h] is the
/// image array of the automorphism attached to h in H. Pairs (n, h) are
/// indexed as n * |H| + h and multiply as
///   (n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2).
/// Throws NotAutomorphismError / ActionNotHomomorphismError on a bad action.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<element_t>>& action);

/// Every subgroup of g, sorted by (order, members lexicographically).
/// Throws CapExceededError if |g| > lattice_cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int lattice_cap = 200);

}  // namespace notpowers
