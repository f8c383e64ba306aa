#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "notpowers/group.hpp"

namespace notpowers {

/// A parsed family descriptor, e.g. "cyclic:12", "metacyclic_frobenius:7,6",
/// "dp:cyclic:2|dihedral:5". Direct products keep their factors in `factors`;
/// every other family uses `params`.
struct FamilySpec {
  std::string family;
  std::vector<long long> params;
  std::vector<FamilySpec> factors;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

/// Builds the group named by `spec` and labels it with the canonical spec
/// string. Families:
///   cyclic:n                 C_n, n >= 1
///   abelian:m1,m2,...        C_m1 x C_m2 x ..., each mi >= 1
///   dihedral:m               order 2m, m >= 1
///   dicyclic:m               order 4m, m >= 1 (quaternion-like; unique
///                            involution for odd m)
///   symmetric:n              S_n, 1 <= n <= 7
///   alternating:n            A_n, 1 <= n <= 7
///   metacyclic_frobenius:q,d C_q x| C_d for prime q, d > 1 dividing q-1,
///                            acting faithfully (Frobenius of order qd)
///   semidirect:n,d,t         C_n x| C_d with the generator of C_d acting as
///                            x -> t*x mod n; requires t^d = 1 (mod n),
///                            gcd(t, n) = 1
///   dp:<spec>|<spec>         direct product of two family specs
/// Throws InvalidParametersError on anything malformed.
FiniteGroup make(const FamilySpec& spec);
FiniteGroup make(std::string_view spec);

/// Deterministic corpus of built-in family members: cyclic, abelian,
/// dihedral, and dicyclic groups of order <= max_order; S_n and A_n admitted
/// while n! <= max_order; metacyclic_frobenius:q,d with q*d <= max_order;
/// then pairwise direct products of everything kept so far whose order fits.
/// Deduplicated by a cheap isomorphism fingerprint (order, element-order
/// multiset, class-size multiset); first construction wins.
/// Requires max_order >= 1.
std::vector<FiniteGroup> builtin_corpus(int max_order);

}  // namespace notpowers
