#pragma once

#include <vector>

#include "notpowers/group.hpp"

namespace notpowers {

/// Everything about the k-th power map on one group (or subgroup): its image
/// G^k, the non-powers N_k(G) = G \ G^k, their count n_k, and the root count
/// theta(x) = |{y : y^k = x}| for every element.
struct PowerAnalysis {
  long long k = 1;
  int domain_order = 0;                // |G| (or |H| for a subgroup analysis)
  std::vector<element_t> power_image;  // sorted
  std::vector<element_t> non_powers;   // sorted
  long long n_k = 0;                   // == non_powers.size()
  std::vector<long long> theta;        // indexed by parent-group element
};

/// Conjugacy-class structure of the non-powers for a prime p. N_p(G) is a
/// union of conjugacy classes; `type` lists the common element order of each
/// class, sorted ascending (ties broken by class size, then representative).
struct NonPowerProfile {
  long long p = 2;
  long long n_p = 0;
  int length = 0;                    // number of classes (the "m" in the bounds)
  std::vector<long long> type;       // element orders, one per class
  std::vector<long long> class_sizes;  // aligned with type
  std::vector<element_t> class_reps;   // aligned with type
};

/// p-singular bookkeeping: Y = distinct element orders divisible by p,
/// X = { o / p^v : o in Y } with p^v the full p-part of o.
struct PSingularData {
  std::vector<long long> orders_y;     // sorted ascending
  std::vector<long long> residues_x;   // sorted ascending, deduplicated
};

PowerAnalysis analyze_powers(const FiniteGroup& g, long long k);

/// Analysis of h as a group in its own right, but with members indexed as in
/// the parent: power_image/non_powers hold parent indices, theta is sized by
/// the parent order and zero outside h.
PowerAnalysis analyze_powers_in_subgroup(const FiniteGroup& g, const Subgroup& h, long long k);

/// Partition of `elements` by the cyclic subgroup they generate. Blocks are
/// ordered by first appearance when scanning `elements` in ascending order;
/// elements of one block generate literally the same cyclic subgroup.
std::vector<std::vector<element_t>> generator_partition(const FiniteGroup& g,
                                                        std::span<const element_t> elements);

/// Requires p prime (NotPrimeError). n_p == 0 gives an empty profile.
NonPowerProfile non_power_profile(const FiniteGroup& g, long long p);

PSingularData p_singular_data(const FiniteGroup& g, long long p);

/// Smallest prime divisor p of k with 0 < n_p(G) <= n_k(G). Requires
/// n_k(G) > 0 (InvalidParametersError); throws NoSuchPrimeError if no prime
/// divisor qualifies.
long long reduce_k_to_prime(const FiniteGroup& g, long long k);

/// Least common multiple of all element orders.
long long exponent(const FiniteGroup& g);

}  // namespace notpowers
