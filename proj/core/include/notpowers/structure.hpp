#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "notpowers/config.hpp"
#include "notpowers/group.hpp"
#include "notpowers/power.hpp"

namespace notpowers {

class GroupContext;

/// Frobenius decomposition G = K x| H: K is a proper nontrivial normal
/// subgroup such that no element outside K commutes with a nonidentity
/// element of K, and H is a complement (K ∩ H = 1, |K||H| = |G|).
struct FrobeniusStructure {
  Subgroup kernel;
  Subgroup complement;
};

/// The four mutually exclusive shapes a group can take once p is an odd prime
/// divisor of |G| and n = n_p(G):
///   1. |G| = n(n+1), Frobenius with kernel of order n+1
///   2. |G| = (n/2)(n+2), central extension by an involution z with G/<z>
///      Frobenius with kernel of order n/2 + 1
///   3. |G| = (n/2)(n+1), Frobenius with kernel of order n+1
///   4. |G| <= n^2/2
enum class JumpCase {
  kNone = 0,
  kFrobeniusNNplus1 = 1,
  kCentralExtHalf = 2,
  kFrobeniusHalf = 3,
  kGenericBound = 4,
};

const char* to_string(JumpCase c);

struct ClassificationOutcome {
  JumpCase jump_case = JumpCase::kNone;
  /// Set when one of the equality cases 1-3 was selected while the case-4
  /// inequality 2|G| <= n^2 holds as well (cannot happen for n >= 1, but the
  /// classifier reports it rather than assuming).
  bool ambiguous = false;
  nlohmann::json witness;
};

/// Witness for the case-2 structure: the central involution, the quotient by
/// it, and the Frobenius decomposition of that quotient (member lists use
/// quotient indices).
struct CentralInvolutionWitness {
  element_t involution = 0;
  FiniteGroup quotient;
  std::vector<element_t> projection;
  std::vector<element_t> kernel_members;
  std::vector<element_t> complement_members;
  long long quotient_n_p = 0;
};

/// A Sylow p-subgroup (the trivial subgroup when p does not divide |G|).
/// Deterministic: built by climbing normalizers from the smallest-index
/// element of maximal p-power order. Throws NotPrimeError.
Subgroup sylow_subgroup(const FiniteGroup& g, long long p);

/// O^{p'}(G): the subgroup generated by all elements of p-power order. This
/// is the smallest normal subgroup whose quotient has order prime to p.
Subgroup p_residual(const FiniteGroup& g, long long p);

/// First Frobenius decomposition found, scanning kernels and complements in
/// lattice order; nullopt if G is not a Frobenius group.
std::optional<FrobeniusStructure> frobenius_structure(const FiniteGroup& g,
                                                      const std::vector<Subgroup>& lattice);
std::optional<FrobeniusStructure> frobenius_structure(const FiniteGroup& g,
                                                      int lattice_cap = 200);

/// True iff N_k(G) consists exactly of the nonidentity elements of a
/// Frobenius kernel of order n_k(G) + 1. The whole group counts as a
/// degenerate kernel when the k-th power map collapses G to the identity
/// (that convention is what makes the bound |G| <= n(n+1) attainable at C2).
bool is_theoremB_exception(GroupContext& ctx, long long k);
bool is_theoremB_exception(const FiniteGroup& g, long long k, const Config& cfg = {});

/// Searches the center for an involution z such that G/<z> is Frobenius with
/// kernel of order n_p(G)/2 + 1 and complement of order n_p(G)/2.
std::optional<CentralInvolutionWitness> central_involution_quotient_check(GroupContext& ctx,
                                                                          long long p);
std::optional<CentralInvolutionWitness> central_involution_quotient_check(const FiniteGroup& g,
                                                                          long long p,
                                                                          const Config& cfg = {});

/// Decides which of the four JumpCase shapes G realizes for the odd prime p.
/// Requires p an odd prime (NotOddPrimeError) dividing |G|
/// (PrimeDoesNotDivideOrderError). Cases are tested in order 1, 2, 3, 4; a
/// group matching an equality without the required structure falls through,
/// and kNone (with diagnostic witness) means no case matched.
ClassificationOutcome classify_new_jumps(GroupContext& ctx, long long p);
ClassificationOutcome classify_new_jumps(const FiniteGroup& g, long long p,
                                         const Config& cfg = {});

}  // namespace notpowers
