#pragma once

#include <map>
#include <optional>
#include <vector>

#include "notpowers/config.hpp"
#include "notpowers/group.hpp"
#include "notpowers/power.hpp"
#include "notpowers/structure.hpp"

namespace notpowers {

/// Memoizes the derived data the verifier keeps asking for about one group:
/// power analyses per k, profiles per p, conjugacy classes, the subgroup
/// lattice, quotients, Sylow subgroups and the Frobenius decomposition.
/// Not thread-safe; use one context per worker. The group must outlive the
/// context.
class GroupContext {
 public:
  explicit GroupContext(const FiniteGroup& g, Config cfg = {}) : g_(&g), cfg_(std::move(cfg)) {}

  const FiniteGroup& group() const { return *g_; }
  const Config& config() const { return cfg_; }

  const PowerAnalysis& powers(long long k);
  const NonPowerProfile& profile(long long p);
  const std::vector<ConjugacyClass>& classes();
  long long exponent_value();
  const Subgroup& center_subgroup();
  const Subgroup& sylow(long long p);

  /// Throws CapExceededError when |G| > config().lattice_cap.
  const std::vector<Subgroup>& lattice();

  /// Indices into lattice() of the normal subgroups.
  const std::vector<std::size_t>& normal_indices();

  const QuotientResult& quotient_at(std::size_t lattice_index);

  /// Needs the lattice, so it can also throw CapExceededError.
  const std::optional<FrobeniusStructure>& frobenius();

 private:
  const FiniteGroup* g_;
  Config cfg_;

  std::map<long long, PowerAnalysis> powers_;
  std::map<long long, NonPowerProfile> profiles_;
  std::map<long long, Subgroup> sylows_;
  std::map<std::size_t, QuotientResult> quotients_;
  std::optional<std::vector<ConjugacyClass>> classes_;
  std::optional<long long> exponent_;
  std::optional<Subgroup> center_;
  std::optional<std::vector<Subgroup>> lattice_;
  std::optional<std::vector<std::size_t>> normal_indices_;
  std::optional<std::optional<FrobeniusStructure>> frobenius_;
};

}  // namespace notpowers
