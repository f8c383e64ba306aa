#include "notpowers/context.hpp"

namespace notpowers {

const PowerAnalysis& GroupContext::powers(long long k) {
  auto it = powers_.find(k);
  if (it == powers_.end()) it = powers_.emplace(k, analyze_powers(*g_, k)).first;
  return it->second;
}

const NonPowerProfile& GroupContext::profile(long long p) {
  auto it = profiles_.find(p);
  if (it == profiles_.end()) it = profiles_.emplace(p, non_power_profile(*g_, p)).first;
  return it->second;
}

const std::vector<ConjugacyClass>& GroupContext::classes() {
  if (!classes_) classes_ = conjugacy_classes(*g_);
  return *classes_;
}

long long GroupContext::exponent_value() {
  if (!exponent_) exponent_ = exponent(*g_);
  return *exponent_;
}

const Subgroup& GroupContext::center_subgroup() {
  if (!center_) center_ = center(*g_);
  return *center_;
}

const Subgroup& GroupContext::sylow(long long p) {
  auto it = sylows_.find(p);
  if (it == sylows_.end()) it = sylows_.emplace(p, sylow_subgroup(*g_, p)).first;
  return it->second;
}

const std::vector<Subgroup>& GroupContext::lattice() {
  if (!lattice_) lattice_ = all_subgroups(*g_, cfg_.lattice_cap);
  return *lattice_;
}

const std::vector<std::size_t>& GroupContext::normal_indices() {
  if (!normal_indices_) {
    const auto& lat = lattice();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lat.size(); ++i)
      if (is_normal(*g_, lat[i])) idx.push_back(i);
    normal_indices_ = std::move(idx);
  }
  return *normal_indices_;
}

const QuotientResult& GroupContext::quotient_at(std::size_t lattice_index) {
  auto it = quotients_.find(lattice_index);
  if (it == quotients_.end())
    it = quotients_.emplace(lattice_index, quotient(*g_, lattice().at(lattice_index))).first;
  return it->second;
}

const std::optional<FrobeniusStructure>& GroupContext::frobenius() {
  if (!frobenius_) frobenius_ = frobenius_structure(*g_, lattice());
  return *frobenius_;
}

}  // namespace notpowers
