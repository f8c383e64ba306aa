#include "notpowers/power.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "notpowers/arith.hpp"

namespace notpowers {

namespace {

PowerAnalysis analyze_members(const FiniteGroup& g, std::span<const element_t> members,
                              long long k) {
  PowerAnalysis out;
  out.k = k;
  out.domain_order = int(members.size());
  out.theta.assign(g.order(), 0);
  for (element_t x : members) ++out.theta[power(g, x, k)];
  for (element_t x : members) {
    if (out.theta[x] > 0)
      out.power_image.push_back(x);
    else
      out.non_powers.push_back(x);
  }
  out.n_k = (long long)out.non_powers.size();
  return out;
}

}  // namespace

PowerAnalysis analyze_powers(const FiniteGroup& g, long long k) {
  if (k < 1) throw InvalidParametersError("power-map exponent k must be at least 1");
  std::vector<element_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return analyze_members(g, all, k);
}

PowerAnalysis analyze_powers_in_subgroup(const FiniteGroup& g, const Subgroup& h, long long k) {
  if (&h.parent() != &g) throw InvalidParametersError("subgroup belongs to a different group");
  if (k < 1) throw InvalidParametersError("power-map exponent k must be at least 1");
  return analyze_members(g, h.members(), k);
}

std::vector<std::vector<element_t>> generator_partition(const FiniteGroup& g,
                                                        std::span<const element_t> elements) {
  std::vector<element_t> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= g.order()))
    throw InvalidParametersError("element out of range");

  // Key each element by the sorted member list of the cyclic subgroup it
  // generates; equal keys mean literally equal subgroups.
  std::map<std::vector<element_t>, size_t> block_of;
  std::vector<std::vector<element_t>> blocks;
  for (element_t x : sorted) {
    std::vector<element_t> cyc{kIdentityElement};
    element_t y = x;
    while (y != kIdentityElement) {
      cyc.push_back(y);
      y = g.mul(y, x);
    }
    std::sort(cyc.begin(), cyc.end());
    auto [it, inserted] = block_of.try_emplace(std::move(cyc), blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(x);
  }
  return blocks;
}

NonPowerProfile non_power_profile(const FiniteGroup& g, long long p) {
  if (!is_prime(p)) throw NotPrimeError(p);
  NonPowerProfile profile;
  profile.p = p;
  PowerAnalysis pa = analyze_powers(g, p);
  profile.n_p = pa.n_k;
  if (pa.n_k == 0) return profile;

  std::vector<bool> non_power(g.order(), false);
  for (element_t x : pa.non_powers) non_power[x] = true;

  struct Entry {
    long long order;
    long long size;
    element_t rep;
  };
  std::vector<Entry> entries;
  long long covered = 0;
  for (const ConjugacyClass& cls : conjugacy_classes(g)) {
    if (!non_power[cls.representative]) continue;
    entries.push_back({(long long)cls.element_order, (long long)cls.members.size(),
                       cls.representative});
    covered += (long long)cls.members.size();
  }
  // N_p is conjugation-invariant, so it must be exactly a union of classes.
  if (covered != pa.n_k)
    throw Error("internal: non-powers are not a union of conjugacy classes");

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.size != b.size) return a.size < b.size;
    return a.rep < b.rep;
  });
  profile.length = int(entries.size());
  for (const Entry& e : entries) {
    profile.type.push_back(e.order);
    profile.class_sizes.push_back(e.size);
    profile.class_reps.push_back(e.rep);
  }
  return profile;
}

PSingularData p_singular_data(const FiniteGroup& g, long long p) {
  if (!is_prime(p)) throw NotPrimeError(p);
  PSingularData data;
  for (int x = 0; x < g.order(); ++x) {
    long long o = g.element_order(x);
    if (o % p == 0) data.orders_y.push_back(o);
  }
  std::sort(data.orders_y.begin(), data.orders_y.end());
  data.orders_y.erase(std::unique(data.orders_y.begin(), data.orders_y.end()),
                      data.orders_y.end());
  for (long long o : data.orders_y) data.residues_x.push_back(o / p_part(o, p));
  std::sort(data.residues_x.begin(), data.residues_x.end());
  data.residues_x.erase(std::unique(data.residues_x.begin(), data.residues_x.end()),
                        data.residues_x.end());
  return data;
}

long long reduce_k_to_prime(const FiniteGroup& g, long long k) {
  if (k < 1) throw InvalidParametersError("power-map exponent k must be at least 1");
  long long nk = analyze_powers(g, k).n_k;
  if (nk == 0)
    throw InvalidParametersError("reduce_k_to_prime requires n_k(G) > 0");
  for (long long p : prime_divisors(k)) {
    long long np = analyze_powers(g, p).n_k;
    if (np > 0 && np <= nk) return p;
  }
  throw NoSuchPrimeError(k);
}

long long exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int x = 0; x < g.order(); ++x) e = std::lcm(e, (long long)g.element_order(x));
  return e;
}

}  // namespace notpowers
