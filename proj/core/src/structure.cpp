#include "notpowers/structure.hpp"

#include <algorithm>

#include "notpowers/arith.hpp"
#include "notpowers/context.hpp"

namespace notpowers {

namespace {

bool is_cyclic(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

// True iff C_G(x) <= K for every nonidentity x in K, i.e. nothing outside K
// commutes with anything nontrivial inside it.
bool kernel_condition(const FiniteGroup& g, const Subgroup& k) {
  for (element_t x : k.members()) {
    if (x == kIdentityElement) continue;
    for (element_t y = 0; y < g.order(); ++y)
      if (!k.contains(y) && g.commutes(x, y)) return false;
  }
  return true;
}

bool trivial_intersection(const Subgroup& a, const Subgroup& b) {
  for (element_t x : a.members())
    if (x != kIdentityElement && b.contains(x)) return false;
  return true;
}

// N_k(G) equals the nonidentity part of `candidate_kernel`.
bool non_powers_fill_kernel(const PowerAnalysis& pa, const Subgroup& kernel) {
  if (pa.n_k != kernel.order() - 1) return false;
  return std::equal(pa.non_powers.begin(), pa.non_powers.end(), kernel.members().begin() + 1,
                    kernel.members().end());
}

}  // namespace

const char* to_string(JumpCase c) {
  switch (c) {
    case JumpCase::kFrobeniusNNplus1: return "FROBENIUS_N_NPLUS1";
    case JumpCase::kCentralExtHalf: return "CENTRAL_EXT_HALF";
    case JumpCase::kFrobeniusHalf: return "FROBENIUS_HALF";
    case JumpCase::kGenericBound: return "GENERIC_BOUND";
    case JumpCase::kNone: return "NONE";
  }
  return "NONE";
}

Subgroup sylow_subgroup(const FiniteGroup& g, long long p) {
  if (!is_prime(p)) throw NotPrimeError(p);
  const long long target = p_part(g.order(), p);
  if (target == 1) return trivial_subgroup(g);

  // Start from the smallest element of maximal p-power order, then climb:
  // a p-subgroup below Sylow size always has a p-element in its normalizer
  // that lies outside it.
  element_t seed = -1;
  long long best = 1;
  for (element_t x = 0; x < g.order(); ++x) {
    long long o = g.element_order(x);
    if (is_prime_power_of(o, p) && o > best) {
      best = o;
      seed = x;
    }
  }
  Subgroup s = subgroup_generated(g, std::vector<element_t>{seed});
  while (s.order() < target) {
    Subgroup n = normalizer(g, s);
    element_t next = -1;
    for (element_t y : n.members()) {
      if (!s.contains(y) && is_prime_power_of(g.element_order(y), p)) {
        next = y;
        break;
      }
    }
    if (next < 0) throw Error("internal: Sylow climb stalled below the p-part");
    std::vector<element_t> gens = s.members();
    gens.push_back(next);
    s = subgroup_generated(g, gens);
  }
  return s;
}

Subgroup p_residual(const FiniteGroup& g, long long p) {
  if (!is_prime(p)) throw NotPrimeError(p);
  std::vector<element_t> gens;
  for (element_t x = 1; x < g.order(); ++x)
    if (is_prime_power_of(g.element_order(x), p)) gens.push_back(x);
  return subgroup_generated(g, gens);
}

std::optional<FrobeniusStructure> frobenius_structure(const FiniteGroup& g,
                                                      const std::vector<Subgroup>& lattice) {
  for (const Subgroup& k : lattice) {
    if (k.is_trivial() || k.is_whole_group()) continue;
    if (!is_normal(g, k)) continue;
    if (!kernel_condition(g, k)) continue;
    const int comp_order = g.order() / k.order();
    for (const Subgroup& h : lattice) {
      if (h.order() != comp_order) continue;
      if (!trivial_intersection(h, k)) continue;
      return FrobeniusStructure{k, h};
    }
  }
  return std::nullopt;
}

std::optional<FrobeniusStructure> frobenius_structure(const FiniteGroup& g, int lattice_cap) {
  return frobenius_structure(g, all_subgroups(g, lattice_cap));
}

bool is_theoremB_exception(GroupContext& ctx, long long k) {
  const FiniteGroup& g = ctx.group();
  const PowerAnalysis& pa = ctx.powers(k);
  if (pa.n_k == 0) return false;
  const auto& fs = ctx.frobenius();
  if (fs) return fs->kernel.order() == pa.n_k + 1 && non_powers_fill_kernel(pa, fs->kernel);
  // Degenerate kernel: x^k = identity for all x, so N_k(G) = G \ {1}.
  return pa.n_k == g.order() - 1;
}

bool is_theoremB_exception(const FiniteGroup& g, long long k, const Config& cfg) {
  GroupContext ctx(g, cfg);
  return is_theoremB_exception(ctx, k);
}

std::optional<CentralInvolutionWitness> central_involution_quotient_check(GroupContext& ctx,
                                                                          long long p) {
  if (!is_prime(p) || p == 2) throw NotOddPrimeError(p);
  const FiniteGroup& g = ctx.group();
  const long long n = ctx.powers(p).n_k;
  if (n <= 0 || n % 2 != 0) return std::nullopt;

  for (element_t z : ctx.center_subgroup().members()) {
    if (g.element_order(z) != 2) continue;
    Subgroup zsub = subgroup_generated(g, std::vector<element_t>{z});
    QuotientResult q = quotient(g, zsub);
    auto fs = frobenius_structure(q.group, ctx.config().lattice_cap);
    if (!fs) continue;
    if (fs->kernel.order() != n / 2 + 1 || fs->complement.order() != n / 2) continue;
    long long quotient_n_p = analyze_powers(q.group, p).n_k;
    std::vector<element_t> kernel_members = fs->kernel.members();
    std::vector<element_t> complement_members = fs->complement.members();
    return CentralInvolutionWitness{z, std::move(q.group), std::move(q.projection),
                                    std::move(kernel_members), std::move(complement_members),
                                    quotient_n_p};
  }
  return std::nullopt;
}

std::optional<CentralInvolutionWitness> central_involution_quotient_check(const FiniteGroup& g,
                                                                          long long p,
                                                                          const Config& cfg) {
  GroupContext ctx(g, cfg);
  return central_involution_quotient_check(ctx, p);
}

ClassificationOutcome classify_new_jumps(GroupContext& ctx, long long p) {
  if (!is_prime(p) || p == 2) throw NotOddPrimeError(p);
  const FiniteGroup& g = ctx.group();
  if (g.order() % p != 0) throw PrimeDoesNotDivideOrderError(p, g.order());

  const long long n = ctx.powers(p).n_k;
  const long long order = g.order();
  ClassificationOutcome out;
  nlohmann::json base{{"p", p}, {"n", n}, {"order", order}};

  auto finish = [&](JumpCase c, nlohmann::json witness) {
    out.jump_case = c;
    witness.update(base);
    witness["case"] = int(c);
    witness["case_tag"] = to_string(c);
    if (c != JumpCase::kNone && c != JumpCase::kGenericBound && 2 * order <= n * n)
      out.ambiguous = true;
    witness["ambiguous"] = out.ambiguous;
    out.witness = std::move(witness);
    return out;
  };

  if (order == n * (n + 1)) {
    if (is_theoremB_exception(ctx, p)) {
      bool degenerate = !ctx.frobenius().has_value();
      return finish(JumpCase::kFrobeniusNNplus1,
                    {{"kernel_order", n + 1},
                     {"complement_order", order / (n + 1)},
                     {"degenerate", degenerate}});
    }
    base["equality_without_structure"] = "n(n+1)";
  }

  if (2 * order == n * (n + 2)) {
    if (auto w = central_involution_quotient_check(ctx, p)) {
      return finish(JumpCase::kCentralExtHalf,
                    {{"involution", w->involution},
                     {"quotient_order", w->quotient.order()},
                     {"quotient_kernel_order", (long long)w->kernel_members.size()},
                     {"quotient_complement_order", (long long)w->complement_members.size()},
                     {"quotient_n_p", w->quotient_n_p}});
    }
    base["equality_without_structure"] = "(n/2)(n+2)";
  }

  if (2 * order == n * (n + 1)) {
    // Same kernel shape as case 1, but with a complement of half the size.
    if (is_theoremB_exception(ctx, p)) {
      bool degenerate = !ctx.frobenius().has_value();
      return finish(JumpCase::kFrobeniusHalf,
                    {{"kernel_order", n + 1},
                     {"complement_order", degenerate ? 1 : (long long)(order / (n + 1))},
                     {"degenerate", degenerate}});
    }
    base["equality_without_structure"] = "(n/2)(n+1)";
  }

  if (2 * order <= n * n) return finish(JumpCase::kGenericBound, {{"bound", "2|G| <= n^2"}});

  return finish(JumpCase::kNone, {});
}

ClassificationOutcome classify_new_jumps(const FiniteGroup& g, long long p, const Config& cfg) {
  GroupContext ctx(g, cfg);
  return classify_new_jumps(ctx, p);
}

}  // namespace notpowers
