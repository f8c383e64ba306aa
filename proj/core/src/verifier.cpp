#include "notpowers/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "notpowers/arith.hpp"
#include "notpowers/structure.hpp"

namespace notpowers {

namespace {

using json = nlohmann::json;

CheckResult make_result(GroupContext& ctx, const char* id, std::optional<long long> param,
                        CheckStatus status, json witness) {
  return CheckResult{id, ctx.group().label(), param, status, std::move(witness)};
}

CheckResult divisible_impl(GroupContext& ctx, long long p) {
  const long long n = ctx.powers(p).n_k;
  json w{{"p", p}, {"n_p", n}};
  bool ok = n % (p - 1) == 0;
  return make_result(ctx, "divisible", p, ok ? CheckStatus::kPass : CheckStatus::kFail,
                     std::move(w));
}

CheckResult subgroup_monotonicity_impl(GroupContext& ctx, long long p) {
  const auto& lattice = ctx.lattice();
  const PowerAnalysis& full = ctx.powers(p);
  long long equal_sets = 0;
  for (const Subgroup& h : lattice) {
    PowerAnalysis sub = analyze_powers_in_subgroup(ctx.group(), h, p);
    json w{{"p", p},
           {"subgroup_order", h.order()},
           {"subgroup_members", h.members()},
           {"n_p_subgroup", sub.n_k},
           {"n_p_group", full.n_k}};
    if (sub.n_k > full.n_k)
      return make_result(ctx, "subgroup_monotonicity", p, CheckStatus::kFail, std::move(w));
    const bool count_equal = sub.n_k == full.n_k;
    const bool set_equal = sub.non_powers == full.non_powers;
    if (count_equal != set_equal) {
      w["count_equal"] = count_equal;
      w["set_equal"] = set_equal;
      return make_result(ctx, "subgroup_monotonicity", p, CheckStatus::kFail, std::move(w));
    }
    if (count_equal) ++equal_sets;
  }
  return make_result(ctx, "subgroup_monotonicity", p, CheckStatus::kPass,
                     {{"p", p},
                      {"subgroups", (long long)lattice.size()},
                      {"equality_subgroups", equal_sets}});
}

CheckResult sylow_restricts_impl(GroupContext& ctx, long long p) {
  const auto& lattice = ctx.lattice();
  const PowerAnalysis& full = ctx.powers(p);
  const Subgroup residual = p_residual(ctx.group(), p);
  long long matched = 0;
  for (const Subgroup& h : lattice) {
    PowerAnalysis sub = analyze_powers_in_subgroup(ctx.group(), h, p);
    if (sub.n_k != full.n_k) continue;
    ++matched;
    for (element_t x : residual.members()) {
      if (!h.contains(x)) {
        return make_result(ctx, "sylow_restricts", p, CheckStatus::kFail,
                           {{"p", p},
                            {"subgroup_order", h.order()},
                            {"subgroup_members", h.members()},
                            {"residual_order", residual.order()},
                            {"missing_element", x}});
      }
    }
  }
  return make_result(ctx, "sylow_restricts", p, CheckStatus::kPass,
                     {{"p", p}, {"matching_subgroups", matched},
                      {"residual_order", residual.order()}});
}

CheckResult center_bound_impl(GroupContext& ctx, long long p) {
  const long long z = ctx.center_subgroup().order();
  if (z % p != 0)
    return make_result(ctx, "center_bound", p, CheckStatus::kNotApplicable,
                       {{"p", p}, {"center_order", z}, {"reason", "p does not divide |Z(G)|"}});
  const long long g = ctx.group().order();
  const long long n = ctx.powers(p).n_k;
  json w{{"p", p}, {"center_order", z}, {"n_p", n}};
  if (g * (p - 1) > p * n) return make_result(ctx, "center_bound", p, CheckStatus::kFail, std::move(w));
  if (g * (p - 1) == p * n) {
    const Subgroup& s = ctx.sylow(p);
    bool normal = is_normal(ctx.group(), s);
    bool cyclic = false;
    for (element_t x : s.members()) cyclic = cyclic || ctx.group().element_order(x) == s.order();
    w["equality"] = true;
    w["sylow_order"] = s.order();
    w["sylow_normal"] = normal;
    w["sylow_cyclic"] = cyclic;
    return make_result(ctx, "center_bound", p,
                       normal && cyclic ? CheckStatus::kPass : CheckStatus::kFail, std::move(w));
  }
  w["equality"] = false;
  return make_result(ctx, "center_bound", p, CheckStatus::kPass, std::move(w));
}

CheckResult quotient_ratio_impl(GroupContext& ctx, long long k) {
  const auto& lattice = ctx.lattice();
  const auto& normals = ctx.normal_indices();
  const PowerAnalysis& full = ctx.powers(k);
  const FiniteGroup& g = ctx.group();
  std::vector<char> in_image(g.order(), 0);
  for (element_t x : full.power_image) in_image[x] = 1;

  for (std::size_t idx : normals) {
    const Subgroup& n = lattice[idx];
    const QuotientResult& q = ctx.quotient_at(idx);
    const PowerAnalysis qa = analyze_powers(q.group, k);
    const long long lhs = qa.n_k * g.order();
    const long long rhs = full.n_k * (long long)q.group.order();
    json w{{"k", k},
           {"normal_order", n.order()},
           {"n_k_quotient", qa.n_k},
           {"n_k_group", full.n_k}};
    if (lhs > rhs) return make_result(ctx, "quotient_ratio", k, CheckStatus::kFail, std::move(w));
    bool image_is_coset_union = true;
    for (element_t zz : full.power_image) {
      for (element_t m : n.members()) {
        if (!in_image[g.mul(zz, m)]) {
          image_is_coset_union = false;
          break;
        }
      }
      if (!image_is_coset_union) break;
    }
    if ((lhs == rhs) != image_is_coset_union) {
      w["equality"] = lhs == rhs;
      w["image_is_coset_union"] = image_is_coset_union;
      return make_result(ctx, "quotient_ratio", k, CheckStatus::kFail, std::move(w));
    }
  }
  return make_result(ctx, "quotient_ratio", k, CheckStatus::kPass,
                     {{"k", k}, {"normal_subgroups", (long long)normals.size()}});
}

CheckResult pgroup_bound_impl(GroupContext& ctx, long long p) {
  const long long g = ctx.group().order();
  if (g == 1 || !is_prime_power_of(g, p))
    return make_result(ctx, "pgroup_bound", p, CheckStatus::kNotApplicable,
                       {{"p", p}, {"reason", "|G| is not a nontrivial power of p"}});
  const int m = p_valuation(g, p);
  const long long n = ctx.powers(p).n_k;
  bool cyclic = false;
  for (int x = 0; x < g && !cyclic; ++x) cyclic = ctx.group().element_order(x) == g;
  json w{{"p", p}, {"m", m}, {"n_p", n}, {"cyclic", cyclic}};
  bool ok = cyclic ? n == g - g / p : n >= g - g / (p * p);
  return make_result(ctx, "pgroup_bound", p, ok ? CheckStatus::kPass : CheckStatus::kFail,
                     std::move(w));
}

CheckResult propagation_impl(GroupContext& ctx, long long p) {
  const NonPowerProfile& prof = ctx.profile(p);
  const PSingularData data = p_singular_data(ctx.group(), p);
  json w{{"p", p},
         {"m", prof.length},
         {"orders_y", data.orders_y},
         {"residues_x", data.residues_x}};
  bool ok = prof.n_p == 0 ? data.orders_y.empty()
                          : (long long)data.residues_x.size() <= prof.length;
  return make_result(ctx, "propagation", p, ok ? CheckStatus::kPass : CheckStatus::kFail,
                     std::move(w));
}

CheckResult theoremB_impl(GroupContext& ctx, long long k) {
  const long long n = ctx.powers(k).n_k;
  const long long g = ctx.group().order();
  json w{{"k", k}, {"n_k", n}};
  if (n == 0)
    return make_result(ctx, "theoremB", k, CheckStatus::kNotApplicable,
                       {{"k", k}, {"reason", "k-th power map is surjective"}});
  if (g > n * (n + 1))
    return make_result(ctx, "theoremB", k, CheckStatus::kFail, std::move(w));
  if (g <= n * n) {
    w["branch"] = "n_squared";
    return make_result(ctx, "theoremB", k, CheckStatus::kPass, std::move(w));
  }
  w["branch"] = "exception_zone";
  bool exceptional = is_theoremB_exception(ctx, k);
  w["frobenius_exception"] = exceptional;
  return make_result(ctx, "theoremB", k,
                     exceptional ? CheckStatus::kPass : CheckStatus::kFail, std::move(w));
}

CheckResult newbound_impl(GroupContext& ctx, long long) {
  const long long g = ctx.group().order();
  bool cyclic4 = false;
  if (g == 4)
    for (int x = 0; x < 4; ++x) cyclic4 = cyclic4 || ctx.group().element_order(x) == 4;
  std::vector<long long> attained;
  bool ok = true;
  for (long long k = 1; k <= ctx.exponent_value(); ++k) {
    const long long n = ctx.powers(k).n_k;
    if (n > 0 && g == n * n) {
      attained.push_back(k);
      if (!cyclic4 || k % 4 != 2) ok = false;
    }
  }
  return make_result(ctx, "newbound", std::nullopt,
                     ok ? CheckStatus::kPass : CheckStatus::kFail,
                     {{"attained_at", attained}, {"order", g}});
}

CheckResult length_bounds_impl(GroupContext& ctx, long long p) {
  const long long n = ctx.powers(p).n_k;
  if (n == 0)
    return make_result(ctx, "length_bounds", p, CheckStatus::kNotApplicable,
                       {{"p", p}, {"reason", "no non-powers for p"}});
  const NonPowerProfile& prof = ctx.profile(p);
  const long long m = prof.length;
  const long long g = ctx.group().order();
  json w{{"p", p}, {"m", m}, {"type", prof.type}};
  if (g == n * n) {
    w["at_n_squared"] = true;
    if (!(m == 1 || (p == 2 && m == 2)))
      return make_result(ctx, "length_bounds", p, CheckStatus::kFail, std::move(w));
  }
  if (2 * g > n * n) {
    w["above_half_n_squared"] = true;
    if (!(m <= 2 || (p == 2 && m <= 3)))
      return make_result(ctx, "length_bounds", p, CheckStatus::kFail, std::move(w));
    if (p != 2) {
      bool shape_ok =
          (m == 1 && prof.type[0] == p) ||
          (m == 2 && prof.type[0] == p &&
           (prof.type[1] == p || (prof.type[1] % p == 0 && is_prime(prof.type[1] / p))));
      if (!shape_ok) {
        w["odd_shape_violation"] = true;
        return make_result(ctx, "length_bounds", p, CheckStatus::kFail, std::move(w));
      }
    }
  }
  return make_result(ctx, "length_bounds", p, CheckStatus::kPass, std::move(w));
}

CheckResult exponent_bound_impl(GroupContext& ctx, long long p) {
  int kmax = 0;
  for (int x = 0; x < ctx.group().order(); ++x)
    kmax = std::max(kmax, p_valuation(ctx.group().element_order(x), p));
  if (kmax < 2)
    return make_result(ctx, "exponent_bound", p, CheckStatus::kNotApplicable,
                       {{"p", p}, {"k_max", kmax}});
  const long long n = ctx.powers(p).n_k;
  const long long g = ctx.group().order();
  long long scale = 1;
  for (int i = 0; i < kmax - 2; ++i) scale *= p;
  json w{{"p", p}, {"k_max", kmax}, {"n_p", n}};
  bool ok = g * scale * (p - 1) <= n * n;
  return make_result(ctx, "exponent_bound", p, ok ? CheckStatus::kPass : CheckStatus::kFail,
                     std::move(w));
}

CheckResult odd_type1_impl(GroupContext& ctx, long long p) {
  if (p == 2)
    return make_result(ctx, "odd_type1", p, CheckStatus::kNotApplicable,
                       {{"p", p}, {"reason", "odd primes only"}});
  const NonPowerProfile& prof = ctx.profile(p);
  if (prof.n_p == 0 || prof.length != 1 || prof.type[0] != p)
    return make_result(ctx, "odd_type1", p, CheckStatus::kNotApplicable,
                       {{"p", p}, {"type", prof.type}, {"reason", "type is not (p)"}});
  const long long n = prof.n_p;
  const long long g = ctx.group().order();
  json w{{"p", p}, {"n_p", n}, {"order", g}};
  if (g == n * (n + 1)) {
    w["branch"] = "frobenius_size";
    return make_result(ctx, "odd_type1", p, CheckStatus::kPass, std::move(w));
  }
  w["branch"] = "third_bound";
  bool ok = 3 * g <= n * (n + 1);
  return make_result(ctx, "odd_type1", p, ok ? CheckStatus::kPass : CheckStatus::kFail,
                     std::move(w));
}

CheckResult odd_type2_impl(GroupContext& ctx, long long p) {
  if (p == 2)
    return make_result(ctx, "odd_type2", p, CheckStatus::kNotApplicable,
                       {{"p", p}, {"reason", "odd primes only"}});
  const NonPowerProfile& prof = ctx.profile(p);
  const long long n = prof.n_p;
  const long long g = ctx.group().order();
  if (n == 0 || prof.length != 2 || 2 * g <= n * n)
    return make_result(ctx, "odd_type2", p, CheckStatus::kNotApplicable,
                       {{"p", p}, {"type", prof.type},
                        {"reason", "needs length 2 and |G| > n^2/2"}});
  json w{{"p", p}, {"n_p", n}, {"order", g}, {"type", prof.type}};
  if (prof.type[0] == p && prof.type[1] == p) {
    bool size_ok = 2 * g == n * (n + 1);
    bool frobenius_ok = size_ok && (ctx.frobenius().has_value() || n == g - 1);
    w["shape"] = "(p,p)";
    w["size_ok"] = size_ok;
    w["frobenius"] = frobenius_ok;
    return make_result(ctx, "odd_type2", p,
                       size_ok && frobenius_ok ? CheckStatus::kPass : CheckStatus::kFail,
                       std::move(w));
  }
  if (prof.type[0] == p && prof.type[1] == 2 * p) {
    bool size_ok = 2 * g == n * (n + 2);
    bool quotient_ok = size_ok && central_involution_quotient_check(ctx, p).has_value();
    w["shape"] = "(p,2p)";
    w["size_ok"] = size_ok;
    w["central_involution_quotient"] = quotient_ok;
    return make_result(ctx, "odd_type2", p,
                       size_ok && quotient_ok ? CheckStatus::kPass : CheckStatus::kFail,
                       std::move(w));
  }
  w["shape"] = "unexpected";
  return make_result(ctx, "odd_type2", p, CheckStatus::kFail, std::move(w));
}

CheckResult new_jumps_impl(GroupContext& ctx, long long p) {
  if (p == 2)
    return make_result(ctx, "new_jumps", p, CheckStatus::kNotApplicable,
                       {{"p", p}, {"reason", "odd primes only"}});
  ClassificationOutcome outcome = classify_new_jumps(ctx, p);
  return make_result(ctx, "new_jumps", p,
                     outcome.jump_case != JumpCase::kNone ? CheckStatus::kPass
                                                          : CheckStatus::kFail,
                     std::move(outcome.witness));
}

CheckResult frobenius_solution_impl(GroupContext& ctx, long long) {
  const FiniteGroup& g = ctx.group();
  long long checked = 0;
  for (long long m = 1; m <= g.order(); ++m) {
    if (g.order() % m != 0) continue;
    ++checked;
    long long count = 0;
    for (int x = 0; x < g.order(); ++x)
      if (m % g.element_order(x) == 0) ++count;
    if (count % m != 0)
      return make_result(ctx, "frobenius_solution", std::nullopt, CheckStatus::kFail,
                         {{"m", m}, {"solutions", count}});
  }
  return make_result(ctx, "frobenius_solution", std::nullopt, CheckStatus::kPass,
                     {{"divisors_checked", checked}});
}

struct CheckImpl {
  CheckInfo info;
  CheckResult (*fn)(GroupContext&, long long);
};

const std::vector<CheckImpl>& impls() {
  static const std::vector<CheckImpl> table = {
      {{"divisible", CheckParamKind::kPrimeDivisor, "(p-1) divides n_p(G)"}, divisible_impl},
      {{"subgroup_monotonicity", CheckParamKind::kPrimeDivisor,
        "n_p(H) <= n_p(G), equal only when N_p(H) = N_p(G)"},
       subgroup_monotonicity_impl},
      {{"sylow_restricts", CheckParamKind::kPrimeDivisor,
        "n_p(H) = n_p(G) forces O^{p'}(G) <= H"},
       sylow_restricts_impl},
      {{"center_bound", CheckParamKind::kPrimeDivisor,
        "p | |Z(G)| gives |G| <= p*n_p/(p-1); equality means normal cyclic Sylow"},
       center_bound_impl},
      {{"quotient_ratio", CheckParamKind::kPowerExponent,
        "non-power density never rises in quotients; equality iff G^k is a union of N-cosets"},
       quotient_ratio_impl},
      {{"pgroup_bound", CheckParamKind::kPrimeDivisor,
        "p-groups: n_p = p^m - p^{m-1} when cyclic, else n_p >= p^m - p^{m-2}"},
       pgroup_bound_impl},
      {{"propagation", CheckParamKind::kPrimeDivisor,
        "distinct p-free parts of p-singular orders number at most m"},
       propagation_impl},
      {{"theoremB", CheckParamKind::kPowerExponent,
        "|G| <= n_k(n_k+1), with only Frobenius kernels above n_k^2"},
       theoremB_impl},
      {{"newbound", CheckParamKind::kGroupOnly,
        "|G| = n_k^2 happens only for C4 with k = 2 (mod 4)"},
       newbound_impl},
      {{"length_bounds", CheckParamKind::kPrimeDivisor,
        "class-count limits for N_p at |G| = n^2 and above n^2/2"},
       length_bounds_impl},
      {{"exponent_bound", CheckParamKind::kPrimeDivisor,
        "elements of order p^k force |G| <= n^2 / (p^{k-2}(p-1))"},
       exponent_bound_impl},
      {{"odd_type1", CheckParamKind::kPrimeDivisor,
        "type (p): |G| = n(n+1) or |G| <= n(n+1)/3"},
       odd_type1_impl},
      {{"odd_type2", CheckParamKind::kPrimeDivisor,
        "length 2 above n^2/2 means (p,p) Frobenius size or (p,2p) central extension"},
       odd_type2_impl},
      {{"new_jumps", CheckParamKind::kPrimeDivisor,
        "every group lands in one of the four boundary cases"},
       new_jumps_impl},
      {{"frobenius_solution", CheckParamKind::kGroupOnly,
        "m divides #{x : x^m = 1} for every divisor m of |G|"},
       frobenius_solution_impl},
  };
  return table;
}

const CheckImpl* find_impl(const std::string& id) {
  for (const CheckImpl& impl : impls())
    if (impl.info.id == id) return &impl;
  return nullptr;
}

CheckResult run_impl(GroupContext& ctx, const CheckImpl& impl, std::optional<long long> param) {
  try {
    return impl.fn(ctx, param.value_or(0));
  } catch (const CapExceededError& e) {
    return CheckResult{impl.info.id, ctx.group().label(), param, CheckStatus::kSkipped,
                       json{{"reason", e.what()}, {"cap", e.limit}}};
  }
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kSkipped: return "SKIPPED";
    case CheckStatus::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "FAIL";
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const CheckImpl& impl : impls()) out.push_back(impl.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const CheckInfo& info : check_registry()) ids.push_back(info.id);
  return ids;
}

CheckResult run_check(GroupContext& ctx, const std::string& check_id,
                      std::optional<long long> param) {
  const CheckImpl* impl = find_impl(check_id);
  if (!impl) throw InvalidParametersError("unknown check '" + check_id + "'");
  return run_impl(ctx, *impl, param);
}

CheckResult check_divisible(GroupContext& ctx, long long p) { return run_check(ctx, "divisible", p); }
CheckResult check_subgroup_monotonicity(GroupContext& ctx, long long p) {
  return run_check(ctx, "subgroup_monotonicity", p);
}
CheckResult check_sylow_restricts(GroupContext& ctx, long long p) {
  return run_check(ctx, "sylow_restricts", p);
}
CheckResult check_center_bound(GroupContext& ctx, long long p) {
  return run_check(ctx, "center_bound", p);
}
CheckResult check_quotient_ratio(GroupContext& ctx, long long k) {
  return run_check(ctx, "quotient_ratio", k);
}
CheckResult check_pgroup_bound(GroupContext& ctx, long long p) {
  return run_check(ctx, "pgroup_bound", p);
}
CheckResult check_propagation(GroupContext& ctx, long long p) {
  return run_check(ctx, "propagation", p);
}
CheckResult check_theoremB(GroupContext& ctx, long long k) { return run_check(ctx, "theoremB", k); }
CheckResult check_newbound(GroupContext& ctx) { return run_check(ctx, "newbound", std::nullopt); }
CheckResult check_length_bounds(GroupContext& ctx, long long p) {
  return run_check(ctx, "length_bounds", p);
}
CheckResult check_exponent_bound(GroupContext& ctx, long long p) {
  return run_check(ctx, "exponent_bound", p);
}
CheckResult check_odd_type1(GroupContext& ctx, long long p) {
  return run_check(ctx, "odd_type1", p);
}
CheckResult check_odd_type2(GroupContext& ctx, long long p) {
  return run_check(ctx, "odd_type2", p);
}
CheckResult check_new_jumps(GroupContext& ctx, long long p) {
  return run_check(ctx, "new_jumps", p);
}
CheckResult check_frobenius_solution(GroupContext& ctx) {
  return run_check(ctx, "frobenius_solution", std::nullopt);
}

bool VerificationReport::has_fail() const {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.status == CheckStatus::kFail; });
}

VerificationReport run_suite(const std::vector<FiniteGroup>& corpus,
                             const std::vector<std::string>& check_ids, const Config& cfg,
                             const std::string& corpus_description) {
  const auto start = std::chrono::steady_clock::now();
  if (corpus.empty()) throw InvalidParametersError("corpus is empty");

  std::vector<const CheckImpl*> selected;
  for (const std::string& id : check_ids) {
    const CheckImpl* impl = find_impl(id);
    if (!impl) throw InvalidParametersError("unknown check '" + id + "'");
    if (std::find(selected.begin(), selected.end(), impl) == selected.end())
      selected.push_back(impl);
  }

  std::vector<std::vector<CheckResult>> per_group(corpus.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < corpus.size();) {
      GroupContext ctx(corpus[i], cfg);
      std::vector<CheckResult>& out = per_group[i];
      for (const CheckImpl* impl : selected) {
        switch (impl->info.param_kind) {
          case CheckParamKind::kPrimeDivisor:
            for (long long p : prime_divisors(corpus[i].order()))
              out.push_back(run_impl(ctx, *impl, p));
            break;
          case CheckParamKind::kPowerExponent:
            for (long long k = 1; k <= ctx.exponent_value(); ++k)
              out.push_back(run_impl(ctx, *impl, k));
            break;
          case CheckParamKind::kGroupOnly:
            out.push_back(run_impl(ctx, *impl, std::nullopt));
            break;
        }
      }
    }
  };

  int jobs = cfg.jobs > 0 ? cfg.jobs : int(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (std::size_t(jobs) > corpus.size()) jobs = int(corpus.size());
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  VerificationReport report;
  report.config = json{{"assoc_full_check_cap", cfg.assoc_full_check_cap},
                       {"checks", [&] {
                          std::vector<std::string> ids;
                          for (const CheckImpl* impl : selected) ids.push_back(impl->info.id);
                          return ids;
                        }()},
                       {"closure_cap", cfg.closure_cap},
                       {"corpus", corpus_description.empty()
                                      ? "inline:" + std::to_string(corpus.size())
                                      : corpus_description},
                       {"lattice_cap", cfg.lattice_cap}};
  for (const FiniteGroup& g : corpus) report.corpus.emplace_back(g.label(), g.order());
  for (const CheckImpl* impl : selected) report.tallies.emplace(impl->info.id, CheckTally{});
  for (std::vector<CheckResult>& group_results : per_group) {
    for (CheckResult& r : group_results) {
      CheckTally& tally = report.tallies[r.check_id];
      switch (r.status) {
        case CheckStatus::kPass: ++tally.pass; break;
        case CheckStatus::kFail: ++tally.fail; break;
        case CheckStatus::kSkipped: ++tally.skipped; break;
        case CheckStatus::kNotApplicable: ++tally.not_applicable; break;
      }
      if (r.check_id == "new_jumps" && r.status == CheckStatus::kPass &&
          r.witness.contains("case"))
        ++tally.cases[r.witness["case"].get<long long>()];
      report.results.push_back(std::move(r));
    }
  }
  report.checks_run = (long long)report.results.size();
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace notpowers
