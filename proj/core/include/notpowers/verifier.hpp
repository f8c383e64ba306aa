#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "notpowers/config.hpp"
#include "notpowers/context.hpp"

namespace notpowers {

enum class CheckStatus { kPass, kFail, kSkipped, kNotApplicable };

const char* to_string(CheckStatus s);

/// One check evaluated on one group for one parameter. FAIL results always
/// carry enough witness data to reproduce the violation by hand.
struct CheckResult {
  std::string check_id;
  std::string group_label;
  std::optional<long long> param;  // the prime p or exponent k; empty for group-only checks
  CheckStatus status = CheckStatus::kPass;
  nlohmann::json witness;
};

/// How the suite parameterizes a check across one group.
enum class CheckParamKind {
  kPrimeDivisor,    // every prime dividing |G|
  kPowerExponent,   // every k in 1..exponent(G)
  kGroupOnly,       // once, no parameter
};

struct CheckInfo {
  std::string id;
  CheckParamKind param_kind;
  std::string summary;
};

/// All known checks, in canonical order (the expansion of "--checks all").
const std::vector<CheckInfo>& check_registry();
std::vector<std::string> all_check_ids();

/// Runs one check by id. CapExceededError from lattice/closure work inside
/// the check becomes a SKIPPED result rather than an exception.
CheckResult run_check(GroupContext& ctx, const std::string& check_id,
                      std::optional<long long> param);

CheckResult check_divisible(GroupContext& ctx, long long p);
CheckResult check_subgroup_monotonicity(GroupContext& ctx, long long p);
CheckResult check_sylow_restricts(GroupContext& ctx, long long p);
CheckResult check_center_bound(GroupContext& ctx, long long p);
CheckResult check_quotient_ratio(GroupContext& ctx, long long k);
CheckResult check_pgroup_bound(GroupContext& ctx, long long p);
CheckResult check_propagation(GroupContext& ctx, long long p);
CheckResult check_theoremB(GroupContext& ctx, long long k);
CheckResult check_newbound(GroupContext& ctx);
CheckResult check_length_bounds(GroupContext& ctx, long long p);
CheckResult check_exponent_bound(GroupContext& ctx, long long p);
CheckResult check_odd_type1(GroupContext& ctx, long long p);
CheckResult check_odd_type2(GroupContext& ctx, long long p);
CheckResult check_new_jumps(GroupContext& ctx, long long p);
CheckResult check_frobenius_solution(GroupContext& ctx);

struct CheckTally {
  long long pass = 0;
  long long fail = 0;
  long long skipped = 0;
  long long not_applicable = 0;
  /// For new_jumps only: how many PASS results landed in each case 1-4.
  std::map<long long, long long> cases;
};

struct VerificationReport {
  nlohmann::json config;  // echo of corpus/checks/caps (not jobs or output)
  std::vector<std::pair<std::string, int>> corpus;  // (label, order)
  std::vector<CheckResult> results;                 // every result, corpus-major
  std::map<std::string, CheckTally> tallies;
  long long checks_run = 0;
  double runtime_seconds = 0.0;  // reported in text output only

  bool has_fail() const;
};

/// Evaluates the named checks over every group in the corpus. Unknown check
/// ids throw InvalidParametersError. Groups are processed by cfg.jobs worker
/// threads (0 = hardware concurrency), but results, tallies and report
/// contents are assembled in deterministic corpus order regardless.
VerificationReport run_suite(const std::vector<FiniteGroup>& corpus,
                             const std::vector<std::string>& check_ids, const Config& cfg = {},
                             const std::string& corpus_description = "");

}  // namespace notpowers
