// notpowers: analyze k-th power maps in finite groups, classify the boundary
// cases, and verify the structural theorems over group corpora.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "notpowers/arith.hpp"
#include "notpowers/context.hpp"
#include "notpowers/families.hpp"
#include "notpowers/io.hpp"
#include "notpowers/verifier.hpp"

namespace np = notpowers;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Sources are "family:<spec>" or "file:<path>".
np::FiniteGroup load_source(const std::string& source, const np::Config& cfg) {
  if (source.starts_with("family:")) return np::make(source.substr(7));
  if (source.starts_with("file:")) return np::ingest_group(source.substr(5), cfg);
  throw np::InvalidParametersError("group source must start with 'family:' or 'file:', got '" +
                                   source + "'");
}

std::vector<np::FiniteGroup> load_corpus(const std::string& spec, const np::Config& cfg) {
  if (spec.starts_with("builtin:")) {
    int max_order = 0;
    try {
      max_order = std::stoi(spec.substr(8));
    } catch (const std::exception&) {
      throw np::InvalidParametersError("builtin corpus wants an integer bound, got '" + spec +
                                       "'");
    }
    return np::builtin_corpus(max_order);
  }
  if (spec.starts_with("dir:")) return np::load_corpus_dir(spec.substr(4), cfg);
  throw np::InvalidParametersError("corpus must be 'builtin:<maxN>' or 'dir:<path>', got '" +
                                   spec + "'");
}

void add_config_flags(CLI::App* cmd, np::Config& cfg) {
  cmd->add_option("--lattice-cap", cfg.lattice_cap, "max group order for subgroup lattices")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--closure-cap", cfg.closure_cap, "max permutation closure size")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--assoc-cap", cfg.assoc_full_check_cap,
                  "max order for the full associativity check")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-o,--output", cfg.output_path, "write the report to a file instead of stdout");
  std::map<std::string, np::Config::Format> formats{{"json", np::Config::Format::kJson},
                                                    {"csv", np::Config::Format::kCsv},
                                                    {"text", np::Config::Format::kText}};
  cmd->add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

int cmd_analyze(const std::string& source, long long k, long long p, bool have_k,
                const np::Config& cfg) {
  np::FiniteGroup g = load_source(source, cfg);
  if (have_k) {
    if (k < 1) throw np::InvalidParametersError("--k must be at least 1");
    np::PowerAnalysis pa = np::analyze_powers(g, k);
    np::write_output(np::analysis_to_json(g, pa), np::analysis_to_text(g, pa), cfg);
  } else {
    np::PowerAnalysis pa = np::analyze_powers(g, p);
    np::NonPowerProfile profile = np::non_power_profile(g, p);
    np::write_output(np::analysis_to_json(g, pa, &profile),
                     np::analysis_to_text(g, pa, &profile), cfg);
  }
  return kExitOk;
}

int cmd_verify(const std::string& corpus_spec, std::vector<std::string> checks,
               const np::Config& cfg) {
  std::vector<np::FiniteGroup> corpus = load_corpus(corpus_spec, cfg);
  if (corpus.empty()) throw np::InvalidParametersError("corpus is empty: " + corpus_spec);
  if (checks.empty() || (checks.size() == 1 && checks[0] == "all"))
    checks = np::all_check_ids();
  np::VerificationReport report = np::run_suite(corpus, checks, cfg, corpus_spec);
  np::write_output(np::report_to_json(report), np::report_to_text(report), cfg);
  return report.has_fail() ? kExitFail : kExitOk;
}

int cmd_classify(const std::string& source, long long p, const np::Config& cfg) {
  np::FiniteGroup g = load_source(source, cfg);
  np::GroupContext ctx(g, cfg);
  np::ClassificationOutcome outcome = np::classify_new_jumps(ctx, p);
  std::string text = "group: " + g.label() + "\ncase: " + std::to_string(int(outcome.jump_case)) +
                     " (" + np::to_string(outcome.jump_case) + ")\nwitness: " +
                     outcome.witness.dump() + "\n";
  np::write_output(np::classification_to_json(g, p, outcome), text, cfg);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group power-map analysis and theorem verification"};
  app.require_subcommand(1);
  np::Config cfg;

  auto* analyze = app.add_subcommand("analyze", "power-map analysis of one group");
  std::string analyze_source;
  long long analyze_k = 0, analyze_p = 0;
  analyze->add_option("source", analyze_source, "family:<spec> or file:<path>")->required();
  auto* opt_k = analyze->add_option("--k", analyze_k, "power-map exponent");
  auto* opt_p = analyze->add_option("--prime", analyze_p, "prime (adds the class profile)");
  opt_k->excludes(opt_p);
  opt_p->excludes(opt_k);
  add_config_flags(analyze, cfg);

  auto* verify = app.add_subcommand("verify", "run checks over a corpus of groups");
  std::string corpus_spec;
  std::vector<std::string> checks;
  verify->add_option("--corpus", corpus_spec, "builtin:<maxN> or dir:<path>")->required();
  verify->add_option("--checks", checks, "check ids, or 'all'")->delimiter(',');
  verify->add_option("--jobs", cfg.jobs, "worker threads (default: hardware)")
      ->check(CLI::PositiveNumber);
  add_config_flags(verify, cfg);

  auto* classify = app.add_subcommand("classify", "boundary-case classification for an odd prime");
  std::string classify_source;
  long long classify_p = 0;
  classify->add_option("source", classify_source, "family:<spec> or file:<path>")->required();
  classify->add_option("--prime", classify_p, "odd prime dividing the group order")->required();
  add_config_flags(classify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (const char* env_jobs = std::getenv("NOTPOWERS_JOBS")) {
    try {
      int j = std::stoi(env_jobs);
      if (j >= 1) cfg.jobs = j;
    } catch (const std::exception&) {
      std::cerr << "notpowers: ignoring invalid NOTPOWERS_JOBS='" << env_jobs << "'\n";
    }
  }

  try {
    if (app.got_subcommand(analyze)) {
      const bool have_k = opt_k->count() > 0, have_p = opt_p->count() > 0;
      if (have_k == have_p)
        throw np::InvalidParametersError("analyze needs exactly one of --k or --prime");
      return cmd_analyze(analyze_source, analyze_k, analyze_p, have_k, cfg);
    }
    if (app.got_subcommand(verify)) return cmd_verify(corpus_spec, checks, cfg);
    if (app.got_subcommand(classify)) return cmd_classify(classify_source, classify_p, cfg);
  } catch (const np::Error& e) {
    std::cerr << "notpowers: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "notpowers: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
