#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "notpowers/config.hpp"
#include "notpowers/group.hpp"
#include "notpowers/power.hpp"
#include "notpowers/structure.hpp"
#include "notpowers/verifier.hpp"

namespace notpowers {

/// Parses the textual group format:
///
///   # label: <name>          (optional; other '#' lines are comments)
///   order <n>                Cayley table: n rows of n indices follow
///   degree <d>               permutation group: one image row per generator
///
/// Errors carry 1-based line/column positions. `source_name` is used in
/// error messages and as the default label.
FiniteGroup parse_group_text(std::string_view text, const std::string& source_name,
                             const Config& cfg = {});

/// Reads and parses one group file; the label defaults to the file stem.
FiniteGroup ingest_group(const std::filesystem::path& path, const Config& cfg = {});

/// All regular files in `dir`, sorted by filename, each parsed as a group.
std::vector<FiniteGroup> load_corpus_dir(const std::filesystem::path& dir,
                                         const Config& cfg = {});

/// Cayley-table text for g, round-trippable through parse_group_text.
std::string to_cayley_text(const FiniteGroup& g);

nlohmann::json analysis_to_json(const FiniteGroup& g, const PowerAnalysis& pa,
                                const NonPowerProfile* profile = nullptr);

nlohmann::json classification_to_json(const FiniteGroup& g, long long p,
                                      const ClassificationOutcome& outcome);

nlohmann::json report_to_json(const VerificationReport& report);

/// Flattens any JSON document to "path,value" CSV rows (one leaf per row).
std::string json_to_csv(const nlohmann::json& doc);

std::string report_to_text(const VerificationReport& report);

std::string analysis_to_text(const FiniteGroup& g, const PowerAnalysis& pa,
                             const NonPowerProfile* profile = nullptr);

/// Renders `doc` in the configured format and writes it to cfg.output_path
/// (stdout when empty). `text` supplies the human-readable rendering.
void write_output(const nlohmann::json& doc, const std::string& text, const Config& cfg);

}  // namespace notpowers
