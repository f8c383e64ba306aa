#include "notpowers/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace notpowers {

namespace {

using json = nlohmann::json;

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({line.substr(start, i - start), int(start) + 1});
  }
  return tokens;
}

long long parse_number(const Token& tok, const std::string& source, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    throw ParseError(source, line, tok.column,
                     "expected an integer, got '" + std::string(tok.text) + "'");
  return value;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

json result_to_json(const CheckResult& r) {
  json j{{"check_id", r.check_id},
         {"group_label", r.group_label},
         {"status", to_string(r.status)},
         {"witness", r.witness}};
  if (r.param)
    j["param"] = *r.param;
  else
    j["param"] = nullptr;
  return j;
}

}  // namespace

FiniteGroup parse_group_text(std::string_view text, const std::string& source_name,
                             const Config& cfg) {
  std::vector<std::string_view> lines;
  {
    size_t start = 0;
    while (start <= text.size()) {
      size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        lines.push_back(text.substr(start));
        break;
      }
      lines.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }
  for (auto& line : lines)
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

  std::string label = source_name;
  bool label_seen = false;
  int header_line = 0;
  std::string mode;
  long long size = 0;

  auto significant = [&](int i) {
    std::string_view line = lines[i];
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) return false;
    if (line[first] != '#') return true;
    std::string_view comment = line.substr(first + 1);
    size_t l = comment.find_first_not_of(" \t");
    if (!label_seen && l != std::string_view::npos &&
        comment.substr(l).starts_with("label:")) {
      std::string_view value = comment.substr(l + 6);
      size_t b = value.find_first_not_of(" \t");
      size_t e = value.find_last_not_of(" \t");
      if (b != std::string_view::npos) {
        label = std::string(value.substr(b, e - b + 1));
        label_seen = true;
      }
    }
    return false;
  };

  int i = 0;
  const int line_count = int(lines.size());
  for (; i < line_count; ++i) {
    if (!significant(i)) continue;
    auto tokens = tokenize(lines[i]);
    if (tokens.size() != 2 || (tokens[0].text != "order" && tokens[0].text != "degree"))
      throw ParseError(source_name, i + 1, tokens.empty() ? 1 : tokens[0].column,
                       "expected a header line 'order <n>' or 'degree <d>'");
    mode = std::string(tokens[0].text);
    size = parse_number(tokens[1], source_name, i + 1);
    if (size < 1)
      throw ParseError(source_name, i + 1, tokens[1].column,
                       mode + " must be a positive integer");
    header_line = i + 1;
    ++i;
    break;
  }
  if (mode.empty()) throw ParseError(source_name, line_count, 1, "no header line found");

  if (mode == "order") {
    std::vector<std::vector<element_t>> table;
    for (; i < line_count && (long long)table.size() < size; ++i) {
      if (!significant(i)) continue;
      auto tokens = tokenize(lines[i]);
      if ((long long)tokens.size() != size)
        throw ParseError(source_name, i + 1, tokens.empty() ? 1 : tokens[0].column,
                         "expected " + std::to_string(size) + " entries in table row, got " +
                             std::to_string(tokens.size()));
      std::vector<element_t> row;
      for (const Token& tok : tokens) {
        long long v = parse_number(tok, source_name, i + 1);
        if (v < 0 || v >= size)
          throw ParseError(source_name, i + 1, tok.column,
                           "table entry " + std::to_string(v) + " is outside 0.." +
                               std::to_string(size - 1));
        row.push_back(element_t(v));
      }
      table.push_back(std::move(row));
    }
    if ((long long)table.size() < size)
      throw ParseError(source_name, line_count, 1,
                       "table truncated: got " + std::to_string(table.size()) + " of " +
                           std::to_string(size) + " rows");
    for (; i < line_count; ++i)
      if (significant(i))
        throw ParseError(source_name, i + 1, 1, "unexpected content after the table");
    ValidationOptions opts;
    opts.assoc_full_check_cap = cfg.assoc_full_check_cap;
    return build_from_cayley(table, label, opts);
  }

  PermutationGenSet gens;
  gens.degree = int(size);
  for (; i < line_count; ++i) {
    if (!significant(i)) continue;
    auto tokens = tokenize(lines[i]);
    if ((long long)tokens.size() != size)
      throw ParseError(source_name, i + 1, tokens.empty() ? 1 : tokens[0].column,
                       "expected " + std::to_string(size) + " images in generator row, got " +
                           std::to_string(tokens.size()));
    std::vector<element_t> perm;
    for (const Token& tok : tokens) {
      long long v = parse_number(tok, source_name, i + 1);
      if (v < 0 || v >= size)
        throw ParseError(source_name, i + 1, tok.column,
                         "image " + std::to_string(v) + " is outside 0.." +
                             std::to_string(size - 1));
      perm.push_back(element_t(v));
    }
    gens.generators.push_back(std::move(perm));
  }
  (void)header_line;
  return build_from_permutations(gens, cfg.closure_cap, label);
}

FiniteGroup ingest_group(const std::filesystem::path& path, const Config& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open group file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group_text(buffer.str(), path.stem().string(), cfg);
}

std::vector<FiniteGroup> load_corpus_dir(const std::filesystem::path& dir, const Config& cfg) {
  if (!std::filesystem::is_directory(dir))
    throw Error("corpus directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  std::vector<FiniteGroup> corpus;
  corpus.reserve(files.size());
  for (const auto& file : files) corpus.push_back(ingest_group(file, cfg));
  return corpus;
}

std::string to_cayley_text(const FiniteGroup& g) {
  std::string out;
  if (!g.label().empty()) out += "# label: " + g.label() + "\n";
  out += "order " + std::to_string(g.order()) + "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(g.mul(a, b));
    }
    out += '\n';
  }
  return out;
}

json analysis_to_json(const FiniteGroup& g, const PowerAnalysis& pa,
                      const NonPowerProfile* profile) {
  std::map<long long, long long> histogram;
  for (element_t x : pa.power_image) ++histogram[pa.theta[x]];
  json hist = json::object();
  for (auto [multiplicity, count] : histogram) hist[std::to_string(multiplicity)] = count;

  json j{{"group_label", g.label()},
         {"order", g.order()},
         {"k_or_p", pa.k},
         {"n_k", pa.n_k},
         {"theta_histogram", hist}};
  if (profile) {
    j["type"] = profile->type;
    j["length"] = profile->length;
    j["class_sizes"] = profile->class_sizes;
  }
  return j;
}

json classification_to_json(const FiniteGroup& g, long long p,
                            const ClassificationOutcome& outcome) {
  return json{{"group_label", g.label()},
              {"order", g.order()},
              {"p", p},
              {"case", int(outcome.jump_case)},
              {"case_tag", to_string(outcome.jump_case)},
              {"ambiguous", outcome.ambiguous},
              {"witness", outcome.witness}};
}

json report_to_json(const VerificationReport& report) {
  json corpus = json::array();
  for (const auto& [label, order] : report.corpus)
    corpus.push_back(json{{"label", label}, {"order", order}});

  json results = json::array();
  for (const CheckResult& r : report.results)
    if (r.status == CheckStatus::kFail || r.status == CheckStatus::kSkipped)
      results.push_back(result_to_json(r));

  json tallies = json::object();
  for (const auto& [id, tally] : report.tallies) {
    json t{{"pass", tally.pass},
           {"fail", tally.fail},
           {"skipped", tally.skipped},
           {"na", tally.not_applicable}};
    if (!tally.cases.empty()) {
      json cases = json::object();
      for (auto [c, count] : tally.cases) cases[std::to_string(c)] = count;
      t["cases"] = cases;
    }
    tallies[id] = t;
  }

  return json{{"config", report.config},
              {"corpus", corpus},
              {"results", results},
              {"tallies", tallies},
              {"checks_run", report.checks_run}};
}

std::string json_to_csv(const json& doc) {
  json flat = doc.flatten();
  std::string out = "path,value\n";
  for (const auto& [path, value] : flat.items()) {
    std::string cell = value.is_string() ? value.get<std::string>() : value.dump();
    out += csv_escape(path) + "," + csv_escape(cell) + "\n";
  }
  return out;
}

std::string report_to_text(const VerificationReport& report) {
  std::string out;
  out += "verification report\n";
  out += "corpus: " + report.config.value("corpus", std::string("?")) + " (" +
         std::to_string(report.corpus.size()) + " groups)\n";
  out += "checks_run: " + std::to_string(report.checks_run) + "\n\n";

  constexpr int kName = 24;
  char line[160];
  std::snprintf(line, sizeof line, "%-*s %8s %8s %8s %8s\n", kName, "check", "pass", "fail",
                "skipped", "na");
  out += line;
  for (const auto& [id, tally] : report.tallies) {
    std::snprintf(line, sizeof line, "%-*s %8lld %8lld %8lld %8lld\n", kName, id.c_str(),
                  tally.pass, tally.fail, tally.skipped, tally.not_applicable);
    out += line;
    if (!tally.cases.empty()) {
      out += std::string(kName, ' ') + " cases:";
      for (auto [c, count] : tally.cases)
        out += " " + std::to_string(c) + "=" + std::to_string(count);
      out += "\n";
    }
  }

  long long shown = 0;
  for (const CheckResult& r : report.results) {
    if (r.status != CheckStatus::kFail && r.status != CheckStatus::kSkipped) continue;
    if (shown == 0) out += "\nnon-passing results:\n";
    ++shown;
    out += "  [" + std::string(to_string(r.status)) + "] " + r.check_id +
           " group=" + r.group_label;
    if (r.param) out += " param=" + std::to_string(*r.param);
    out += " witness=" + r.witness.dump();
    out += "\n";
  }

  out += "\nruntime: " + format_double(report.runtime_seconds) + "s\n";
  return out;
}

std::string analysis_to_text(const FiniteGroup& g, const PowerAnalysis& pa,
                             const NonPowerProfile* profile) {
  std::string out;
  out += "group: " + (g.label().empty() ? "(unlabeled)" : g.label()) + "\n";
  out += "order: " + std::to_string(g.order()) + "\n";
  out += "k: " + std::to_string(pa.k) + "\n";
  out += "n_k: " + std::to_string(pa.n_k) + "\n";
  out += "power image size: " + std::to_string(pa.power_image.size()) + "\n";
  if (profile) {
    out += "type: (";
    for (size_t i = 0; i < profile->type.size(); ++i)
      out += (i ? "," : "") + std::to_string(profile->type[i]);
    out += ")\n";
    out += "length: " + std::to_string(profile->length) + "\n";
  }
  return out;
}

void write_output(const json& doc, const std::string& text, const Config& cfg) {
  std::string payload;
  switch (cfg.format) {
    case Config::Format::kJson: payload = doc.dump(2) + "\n"; break;
    case Config::Format::kCsv: payload = json_to_csv(doc); break;
    case Config::Format::kText: payload = text; break;
  }
  if (cfg.output_path.empty()) {
    std::cout << payload;
    std::cout.flush();
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + cfg.output_path);
    out << payload;
  }
}

}  // namespace notpowers
