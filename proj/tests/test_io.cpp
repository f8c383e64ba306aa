#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "notpowers/families.hpp"
#include "notpowers/io.hpp"

using namespace notpowers;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("notpowers_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
  fs::path file(const std::string& name, const std::string& contents) const {
    fs::path p = path / name;
    std::ofstream(p) << contents;
    return p;
  }
};

}  // namespace

TEST_CASE("parse cayley tables") {
  FiniteGroup g = parse_group_text(
      "# label: klein\n"
      "# any other comment\n"
      "order 4\n"
      "0 1 2 3\n"
      "1 0 3 2\n"
      "2 3 0 1\n"
      "3 2 1 0\n",
      "inline");
  CHECK(g.order() == 4);
  CHECK(g.label() == "klein");
  CHECK(g.is_abelian());
  for (element_t x = 0; x < 4; ++x) CHECK(g.element_order(x) <= 2);

  // Without a label line the source name is used.
  FiniteGroup plain = parse_group_text("order 1\n0\n", "somefile");
  CHECK(plain.label() == "somefile");

  // CRLF and blank lines are tolerated.
  FiniteGroup crlf = parse_group_text("order 2\r\n\r\n0 1\r\n1 0\r\n", "crlf");
  CHECK(crlf.order() == 2);
}

TEST_CASE("parse permutation generators") {
  FiniteGroup s3 = parse_group_text(
      "# label: sym3\n"
      "degree 3\n"
      "1 0 2\n"
      "1 2 0\n",
      "inline");
  CHECK(s3.order() == 6);
  CHECK(s3.label() == "sym3");
  CHECK_FALSE(s3.is_abelian());

  FiniteGroup trivial = parse_group_text("degree 4\n", "inline");
  CHECK(trivial.order() == 1);
}

TEST_CASE("parse errors carry positions") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      parse_group_text(text, "src");
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(std::string(e.what()).find("src") != std::string::npos);
    }
  };

  expect_error("", 1);                          // empty input
  expect_error("order\n", 1);                   // missing count
  expect_error("order x\n", 1);                 // bad count
  expect_error("order 0\n", 1);                 // nonpositive
  expect_error("bogus 3\n", 1);                 // unknown header
  expect_error("order 2\n0 1\n", 3);            // truncated table (reported at EOF)
  expect_error("order 2\n0 1\n1 0 0\n", 3);     // trailing entry
  expect_error("order 2\n0 1\n1 9\n", 3);       // out of range
  expect_error("order 2\n0 1\n1 z\n", 3);       // not a number
  expect_error("order 2\n0 1\n1 0\n0 1\n", 4);  // extra row
  expect_error("degree 3\n0 1\n", 2);           // short generator row

  // Group-level failures surface as group errors, not parse errors.
  CHECK_THROWS_AS(parse_group_text("degree 3\n0 0 1\n", "src"), InvalidParametersError);
  CHECK_THROWS_AS(parse_group_text("order 2\n0 1\n1 1\n", "src"), NoInverseError);
}

TEST_CASE("cayley text round-trips") {
  for (const char* fam :
       {"cyclic:6", "dihedral:4", "dicyclic:3", "symmetric:3", "alternating:4",
        "metacyclic_frobenius:5,4", "dp:cyclic:2|dihedral:3"}) {
    FiniteGroup g = make(fam);
    std::string text = to_cayley_text(g);
    FiniteGroup back = parse_group_text(text, "roundtrip");
    CHECK(back.order() == g.order());
    CHECK(back.table() == g.table());
    CHECK(back.label() == g.label());
  }
}

TEST_CASE("ingest and corpus directory") {
  TempDir tmp;
  tmp.file("b_second.grp", "order 2\n0 1\n1 0\n");
  tmp.file("a_first.grp", "order 3\n0 1 2\n1 2 0\n2 0 1\n");
  tmp.file("c_third.grp", "# label: q8\n" + to_cayley_text(make("dicyclic:2")));

  std::vector<FiniteGroup> corpus = load_corpus_dir(tmp.path);
  REQUIRE(corpus.size() == 3);
  CHECK(corpus[0].label() == "a_first");
  CHECK(corpus[0].order() == 3);
  CHECK(corpus[1].label() == "b_second");
  CHECK(corpus[1].order() == 2);
  CHECK(corpus[2].label() == "q8");
  CHECK(corpus[2].order() == 8);

  FiniteGroup single = ingest_group(tmp.path / "a_first.grp");
  CHECK(single.label() == "a_first");

  CHECK_THROWS_AS(ingest_group(tmp.path / "missing.grp"), Error);
  CHECK_THROWS_AS(load_corpus_dir(tmp.path / "missing_dir"), Error);
}

TEST_CASE("analysis json") {
  FiniteGroup c4 = make("cyclic:4");
  PowerAnalysis pa = analyze_powers(c4, 2);
  nlohmann::json j = analysis_to_json(c4, pa);
  CHECK(j.at("group_label") == "cyclic:4");
  CHECK(j.at("order") == 4);
  CHECK(j.at("k_or_p") == 2);
  CHECK(j.at("n_k") == 2);
  CHECK(j.at("theta_histogram").at("2") == 2);
  CHECK_FALSE(j.contains("type"));

  FiniteGroup q12 = make("dicyclic:3");
  PowerAnalysis pa3 = analyze_powers(q12, 3);
  NonPowerProfile prof = non_power_profile(q12, 3);
  nlohmann::json jp = analysis_to_json(q12, pa3, &prof);
  CHECK(jp.at("type") == std::vector<long long>{3, 6});
  CHECK(jp.at("length") == 2);
  CHECK(jp.at("class_sizes") == std::vector<long long>{2, 2});

  std::string text = analysis_to_text(q12, pa3, &prof);
  CHECK(text.find("dicyclic:3") != std::string::npos);
  CHECK(text.find("n_k") != std::string::npos);
}

TEST_CASE("report json schema") {
  std::vector<FiniteGroup> corpus = builtin_corpus(12);
  VerificationReport report =
      run_suite(corpus, {"divisible", "new_jumps"}, Config{}, "builtin:12");
  nlohmann::json j = report_to_json(report);

  CHECK(j.at("config").at("corpus") == "builtin:12");
  CHECK(j.at("config").at("checks").size() == 2);
  CHECK(j.at("config").contains("lattice_cap"));
  CHECK_FALSE(j.at("config").contains("jobs"));
  CHECK_FALSE(j.contains("runtime_seconds"));
  CHECK(j.at("corpus").size() == corpus.size());
  CHECK(j.at("corpus")[0].at("label") == "cyclic:1");
  CHECK(j.at("corpus")[0].at("order") == 1);
  CHECK(j.at("checks_run") == report.checks_run);

  // All results passed, so the results array is empty.
  CHECK(j.at("results").empty());
  const auto& tall = j.at("tallies");
  CHECK(tall.size() == 2);
  long long sum = 0;
  for (const char* key : {"pass", "fail", "skipped", "na"})
    sum += tall.at("divisible").at(key).get<long long>();
  for (const char* key : {"pass", "fail", "skipped", "na"})
    sum += tall.at("new_jumps").at(key).get<long long>();
  CHECK(sum == report.checks_run);
  CHECK(tall.at("new_jumps").contains("cases"));
  CHECK_FALSE(tall.at("divisible").contains("cases"));

  std::string text = report_to_text(report);
  CHECK(text.find("divisible") != std::string::npos);
  CHECK(text.find("runtime") != std::string::npos);
}

TEST_CASE("json to csv flattening") {
  nlohmann::json doc{{"a", 1}, {"b", {{"c", "x,y"}, {"d", true}}}, {"e", {1, 2}}};
  std::string csv = json_to_csv(doc);
  CHECK(csv.rfind("path,value\n", 0) == 0);
  CHECK(csv.find("/a,1\n") != std::string::npos);
  CHECK(csv.find("/b/c,\"x,y\"\n") != std::string::npos);
  CHECK(csv.find("/b/d,true\n") != std::string::npos);
  CHECK(csv.find("/e/0,1\n") != std::string::npos);
  CHECK(csv.find("/e/1,2\n") != std::string::npos);
}

TEST_CASE("write_output to files") {
  TempDir tmp;
  nlohmann::json doc{{"hello", "world"}};

  Config cfg;
  cfg.output_path = (tmp.path / "out.json").string();
  write_output(doc, "text form\n", cfg);
  std::ifstream in(cfg.output_path);
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  CHECK(contents == doc.dump(2) + "\n");

  cfg.format = Config::Format::kText;
  cfg.output_path = (tmp.path / "out.txt").string();
  write_output(doc, "text form\n", cfg);
  std::ifstream tin(cfg.output_path);
  std::string tcontents((std::istreambuf_iterator<char>(tin)),
                        std::istreambuf_iterator<char>());
  CHECK(tcontents == "text form\n");

  cfg.format = Config::Format::kJson;
  cfg.output_path = (tmp.path / "no_such_dir" / "out.json").string();
  CHECK_THROWS_AS(write_output(doc, "", cfg), Error);
}
