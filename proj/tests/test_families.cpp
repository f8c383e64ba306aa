#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "notpowers/families.hpp"
#include "notpowers/group.hpp"
#include "notpowers/power.hpp"
#include "notpowers/structure.hpp"

using namespace notpowers;

namespace {

std::vector<std::string> corpus_labels(int max_order) {
  std::vector<std::string> labels;
  for (const FiniteGroup& g : builtin_corpus(max_order)) labels.push_back(g.label());
  return labels;
}

bool has_label(const std::vector<std::string>& labels, const std::string& want) {
  return std::find(labels.begin(), labels.end(), want) != labels.end();
}

}  // namespace

TEST_CASE("family spec parsing round-trips") {
  for (const char* text : {"cyclic:12", "abelian:2,4,8", "dihedral:6", "dicyclic:3",
                           "symmetric:4", "alternating:5", "metacyclic_frobenius:7,6",
                           "semidirect:9,3,4", "dp:cyclic:2|dihedral:5",
                           "dp:cyclic:2|cyclic:3|cyclic:5"}) {
    FamilySpec spec = FamilySpec::parse(text);
    CHECK(spec.to_string() == text);
    CHECK(FamilySpec::parse(spec.to_string()).to_string() == text);
  }

  FamilySpec dp = FamilySpec::parse("dp:cyclic:2|dihedral:5");
  CHECK(dp.family == "dp");
  REQUIRE(dp.factors.size() == 2);
  CHECK(dp.factors[0].family == "cyclic");
  CHECK(dp.factors[0].params == std::vector<long long>{2});
  CHECK(dp.factors[1].family == "dihedral");

  CHECK_THROWS_AS(FamilySpec::parse(""), InvalidParametersError);
  CHECK_THROWS_AS(FamilySpec::parse("cyclic:"), InvalidParametersError);
  CHECK_THROWS_AS(FamilySpec::parse("cyclic:x"), InvalidParametersError);
  CHECK_THROWS_AS(FamilySpec::parse("cyclic:3,"), InvalidParametersError);
  CHECK_THROWS_AS(FamilySpec::parse("dp:cyclic:3"), InvalidParametersError);
  CHECK_THROWS_AS(FamilySpec::parse("dp:dp:cyclic:2|cyclic:3|cyclic:5"),
                  InvalidParametersError);
}

TEST_CASE("make rejects malformed specs") {
  CHECK_THROWS_AS(make("nosuchfamily:3"), InvalidParametersError);
  CHECK_THROWS_AS(make("cyclic"), InvalidParametersError);
  CHECK_THROWS_AS(make("cyclic:0"), InvalidParametersError);
  CHECK_THROWS_AS(make("cyclic:3,4"), InvalidParametersError);
  CHECK_THROWS_AS(make("symmetric:8"), InvalidParametersError);
  CHECK_THROWS_AS(make("metacyclic_frobenius:8,7"), InvalidParametersError);  // q not prime
  CHECK_THROWS_AS(make("metacyclic_frobenius:7,4"), InvalidParametersError);  // d !| q-1
  CHECK_THROWS_AS(make("metacyclic_frobenius:7,1"), InvalidParametersError);
  CHECK_THROWS_AS(make("semidirect:7,3,3"), InvalidParametersError);  // 3^3 != 1 mod 7
  CHECK_THROWS_AS(make("semidirect:8,2,4"), InvalidParametersError);  // gcd(4,8) != 1
  CHECK_THROWS_AS(make("abelian:0"), InvalidParametersError);
  // A single abelian modulus is just the cyclic group.
  CHECK(make("abelian:4").table() == make("cyclic:4").table());
}

TEST_CASE("family constructions have the right shape") {
  CHECK(make("cyclic:1").order() == 1);
  CHECK(make("cyclic:17").order() == 17);
  CHECK(make("cyclic:17").is_abelian());
  CHECK(make("abelian:2,3,4").order() == 24);
  CHECK(make("abelian:2,3,4").is_abelian());
  CHECK(exponent(make("abelian:2,3,4")) == 12);

  FiniteGroup d6 = make("dihedral:6");
  CHECK(d6.order() == 12);
  CHECK_FALSE(d6.is_abelian());
  CHECK(center(d6).order() == 2);

  FiniteGroup q8 = make("dicyclic:2");
  CHECK(q8.order() == 8);
  std::vector<int> q8_orders = q8.element_orders();
  std::sort(q8_orders.begin(), q8_orders.end());
  CHECK(q8_orders == std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4});

  CHECK(make("symmetric:1").order() == 1);
  CHECK(make("symmetric:5").order() == 120);
  CHECK(make("alternating:2").order() == 1);
  CHECK(make("alternating:5").order() == 60);
  CHECK_FALSE(make("alternating:5").is_abelian());

  FiniteGroup f20 = make("metacyclic_frobenius:5,4");
  CHECK(f20.order() == 20);
  auto fs = frobenius_structure(f20);
  REQUIRE(fs.has_value());
  CHECK(fs->kernel.order() == 5);

  CHECK(make("semidirect:7,3,2").order() == 21);
  CHECK(make("dp:cyclic:3|symmetric:3").order() == 18);
  CHECK(make("dp:cyclic:2|cyclic:3|cyclic:5").order() == 30);
  CHECK(make("dp:cyclic:2|cyclic:3|cyclic:5").is_abelian());
}

TEST_CASE("labels are the canonical spec strings") {
  CHECK(make("cyclic:6").label() == "cyclic:6");
  CHECK(make("dp:cyclic:2|dihedral:5").label() == "dp:cyclic:2|dihedral:5");
  CHECK(make(FamilySpec::parse("dicyclic:3")).label() == "dicyclic:3");
}

TEST_CASE("odd-m dicyclic groups have a unique involution") {
  for (int m : {1, 3, 5, 7}) {
    FiniteGroup g = make("dicyclic:" + std::to_string(m));
    int involutions = 0;
    for (element_t x = 0; x < g.order(); ++x)
      if (g.element_order(x) == 2) ++involutions;
    CHECK(involutions == 1);
  }
}

TEST_CASE("metacyclic frobenius groups act faithfully") {
  for (auto [q, d] : std::vector<std::pair<int, int>>{{5, 2}, {5, 4}, {7, 3}, {11, 5}, {13, 4}}) {
    FiniteGroup g =
        make("metacyclic_frobenius:" + std::to_string(q) + "," + std::to_string(d));
    CHECK(g.order() == q * d);
    auto fs = frobenius_structure(g);
    REQUIRE(fs.has_value());
    CHECK(fs->kernel.order() == q);
    CHECK(fs->complement.order() == d);
    CHECK(center(g).order() == 1);
  }
}

TEST_CASE("semidirect with trivial action is the direct product") {
  CHECK(make("semidirect:5,3,1").table() == make("dp:cyclic:5|cyclic:3").table());
}

TEST_CASE("builtin corpus up to order 6") {
  auto labels = corpus_labels(6);
  CHECK(labels == std::vector<std::string>{"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4",
                                           "cyclic:5", "cyclic:6", "abelian:2,2",
                                           "dihedral:3"});
}

TEST_CASE("builtin corpus edge cases") {
  auto one = corpus_labels(1);
  CHECK(one == std::vector<std::string>{"cyclic:1"});
  CHECK_THROWS_AS(builtin_corpus(0), InvalidParametersError);

  auto labels21 = corpus_labels(21);
  CHECK(has_label(labels21, "metacyclic_frobenius:7,3"));
  CHECK(has_label(labels21, "metacyclic_frobenius:5,4"));
  CHECK_FALSE(has_label(labels21, "metacyclic_frobenius:7,6"));
  // S3 and D3 are isomorphic; the dihedral construction comes first.
  CHECK(has_label(labels21, "dihedral:3"));
  CHECK_FALSE(has_label(labels21, "symmetric:3"));

  auto labels60 = corpus_labels(60);
  CHECK(has_label(labels60, "alternating:4"));
  CHECK(has_label(labels60, "symmetric:4"));
  CHECK(has_label(labels60, "dicyclic:3"));
  CHECK(has_label(labels60, "metacyclic_frobenius:7,6"));
  // S_n and A_n are admitted while n! <= max_order, so A5 needs 120.
  CHECK_FALSE(has_label(labels60, "alternating:5"));
  auto labels120 = corpus_labels(120);
  CHECK(has_label(labels120, "alternating:5"));
  CHECK(has_label(labels120, "symmetric:5"));
}

TEST_CASE("builtin corpus respects the order bound and is duplicate-free") {
  auto corpus = builtin_corpus(48);
  std::set<std::string> labels;
  for (const FiniteGroup& g : corpus) {
    CHECK(g.order() <= 48);
    CHECK(g.order() >= 1);
    CHECK(labels.insert(g.label()).second);
  }

  // Deterministic: two invocations agree exactly.
  auto again = builtin_corpus(48);
  REQUIRE(again.size() == corpus.size());
  for (size_t i = 0; i < corpus.size(); ++i) {
    CHECK(again[i].label() == corpus[i].label());
    CHECK(again[i].table() == corpus[i].table());
  }

  // Growing the bound only appends; prefixes agree.
  auto smaller = builtin_corpus(30);
  size_t si = 0;
  for (const FiniteGroup& g : corpus) {
    if (si < smaller.size() && smaller[si].label() == g.label()) ++si;
  }
  CHECK(si == smaller.size());
}
