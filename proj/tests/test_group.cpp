#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "notpowers/group.hpp"

using namespace notpowers;

namespace {

std::vector<std::vector<element_t>> cyclic_table(int n) {
  std::vector<std::vector<element_t>> t(n, std::vector<element_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = element_t((i + j) % n);
  return t;
}

FiniteGroup perm_group(int degree, std::vector<std::vector<element_t>> gens,
                       std::string label = "") {
  return build_from_permutations({degree, std::move(gens)}, 5000, std::move(label));
}

FiniteGroup make_s3() { return perm_group(3, {{1, 0, 2}, {1, 2, 0}}, "s3"); }
FiniteGroup make_a4() { return perm_group(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}, "a4"); }
FiniteGroup make_s4() { return perm_group(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, "s4"); }
FiniteGroup make_d4() { return perm_group(4, {{1, 2, 3, 0}, {3, 2, 1, 0}}, "d4"); }

// Independent subgroup oracle: closures of every generating subset of size
// <= 4 (enough for any subgroup of a group of order <= 24), computed with a
// plain fixpoint loop over std::set.
std::set<std::vector<element_t>> brute_force_subgroups(const FiniteGroup& g) {
  REQUIRE(g.order() <= 24);
  auto close = [&](std::vector<element_t> seed) {
    std::set<element_t> s{kIdentityElement};
    s.insert(seed.begin(), seed.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<element_t> cur(s.begin(), s.end());
      for (element_t a : cur)
        for (element_t b : cur)
          if (s.insert(g.mul(a, b)).second) grew = true;
    }
    return std::vector<element_t>(s.begin(), s.end());
  };

  std::set<std::vector<element_t>> found;
  found.insert(close({}));
  const int n = g.order();
  for (element_t i = 1; i < n; ++i) {
    found.insert(close({i}));
    for (element_t j = element_t(i + 1); j < n; ++j) {
      found.insert(close({i, j}));
      for (element_t k = element_t(j + 1); k < n; ++k) {
        found.insert(close({i, j, k}));
        for (element_t l = element_t(k + 1); l < n; ++l) found.insert(close({i, j, k, l}));
      }
    }
  }
  return found;
}

void check_lattice_against_brute_force(const FiniteGroup& g) {
  auto expected = brute_force_subgroups(g);
  auto lattice = all_subgroups(g, 200);
  std::set<std::vector<element_t>> actual;
  for (const Subgroup& h : lattice) actual.insert(h.members());
  CHECK(lattice.size() == actual.size());  // no duplicates
  CHECK(actual == expected);
}

}  // namespace

TEST_CASE("trivial group") {
  FiniteGroup g = build_from_cayley({{0}});
  CHECK(g.order() == 1);
  CHECK(g.element_order(0) == 1);
  CHECK(g.is_abelian());
}

TEST_CASE("cyclic table of order 4") {
  FiniteGroup g = build_from_cayley(cyclic_table(4));
  CHECK(g.order() == 4);
  CHECK(g.element_order(0) == 1);
  CHECK(g.element_order(1) == 4);
  CHECK(g.element_order(2) == 2);
  CHECK(g.element_order(3) == 4);
  CHECK(g.inverse(1) == 3);
  CHECK(g.inverse(2) == 2);
  CHECK(g.is_abelian());
}

TEST_CASE("identity is relabeled to index 0") {
  // C2 written with the identity at index 1.
  FiniteGroup g = build_from_cayley({{1, 0}, {0, 1}});
  CHECK(g.order() == 2);
  CHECK(g.mul(0, 0) == 0);
  CHECK(g.mul(1, 1) == 0);
  CHECK(g.element_order(1) == 2);
}

TEST_CASE("table validation failures") {
  CHECK_THROWS_AS(build_from_cayley({{0, 1}, {1, 2}}), NotClosedError);
  try {
    build_from_cayley({{0, 1}, {1, 2}});
  } catch (const NotClosedError& e) {
    CHECK(e.row == 1);
    CHECK(e.col == 1);
    CHECK(e.value == 2);
  }

  CHECK_THROWS_AS(build_from_cayley({{1, 1}, {1, 1}}), NoIdentityError);
  CHECK_THROWS_AS(build_from_cayley({{0, 1}, {1, 1}}), NoInverseError);

  // Z6 addition with a single corrupted entry is no longer associative.
  auto t = cyclic_table(6);
  t[1][1] = 3;
  CHECK_THROWS_AS(build_from_cayley(t), NotAssociativeError);
  try {
    build_from_cayley(t);
  } catch (const NotAssociativeError& e) {
    element_t ab = t[e.a][e.b];
    element_t bc = t[e.b][e.c];
    CHECK(t[ab][e.c] != t[e.a][bc]);
  }

  CHECK_THROWS_AS(build_from_cayley({}), InvalidParametersError);
  CHECK_THROWS_AS(build_from_cayley({{0, 1}, {1}}), InvalidParametersError);
}

TEST_CASE("permutation closure") {
  FiniteGroup c3 = perm_group(3, {{1, 2, 0}});
  CHECK(c3.order() == 3);
  CHECK(c3.element_order(1) == 3);

  FiniteGroup s3 = make_s3();
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());

  // Independent count: plain BFS over composition with std::set.
  {
    std::set<std::vector<element_t>> seen;
    std::vector<std::vector<element_t>> queue{{0, 1, 2}};
    seen.insert(queue[0]);
    std::vector<std::vector<element_t>> gens{{1, 0, 2}, {1, 2, 0}};
    for (size_t head = 0; head < queue.size(); ++head) {
      for (const auto& gen : gens) {
        std::vector<element_t> prod(3);
        for (int i = 0; i < 3; ++i) prod[i] = queue[head][gen[i]];
        if (seen.insert(prod).second) queue.push_back(prod);
      }
    }
    CHECK(seen.size() == 6);
  }

  CHECK(make_a4().order() == 12);
  CHECK(make_s4().order() == 24);
  CHECK(make_d4().order() == 8);

  PermutationGenSet empty{4, {}};
  CHECK(build_from_permutations(empty).order() == 1);

  PermutationGenSet c7{7, {{1, 2, 3, 4, 5, 6, 0}}};
  CHECK_THROWS_AS(build_from_permutations(c7, 5), CapExceededError);
  CHECK_THROWS_AS(perm_group(3, {{0, 0, 1}}), InvalidParametersError);
}

TEST_CASE("permutation groups round-trip through their tables") {
  for (FiniteGroup g : {make_s3(), make_a4(), make_d4()}) {
    FiniteGroup h = FiniteGroup::from_table(g.table(), g.order(), g.label());
    CHECK(h.order() == g.order());
    CHECK(h.table() == g.table());
    CHECK(h.element_orders() == g.element_orders());
    CHECK(h.is_abelian() == g.is_abelian());
    CHECK(h.label() == g.label());
  }
}

TEST_CASE("power by binary exponentiation") {
  FiniteGroup s3 = make_s3();
  for (element_t x = 0; x < s3.order(); ++x) {
    CHECK(power(s3, x, 0) == kIdentityElement);
    CHECK(power(s3, x, 1) == x);
    CHECK(power(s3, x, s3.element_order(x)) == kIdentityElement);
    CHECK(power(s3, x, 7) == power(s3, x, 7 % s3.element_order(x)));
    element_t manual = kIdentityElement;
    for (int i = 0; i < 5; ++i) manual = s3.mul(manual, x);
    CHECK(power(s3, x, 5) == manual);
  }
  CHECK_THROWS_AS(power(s3, 1, -1), InvalidParametersError);
}

TEST_CASE("conjugacy classes") {
  FiniteGroup s3 = make_s3();
  auto classes = conjugacy_classes(s3);
  std::vector<size_t> sizes;
  size_t total = 0;
  for (const auto& cls : classes) {
    sizes.push_back(cls.members.size());
    total += cls.members.size();
    for (element_t m : cls.members) CHECK(s3.element_order(m) == cls.element_order);
    CHECK(cls.representative == cls.members.front());
    // orbit-stabilizer
    CHECK(cls.members.size() * centralizer(s3, cls.representative).order() == 6);
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2, 3});
  CHECK(total == 6);

  auto a4_classes = conjugacy_classes(make_a4());
  std::vector<size_t> a4_sizes;
  for (const auto& cls : a4_classes) a4_sizes.push_back(cls.members.size());
  std::sort(a4_sizes.begin(), a4_sizes.end());
  CHECK(a4_sizes == std::vector<size_t>{1, 3, 4, 4});
}

TEST_CASE("center and centralizer") {
  FiniteGroup s3 = make_s3();
  CHECK(center(s3).order() == 1);
  FiniteGroup c4 = build_from_cayley(cyclic_table(4));
  CHECK(center(c4).order() == 4);

  for (element_t x = 1; x < s3.order(); ++x) {
    if (s3.element_order(x) != 2) continue;
    Subgroup c = centralizer(s3, x);
    CHECK(c.order() == 2);
    CHECK(c.contains(x));
  }
}

TEST_CASE("subgroup generation, normality, normalizer") {
  FiniteGroup s3 = make_s3();
  element_t rot = -1, flip = -1;
  for (element_t x = 0; x < 6; ++x) {
    if (s3.element_order(x) == 3 && rot < 0) rot = x;
    if (s3.element_order(x) == 2 && flip < 0) flip = x;
  }
  Subgroup c3 = subgroup_generated(s3, std::vector<element_t>{rot});
  Subgroup c2 = subgroup_generated(s3, std::vector<element_t>{flip});
  CHECK(c3.order() == 3);
  CHECK(c2.order() == 2);
  CHECK(is_normal(s3, c3));
  CHECK_FALSE(is_normal(s3, c2));
  CHECK(normalizer(s3, c2).order() == 2);
  CHECK(normalizer(s3, c3).order() == 6);
  CHECK(subgroup_generated(s3, std::vector<element_t>{}).order() == 1);
  CHECK(subgroup_generated(s3, std::vector<element_t>{rot, flip}).order() == 6);
  CHECK(trivial_subgroup(s3).order() == 1);
  CHECK(whole_group(s3).order() == 6);

  CHECK_THROWS_AS(Subgroup(s3, std::vector<element_t>{0, rot}), InvalidParametersError);
  CHECK_THROWS_AS(Subgroup(s3, std::vector<element_t>{rot}), InvalidParametersError);
}

TEST_CASE("quotients") {
  FiniteGroup s3 = make_s3();
  element_t rot = -1, flip = -1;
  for (element_t x = 0; x < 6; ++x) {
    if (s3.element_order(x) == 3 && rot < 0) rot = x;
    if (s3.element_order(x) == 2 && flip < 0) flip = x;
  }
  Subgroup c3 = subgroup_generated(s3, std::vector<element_t>{rot});
  QuotientResult q = quotient(s3, c3);
  CHECK(q.group.order() == 2);
  for (element_t x = 0; x < 6; ++x)
    for (element_t y = 0; y < 6; ++y)
      CHECK(q.projection[s3.mul(x, y)] == q.group.mul(q.projection[x], q.projection[y]));
  for (element_t x = 0; x < 6; ++x)
    CHECK((q.projection[x] == 0) == c3.contains(x));

  Subgroup c2 = subgroup_generated(s3, std::vector<element_t>{flip});
  CHECK_THROWS_AS(quotient(s3, c2), NotNormalError);

  QuotientResult full = quotient(s3, whole_group(s3));
  CHECK(full.group.order() == 1);
  QuotientResult none = quotient(s3, trivial_subgroup(s3));
  CHECK(none.group.order() == 6);
  CHECK(none.group.table() == s3.table());
}

TEST_CASE("direct products") {
  FiniteGroup c2 = build_from_cayley(cyclic_table(2));
  FiniteGroup c3 = build_from_cayley(cyclic_table(3));
  FiniteGroup c6 = direct_product(c2, c3);
  CHECK(c6.order() == 6);
  std::vector<int> orders = c6.element_orders();
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{1, 2, 3, 3, 6, 6});

  FiniteGroup klein = direct_product(c2, c2);
  CHECK(klein.order() == 4);
  for (element_t x = 0; x < 4; ++x) CHECK(klein.element_order(x) <= 2);
}

TEST_CASE("semidirect products") {
  FiniteGroup c7 = build_from_cayley(cyclic_table(7));
  FiniteGroup c3 = build_from_cayley(cyclic_table(3));

  // x -> 2x has order 3 mod 7, so this is the Frobenius group of order 21.
  std::vector<std::vector<element_t>> action(3, std::vector<element_t>(7));
  for (int h = 0; h < 3; ++h) {
    int u = 1;
    for (int i = 0; i < h; ++i) u = u * 2 % 7;
    for (int x = 0; x < 7; ++x) action[h][x] = element_t(u * x % 7);
  }
  FiniteGroup frob21 = semidirect_product(c7, c3, action);
  CHECK(frob21.order() == 21);
  CHECK_FALSE(frob21.is_abelian());

  // Trivial action gives the direct product, including indexing.
  std::vector<std::vector<element_t>> trivial(3, std::vector<element_t>(7));
  for (int h = 0; h < 3; ++h)
    for (int x = 0; x < 7; ++x) trivial[h][x] = element_t(x);
  CHECK(semidirect_product(c7, c3, trivial).table() == direct_product(c7, c3).table());

  // x -> 2x is not a bijection mod 4.
  FiniteGroup c4 = build_from_cayley(cyclic_table(4));
  FiniteGroup c2 = build_from_cayley(cyclic_table(2));
  std::vector<std::vector<element_t>> bad{{0, 1, 2, 3}, {0, 2, 0, 2}};
  CHECK_THROWS_AS(semidirect_product(c4, c2, bad), NotAutomorphismError);

  // Each map is an automorphism but h -> phi_h is not a homomorphism.
  std::vector<std::vector<element_t>> broken(3, std::vector<element_t>(7));
  for (int x = 0; x < 7; ++x) {
    broken[0][x] = element_t(x);
    broken[1][x] = element_t(2 * x % 7);
    broken[2][x] = element_t(x);
  }
  CHECK_THROWS_AS(semidirect_product(c7, c3, broken), ActionNotHomomorphismError);
}

TEST_CASE("subgroup lattice matches brute force") {
  check_lattice_against_brute_force(build_from_cayley(cyclic_table(4)));
  check_lattice_against_brute_force(build_from_cayley(cyclic_table(12)));
  FiniteGroup c2 = build_from_cayley(cyclic_table(2));
  check_lattice_against_brute_force(direct_product(c2, c2));
  check_lattice_against_brute_force(
      direct_product(c2, build_from_cayley(cyclic_table(4))));
  check_lattice_against_brute_force(make_s3());
  check_lattice_against_brute_force(make_d4());
  check_lattice_against_brute_force(make_a4());
  check_lattice_against_brute_force(make_s4());
}

TEST_CASE("subgroup lattice counts and caps") {
  CHECK(all_subgroups(build_from_cayley(cyclic_table(4)), 200).size() == 3);
  CHECK(all_subgroups(make_s3(), 200).size() == 6);
  CHECK(all_subgroups(make_d4(), 200).size() == 10);
  CHECK(all_subgroups(make_a4(), 200).size() == 10);
  CHECK(all_subgroups(make_s4(), 200).size() == 30);
  for (const Subgroup& h : all_subgroups(make_s4(), 200)) CHECK(24 % h.order() == 0);
  CHECK_THROWS_AS(all_subgroups(make_s3(), 5), CapExceededError);
}
