#include "notpowers/group.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace notpowers {

namespace {

using Mask = std::vector<std::uint64_t>;

Mask make_mask(int order) { return Mask((size_t(order) + 63) / 64, 0); }

bool mask_test(const Mask& m, element_t x) { return (m[size_t(x) >> 6] >> (x & 63)) & 1; }

void mask_set(Mask& m, element_t x) { m[size_t(x) >> 6] |= std::uint64_t(1) << (x & 63); }

bool mask_subset(const Mask& a, const Mask& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

struct MaskHash {
  size_t operator()(const Mask& m) const {
    size_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : m) {
      h ^= w;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

// Extends a product-closed member set by `seed`, keeping `members`/`mask` in
// sync. Every ordered pair with at least one new factor gets multiplied out.
void grow_closure(const FiniteGroup& g, std::vector<element_t>& members, Mask& mask,
                  std::span<const element_t> seed) {
  size_t next = members.size();
  for (element_t x : seed) {
    if (!mask_test(mask, x)) {
      mask_set(mask, x);
      members.push_back(x);
    }
  }
  while (next < members.size()) {
    element_t z = members[next++];
    for (size_t i = 0; i < members.size(); ++i) {
      element_t m = members[i];
      for (element_t p : {g.mul(z, m), g.mul(m, z)}) {
        if (!mask_test(mask, p)) {
          mask_set(mask, p);
          members.push_back(p);
        }
      }
    }
  }
}

std::vector<element_t> closure_members(const FiniteGroup& g, std::span<const element_t> gens) {
  std::vector<element_t> members{kIdentityElement};
  Mask mask = make_mask(g.order());
  mask_set(mask, kIdentityElement);
  grow_closure(g, members, mask, gens);
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<element_t> flat, int order, std::string label,
                                    const ValidationOptions& opts) {
  if (order < 1) throw InvalidParametersError("group order must be at least 1");
  if (flat.size() != size_t(order) * order)
    throw InvalidParametersError("flat table size does not match order^2");
  const int n = order;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      element_t v = flat[size_t(a) * n + b];
      if (v < 0 || v >= n) throw NotClosedError(a, b, v);
    }

  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = flat[size_t(cand) * n + x] == x && flat[size_t(x) * n + cand] == x;
    if (ok) e = cand;
  }
  if (e < 0) throw NoIdentityError();

  if (e != 0) {
    // Relabel by the transposition (0 e) so the identity lands at index 0.
    auto tau = [e](element_t x) -> element_t { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<element_t> relabeled(flat.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        relabeled[size_t(a) * n + b] = tau(flat[size_t(tau(a)) * n + tau(b)]);
    flat = std::move(relabeled);
  }

  std::vector<element_t> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (flat[size_t(x) * n + y] == 0 && flat[size_t(y) * n + x] == 0) {
        inverse[x] = y;
        break;
      }
    }
    if (inverse[x] < 0) throw NoInverseError(x);
  }

  if (n <= opts.assoc_full_check_cap) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        element_t ab = flat[size_t(a) * n + b];
        for (int c = 0; c < n; ++c)
          if (flat[size_t(ab) * n + c] != flat[size_t(a) * n + flat[size_t(b) * n + c]])
            throw NotAssociativeError(a, b, c);
      }
  } else {
    std::mt19937 rng(0x6e6f7477u);  // fixed seed: validation must be deterministic
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < opts.assoc_spot_checks; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      element_t ab = flat[size_t(a) * n + b];
      if (flat[size_t(ab) * n + c] != flat[size_t(a) * n + flat[size_t(b) * n + c]])
        throw NotAssociativeError(a, b, c);
    }
  }

  std::vector<int> orders(n, 1);
  for (int x = 1; x < n; ++x) {
    element_t y = x;
    int ord = 1;
    while (y != 0) {
      y = flat[size_t(y) * n + x];
      if (++ord > n)
        throw Error("element " + std::to_string(x) +
                    " has no finite order; the table is not a group");
    }
    orders[x] = ord;
  }

  bool abelian = true;
  for (int a = 0; a < n && abelian; ++a)
    for (int b = a + 1; b < n && abelian; ++b)
      abelian = flat[size_t(a) * n + b] == flat[size_t(b) * n + a];

  FiniteGroup g;
  g.order_ = n;
  g.abelian_ = abelian;
  g.label_ = std::move(label);
  g.table_ = std::move(flat);
  g.inverse_ = std::move(inverse);
  g.element_order_ = std::move(orders);
  return g;
}

FiniteGroup build_from_cayley(const std::vector<std::vector<element_t>>& table, std::string label,
                              const ValidationOptions& opts) {
  const size_t n = table.size();
  if (n == 0) throw InvalidParametersError("Cayley table must have at least one row");
  std::vector<element_t> flat;
  flat.reserve(n * n);
  for (size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw InvalidParametersError("Cayley table row " + std::to_string(i) + " has " +
                                   std::to_string(table[i].size()) + " entries, expected " +
                                   std::to_string(n));
    flat.insert(flat.end(), table[i].begin(), table[i].end());
  }
  return FiniteGroup::from_table(std::move(flat), int(n), std::move(label), opts);
}

FiniteGroup build_from_permutations(const PermutationGenSet& gens, int closure_cap,
                                    std::string label) {
  const int d = gens.degree;
  if (d < 1) throw InvalidParametersError("permutation degree must be at least 1");
  if (closure_cap < 1) throw InvalidParametersError("closure cap must be positive");
  for (const auto& p : gens.generators) {
    if (int(p.size()) != d)
      throw InvalidParametersError("generator image array has wrong length");
    std::vector<bool> hit(d, false);
    for (element_t img : p) {
      if (img < 0 || img >= d || hit[img])
        throw InvalidParametersError("generator image array is not a permutation");
      hit[img] = true;
    }
  }

  struct VecHash {
    size_t operator()(const std::vector<element_t>& v) const {
      size_t h = 0xcbf29ce484222325ULL;
      for (element_t x : v) {
        h ^= size_t(x) + 0x9e3779b97f4a7c15ULL;
        h *= 0x100000001b3ULL;
      }
      return h;
    }
  };

  std::vector<std::vector<element_t>> elems;
  std::unordered_map<std::vector<element_t>, element_t, VecHash> index;
  std::vector<element_t> id(d);
  for (int i = 0; i < d; ++i) id[i] = i;
  elems.push_back(id);
  index.emplace(id, 0);

  auto compose = [d](const std::vector<element_t>& a, const std::vector<element_t>& b) {
    std::vector<element_t> c(d);
    for (int i = 0; i < d; ++i) c[i] = a[b[i]];
    return c;
  };

  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : gens.generators) {
      auto prod = compose(elems[head], gen);
      if (index.emplace(prod, element_t(elems.size())).second) {
        if (int(elems.size()) >= closure_cap)
          throw CapExceededError("permutation closure", closure_cap);
        elems.push_back(std::move(prod));
      }
    }
  }

  const int n = int(elems.size());
  std::vector<element_t> flat(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[size_t(a) * n + b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup::from_table(std::move(flat), n, std::move(label));
}

element_t power(const FiniteGroup& g, element_t x, long long k) {
  if (k < 0) throw InvalidParametersError("power exponent must be non-negative");
  element_t result = kIdentityElement;
  element_t base = x;
  while (k > 0) {
    if (k & 1) result = g.mul(result, base);
    base = g.mul(base, base);
    k >>= 1;
  }
  return result;
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<element_t> members)
    : parent_(&parent), members_(std::move(members)) {
  const int n = parent.order();
  mask_ = make_mask(n);
  element_t prev = -1;
  for (element_t x : members_) {
    if (x < 0 || x >= n) throw InvalidParametersError("subgroup member out of range");
    if (x <= prev) throw InvalidParametersError("subgroup members must be sorted and unique");
    prev = x;
    mask_set(mask_, x);
  }
  if (members_.empty() || members_[0] != kIdentityElement)
    throw InvalidParametersError("subgroup must contain the identity");
  for (element_t a : members_) {
    if (!contains(parent.inverse(a)))
      throw InvalidParametersError("subgroup is not closed under inverses");
    for (element_t b : members_)
      if (!contains(parent.mul(a, b)))
        throw InvalidParametersError("subgroup is not closed under products");
  }
  if (n % int(members_.size()) != 0)
    throw InvalidParametersError("subgroup order does not divide the group order");
}

Subgroup center(const FiniteGroup& g) {
  std::vector<element_t> members;
  for (element_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (element_t y = 0; y < g.order() && central; ++y) central = g.commutes(x, y);
    if (central) members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

Subgroup centralizer(const FiniteGroup& g, element_t x) {
  std::vector<element_t> members;
  for (element_t y = 0; y < g.order(); ++y)
    if (g.commutes(x, y)) members.push_back(y);
  return Subgroup(g, std::move(members));
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<ConjugacyClass> classes;
  Mask seen = make_mask(n);
  for (element_t x = 0; x < n; ++x) {
    if (mask_test(seen, x)) continue;
    ConjugacyClass cls;
    cls.representative = x;
    cls.element_order = g.element_order(x);
    Mask in_class = make_mask(n);
    for (element_t h = 0; h < n; ++h) {
      element_t y = g.conjugate(h, x);
      if (!mask_test(in_class, y)) {
        mask_set(in_class, y);
        mask_set(seen, y);
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const element_t> generators) {
  for (element_t x : generators)
    if (x < 0 || x >= g.order()) throw InvalidParametersError("generator out of range");
  return Subgroup(g, closure_members(g, generators));
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup(g, std::vector<element_t>{kIdentityElement});
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<element_t> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = element_t(i);
  return Subgroup(g, std::move(all));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  if (&h.parent() != &g) throw InvalidParametersError("subgroup belongs to a different group");
  for (element_t x : h.members())
    for (element_t gg = 0; gg < g.order(); ++gg)
      if (!h.contains(g.conjugate(gg, x))) return false;
  return true;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  if (&h.parent() != &g) throw InvalidParametersError("subgroup belongs to a different group");
  std::vector<element_t> members;
  for (element_t x = 0; x < g.order(); ++x) {
    bool normalizes = true;
    for (element_t m : h.members()) {
      if (!h.contains(g.conjugate(x, m))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  if (&n.parent() != &g) throw InvalidParametersError("subgroup belongs to a different group");
  if (!is_normal(g, n)) throw NotNormalError();

  const int order = g.order();
  std::vector<element_t> coset(order, -1);
  int num_cosets = 0;
  for (element_t x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    // x is the smallest member of its coset, so cosets get numbered in order
    // of their smallest representative; the identity coset is 0.
    element_t id = element_t(num_cosets++);
    for (element_t m : n.members()) coset[g.mul(x, m)] = id;
  }

  std::vector<element_t> reps(num_cosets, -1);
  for (element_t x = 0; x < order; ++x)
    if (reps[coset[x]] < 0) reps[coset[x]] = x;

  std::vector<element_t> flat(size_t(num_cosets) * num_cosets);
  for (int a = 0; a < num_cosets; ++a)
    for (int b = 0; b < num_cosets; ++b)
      flat[size_t(a) * num_cosets + b] = coset[g.mul(reps[a], reps[b])];

  std::string label = g.label().empty() ? "" : g.label() + "/(" + std::to_string(n.order()) + ")";
  QuotientResult result{FiniteGroup::from_table(std::move(flat), num_cosets, std::move(label)),
                        std::move(coset)};
  return result;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<element_t> flat(size_t(n) * n);
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2) {
          int lhs = a1 * nb + b1, rhs = a2 * nb + b2;
          flat[size_t(lhs) * n + rhs] = a.mul(a1, a2) * nb + b.mul(b1, b2);
        }
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = "dp:" + a.label() + "|" + b.label();
  return FiniteGroup::from_table(std::move(flat), n, std::move(label));
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<element_t>>& action) {
  const int nn = n.order(), nh = h.order();
  if (int(action.size()) != nh)
    throw InvalidParametersError("action must assign one automorphism per element of H");
  for (int hh = 0; hh < nh; ++hh) {
    const auto& phi = action[hh];
    if (int(phi.size()) != nn) throw NotAutomorphismError(hh);
    std::vector<bool> hit(nn, false);
    for (element_t img : phi) {
      if (img < 0 || img >= nn || hit[img]) throw NotAutomorphismError(hh);
      hit[img] = true;
    }
    for (int x = 0; x < nn; ++x)
      for (int y = 0; y < nn; ++y)
        if (phi[n.mul(x, y)] != n.mul(phi[x], phi[y])) throw NotAutomorphismError(hh);
  }
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2) {
      const auto& composed = action[h.mul(h1, h2)];
      for (int x = 0; x < nn; ++x)
        if (action[h1][action[h2][x]] != composed[x]) throw ActionNotHomomorphismError(h1, h2);
    }

  const int order = nn * nh;
  std::vector<element_t> flat(size_t(order) * order);
  for (int n1 = 0; n1 < nn; ++n1)
    for (int h1 = 0; h1 < nh; ++h1)
      for (int n2 = 0; n2 < nn; ++n2)
        for (int h2 = 0; h2 < nh; ++h2) {
          int lhs = n1 * nh + h1, rhs = n2 * nh + h2;
          flat[size_t(lhs) * order + rhs] = n.mul(n1, action[h1][n2]) * nh + h.mul(h1, h2);
        }
  std::string label;
  if (!n.label().empty() && !h.label().empty()) label = "sdp:" + n.label() + "|" + h.label();
  return FiniteGroup::from_table(std::move(flat), order, std::move(label));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int lattice_cap) {
  if (lattice_cap < 1) throw InvalidParametersError("lattice cap must be positive");
  if (g.order() > lattice_cap) throw CapExceededError("subgroup lattice group order", lattice_cap);
  const int n = g.order();

  std::vector<std::vector<element_t>> groups;  // sorted member lists
  std::vector<Mask> masks;
  std::unordered_set<Mask, MaskHash> seen;

  auto add = [&](std::vector<element_t> members, Mask mask) -> bool {
    if (!seen.insert(mask).second) return false;
    groups.push_back(std::move(members));
    masks.push_back(std::move(mask));
    return true;
  };

  {
    std::vector<element_t> triv{kIdentityElement};
    Mask mask = make_mask(n);
    mask_set(mask, kIdentityElement);
    add(std::move(triv), std::move(mask));
  }

  // Distinct cyclic subgroups seed the lattice; everything else arises as a
  // join of a known subgroup with one of them.
  std::vector<size_t> cyclic_ids;
  for (element_t x = 1; x < n; ++x) {
    std::vector<element_t> members{kIdentityElement};
    Mask mask = make_mask(n);
    mask_set(mask, kIdentityElement);
    element_t y = x;
    while (y != kIdentityElement) {
      members.push_back(y);
      mask_set(mask, y);
      y = g.mul(y, x);
    }
    std::sort(members.begin(), members.end());
    size_t before = groups.size();
    if (add(std::move(members), std::move(mask))) cyclic_ids.push_back(before);
  }

  for (size_t head = 0; head < groups.size(); ++head) {
    for (size_t cid : cyclic_ids) {
      if (mask_subset(masks[cid], masks[head])) continue;
      std::vector<element_t> members = groups[head];
      Mask mask = masks[head];
      grow_closure(g, members, mask, groups[cid]);
      if (seen.contains(mask)) continue;
      std::sort(members.begin(), members.end());
      add(std::move(members), std::move(mask));
    }
  }

  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(groups.size());
  for (auto& members : groups) out.emplace_back(g, std::move(members));
  return out;
}

}  // namespace notpowers
