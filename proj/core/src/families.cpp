#include "notpowers/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "notpowers/arith.hpp"

namespace notpowers {

namespace {

// Largest table any family constructor will build (S7).
constexpr long long kMaxFamilyOrder = 5040;

long long parse_int(std::string_view text) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidParametersError("expected an integer in family spec, got '" +
                                 std::string(text) + "'");
  return value;
}

void check_order(long long order) {
  if (order > kMaxFamilyOrder)
    throw InvalidParametersError("family group order " + std::to_string(order) +
                                 " exceeds the supported maximum of " +
                                 std::to_string(kMaxFamilyOrder));
}

FiniteGroup make_cyclic(long long n) {
  if (n < 1) throw InvalidParametersError("cyclic:n requires n >= 1");
  check_order(n);
  std::vector<element_t> flat(size_t(n) * n);
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) flat[size_t(i) * n + j] = element_t((i + j) % n);
  return FiniteGroup::from_table(std::move(flat), int(n));
}

FiniteGroup make_abelian(const std::vector<long long>& moduli) {
  if (moduli.empty()) throw InvalidParametersError("abelian needs at least one modulus");
  long long order = 1;
  for (long long m : moduli) {
    if (m < 1) throw InvalidParametersError("abelian moduli must be >= 1");
    order *= m;
    check_order(order);
  }
  const int n = int(order);
  const int r = int(moduli.size());
  std::vector<long long> stride(r, 1);
  for (int i = r - 2; i >= 0; --i) stride[i] = stride[i + 1] * moduli[i + 1];

  std::vector<element_t> flat(size_t(n) * n);
  std::vector<long long> da(r), db(r);
  for (int a = 0; a < n; ++a) {
    long long rest = a;
    for (int i = 0; i < r; ++i) {
      da[i] = rest / stride[i];
      rest %= stride[i];
    }
    for (int b = 0; b < n; ++b) {
      rest = b;
      long long sum = 0;
      for (int i = 0; i < r; ++i) {
        db[i] = rest / stride[i];
        rest %= stride[i];
        sum += ((da[i] + db[i]) % moduli[i]) * stride[i];
      }
      flat[size_t(a) * n + b] = element_t(sum);
    }
  }
  return FiniteGroup::from_table(std::move(flat), n);
}

// Elements s^e r^a indexed as e*m + a, with r^a s = s r^{-a}.
FiniteGroup make_dihedral(long long m) {
  if (m < 1) throw InvalidParametersError("dihedral:m requires m >= 1");
  check_order(2 * m);
  const int n = int(2 * m);
  std::vector<element_t> flat(size_t(n) * n);
  for (long long e1 = 0; e1 < 2; ++e1)
    for (long long a1 = 0; a1 < m; ++a1)
      for (long long e2 = 0; e2 < 2; ++e2)
        for (long long a2 = 0; a2 < m; ++a2) {
          long long e = (e1 + e2) % 2;
          long long a = (((e2 ? -a1 : a1) + a2) % m + m) % m;
          flat[size_t(e1 * m + a1) * n + (e2 * m + a2)] = element_t(e * m + a);
        }
  return FiniteGroup::from_table(std::move(flat), n);
}

// <a, b | a^{2m} = 1, b^2 = a^m, b^{-1} a b = a^{-1}>; a^i at i, a^i b at 2m+i.
FiniteGroup make_dicyclic(long long m) {
  if (m < 1) throw InvalidParametersError("dicyclic:m requires m >= 1");
  check_order(4 * m);
  const long long mm = 2 * m;
  const int n = int(4 * m);
  auto idx = [mm](long long i, bool b) { return element_t((b ? mm : 0) + ((i % mm + mm) % mm)); };
  std::vector<element_t> flat(size_t(n) * n);
  for (long long i = 0; i < mm; ++i)
    for (long long j = 0; j < mm; ++j) {
      flat[size_t(idx(i, false)) * n + idx(j, false)] = idx(i + j, false);
      flat[size_t(idx(i, false)) * n + idx(j, true)] = idx(i + j, true);
      flat[size_t(idx(i, true)) * n + idx(j, false)] = idx(i - j, true);
      flat[size_t(idx(i, true)) * n + idx(j, true)] = idx(i - j + m, false);
    }
  return FiniteGroup::from_table(std::move(flat), n);
}

FiniteGroup make_permutation_group(long long n, bool even_only) {
  if (n < 1 || n > 7)
    throw InvalidParametersError("symmetric/alternating degree must be between 1 and 7");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  do {
    if (even_only) {
      int inversions = 0;
      for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) ++inversions;
      if (inversions % 2) continue;
    }
    index.emplace(perm, int(elems.size()));
    elems.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const int order = int(elems.size());
  check_order(order);
  std::vector<element_t> flat(size_t(order) * order);
  std::vector<int> prod(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (long long i = 0; i < n; ++i) prod[i] = elems[a][elems[b][i]];
      flat[size_t(a) * order + b] = element_t(index.at(prod));
    }
  return FiniteGroup::from_table(std::move(flat), order);
}

long long pow_mod(long long base, long long exp, long long mod) {
  long long result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// C_n x| C_d where the generator of C_d acts as x -> t*x (mod n).
FiniteGroup make_semidirect(long long n, long long d, long long t) {
  if (n < 2 || d < 1) throw InvalidParametersError("semidirect:n,d,t requires n >= 2, d >= 1");
  if (t < 1 || t >= n || std::gcd(t, n) != 1)
    throw InvalidParametersError("semidirect action multiplier must be a unit mod n");
  if (pow_mod(t, d, n) != 1)
    throw InvalidParametersError("semidirect action multiplier must satisfy t^d = 1 (mod n)");
  check_order(n * d);
  FiniteGroup base = make_cyclic(n);
  FiniteGroup top = make_cyclic(d);
  std::vector<std::vector<element_t>> action(d, std::vector<element_t>(n));
  for (long long h = 0; h < d; ++h) {
    long long u = pow_mod(t, h, n);
    for (long long x = 0; x < n; ++x) action[h][x] = element_t(u * x % n);
  }
  return semidirect_product(base, top, action);
}

FiniteGroup make_metacyclic_frobenius(long long q, long long d) {
  if (!is_prime(q)) throw InvalidParametersError("metacyclic_frobenius:q,d requires q prime");
  if (d < 2 || (q - 1) % d != 0)
    throw InvalidParametersError("metacyclic_frobenius:q,d requires d > 1 dividing q-1");
  long long t = 0;
  for (long long cand = 2; cand < q; ++cand) {
    if (multiplicative_order(cand, q) == d) {
      t = cand;
      break;
    }
  }
  if (t == 0) throw InvalidParametersError("no element of order d modulo q");
  return make_semidirect(q, d, t);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string fingerprint(const FiniteGroup& g) {
  std::string fp = "o" + std::to_string(g.order()) + ";e";
  std::vector<int> orders = g.element_orders();
  std::sort(orders.begin(), orders.end());
  for (int o : orders) fp += std::to_string(o) + ",";
  fp += ";c";
  std::vector<size_t> sizes;
  for (const auto& cls : conjugacy_classes(g)) sizes.push_back(cls.members.size());
  std::sort(sizes.begin(), sizes.end());
  for (size_t s : sizes) fp += std::to_string(s) + ",";
  return fp;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 >= text.size())
    throw InvalidParametersError("family spec must look like 'family:params', got '" +
                                 std::string(text) + "'");
  FamilySpec spec;
  spec.family = std::string(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);

  if (spec.family == "dp") {
    auto parts = split(rest, '|');
    if (parts.size() < 2)
      throw InvalidParametersError("dp needs at least two '|'-separated factors");
    for (auto part : parts) {
      FamilySpec factor = FamilySpec::parse(part);
      if (factor.family == "dp")
        throw InvalidParametersError("nested dp is not supported; list all factors in one dp");
      spec.factors.push_back(std::move(factor));
    }
    return spec;
  }

  for (auto part : split(rest, ',')) spec.params.push_back(parse_int(part));
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = family + ":";
  if (family == "dp") {
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "|";
      out += factors[i].to_string();
    }
    return out;
  }
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out;
}

FiniteGroup make(const FamilySpec& spec) {
  auto want = [&](size_t count) {
    if (spec.params.size() != count)
      throw InvalidParametersError("family '" + spec.family + "' takes " +
                                   std::to_string(count) + " parameter(s)");
  };

  FiniteGroup g = [&]() -> FiniteGroup {
    if (spec.family == "cyclic") {
      want(1);
      return make_cyclic(spec.params[0]);
    }
    if (spec.family == "abelian") return make_abelian(spec.params);
    if (spec.family == "dihedral") {
      want(1);
      return make_dihedral(spec.params[0]);
    }
    if (spec.family == "dicyclic") {
      want(1);
      return make_dicyclic(spec.params[0]);
    }
    if (spec.family == "symmetric") {
      want(1);
      return make_permutation_group(spec.params[0], false);
    }
    if (spec.family == "alternating") {
      want(1);
      return make_permutation_group(spec.params[0], true);
    }
    if (spec.family == "metacyclic_frobenius") {
      want(2);
      return make_metacyclic_frobenius(spec.params[0], spec.params[1]);
    }
    if (spec.family == "semidirect") {
      want(3);
      return make_semidirect(spec.params[0], spec.params[1], spec.params[2]);
    }
    if (spec.family == "dp") {
      FiniteGroup product = make(spec.factors.at(0));
      for (size_t i = 1; i < spec.factors.size(); ++i) {
        FiniteGroup factor = make(spec.factors[i]);
        check_order((long long)product.order() * factor.order());
        product = direct_product(product, factor);
      }
      return product;
    }
    throw InvalidParametersError("unknown family '" + spec.family + "'");
  }();

  g.set_label(spec.to_string());
  return g;
}

FiniteGroup make(std::string_view spec) { return make(FamilySpec::parse(spec)); }

std::vector<FiniteGroup> builtin_corpus(int max_order) {
  if (max_order < 1) throw InvalidParametersError("builtin corpus needs max_order >= 1");
  const long long n = max_order;

  std::vector<FiniteGroup> corpus;
  std::set<std::string> seen;
  auto add = [&](FiniteGroup g) {
    if (seen.insert(fingerprint(g)).second) corpus.push_back(std::move(g));
  };
  auto add_spec = [&](const std::string& text) { add(make(text)); };

  for (long long i = 1; i <= n; ++i) add_spec("cyclic:" + std::to_string(i));

  // Non-decreasing factor sequences (m1, m2, ...) with at least two factors.
  std::vector<long long> moduli;
  auto abelian_dfs = [&](auto&& self, long long min_factor, long long budget) -> void {
    for (long long f = min_factor; f <= budget; ++f) {
      moduli.push_back(f);
      if (moduli.size() >= 2) {
        std::string text = "abelian:";
        for (size_t i = 0; i < moduli.size(); ++i)
          text += (i ? "," : "") + std::to_string(moduli[i]);
        add_spec(text);
      }
      self(self, f, budget / f);
      moduli.pop_back();
    }
  };
  abelian_dfs(abelian_dfs, 2, n);

  for (long long m = 2; 2 * m <= n; ++m) add_spec("dihedral:" + std::to_string(m));
  for (long long m = 1; 4 * m <= n; ++m) add_spec("dicyclic:" + std::to_string(m));

  long long factorial = 2;
  for (long long deg = 3; deg <= 5; ++deg) {
    factorial *= deg;
    if (factorial > n) break;
    add_spec("symmetric:" + std::to_string(deg));
  }
  factorial = 2;
  for (long long deg = 3; deg <= 5; ++deg) {
    factorial *= deg;
    if (factorial > n) break;
    add_spec("alternating:" + std::to_string(deg));
  }

  for (long long q = 3; 2 * q <= n; ++q) {
    if (!is_prime(q)) continue;
    for (long long d = 2; d < q; ++d)
      if ((q - 1) % d == 0 && q * d <= n)
        add_spec("metacyclic_frobenius:" + std::to_string(q) + "," + std::to_string(d));
  }

  // Pairwise products of everything kept so far. Order-1 factors only
  // reproduce the other factor, so they are skipped outright.
  const size_t base_count = corpus.size();
  for (size_t i = 0; i < base_count; ++i) {
    if (corpus[i].order() == 1) continue;
    for (size_t j = i; j < base_count; ++j) {
      if (corpus[j].order() == 1) continue;
      if ((long long)corpus[i].order() * corpus[j].order() > n) continue;
      FiniteGroup g = direct_product(corpus[i], corpus[j]);
      g.set_label("dp:" + corpus[i].label() + "|" + corpus[j].label());
      add(std::move(g));
    }
  }

  return corpus;
}

}  // namespace notpowers
