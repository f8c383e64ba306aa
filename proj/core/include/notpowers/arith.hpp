#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace notpowers {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors of n, ascending. Empty for n <= 1.
inline std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Largest power of p dividing n (as a value, not an exponent).
inline long long p_part(long long n, long long p) {
  long long pp = 1;
  while (n % p == 0) {
    n /= p;
    pp *= p;
  }
  return pp;
}

/// Exponent of p in n.
inline int p_valuation(long long n, long long p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline long long euler_totient(long long n) {
  long long result = n;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      result -= result / d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// True iff n is p^k for some k >= 0.
inline bool is_prime_power_of(long long n, long long p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

inline long long mul_mod(long long a, long long b, long long m) { return a * b % m; }

/// Multiplicative order of t modulo m; requires gcd(t, m) == 1.
inline long long multiplicative_order(long long t, long long m) {
  long long x = t % m;
  long long ord = 1;
  while (x != 1 % m) {
    x = mul_mod(x, t, m);
    ++ord;
    if (ord > m) return 0;  // not a unit
  }
  return ord;
}

}  // namespace notpowers
