#pragma once

#include <stdexcept>
#include <string>

namespace notpowers {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A Cayley table entry is outside [0, n).
class NotClosedError : public Error {
 public:
  NotClosedError(int row, int col, long long value)
      : Error("table entry at (" + std::to_string(row) + ", " + std::to_string(col) +
              ") is " + std::to_string(value) + ", outside the element range"),
        row(row), col(col), value(value) {}
  int row;
  int col;
  long long value;
};

class NoIdentityError : public Error {
 public:
  NoIdentityError() : Error("table has no two-sided identity element") {}
};

class NoInverseError : public Error {
 public:
  explicit NoInverseError(int element)
      : Error("element " + std::to_string(element) + " has no two-sided inverse"),
        element(element) {}
  int element;
};

class NotAssociativeError : public Error {
 public:
  NotAssociativeError(int a, int b, int c)
      : Error("associativity fails for the triple (" + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(c) + ")"),
        a(a), b(b), c(c) {}
  int a;
  int b;
  int c;
};

/// An enumeration (closure, subgroup lattice, ...) exceeded its configured cap.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what_exceeded, long long limit)
      : Error(what_exceeded + " exceeded the configured cap of " + std::to_string(limit)),
        limit(limit) {}
  long long limit;
};

class NotNormalError : public Error {
 public:
  NotNormalError() : Error("subgroup is not normal in its parent") {}
};

class NotPrimeError : public Error {
 public:
  explicit NotPrimeError(long long value)
      : Error(std::to_string(value) + " is not prime"), value(value) {}
  long long value;
};

class NotOddPrimeError : public Error {
 public:
  explicit NotOddPrimeError(long long value)
      : Error(std::to_string(value) + " is not an odd prime"), value(value) {}
  long long value;
};

class PrimeDoesNotDivideOrderError : public Error {
 public:
  PrimeDoesNotDivideOrderError(long long p, long long order)
      : Error(std::to_string(p) + " does not divide the group order " + std::to_string(order)),
        p(p), order(order) {}
  long long p;
  long long order;
};

class NotAutomorphismError : public Error {
 public:
  explicit NotAutomorphismError(int h)
      : Error("action of element " + std::to_string(h) + " is not an automorphism"), h(h) {}
  int h;
};

class ActionNotHomomorphismError : public Error {
 public:
  ActionNotHomomorphismError(int h1, int h2)
      : Error("action is not a homomorphism: composing the actions of " + std::to_string(h1) +
              " and " + std::to_string(h2) + " does not match the action of their product"),
        h1(h1), h2(h2) {}
  int h1;
  int h2;
};

class InvalidParametersError : public Error {
 public:
  explicit InvalidParametersError(const std::string& what) : Error(what) {}
};

/// reduce_k_to_prime found no prime divisor of k with 0 < n_p <= n_k.
class NoSuchPrimeError : public Error {
 public:
  explicit NoSuchPrimeError(long long k)
      : Error("no prime divisor of " + std::to_string(k) +
              " has a non-power count bounded by the one for " + std::to_string(k)),
        k(k) {}
  long long k;
};

/// A group file could not be parsed; line and column are 1-based (column 0 = whole line).
class ParseError : public Error {
 public:
  ParseError(std::string source, int line, int column, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        source(std::move(source)), line(line), column(column) {}
  std::string source;
  int line;
  int column;
};

}  // namespace notpowers
