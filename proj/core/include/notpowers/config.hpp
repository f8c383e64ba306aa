#pragma once

#include <string>

namespace notpowers {

/// Shared resource caps and output settings. The caps bound the expensive
/// enumerations; hitting one raises CapExceededError, which the verifier
/// downgrades to a SKIPPED result.
struct Config {
  int lattice_cap = 200;            // max |G| for subgroup-lattice enumeration
  int closure_cap = 5000;           // max elements in a permutation closure
  int assoc_full_check_cap = 512;   // max |G| for the O(n^3) associativity check
  int jobs = 0;                     // verifier worker threads; 0 = hardware default

  enum class Format { kJson, kCsv, kText };
  Format format = Format::kJson;
  std::string output_path;          // empty = stdout
};

}  // namespace notpowers
