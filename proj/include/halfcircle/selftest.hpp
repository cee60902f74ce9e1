#pragma once

// Randomized property suites over one Cartan type, driven by a single seed.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace halfcircle {

struct SelftestOptions {
  std::string type = "A3";
  int iters = 100;
  std::uint64_t seed = 1;
  bool parallel = true;
};

struct PropertyResult {
  std::string name;
  int runs = 0;
  int passed = 0;
  std::string failure;  // reproducing input of the first failure
};

struct SuiteResult {
  std::string name;
  std::vector<PropertyResult> properties;

  bool ok() const;
};

/// Suites: coxeter, semifield, monoid, canonical, connect. Each suite draws
/// from its own generator seeded from `seed`, so the outcome does not
/// depend on `parallel`.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

bool selftest_ok(const std::vector<SuiteResult>& results);

/// One line per suite with pass counts, followed by any failures.
void print_selftest(const std::vector<SuiteResult>& results, std::ostream& out);

}  // namespace halfcircle
