// Named property sweeps over the constructions, reported per invariant.
// Used by `altperm verify`.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace altperm {

struct InvariantResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string detail;  // first failure, when any
};

struct SuiteOptions {
  int rows = 5;   // bijection, extension, shape2
  int k = 5;      // doubling: pattern length bound; injections: k bound
  int n_max = 8;  // injections
};

std::vector<std::string> suite_names();

// "bijection", "extension", "doubling", "injections" or "shape2".
// Throws std::invalid_argument for other names.
std::vector<InvariantResult> run_suite(std::string_view name,
                                       const SuiteOptions& opts);

// "PASS  name  (checked N)" or "FAIL  name  (checked N): detail".
std::string format_result(const InvariantResult& r);

}  // namespace altperm
