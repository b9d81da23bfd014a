#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rrca {

struct RegressionCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RegressionResult {
  std::string suite;
  std::vector<RegressionCase> cases;
  bool passed() const;
};

const std::vector<std::string>& regression_suites();

// Runs one suite against the embedded expected data; throws MathError on an unknown id.
RegressionResult run_regression(const std::string& suite, std::uint64_t seed);

}  // namespace rrca
