#pragma once

#include <string>
#include <vector>

namespace floorcount {

enum class Suite { Paper, Oracles, Invariance };

struct CheckResult {
  std::string name;
  bool pass;
  std::string expected;
  std::string computed;
};

/// Runs one verification suite; every check is exact.
std::vector<CheckResult> run_suite(Suite suite);

}  // namespace floorcount
