#pragma once

#include <string>
#include <vector>

namespace tc {

struct SuiteOptions {
  int size = -1;  // suite-specific bound; -1 keeps the default
  int jobs = 1;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  int default_size;
};

// Exhaustive checks, in acceptance order.
const std::vector<SuiteInfo>& suites();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace tc
