#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dualdeg/boolfn.hpp"

namespace dualdeg {

struct SuiteConfig {
  uint64_t seed = 20260810;
  bool quick = false;  // skip the n = 12 end-to-end run
  std::string out_path;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double budget = 0;  // stated runtime target; 0 = none
  std::string details;
};

std::vector<CriterionResult> run_acceptance(const SuiteConfig& cfg);
json suite_summary(const std::vector<CriterionResult>& results, const SuiteConfig& cfg);

}  // namespace dualdeg
