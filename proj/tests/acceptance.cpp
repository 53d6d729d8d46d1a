// Acceptance battery: one line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <cstring>

#include "dualdeg/io.hpp"
#include "dualdeg/suite.hpp"

using namespace dualdeg;

int main(int argc, char** argv) {
  SuiteConfig cfg;
  for (int i = 1; i < argc; i++) {
    if (!strcmp(argv[i], "--quick")) cfg.quick = true;
    if (!strcmp(argv[i], "--seed") && i + 1 < argc) cfg.seed = strtoull(argv[++i], nullptr, 10);
    if (!strcmp(argv[i], "--out") && i + 1 < argc) cfg.out_path = argv[++i];
  }

  auto results = run_acceptance(cfg);
  int failed = 0;
  for (const auto& r : results) {
    std::string budget =
        r.budget > 0 ? " / target " + std::to_string(int(r.budget)) + "s" : "";
    printf("[%2d] %s %-26s (%.1fs%s) %s\n", r.id, r.pass ? "PASS" : "FAIL",
           r.name.c_str(), r.seconds, budget.c_str(), r.details.c_str());
    if (!r.pass) failed++;
  }
  printf("%d/%zu criteria passed\n", int(results.size()) - failed, results.size());
  if (!cfg.out_path.empty()) save_json(suite_summary(results, cfg), cfg.out_path);
  return failed == 0 ? 0 : 1;
}
