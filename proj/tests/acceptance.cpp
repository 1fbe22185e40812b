// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

// One line per acceptance criterion at the default configuration; exits
// non-zero if any criterion fails or exceeds its runtime budget.

#include <chrono>
#include <cstdio>
#include <string>

#include "app/checks.hpp"
#include "app/config.hpp"
#include "gfsi/kernels.hpp"

int main() {
  using namespace gfsi::app;
  const RunConfig config;
  std::printf("acceptance: grid N = %zu, kernels %s\n", config.grid_n, gfsi::kernels::to_string(gfsi::kernels::active().isa));
  std::fflush(stdout);
  int failed = 0;
  for (const Check& check : checks()) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<CaseRecord> cases = check.run(config);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::size_t passed = 0;
    const CaseRecord* worst_case = nullptr;
    for (const CaseRecord& c : cases) {
      if (c.pass()) {
        ++passed;
      } else if (worst_case == nullptr) {
        worst_case = &c;
      }
    }
    const bool in_budget = check.time_limit_s <= 0.0 || secs <= check.time_limit_s;
    const bool ok = !cases.empty() && passed == cases.size() && in_budget;
    failed += ok ? 0 : 1;

    std::string budget = check.time_limit_s > 0.0 ? " (budget " + std::to_string(static_cast<int>(check.time_limit_s)) + " s)" : "";
    std::string note;
    if (!in_budget) note += "; over budget";
    if (worst_case != nullptr) {
      note += "; first failure: " + worst_case->name;
      if (!worst_case->error.empty()) {
        note += ": " + worst_case->error;
      } else if (const Metric* m = worst_case->worst()) {
        char buf[160];
        std::snprintf(buf, sizeof buf, ": %s = %.3g (limit %.3g)", m->name.c_str(), m->value, m->tolerance);
        note += buf;
      }
    }
    std::printf("criterion %2d %s  %s: %zu/%zu cases, %.2f s%s%s\n", check.id, ok ? "PASS" : "FAIL", check.title.c_str(),
                passed, cases.size(), secs, budget.c_str(), note.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d of %zu criteria failed\n", failed, checks().size());
  return failed == 0 ? 0 : 1;
}
