// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace gfsi::app {

// A named group of verification cases with its runtime budget.
struct Check {
  int id = 0;
  std::string suite;  // symplectic, metaplectic, tfa, frames
  std::string title;
  double time_limit_s = 0.0;  // 0: no budget
  std::vector<CaseRecord> (*run)(const RunConfig&) = nullptr;
};

// Checks 1..10 in order.
const std::vector<Check>& checks();

// suite: all, symplectic, metaplectic, tfa or frames. Unknown names throw
// ErrorKind::config.
std::vector<const Check*> checks_for_suite(std::string_view suite);

VerdictReport run_suite(std::string_view suite, const RunConfig& config);

}  // namespace gfsi::app
