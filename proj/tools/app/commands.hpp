// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include <iosfwd>

namespace gfsi::app {

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotFrame = 3;

// Entry point of the gfsi command-line tool.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gfsi::app
