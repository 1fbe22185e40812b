// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include <iostream>

#include "app/commands.hpp"

int main(int argc, char** argv) { return gfsi::app::run_cli(argc, argv, std::cout, std::cerr); }
