// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include <stdexcept>
#include <string>

namespace gfsi {

enum class ErrorKind {
  invalid_input,
  not_free,
  invalid_form,
  invalid_mass,
  invalid_lattice,
  resolution,
  kernel_undersampled,
  truncation,
  cost_guard,
  convention_violation,
  eigen_failure,
  config,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gfsi
