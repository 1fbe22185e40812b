// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "gfsi/error.hpp"

namespace gfsi {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_input:
      return "invalid-input";
    case ErrorKind::not_free:
      return "not-free";
    case ErrorKind::invalid_form:
      return "invalid-form";
    case ErrorKind::invalid_mass:
      return "invalid-mass";
    case ErrorKind::invalid_lattice:
      return "invalid-lattice";
    case ErrorKind::resolution:
      return "resolution";
    case ErrorKind::kernel_undersampled:
      return "kernel-undersampled";
    case ErrorKind::truncation:
      return "truncation";
    case ErrorKind::cost_guard:
      return "cost-guard";
    case ErrorKind::convention_violation:
      return "convention-violation";
    case ErrorKind::eigen_failure:
      return "eigen-failure";
    case ErrorKind::config:
      return "config";
  }
  return "unknown";
}

}  // namespace gfsi
