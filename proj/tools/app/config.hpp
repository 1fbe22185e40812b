// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gfsi/signal.hpp"

namespace gfsi::app {

enum class OutputFormat { csv, matrix, json };

// Run-wide settings. Keys (file and --flag form):
//   grid.n, grid.dt, frame.radius, frame.battery_k,
//   tolerance.algebraic, tolerance.transform, tolerance.bounds,
//   output.dir, output.format
struct RunConfig {
  std::size_t grid_n = 1024;
  double grid_dt = 0.0;  // 0: 1 / sqrt(grid.n)
  double frame_radius = 8.0;
  int battery_k = 40;
  double tol_algebraic = 1e-12;
  double tol_transform = 0.0;  // 0: 1e-7 for grid.n >= 1024, else 1e-6
  double tol_bounds = 1e-2;
  std::string output_dir = "gfsi-output";
  OutputFormat format = OutputFormat::csv;

  GridSpec grid() const;
  double transform_tolerance() const;
  // Factor applied to every sampled-signal tolerance: transform / 1e-7.
  double transform_scale() const { return transform_tolerance() / 1e-7; }

  // Throws ErrorKind::config for unknown keys or unparsable values.
  void set(std::string_view key, std::string_view value);
  // Throws ErrorKind::config if an invariant is violated.
  void validate() const;
  nlohmann::ordered_json to_json() const;

  static const std::vector<std::string>& keys();
};

// Applies `key = value` lines (# comments, blank lines allowed) to `config`.
void apply_config_text(RunConfig& config, std::string_view text, std::string_view origin = "<config>");
void apply_config_file(RunConfig& config, const std::string& path);

const char* to_string(OutputFormat format) noexcept;

}  // namespace gfsi::app
