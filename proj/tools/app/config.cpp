// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "gfsi/error.hpp"

namespace gfsi::app {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view why) {
  throw Error(ErrorKind::config, std::string(key) + ": " + std::string(why) + " (got '" + std::string(value) + "')");
}

double to_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(out)) {
    bad_value(key, value, "expected a number");
  }
  return out;
}

long long to_integer(std::string_view key, std::string_view value) {
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) bad_value(key, value, "expected an integer");
  return out;
}

// Message without the "kind: " prefix, for re-wrapping.
std::string message_of(const Error& e) {
  const std::string w = e.what();
  const std::string prefix = std::string(gfsi::to_string(e.kind())) + ": ";
  return w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
}

}  // namespace

const char* to_string(OutputFormat format) noexcept {
  switch (format) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::matrix:
      return "matrix";
    case OutputFormat::json:
      return "json";
  }
  return "csv";
}

const std::vector<std::string>& RunConfig::keys() {
  static const std::vector<std::string> k = {"grid.n",          "grid.dt",           "frame.radius",
                                             "frame.battery_k", "tolerance.algebraic", "tolerance.transform",
                                             "tolerance.bounds", "output.dir",         "output.format"};
  return k;
}

GridSpec RunConfig::grid() const {
  const double dt = grid_dt > 0.0 ? grid_dt : 1.0 / std::sqrt(static_cast<double>(grid_n));
  return GridSpec::make(grid_n, dt);
}

double RunConfig::transform_tolerance() const {
  if (tol_transform > 0.0) return tol_transform;
  return grid_n >= 1024 ? 1e-7 : 1e-6;
}

void RunConfig::set(std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  if (value.empty()) bad_value(key, raw, "empty value");
  if (key == "grid.n") {
    const long long n = to_integer(key, value);
    if (n < 8 || n % 2 != 0) bad_value(key, value, "must be an even integer >= 8");
    grid_n = static_cast<std::size_t>(n);
  } else if (key == "grid.dt") {
    grid_dt = to_double(key, value);
  } else if (key == "frame.radius") {
    frame_radius = to_double(key, value);
  } else if (key == "frame.battery_k") {
    const long long k = to_integer(key, value);
    if (k < 1 || k > kMaxHermiteOrder) bad_value(key, value, "must lie in [1, 60]");
    battery_k = static_cast<int>(k);
  } else if (key == "tolerance.algebraic") {
    tol_algebraic = to_double(key, value);
  } else if (key == "tolerance.transform") {
    tol_transform = to_double(key, value);
  } else if (key == "tolerance.bounds") {
    tol_bounds = to_double(key, value);
  } else if (key == "output.dir") {
    output_dir = std::string(value);
  } else if (key == "output.format") {
    if (value == "csv") {
      format = OutputFormat::csv;
    } else if (value == "matrix") {
      format = OutputFormat::matrix;
    } else if (value == "json") {
      format = OutputFormat::json;
    } else {
      bad_value(key, value, "expected csv, matrix or json");
    }
  } else {
    throw Error(ErrorKind::config, "unknown key '" + std::string(key) + "'");
  }
}

void RunConfig::validate() const {
  const double floor = std::numeric_limits<double>::epsilon() * 1e3;
  auto positive = [](const char* key, double v) {
    if (!(v > 0.0)) throw Error(ErrorKind::config, std::string(key) + " must be positive");
  };
  if (grid_dt < 0.0) throw Error(ErrorKind::config, "grid.dt must be positive");
  positive("frame.radius", frame_radius);
  for (const auto& [key, v] : {std::pair{"tolerance.algebraic", tol_algebraic}, std::pair{"tolerance.bounds", tol_bounds},
                               std::pair{"tolerance.transform", transform_tolerance()}}) {
    if (!(v >= floor)) throw Error(ErrorKind::config, std::string(key) + " must be at least 1e3 machine epsilon");
  }
  if (output_dir.empty()) throw Error(ErrorKind::config, "output.dir must not be empty");
  try {
    (void)grid();
  } catch (const Error& e) {
    throw Error(ErrorKind::config, message_of(e));
  }
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["grid.n"] = grid_n;
  j["grid.dt"] = grid().dt;
  j["frame.radius"] = frame_radius;
  j["frame.battery_k"] = battery_k;
  j["tolerance.algebraic"] = tol_algebraic;
  j["tolerance.transform"] = transform_tolerance();
  j["tolerance.bounds"] = tol_bounds;
  j["output.dir"] = output_dir;
  j["output.format"] = to_string(format);
  return j;
}

void apply_config_text(RunConfig& config, std::string_view text, std::string_view origin) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = std::string(origin) + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw Error(ErrorKind::config, where + "expected 'key = value'");
    try {
      config.set(trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(ErrorKind::config, where + message_of(e));
    }
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::config, "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(config, buf.str(), path);
}

}  // namespace gfsi::app
