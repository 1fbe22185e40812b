// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace gfsi::app {

using ojson = nlohmann::ordered_json;

// One measured number with the tolerance it is judged against.
struct Metric {
  enum class Relation { at_most, above };

  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::at_most;
  std::string method;

  bool pass() const noexcept;
};

Metric at_most(std::string name, double value, double tolerance, std::string method);
Metric above(std::string name, double value, double threshold, std::string method);
// Boolean facts are recorded as 1 / 0 and pass above 0.5.
Metric holds(std::string name, bool value, std::string method);

struct CaseRecord {
  std::string name;
  ojson inputs = ojson::object();
  ojson details = ojson::object();  // supporting numbers, each with its method
  std::vector<Metric> metrics;
  std::string error;  // set when the case threw

  bool pass() const noexcept;
  // Metric with the largest value / tolerance among failures (or overall).
  const Metric* worst() const noexcept;
};

struct VerdictReport {
  std::string suite;
  std::vector<CaseRecord> cases;
  ojson config = ojson::object();

  bool pass() const noexcept;
  std::size_t passed() const noexcept;
  ojson to_json() const;
};

const char* version() noexcept;

// Writes via a sibling temporary file and rename; creates parent directories.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Runs `body` and records any gfsi::Error / std::exception in `rec.error`.
template <class F>
CaseRecord run_case(std::string name, ojson inputs, F&& body) {
  CaseRecord rec{std::move(name), std::move(inputs), ojson::object(), {}, {}};
  try {
    body(rec);
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

}  // namespace gfsi::app
