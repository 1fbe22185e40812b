// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "report.hpp"

#include <cmath>
#include <fstream>

#include "gfsi/error.hpp"

#ifndef GFSI_VERSION
#define GFSI_VERSION "0.0.0"
#endif

namespace gfsi::app {

bool Metric::pass() const noexcept {
  if (!std::isfinite(value)) return false;
  return relation == Relation::at_most ? value <= tolerance : value > tolerance;
}

Metric at_most(std::string name, double value, double tolerance, std::string method) {
  return {std::move(name), value, tolerance, Metric::Relation::at_most, std::move(method)};
}

Metric above(std::string name, double value, double threshold, std::string method) {
  return {std::move(name), value, threshold, Metric::Relation::above, std::move(method)};
}

Metric holds(std::string name, bool value, std::string method) {
  return {std::move(name), value ? 1.0 : 0.0, 0.5, Metric::Relation::above, std::move(method)};
}

bool CaseRecord::pass() const noexcept {
  if (!error.empty() || metrics.empty()) return false;
  for (const Metric& m : metrics) {
    if (!m.pass()) return false;
  }
  return true;
}

const Metric* CaseRecord::worst() const noexcept {
  // Failures rank first; within each group, by value / tolerance.
  const Metric* out = nullptr;
  double score = -1.0;
  for (const Metric& m : metrics) {
    double ratio = m.relation == Metric::Relation::at_most && m.tolerance > 0 ? m.value / m.tolerance : 0.0;
    if (!std::isfinite(ratio)) ratio = 1e6;
    const double s = m.pass() ? ratio : 1e12 + ratio;
    if (s > score) {
      out = &m;
      score = s;
    }
  }
  return out;
}

bool VerdictReport::pass() const noexcept { return !cases.empty() && passed() == cases.size(); }

std::size_t VerdictReport::passed() const noexcept {
  std::size_t n = 0;
  for (const CaseRecord& c : cases) n += c.pass() ? 1 : 0;
  return n;
}

namespace {

// JSON has no NaN or infinity; record them as strings.
ojson number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

}  // namespace

ojson VerdictReport::to_json() const {
  ojson j;
  j["suite"] = suite;
  j["version"] = version();
  j["pass"] = pass();
  j["cases_total"] = cases.size();
  j["cases_passed"] = passed();
  j["config"] = config;
  ojson list = ojson::array();
  for (const CaseRecord& c : cases) {
    ojson cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass();
    cj["inputs"] = c.inputs;
    if (!c.details.empty()) cj["details"] = c.details;
    ojson ms = ojson::array();
    for (const Metric& m : c.metrics) {
      ojson mj;
      mj["name"] = m.name;
      mj["value"] = number(m.value);
      mj["relation"] = m.relation == Metric::Relation::at_most ? "<=" : ">";
      mj["tolerance"] = m.tolerance;
      mj["method"] = m.method;
      mj["pass"] = m.pass();
      ms.push_back(std::move(mj));
    }
    cj["metrics"] = std::move(ms);
    if (!c.error.empty()) cj["error"] = c.error;
    list.push_back(std::move(cj));
  }
  j["cases"] = std::move(list);
  return j;
}

const char* version() noexcept { return GFSI_VERSION; }

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  if (ec) throw Error(ErrorKind::config, "cannot create directory '" + path.parent_path().string() + "': " + ec.message());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::config, "cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw Error(ErrorKind::config, "write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorKind::config, "cannot rename onto '" + path.string() + "': " + ec.message());
  }
}

}  // namespace gfsi::app
