// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "specs.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <vector>

#include "gfsi/error.hpp"

namespace gfsi::app {

namespace {

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::config, "bad spec '" + std::string(text) + "': " + why);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s = s.substr(pos + 1);
  }
  return out;
}

double number(std::string_view text, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    fail(text, "'" + std::string(v) + "' is not a number");
  }
  return out;
}

// Splits "head:args" and returns head plus the raw argument list.
std::pair<std::string_view, std::vector<std::string_view>> head_args(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon + 1 == text.size()) fail(text, "expected kind:arguments");
  return {text.substr(0, colon), split(text.substr(colon + 1), ',')};
}

// Parses key=value arguments; every key in `required` must appear exactly once
// and no other key is accepted.
std::map<std::string, double> keyed(std::string_view text, const std::vector<std::string_view>& args,
                                    std::initializer_list<const char*> required) {
  std::map<std::string, double> out;
  for (std::string_view a : args) {
    const auto eq = a.find('=');
    if (eq == std::string_view::npos) fail(text, "expected key=value, got '" + std::string(a) + "'");
    const std::string key(a.substr(0, eq));
    bool known = false;
    for (const char* r : required) known = known || key == r;
    if (!known) fail(text, "unknown key '" + key + "'");
    if (!out.emplace(key, number(text, a.substr(eq + 1))).second) fail(text, "duplicate key '" + key + "'");
  }
  for (const char* r : required) {
    if (!out.contains(r)) fail(text, std::string("missing key '") + r + "'");
  }
  return out;
}

Lattice checked_lattice(std::string_view text, auto&& make) {
  try {
    return make();
  } catch (const Error& e) {
    fail(text, e.what());
  }
}

}  // namespace

SampledSignal WindowSpec::sample(const GridSpec& grid) const {
  return kind == Kind::gaussian ? gaussian(m).sample(grid) : hermite(k, m, grid);
}

WindowSpec parse_window(std::string_view text) {
  const auto [head, args] = head_args(text);
  WindowSpec w;
  w.text = std::string(text);
  if (head == "gaussian") {
    w.m = keyed(text, args, {"m"}).at("m");
  } else if (head == "hermite") {
    const auto kv = keyed(text, args, {"k", "m"});
    const double k = kv.at("k");
    if (k != std::floor(k) || k < 0 || k > kMaxHermiteOrder) fail(text, "k must be an integer in [0, 60]");
    w.kind = WindowSpec::Kind::hermite;
    w.k = static_cast<int>(k);
    w.m = kv.at("m");
  } else {
    fail(text, "window kind must be gaussian or hermite");
  }
  if (!(w.m > 0.0)) fail(text, "m must be positive");
  return w;
}

LatticeSpec parse_lattice(std::string_view text) {
  const auto [head, args] = head_args(text);
  LatticeSpec out{std::string(head), 0.0, Lattice::integer(1.0), std::string(text)};
  if (head == "basis") {
    if (args.size() != 5) fail(text, "expected basis:a,b,c,d,delta=D");
    const Mat2 g{number(text, args[0]), number(text, args[1]), number(text, args[2]), number(text, args[3])};
    out.delta = keyed(text, {args[4]}, {"delta"}).at("delta");
    if (!(out.delta > 0.0)) fail(text, "delta must be positive");
    const double det = std::abs(g.det());
    if (!(det > 0.0)) fail(text, "basis is singular");
    out.lattice = checked_lattice(text, [&] { return Lattice(g, 1.0 / std::sqrt(out.delta * det)); });
    return out;
  }
  out.delta = keyed(text, args, {"delta"}).at("delta");
  if (!(out.delta > 0.0)) fail(text, "delta must be positive");
  if (head == "square") {
    out.lattice = checked_lattice(text, [&] { return Lattice::integer(out.delta); });
  } else if (head == "square45") {
    out.lattice = checked_lattice(text, [&] { return Lattice::square45(out.delta); });
  } else if (head == "hex") {
    out.lattice = checked_lattice(text, [&] { return hexagonal(out.delta).lattice; });
  } else {
    fail(text, "lattice kind must be square, square45, hex or basis");
  }
  return out;
}

TransformSpec parse_transform(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon + 1 == text.size()) fail(text, "expected kind:arguments");
  const std::string_view head = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  TransformSpec out{std::string(head), SymplecticMat::identity(), std::string(text)};
  try {
    if (head == "rotate") {
      out.matrix = SymplecticMat::rotation(keyed(text, split(body, ','), {"tau"}).at("tau"));
    } else if (head == "flow") {
      const auto kv = keyed(text, split(body, ','), {"tau", "m"});
      out.matrix = oscillator_flow(kv.at("tau"), kv.at("m"));
    } else if (head == "shear") {
      out.matrix = SymplecticMat::shear(keyed(text, split(body, ','), {"p"}).at("p"));
    } else if (head == "modular") {
      const auto parts = split(body, ',');
      if (parts.size() != 4) fail(text, "expected modular:a,b,c,d");
      const Mat2 m{number(text, parts[0]), number(text, parts[1]), number(text, parts[2]), number(text, parts[3])};
      out.matrix = SymplecticMat::from(m);
      if (!is_modular(out.matrix, 0.0)) fail(text, "matrix must be integral with determinant 1");
    } else if (head == "word") {
      for (std::string_view f : split(body, ';')) {
        if (f == "J") {
          out.matrix = out.matrix * SymplecticMat::J();
          continue;
        }
        if (f.size() < 3 || f[1] != '=') fail(text, "word factors are J, V=P, M=L or R=T");
        const double v = number(text, f.substr(2));
        switch (f[0]) {
          case 'V':
            out.matrix = out.matrix * SymplecticMat::shear(v);
            break;
          case 'M':
            out.matrix = out.matrix * SymplecticMat::dilation(v);
            break;
          case 'R':
            out.matrix = out.matrix * SymplecticMat::rotation(v);
            break;
          default:
            fail(text, "word factors are J, V=P, M=L or R=T");
        }
      }
    } else {
      fail(text, "transform kind must be rotate, flow, shear, modular or word");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::config) throw;
    fail(text, e.what());
  }
  return out;
}

}  // namespace gfsi::app
