// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "gfsi/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>

#include "gfsi/error.hpp"

namespace gfsi {

Lattice::Lattice(const Mat2& generator, double scale) : generator_(generator), scale_(scale) {
  if (!generator.finite() || !std::isfinite(scale) || !(scale > 0.0)) {
    throw Error(ErrorKind::invalid_lattice, "lattice needs a finite generator and positive scale");
  }
  if (!(std::abs(generator.det()) > 1e-14 * std::max(1.0, generator.norm_inf() * generator.norm_inf()))) {
    throw Error(ErrorKind::invalid_lattice, "generator is singular");
  }
}

Lattice Lattice::integer(double delta) {
  if (!(delta > 0.0)) throw Error(ErrorKind::invalid_lattice, "density must be positive");
  return Lattice(Mat2{}, 1.0 / std::sqrt(delta));
}

Lattice Lattice::square45(double delta) {
  if (!(delta > 0.0)) throw Error(ErrorKind::invalid_lattice, "density must be positive");
  return Lattice(SymplecticMat::rotation(std::numbers::pi / 4).mat(), 1.0 / std::sqrt(delta));
}

Mat2 Lattice::basis() const noexcept {
  return {scale_ * generator_.a, scale_ * generator_.b, scale_ * generator_.c, scale_ * generator_.d};
}

double Lattice::volume() const noexcept { return scale_ * scale_ * std::abs(generator_.det()); }

Mat2 gram(const Lattice& lattice) noexcept {
  const Mat2 b = lattice.basis();
  return {b.a * b.a + b.c * b.c, b.a * b.b + b.c * b.d, b.a * b.b + b.c * b.d, b.b * b.b + b.d * b.d};
}

LatticePointSet enumerate(const Lattice& lattice, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorKind::invalid_input, "enumeration radius must be positive");
  const Mat2 b = lattice.basis();
  const double det = b.det();
  // Rows of B^-1 bound each integer coordinate over the disc.
  const double row0 = std::hypot(b.d, b.b) / std::abs(det);
  const double row1 = std::hypot(b.c, b.a) / std::abs(det);
  const auto k0 = static_cast<std::int64_t>(std::floor(radius * row0 + 1e-9));
  const auto k1 = static_cast<std::int64_t>(std::floor(radius * row1 + 1e-9));
  const double limit = radius * (1.0 + 1e-12);

  LatticePointSet out;
  out.radius = radius;
  for (std::int64_t i = -k0; i <= k0; ++i) {
    for (std::int64_t j = -k1; j <= k1; ++j) {
      const Point p = b * Point{static_cast<double>(i), static_cast<double>(j)};
      if (std::hypot(p.x, p.omega) <= limit) {
        out.points.push_back(p);
        out.coords.push_back({i, j});
      }
    }
  }
  return out;
}

Lattice deform(const Lattice& lattice, const SymplecticMat& s) {
  return Lattice(s.mat() * lattice.generator(), lattice.scale());
}

bool lattices_equal(const Lattice& first, const Lattice& second, double tol) {
  const Mat2 b1 = first.basis();
  const Mat2 b2 = second.basis();
  const double det = b1.det();
  const Mat2 inv{b1.d / det, -b1.b / det, -b1.c / det, b1.a / det};
  const Mat2 u = inv * b2;
  for (const double v : {u.a, u.b, u.c, u.d}) {
    if (std::abs(v - std::round(v)) > tol) return false;
  }
  return std::abs(std::abs(u.det()) - 1.0) <= tol;
}

HexagonalLattice hexagonal(double delta, int sign) {
  if (!(delta > 0.0)) throw Error(ErrorKind::invalid_lattice, "density must be positive");
  if (sign != 1 && sign != -1) throw Error(ErrorKind::invalid_input, "hexagonal sign must be +1 or -1");
  const double c = std::cos(std::numbers::pi / 6);
  const double s = std::sin(std::numbers::pi / 6);
  const double r = std::sqrt(2.0 / std::sqrt(3.0));
  const Mat2 g = sign > 0 ? Mat2{r * c, r * c, -r * s, r * s} : Mat2{r * c, -r * c, r * s, r * s};
  return {Lattice(g, 1.0 / std::sqrt(delta)), delta <= 1.0};
}

HexToSquareResolution resolve_hex_to_square(double delta) {
  if (!(delta > 1.0)) throw Error(ErrorKind::invalid_input, "density must exceed 1");
  const Lattice hex = hexagonal(delta, 1).lattice;
  const Lattice target = Lattice::square45(delta);
  std::optional<HexToSquareResolution> found;
  int matches = 0;
  for (const int s : {1, -1}) {
    const double dilation = std::pow(3.0, 0.25 * s);
    const Lattice candidate = deform(hex, SymplecticMat::dilation(dilation));
    if (lattices_equal(candidate, target, 1e-9)) {
      ++matches;
      found = HexToSquareResolution{s, dilation, candidate};
    }
  }
  if (matches != 1) {
    throw Error(ErrorKind::convention_violation,
                std::to_string(matches) + " dilation signs map the hexagonal lattice onto the rotated square lattice");
  }
  return *found;
}

void write_points_csv(std::ostream& out, const LatticePointSet& points) {
  out << "x,omega\n";
  char line[96];
  for (const Point& p : points.points) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", p.x, p.omega);
    out << line;
  }
}

}  // namespace gfsi
