// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gfsi/symplectic.hpp"

namespace gfsi {

// Lattice scale * G * Z^2; columns of G are the basis vectors.
class Lattice {
 public:
  // Throws ErrorKind::invalid_lattice for a singular generator or scale <= 0.
  Lattice(const Mat2& generator, double scale);

  // (1 / sqrt(delta)) Z^2
  static Lattice integer(double delta);
  // (1 / sqrt(delta)) S_{pi/4} Z^2, the integer lattice turned by 45 degrees.
  static Lattice square45(double delta);

  const Mat2& generator() const noexcept { return generator_; }
  double scale() const noexcept { return scale_; }
  Mat2 basis() const noexcept;

  double volume() const noexcept;
  double density() const noexcept { return 1.0 / volume(); }

 private:
  Mat2 generator_;
  double scale_;
};

struct LatticePointSet {
  std::vector<Point> points;
  std::vector<std::array<std::int64_t, 2>> coords;  // integer coordinates k
  double radius = 0.0;

  std::size_t count() const noexcept { return points.size(); }
};

// All points with |scale * G * k| <= radius, lexicographic in k.
LatticePointSet enumerate(const Lattice& lattice, double radius);

// generator <- S * generator, scale unchanged.
Lattice deform(const Lattice& lattice, const SymplecticMat& s);

// True iff (B1)^-1 B2 is within tol of a unimodular integer matrix.
bool lattices_equal(const Lattice& first, const Lattice& second, double tol);

struct HexagonalLattice {
  Lattice lattice;
  // delta <= 1: volume >= 1 and Gaussian Gabor systems are not frames.
  bool density_warning;
};

// Hexagonal lattice of density delta. sign = +1 gives basis columns
// c (cos 30, -sin 30), c (cos 30, sin 30) with c = sqrt(2 / sqrt 3); sign = -1
// gives a basis of the same lattice whose Gram off-diagonal is negative.
HexagonalLattice hexagonal(double delta, int sign = 1);

struct HexToSquareResolution {
  int sign = 0;          // exponent sign s of the dilation M_{3^{s/4}}
  double dilation = 0.0; // 3^{s/4}
  Lattice lattice;       // the dilated hexagonal lattice
};

// Finds the unique s in {+1, -1} for which M_{3^{s/4}} maps hexagonal(delta)
// onto (1 / sqrt(delta)) S_{pi/4} Z^2. Throws ErrorKind::convention_violation
// if zero or two signs match.
HexToSquareResolution resolve_hex_to_square(double delta);

// Gram matrix B^T B of the scaled basis.
Mat2 gram(const Lattice& lattice) noexcept;

// CSV with header "x,omega", 17 significant digits.
void write_points_csv(std::ostream& out, const LatticePointSet& points);

}  // namespace gfsi
