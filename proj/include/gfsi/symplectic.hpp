// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors
//
// 2x2 symplectic group algebra. Adopted generator conventions:
//   J   = [[0, 1], [-1, 0]]
//   V_P = [[1, 0], [-P, 1]]
//   M_L = [[1/L, 0], [0, L]]
//   S_tau (m = 1 oscillator flow) = [[cos, sin], [-sin, cos]]
// Under these, every free S factors as V_{-d/b} M_{1/b} J V_{-a/b}.

#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace gfsi {

// A phase-space point (time, frequency).
struct Point {
  double x = 0.0;
  double omega = 0.0;
};

// Plain real 2x2 matrix, row-major [[a, b], [c, d]].
struct Mat2 {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  double det() const noexcept { return a * d - b * c; }
  // Induced infinity norm (max absolute row sum).
  double norm_inf() const noexcept;
  double max_abs_diff(const Mat2& other) const noexcept;
  bool finite() const noexcept;

  Mat2 operator*(const Mat2& o) const noexcept {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Point operator*(Point p) const noexcept { return {a * p.x + b * p.omega, c * p.x + d * p.omega}; }
};

// Real 2x2 matrix with det = 1. Construction validates the invariant.
class SymplecticMat {
 public:
  SymplecticMat() = default;

  // Throws ErrorKind::invalid_input for non-finite or non-unit-determinant input.
  static SymplecticMat from(const Mat2& m);

  static SymplecticMat identity() { return {}; }
  static SymplecticMat J();
  static SymplecticMat shear(double p);       // V_P
  static SymplecticMat dilation(double l);    // M_L, l != 0
  static SymplecticMat rotation(double tau);  // S_tau

  double a() const noexcept { return m_.a; }
  double b() const noexcept { return m_.b; }
  double c() const noexcept { return m_.c; }
  double d() const noexcept { return m_.d; }
  const Mat2& mat() const noexcept { return m_; }

  SymplecticMat operator*(const SymplecticMat& o) const;
  Point operator*(Point p) const noexcept { return m_ * p; }

  // |b| > 1e-9 * max(1, ||S||_inf)
  double free_threshold() const noexcept;
  bool is_free() const noexcept;

 private:
  explicit SymplecticMat(const Mat2& m) : m_(m) {}
  Mat2 m_{};
};

// W(x, x') = P x^2 / 2 - L x x' + Q x'^2 / 2
struct QuadraticFormW {
  double p = 0.0;
  double l = 1.0;
  double q = 0.0;

  double operator()(double x, double xp) const noexcept { return 0.5 * p * x * x - l * x * xp + 0.5 * q * xp * xp; }
  double d_x(double x, double xp) const noexcept { return p * x - l * xp; }
  double d_xp(double x, double xp) const noexcept { return -l * x + q * xp; }
};

// Factors of a free matrix: S = V_{-p} M_l J V_{-q}.
struct FreeFactors {
  double p = 0.0;
  double l = 1.0;
  double q = 0.0;

  SymplecticMat product() const;
};

struct ChirpFactor {
  double p = 0.0;  // V_P
};
struct RescaleFactor {
  double l = 1.0;  // M_L
  int maslov = 0;  // class mod 4, parity fixed by sign(l)
};
struct FourierFactor {};  // J

using Generator = std::variant<ChirpFactor, RescaleFactor, FourierFactor>;

Mat2 matrix_of(const Generator& g);

// Ordered product f_0 f_1 ... f_{k-1}; the rightmost factor acts first on
// phase-space points (and on signals, once lifted).
struct GeneratorWord {
  std::vector<Generator> factors;

  SymplecticMat projection() const;
  // Merges adjacent chirps, drops V_0 and M_1 with even Maslov class.
  GeneratorWord simplified() const;
};

bool is_symplectic(const Mat2& m, double tol);
SymplecticMat sympl_inverse(const SymplecticMat& s);

QuadraticFormW generating_form(const SymplecticMat& s);
SymplecticMat matrix_of_form(const QuadraticFormW& w);
bool verify_generating_relation(const SymplecticMat& s, double xp, double omegap);

FreeFactors free_factorize(const SymplecticMat& s);
std::pair<SymplecticMat, SymplecticMat> two_free_factorization(const SymplecticMat& s);
GeneratorWord word_decompose(const SymplecticMat& s);

// Closed-form harmonic oscillator flow [[cos, sin/m], [-m sin, cos]].
SymplecticMat oscillator_flow(double tau, double m);

// RK4 integration of Hamilton's equations for H = w^2/(2m) + m Omega^2 x^2 / 2.
// Refuses steps < 100 and step counts whose predicted RK4 error exceeds 1e-9.
Mat2 oscillator_flow_numeric(double tau, double m, double omega_res, int steps);

bool is_modular(const SymplecticMat& s, double tol);

}  // namespace gfsi
