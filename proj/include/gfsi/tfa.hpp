// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gfsi/signal.hpp"
#include "gfsi/symplectic.hpp"

namespace gfsi {

// Rectangular grid x_i = x_min + i dx, omega_j = omega_min + j domega.
struct TFGrid {
  double x_min = -3.0;
  double dx = 0.25;
  std::size_t nx = 25;
  double omega_min = -3.0;
  double domega = 0.25;
  std::size_t nomega = 25;

  // Nodes -half, ..., half in both directions (half must be a multiple of step).
  static TFGrid symmetric(double half, double step);
  static TFGrid symmetric(double x_half, double dx, double omega_half, double domega);

  double x(std::size_t i) const noexcept { return x_min + static_cast<double>(i) * dx; }
  double omega(std::size_t j) const noexcept { return omega_min + static_cast<double>(j) * domega; }
  std::size_t size() const noexcept { return nx * nomega; }
};

struct TFSurface {
  TFGrid grid;
  std::vector<cplx> values;  // row-major, index i * nomega + j
  std::string label;         // "stft", "ambiguity", "wigner", ...
  bool truncated = false;    // some shift dropped mass at the grid boundary

  const cplx& at(std::size_t i, std::size_t j) const { return values[i * grid.nomega + j]; }
  cplx& at(std::size_t i, std::size_t j) { return values[i * grid.nomega + j]; }
  double max_abs() const noexcept;
};

// V_g f(x, omega) = <f, M_omega T_x g>.
cplx stft(const SampledSignal& f, const SampledSignal& g, Point lambda);
TFSurface stft(const SampledSignal& f, const SampledSignal& g, const TFGrid& grid);

// A_g f(x, omega) = int f(t + x/2) conj(g(t - x/2)) exp(-2 pi i omega t) dt.
cplx cross_ambiguity(const SampledSignal& f, const SampledSignal& g, Point lambda);
TFSurface cross_ambiguity(const SampledSignal& f, const SampledSignal& g, const TFGrid& grid);
// Evaluation at arbitrary points, sharing the spectral set-up.
std::vector<cplx> cross_ambiguity(const SampledSignal& f, const SampledSignal& g, const std::vector<Point>& points);

cplx ambiguity(const SampledSignal& f, Point lambda);
TFSurface ambiguity(const SampledSignal& f, const TFGrid& grid);

// exp(-(pi/2)(m x^2 + omega^2 / m)), the ambiguity of g_m.
double ambiguity_gaussian_closed(double m, double x, double omega);
// Ambiguity of a * exp(-pi q t^2) in closed form.
cplx ambiguity_closed(const AnalyticGaussian& g, double x, double omega);

// Wf(x, omega) = int f(x + t/2) conj(f(x - t/2)) exp(-2 pi i omega t) dt.
TFSurface wigner(const SampledSignal& f, const TFGrid& grid);

// Symplectic Fourier transform of a sampled surface at lambda:
// sum A(x', w') exp(-2 pi i (x' omega - w' x)) dx domega, i.e. F(A)(J lambda).
cplx symplectic_fourier(const TFSurface& surface, Point lambda);

// max over the grid of |A(S-hat f)(lambda) - Af(S^-1 lambda)|, both sides
// evaluated directly. Throws ErrorKind::resolution if a half-shift leaves the grid.
double covariance_check(const SymplecticMat& s, const SampledSignal& f, const TFGrid& grid);

// Ambiguity surfaces of the rotated windows S_{-pi/4} g_{sqrt 3} and
// S_{-pi/4}^{-1} g_{sqrt 3} with their deviations from
// exp(-(pi/2)(2/sqrt 3)(x^2 +- x omega + omega^2)).
struct RotatedWindowSurfaces {
  TFSurface plus;
  TFSurface minus;
  double plus_deviation = 0.0;
  double minus_deviation = 0.0;
};
RotatedWindowSurfaces modular_example_surfaces(double delta, const TFGrid& grid, const GridSpec& signal_grid = {});

// max over the grid of |surface - reference(x, omega)|.
double max_deviation(const TFSurface& surface, const std::function<cplx(double, double)>& reference);

// CSV "x,omega,re,im", 17 significant digits.
void write_surface_csv(std::ostream& out, const TFSurface& surface);
// gnuplot "nonuniform matrix" of |value|: first row N omega_0 ..., then x_i |v_i0| ...
void write_surface_gnuplot(std::ostream& out, const TFSurface& surface);

}  // namespace gfsi
