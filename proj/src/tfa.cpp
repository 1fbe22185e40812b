// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "gfsi/tfa.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "gfsi/error.hpp"
#include "gfsi/kernels.hpp"

namespace gfsi {
namespace {

constexpr double kPi = std::numbers::pi;

void require_same_grid(const SampledSignal& f, const SampledSignal& g) {
  if (!(f.grid == g.grid)) throw Error(ErrorKind::invalid_input, "signals live on different grids");
}

std::size_t steps_of(double half, double step) {
  if (!(step > 0.0) || !(half >= 0.0)) throw Error(ErrorKind::invalid_input, "TF grid needs step > 0 and half >= 0");
  const double n = half / step;
  if (std::abs(n - std::round(n)) > 1e-9 * std::max(1.0, n)) {
    throw Error(ErrorKind::invalid_input, "TF grid half-width must be a multiple of the step");
  }
  return static_cast<std::size_t>(std::llround(n));
}

// p_k = a_k conj(b_k)
std::vector<cplx> conj_product(const SampledSignal& a, const SampledSignal& b) {
  std::vector<cplx> p(a.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = a.samples[k] * std::conj(b.samples[k]);
  return p;
}

// dt sum_k p_k exp(-2 pi i scale omega t_k)
cplx fourier_sum(const std::vector<cplx>& p, const GridSpec& g, double omega, double scale = 1.0) {
  const double w = 2.0 * kPi * scale * omega;
  return g.dt * kernels::phase_dot(p, -w * g.t(0), -w * g.dt);
}

// Product f(t + x/2) conj(g(t - x/2)) on the grid.
std::vector<cplx> ambiguity_product(const SampledSignal& f, const SampledSignal& g, double x, bool& truncated) {
  const SampledSignal u = tf_shift(f, -0.5 * x, 0.0);
  const SampledSignal v = tf_shift(g, 0.5 * x, 0.0);
  truncated = truncated || u.truncated || v.truncated;
  return conj_product(u, v);
}

std::vector<cplx> eval_points(const SampledSignal& f, const SampledSignal& g, const std::vector<Point>& points,
                              bool& truncated) {
  require_same_grid(f, g);
  std::vector<cplx> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = ambiguity_product(f, g, points[i].x, truncated);
    out[i] = fourier_sum(p, f.grid, points[i].omega);
  }
  return out;
}

TFSurface make_surface(const TFGrid& grid, const char* label) {
  TFSurface s;
  s.grid = grid;
  s.values.assign(grid.size(), cplx{});
  s.label = label;
  return s;
}

}  // namespace

TFGrid TFGrid::symmetric(double half, double step) { return symmetric(half, step, half, step); }

TFGrid TFGrid::symmetric(double x_half, double dx, double omega_half, double domega) {
  const std::size_t nx = steps_of(x_half, dx);
  const std::size_t nw = steps_of(omega_half, domega);
  return {-static_cast<double>(nx) * dx, dx, 2 * nx + 1, -static_cast<double>(nw) * domega, domega, 2 * nw + 1};
}

double TFSurface::max_abs() const noexcept {
  double m = 0.0;
  for (const cplx& v : values) m = std::max(m, std::abs(v));
  return m;
}

cplx stft(const SampledSignal& f, const SampledSignal& g, Point lambda) {
  require_same_grid(f, g);
  return fourier_sum(conj_product(f, tf_shift(g, lambda.x, 0.0)), f.grid, lambda.omega);
}

TFSurface stft(const SampledSignal& f, const SampledSignal& g, const TFGrid& grid) {
  require_same_grid(f, g);
  TFSurface s = make_surface(grid, "stft");
  for (std::size_t i = 0; i < grid.nx; ++i) {
    const SampledSignal shifted = tf_shift(g, grid.x(i), 0.0);
    s.truncated = s.truncated || shifted.truncated;
    const auto p = conj_product(f, shifted);
    for (std::size_t j = 0; j < grid.nomega; ++j) s.at(i, j) = fourier_sum(p, f.grid, grid.omega(j));
  }
  return s;
}

cplx cross_ambiguity(const SampledSignal& f, const SampledSignal& g, Point lambda) {
  bool truncated = false;
  return eval_points(f, g, {lambda}, truncated).front();
}

std::vector<cplx> cross_ambiguity(const SampledSignal& f, const SampledSignal& g, const std::vector<Point>& points) {
  bool truncated = false;
  return eval_points(f, g, points, truncated);
}

TFSurface cross_ambiguity(const SampledSignal& f, const SampledSignal& g, const TFGrid& grid) {
  require_same_grid(f, g);
  TFSurface s = make_surface(grid, "ambiguity");
  for (std::size_t i = 0; i < grid.nx; ++i) {
    const auto p = ambiguity_product(f, g, grid.x(i), s.truncated);
    for (std::size_t j = 0; j < grid.nomega; ++j) s.at(i, j) = fourier_sum(p, f.grid, grid.omega(j));
  }
  return s;
}

cplx ambiguity(const SampledSignal& f, Point lambda) { return cross_ambiguity(f, f, lambda); }
TFSurface ambiguity(const SampledSignal& f, const TFGrid& grid) { return cross_ambiguity(f, f, grid); }

double ambiguity_gaussian_closed(double m, double x, double omega) {
  if (!(m > 0.0)) throw Error(ErrorKind::invalid_input, "Gaussian width must be positive");
  return std::exp(-0.5 * kPi * (m * x * x + omega * omega / m));
}

cplx ambiguity_closed(const AnalyticGaussian& g, double x, double omega) {
  const double r = g.q.real();
  const double s = g.q.imag();
  const double shifted = s * x + omega;
  return std::norm(g.a) / std::sqrt(2.0 * r) * std::exp(-0.5 * kPi * r * x * x - kPi * shifted * shifted / (2.0 * r));
}

TFSurface wigner(const SampledSignal& f, const TFGrid& grid) {
  const GridSpec& g = f.grid;
  // r(t) = f(-t); t_0 has no mirror image on the grid.
  SampledSignal reflected(g);
  for (std::size_t k = 1; k < g.n; ++k) reflected.samples[k] = f.samples[g.n - k];
  TFSurface s = make_surface(grid, "wigner");
  for (std::size_t i = 0; i < grid.nx; ++i) {
    const double x = grid.x(i);
    const SampledSignal u = tf_shift(f, -x, 0.0);          // f(x + t)
    const SampledSignal v = tf_shift(reflected, x, 0.0);   // f(x - t)
    s.truncated = s.truncated || u.truncated || v.truncated;
    const auto p = conj_product(u, v);
    for (std::size_t j = 0; j < grid.nomega; ++j) s.at(i, j) = 2.0 * fourier_sum(p, g, grid.omega(j), 2.0);
  }
  return s;
}

cplx symplectic_fourier(const TFSurface& surface, Point lambda) {
  const TFGrid& g = surface.grid;
  cplx sum = 0.0;
  for (std::size_t i = 0; i < g.nx; ++i) {
    // Row sum over omega' of A(x', omega') exp(2 pi i omega' x).
    const cplx* row = surface.values.data() + i * g.nomega;
    const double w = 2.0 * kPi * lambda.x;
    const cplx inner = kernels::active().phase_dot(row, g.nomega, w * g.omega(0), w * g.domega);
    sum += inner * std::polar(1.0, -2.0 * kPi * g.x(i) * lambda.omega);
  }
  return sum * g.dx * g.domega;
}

double covariance_check(const SymplecticMat& s, const SampledSignal& f, const TFGrid& grid) {
  const SampledSignal moved = apply(metaplectic_of(s), f);
  const SymplecticMat inv = sympl_inverse(s);
  std::vector<Point> nodes;
  std::vector<Point> preimages;
  nodes.reserve(grid.size());
  preimages.reserve(grid.size());
  for (std::size_t i = 0; i < grid.nx; ++i) {
    for (std::size_t j = 0; j < grid.nomega; ++j) {
      nodes.push_back({grid.x(i), grid.omega(j)});
      preimages.push_back(inv * nodes.back());
    }
  }
  bool truncated = false;
  const auto lhs = eval_points(moved, moved, nodes, truncated);
  const auto rhs = eval_points(f, f, preimages, truncated);
  if (truncated || moved.truncated) {
    throw Error(ErrorKind::resolution, "covariance check: half-shifts leave the signal grid; enlarge N*dt");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < lhs.size(); ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
  return worst;
}

double max_deviation(const TFSurface& surface, const std::function<cplx(double, double)>& reference) {
  double worst = 0.0;
  for (std::size_t i = 0; i < surface.grid.nx; ++i) {
    for (std::size_t j = 0; j < surface.grid.nomega; ++j) {
      worst = std::max(worst, std::abs(surface.at(i, j) - reference(surface.grid.x(i), surface.grid.omega(j))));
    }
  }
  return worst;
}

RotatedWindowSurfaces modular_example_surfaces(double delta, const TFGrid& grid, const GridSpec& signal_grid) {
  if (!(delta > 1.0)) throw Error(ErrorKind::invalid_input, "density must exceed 1");
  const SampledSignal g = gaussian(std::sqrt(3.0)).sample(signal_grid);
  const SymplecticMat rot = SymplecticMat::rotation(-kPi / 4);
  RotatedWindowSurfaces out;
  out.plus = ambiguity(apply(metaplectic_of(rot), g), grid);
  out.minus = ambiguity(apply(metaplectic_of(sympl_inverse(rot)), g), grid);
  const double k = 2.0 / std::sqrt(3.0);
  out.plus_deviation = max_deviation(out.plus, [k](double x, double w) {
    return cplx(std::exp(-0.5 * kPi * k * (x * x + x * w + w * w)), 0.0);
  });
  out.minus_deviation = max_deviation(out.minus, [k](double x, double w) {
    return cplx(std::exp(-0.5 * kPi * k * (x * x - x * w + w * w)), 0.0);
  });
  out.plus.label = "ambiguity:rotated(-pi/4)";
  out.minus.label = "ambiguity:rotated(+pi/4)";
  return out;
}

void write_surface_csv(std::ostream& out, const TFSurface& surface) {
  out << "x,omega,re,im\n";
  char line[160];
  for (std::size_t i = 0; i < surface.grid.nx; ++i) {
    for (std::size_t j = 0; j < surface.grid.nomega; ++j) {
      const cplx v = surface.at(i, j);
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", surface.grid.x(i), surface.grid.omega(j), v.real(),
                    v.imag());
      out << line;
    }
  }
}

void write_surface_gnuplot(std::ostream& out, const TFSurface& surface) {
  char cell[40];
  out << "# " << surface.label << " |value|; rows x, columns omega\n";
  out << surface.grid.nomega;
  for (std::size_t j = 0; j < surface.grid.nomega; ++j) {
    std::snprintf(cell, sizeof cell, " %.17g", surface.grid.omega(j));
    out << cell;
  }
  out << '\n';
  for (std::size_t i = 0; i < surface.grid.nx; ++i) {
    std::snprintf(cell, sizeof cell, "%.17g", surface.grid.x(i));
    out << cell;
    for (std::size_t j = 0; j < surface.grid.nomega; ++j) {
      std::snprintf(cell, sizeof cell, " %.17g", std::abs(surface.at(i, j)));
      out << cell;
    }
    out << '\n';
  }
}

}  // namespace gfsi
