// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <numbers>
#include <variant>
#include <vector>

#include "gfsi/symplectic.hpp"

namespace gfsi {

using cplx = std::complex<double>;

// Uniform grid t_k = (k - N/2) dt with frequency grid (j - N/2) / (N dt).
struct GridSpec {
  std::size_t n = 1024;
  double dt = 1.0 / 32.0;

  // Validates N even and >= 8, dt > 0.
  static GridSpec make(std::size_t n, double dt);
  // dt = 1 / sqrt(N): time and frequency grids coincide.
  static GridSpec self_dual(std::size_t n);

  double t(std::size_t k) const noexcept { return (static_cast<double>(k) - static_cast<double>(n / 2)) * dt; }
  double omega(std::size_t j) const noexcept {
    return (static_cast<double>(j) - static_cast<double>(n / 2)) / (static_cast<double>(n) * dt);
  }
  double span() const noexcept { return static_cast<double>(n) * dt; }
  double bandwidth() const noexcept { return 1.0 / dt; }
  bool is_self_dual() const noexcept;

  bool operator==(const GridSpec&) const = default;
};

struct SampledSignal {
  GridSpec grid;
  std::vector<cplx> samples;
  // Set when an operation dropped non-negligible mass at the grid boundary.
  bool truncated = false;

  SampledSignal() = default;
  SampledSignal(const GridSpec& g, std::vector<cplx> s);
  explicit SampledSignal(const GridSpec& g) : grid(g), samples(g.n) {}

  std::size_t size() const noexcept { return samples.size(); }
  double norm() const noexcept;  // sqrt(dt * sum |f_k|^2)
};

// a * exp(-pi q t^2), Re q > 0.
struct AnalyticGaussian {
  cplx a{1.0, 0.0};
  cplx q{1.0, 0.0};

  AnalyticGaussian() = default;
  // Throws ErrorKind::invalid_input unless Re q > 0.
  AnalyticGaussian(cplx amplitude, cplx coefficient);

  cplx operator()(double t) const noexcept { return a * std::exp(-std::numbers::pi * q * t * t); }
  double norm() const noexcept;  // |a| / (2 Re q)^{1/4}
  SampledSignal sample(const GridSpec& grid) const;
};

// g_m(t) = (2m)^{1/4} exp(-pi m t^2).
AnalyticGaussian gaussian(double m);

// Energy fractions in the outer sixteenth of the time grid and of the
// frequency grid. Both must be tiny for the discrete transforms to be exact.
struct Resolution {
  double time_edge = 0.0;
  double freq_edge = 0.0;
};
Resolution resolution(const SampledSignal& f);
// Edge-band energy fraction above which results are refused. The band lies
// inside the grid, so the mass actually lost beyond it is far smaller.
inline constexpr double kResolutionTol = 1e-16;

// Centered DFT F_j = sum_k f_k exp(-2 pi i omega_j t_k) (no dt factor).
std::vector<cplx> spectrum(const SampledSignal& f);
// Trigonometric interpolant of f at an arbitrary time s; 0 outside the grid span.
cplx interpolate(const std::vector<cplx>& spec, const GridSpec& grid, double s);

// (M_omega T_x f)(t) = exp(2 pi i omega t) f(t - x). Off-grid shifts use the
// band-limited interpolant; mass leaving the grid is dropped and flagged.
SampledSignal tf_shift(const SampledSignal& f, double x, double omega);

// Multiplication by exp(i pi p t^2).
SampledSignal chirp_apply(double p, const SampledSignal& f);
AnalyticGaussian chirp_apply(double p, const AnalyticGaussian& f);

// psi(t) -> i^n sqrt|l| psi(l t). Requires n = maslov_index(l) mod 2.
SampledSignal rescale_apply(double l, int n, const SampledSignal& f);
AnalyticGaussian rescale_apply(double l, int n, const AnalyticGaussian& f);

// J-hat: e^{-i pi/4} times the Fourier transform with kernel exp(-2 pi i t t').
SampledSignal fourier_mod(const SampledSignal& f);
AnalyticGaussian fourier_mod(const AnalyticGaussian& f);

// 0 for l > 0, 1 for l < 0.
int maslov_index(double l);

// S-hat_{W,n} = chirp(P) rescale(L, n) J-hat chirp(Q), rightmost acting first;
// kernel i^{n - 1/2} sqrt|L| exp(2 pi i W(t, t')).
struct MetaplecticDescriptor {
  QuadraticFormW form;
  int maslov = 0;  // class mod 4, kept in [0, 4)

  MetaplecticDescriptor() = default;
  // Throws ErrorKind::invalid_form if L = 0 or the parity of n disagrees with sign(L).
  MetaplecticDescriptor(const QuadraticFormW& w, int n);

  // Descriptor of a free matrix with the canonical class maslov_index(L).
  static MetaplecticDescriptor of(const SymplecticMat& s);
};

SampledSignal metaplectic_apply(const MetaplecticDescriptor& desc, const SampledSignal& f);
AnalyticGaussian metaplectic_apply(const MetaplecticDescriptor& desc, const AnalyticGaussian& f);

// Direct O(N^2) discretization of the integral kernel; throws
// ErrorKind::kernel_undersampled if the Q-chirp aliases over the support of f.
// Output points with |L t| beyond the Nyquist frequency are set to zero.
SampledSignal metaplectic_quadrature(const MetaplecticDescriptor& desc, const SampledSignal& f);

// (P, L, Q, n) -> (-Q, -L, -P, 1 - n).
MetaplecticDescriptor metaplectic_inverse(const MetaplecticDescriptor& desc);

// Exact composition first-after-second: S1-hat S2-hat = S''-hat with
// n'' = n1 + n2 - [Q1 + P2 < 0]. Throws ErrorKind::not_free if Q1 + P2 = 0.
MetaplecticDescriptor compose(const MetaplecticDescriptor& first, const MetaplecticDescriptor& second);

// Elementary metaplectic operators.
struct ChirpOp {
  double p = 0.0;
};
struct RescaleOp {
  double l = 1.0;
  int maslov = 0;
};
struct FourierOp {};
using MetaOp = std::variant<ChirpOp, RescaleOp, FourierOp, MetaplecticDescriptor>;

// Product op_0 op_1 ... ; the last entry acts first.
struct OperatorWord {
  std::vector<MetaOp> ops;
};

SymplecticMat natural_projection(const MetaOp& op);
SymplecticMat natural_projection(const OperatorWord& word);

// Operator word projecting onto the same matrix as `word`.
OperatorWord lift(const GeneratorWord& word);
// lift(word_decompose(s)): a metaplectic operator over any symplectic s.
OperatorWord metaplectic_of(const SymplecticMat& s);

SampledSignal apply(const MetaOp& op, const SampledSignal& f);
AnalyticGaussian apply(const MetaOp& op, const AnalyticGaussian& f);
SampledSignal apply(const OperatorWord& word, const SampledSignal& f);
AnalyticGaussian apply(const OperatorWord& word, const AnalyticGaussian& f);

struct PhaseAlignment {
  cplx c{1.0, 0.0};
  double residual = 0.0;
};
// c = <f, g> / |<f, g>|, residual = ||f - c g|| / ||g||.
PhaseAlignment phase_align(const SampledSignal& f, const SampledSignal& g);

inline constexpr int kMaxHermiteOrder = 60;

// Hermite function of order k with width m: m^{1/4} h_k(sqrt(m) t), where
// h_0 = 2^{1/4} exp(-pi t^2). Unit L2 norm; h_k(m = 1) are eigenfunctions of J-hat.
double hermite_value(int k, double m, double t);
SampledSignal hermite(int k, double m, const GridSpec& grid);

// CSV with header "t,re,im", 17 significant digits.
void write_signal_csv(std::ostream& out, const SampledSignal& f);

}  // namespace gfsi
