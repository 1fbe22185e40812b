// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "gfsi/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "detail/fft.hpp"
#include "gfsi/error.hpp"
#include "gfsi/kernels.hpp"

namespace gfsi {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kEighthTurnInv = std::polar(1.0, -kPi / 4);  // i^{-1/2}

cplx ipow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

int mod4(int n) { return ((n % 4) + 4) % 4; }

void require_parity(double l, int n) {
  if (l == 0.0 || !std::isfinite(l)) throw Error(ErrorKind::invalid_input, "rescale factor must be finite and nonzero");
  if (mod4(n) % 2 != maslov_index(l)) {
    throw Error(ErrorKind::invalid_input, "Maslov index " + std::to_string(n) + " has the wrong parity for L = " +
                                              std::to_string(l));
  }
}

double edge_fraction(const std::vector<cplx>& v) {
  const std::size_t n = v.size();
  const std::size_t edge = n / 16;
  double total = 0.0;
  double outer = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double e = std::norm(v[k]);
    total += e;
    if (k < edge || k >= n - edge) outer += e;
  }
  return total > 0.0 ? outer / total : 0.0;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string grid_text(const GridSpec& g) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "N = %zu, dt = %.6g", g.n, g.dt);
  return buf;
}

void check_resolved(const SampledSignal& f, const char* what, bool time, bool freq) {
  const Resolution r = resolution(f);
  if (time && r.time_edge > kResolutionTol) {
    throw Error(ErrorKind::resolution, std::string(what) + ": signal reaches the time edge (energy fraction " +
                                           sci(r.time_edge) + ") on grid " + grid_text(f.grid) +
                                           "; increase the span N*dt");
  }
  if (freq && r.freq_edge > kResolutionTol) {
    throw Error(ErrorKind::resolution, std::string(what) + ": spectrum reaches the Nyquist edge (energy fraction " +
                                           sci(r.freq_edge) + ") on grid " + grid_text(f.grid) +
                                           "; decrease dt and increase N");
  }
}

}  // namespace

// --- grid and containers ---------------------------------------------------

GridSpec GridSpec::make(std::size_t n, double dt) {
  if (n < 8 || n % 2 != 0) throw Error(ErrorKind::invalid_input, "grid size must be even and at least 8");
  if (!std::isfinite(dt) || !(dt > 0.0)) throw Error(ErrorKind::invalid_input, "grid step must be positive");
  return {n, dt};
}

GridSpec GridSpec::self_dual(std::size_t n) { return make(n, 1.0 / std::sqrt(static_cast<double>(n))); }

bool GridSpec::is_self_dual() const noexcept {
  return std::abs(static_cast<double>(n) * dt * dt - 1.0) <= 1e-12;
}

SampledSignal::SampledSignal(const GridSpec& g, std::vector<cplx> s) : grid(g), samples(std::move(s)) {
  if (samples.size() != grid.n) throw Error(ErrorKind::invalid_input, "sample count does not match the grid");
  for (const cplx& v : samples) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::invalid_input, "non-finite sample");
    }
  }
}

double SampledSignal::norm() const noexcept { return std::sqrt(grid.dt * kernels::norm2(samples)); }

AnalyticGaussian::AnalyticGaussian(cplx amplitude, cplx coefficient) : a(amplitude), q(coefficient) {
  if (!(q.real() > 0.0) || !std::isfinite(q.imag()) || !std::isfinite(std::abs(a))) {
    throw Error(ErrorKind::invalid_input, "Gaussian coefficient needs Re q > 0");
  }
}

double AnalyticGaussian::norm() const noexcept { return std::abs(a) / std::pow(2.0 * q.real(), 0.25); }

SampledSignal AnalyticGaussian::sample(const GridSpec& grid) const {
  SampledSignal out(grid);
  for (std::size_t k = 0; k < grid.n; ++k) out.samples[k] = (*this)(grid.t(k));
  return out;
}

AnalyticGaussian gaussian(double m) {
  if (!std::isfinite(m) || !(m > 0.0)) throw Error(ErrorKind::invalid_input, "Gaussian width must be positive");
  return AnalyticGaussian(std::pow(2.0 * m, 0.25), m);
}

Resolution resolution(const SampledSignal& f) {
  return {edge_fraction(f.samples), edge_fraction(spectrum(f))};
}

std::vector<cplx> spectrum(const SampledSignal& f) {
  std::vector<cplx> spec = f.samples;
  detail::centered_dft(spec, -1);
  return spec;
}

cplx interpolate(const std::vector<cplx>& spec, const GridSpec& grid, double s) {
  const double half = 0.5 * grid.dt;
  if (s < grid.t(0) - half || s > grid.t(grid.n - 1) + half) return {};
  const double n = static_cast<double>(grid.n);
  const double dphase = 2.0 * kPi * s / (n * grid.dt);
  return kernels::phase_dot(spec, 2.0 * kPi * grid.omega(0) * s, dphase) / n;
}

// --- generator operators ---------------------------------------------------

SampledSignal tf_shift(const SampledSignal& f, double x, double omega) {
  const GridSpec& g = f.grid;
  SampledSignal out(g);
  out.truncated = f.truncated;
  const double steps = x / g.dt;
  double dropped = 0.0;
  if (std::abs(steps - std::round(steps)) <= 1e-12 * std::max(1.0, std::abs(steps))) {
    const auto shift = static_cast<long long>(std::llround(steps));
    for (std::size_t k = 0; k < g.n; ++k) {
      const long long src = static_cast<long long>(k) - shift;
      if (src >= 0 && src < static_cast<long long>(g.n)) out.samples[k] = f.samples[static_cast<std::size_t>(src)];
    }
    // Everything that moved past the boundary is lost.
    for (std::size_t k = 0; k < g.n; ++k) {
      const long long dst = static_cast<long long>(k) + shift;
      if (dst < 0 || dst >= static_cast<long long>(g.n)) dropped += std::norm(f.samples[k]);
    }
  } else {
    std::vector<cplx> spec = spectrum(f);
    for (std::size_t j = 0; j < g.n; ++j) spec[j] *= std::polar(1.0, -2.0 * kPi * g.omega(j) * x);
    detail::centered_dft(spec, +1);
    const double inv_n = 1.0 / static_cast<double>(g.n);
    const double lo = g.t(0) - 0.5 * g.dt;
    const double hi = g.t(g.n - 1) + 0.5 * g.dt;
    for (std::size_t k = 0; k < g.n; ++k) {
      const double src = g.t(k) - x;
      const cplx v = spec[k] * inv_n;
      if (src < lo || src > hi) {
        dropped += std::norm(v);  // wrapped around the periodic grid
      } else {
        out.samples[k] = v;
      }
    }
  }
  const double total = kernels::norm2(f.samples);
  if (total > 0.0 && std::sqrt(dropped / total) > 1e-12) out.truncated = true;
  if (omega != 0.0) {
    for (std::size_t k = 0; k < g.n; ++k) out.samples[k] *= std::polar(1.0, 2.0 * kPi * omega * g.t(k));
  }
  return out;
}

SampledSignal chirp_apply(double p, const SampledSignal& f) {
  SampledSignal out = f;
  if (p == 0.0) return out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double t = f.grid.t(k);
    out.samples[k] *= std::polar(1.0, kPi * p * t * t);
  }
  return out;
}

AnalyticGaussian chirp_apply(double p, const AnalyticGaussian& f) { return {f.a, f.q - cplx(0.0, p)}; }

SampledSignal rescale_apply(double l, int n, const SampledSignal& f) {
  require_parity(l, n);
  const GridSpec& g = f.grid;
  const cplx factor = ipow(n) * std::sqrt(std::abs(l));
  SampledSignal out(g);
  out.truncated = f.truncated;
  if (l == 1.0 || l == -1.0) {
    for (std::size_t k = 0; k < g.n; ++k) {
      // t_k -> -t_k maps index k to N - k; k = 0 has no partner on the grid.
      const std::size_t src = l > 0 ? k : (k == 0 ? g.n : g.n - k);
      if (src < g.n) out.samples[k] = factor * f.samples[src];
    }
    return out;
  }
  check_resolved(f, "rescale input", false, true);
  const std::vector<cplx> spec = spectrum(f);
  for (std::size_t k = 0; k < g.n; ++k) out.samples[k] = factor * interpolate(spec, g, l * g.t(k));
  check_resolved(out, "rescale output", true, true);
  return out;
}

AnalyticGaussian rescale_apply(double l, int n, const AnalyticGaussian& f) {
  require_parity(l, n);
  return {ipow(n) * std::sqrt(std::abs(l)) * f.a, l * l * f.q};
}

SampledSignal fourier_mod(const SampledSignal& f) {
  check_resolved(f, "Fourier input", true, true);
  const GridSpec& g = f.grid;
  SampledSignal out(g);
  out.truncated = f.truncated;
  const cplx factor = kEighthTurnInv * g.dt;
  if (g.is_self_dual()) {
    out.samples = f.samples;
    detail::centered_dft(out.samples, -1);
    for (cplx& v : out.samples) v *= factor;
    return out;
  }
  // Frequencies on the time grid: direct sums, zero beyond the Nyquist band.
  const double nyquist = 0.5 / g.dt;
  for (std::size_t j = 0; j < g.n; ++j) {
    const double w = g.t(j);
    if (std::abs(w) >= nyquist) continue;
    out.samples[j] = factor * kernels::phase_dot(f.samples, -2.0 * kPi * w * g.t(0), -2.0 * kPi * w * g.dt);
  }
  check_resolved(out, "Fourier output", true, false);
  return out;
}

AnalyticGaussian fourier_mod(const AnalyticGaussian& f) {
  return {kEighthTurnInv * f.a / std::sqrt(f.q), 1.0 / f.q};
}

int maslov_index(double l) {
  if (l == 0.0 || std::isnan(l)) throw Error(ErrorKind::invalid_input, "Maslov index needs L != 0");
  return l > 0.0 ? 0 : 1;
}

// --- quadratic Fourier transforms ------------------------------------------

MetaplecticDescriptor::MetaplecticDescriptor(const QuadraticFormW& w, int n) : form(w), maslov(mod4(n)) {
  if (!std::isfinite(w.p) || !std::isfinite(w.q) || !std::isfinite(w.l) || w.l == 0.0) {
    throw Error(ErrorKind::invalid_form, "quadratic form needs finite P, Q and L != 0");
  }
  if (maslov % 2 != maslov_index(w.l)) {
    throw Error(ErrorKind::invalid_form, "Maslov index parity disagrees with sign(L)");
  }
}

MetaplecticDescriptor MetaplecticDescriptor::of(const SymplecticMat& s) {
  const QuadraticFormW w = generating_form(s);
  return {w, maslov_index(w.l)};
}

SampledSignal metaplectic_apply(const MetaplecticDescriptor& desc, const SampledSignal& f) {
  SampledSignal x = chirp_apply(desc.form.q, f);
  x = fourier_mod(x);
  x = rescale_apply(desc.form.l, desc.maslov, x);
  return chirp_apply(desc.form.p, x);
}

AnalyticGaussian metaplectic_apply(const MetaplecticDescriptor& desc, const AnalyticGaussian& f) {
  return chirp_apply(desc.form.p, rescale_apply(desc.form.l, desc.maslov, fourier_mod(chirp_apply(desc.form.q, f))));
}

SampledSignal metaplectic_quadrature(const MetaplecticDescriptor& desc, const SampledSignal& f) {
  const GridSpec& g = f.grid;
  const QuadraticFormW& w = desc.form;

  // Support radius: smallest |t| outside which f carries negligible energy.
  const double total = kernels::norm2(f.samples);
  double support = 0.0;
  double tail = 0.0;
  const std::size_t half = g.n / 2;
  for (std::size_t i = half;; --i) {
    // Samples at |t| = i dt.
    tail += std::norm(f.samples[half - i]);
    if (i > 0 && half + i < g.n) tail += std::norm(f.samples[half + i]);
    if (tail > kResolutionTol * total) {
      support = static_cast<double>(i) * g.dt;
      break;
    }
    if (i == 0) break;
  }
  if (std::abs(w.q) * support * g.dt >= 0.5) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "chirp Q = %.6g over support |t| <= %.6g needs dt < %.6g (have %.6g)", w.q, support,
                  0.5 / (std::abs(w.q) * support), g.dt);
    throw Error(ErrorKind::kernel_undersampled, buf);
  }
  SampledSignal integrand = chirp_apply(w.q, f);
  const double edge = resolution(integrand).freq_edge;
  if (edge > kResolutionTol) {
    throw Error(ErrorKind::kernel_undersampled,
                "chirped integrand reaches the Nyquist edge (energy fraction " + sci(edge) + ")");
  }

  SampledSignal out(g);
  out.truncated = f.truncated;
  const cplx factor = ipow(desc.maslov) * kEighthTurnInv * std::sqrt(std::abs(w.l)) * g.dt;
  const double nyquist = 0.5 / g.dt;
  for (std::size_t k = 0; k < g.n; ++k) {
    const double t = g.t(k);
    const double nu = w.l * t;
    if (std::abs(nu) >= nyquist) continue;
    const cplx sum = kernels::phase_dot(integrand.samples, -2.0 * kPi * nu * g.t(0), -2.0 * kPi * nu * g.dt);
    out.samples[k] = factor * std::polar(1.0, kPi * w.p * t * t) * sum;
  }
  return out;
}

MetaplecticDescriptor metaplectic_inverse(const MetaplecticDescriptor& desc) {
  return {QuadraticFormW{-desc.form.q, -desc.form.l, -desc.form.p}, 1 - desc.maslov};
}

MetaplecticDescriptor compose(const MetaplecticDescriptor& first, const MetaplecticDescriptor& second) {
  const QuadraticFormW& a = first.form;
  const QuadraticFormW& b = second.form;
  const double s = a.q + b.p;
  if (std::abs(s) <= 1e-12 * std::max({1.0, std::abs(a.q), std::abs(b.p)})) {
    throw Error(ErrorKind::not_free, "composition is not a free quadratic Fourier transform");
  }
  const QuadraticFormW w{a.p - a.l * a.l / s, a.l * b.l / s, b.q - b.l * b.l / s};
  return {w, first.maslov + second.maslov - (s < 0.0 ? 1 : 0)};
}

// --- operator words --------------------------------------------------------

SymplecticMat natural_projection(const MetaOp& op) {
  struct Visitor {
    SymplecticMat operator()(const ChirpOp& c) const { return SymplecticMat::shear(-c.p); }
    SymplecticMat operator()(const RescaleOp& r) const { return SymplecticMat::dilation(r.l); }
    SymplecticMat operator()(const FourierOp&) const { return SymplecticMat::J(); }
    SymplecticMat operator()(const MetaplecticDescriptor& d) const { return matrix_of_form(d.form); }
  };
  return std::visit(Visitor{}, op);
}

SymplecticMat natural_projection(const OperatorWord& word) {
  SymplecticMat s = SymplecticMat::identity();
  for (const MetaOp& op : word.ops) s = s * natural_projection(op);
  return s;
}

OperatorWord lift(const GeneratorWord& word) {
  struct Visitor {
    MetaOp operator()(const ChirpFactor& c) const { return ChirpOp{-c.p}; }
    MetaOp operator()(const RescaleFactor& r) const { return RescaleOp{r.l, r.maslov}; }
    MetaOp operator()(const FourierFactor&) const { return FourierOp{}; }
  };
  OperatorWord out;
  out.ops.reserve(word.factors.size());
  for (const Generator& g : word.factors) out.ops.push_back(std::visit(Visitor{}, g));
  return out;
}

OperatorWord metaplectic_of(const SymplecticMat& s) { return lift(word_decompose(s)); }

namespace {

template <class Signal>
Signal apply_op(const MetaOp& op, const Signal& f) {
  struct Visitor {
    const Signal& f;
    Signal operator()(const ChirpOp& c) const { return chirp_apply(c.p, f); }
    Signal operator()(const RescaleOp& r) const { return rescale_apply(r.l, r.maslov, f); }
    Signal operator()(const FourierOp&) const { return fourier_mod(f); }
    Signal operator()(const MetaplecticDescriptor& d) const { return metaplectic_apply(d, f); }
  };
  return std::visit(Visitor{f}, op);
}

template <class Signal>
Signal apply_word(const OperatorWord& word, const Signal& f) {
  Signal x = f;
  for (auto it = word.ops.rbegin(); it != word.ops.rend(); ++it) x = apply_op(*it, x);
  return x;
}

}  // namespace

SampledSignal apply(const MetaOp& op, const SampledSignal& f) { return apply_op(op, f); }
AnalyticGaussian apply(const MetaOp& op, const AnalyticGaussian& f) { return apply_op(op, f); }
SampledSignal apply(const OperatorWord& word, const SampledSignal& f) { return apply_word(word, f); }
AnalyticGaussian apply(const OperatorWord& word, const AnalyticGaussian& f) { return apply_word(word, f); }

// --- comparison, batteries, export -----------------------------------------

PhaseAlignment phase_align(const SampledSignal& f, const SampledSignal& g) {
  if (!(f.grid == g.grid)) throw Error(ErrorKind::invalid_input, "phase_align needs signals on the same grid");
  const double gn = kernels::norm2(g.samples);
  if (!(gn > 0.0)) throw Error(ErrorKind::invalid_input, "phase_align reference is zero");
  const cplx ip = kernels::dot(f.samples, g.samples);
  const cplx c = std::abs(ip) > 0.0 ? ip / std::abs(ip) : cplx(1.0, 0.0);
  double diff = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) diff += std::norm(f.samples[k] - c * g.samples[k]);
  return {c, std::sqrt(diff / gn)};
}

double hermite_value(int k, double m, double t) {
  if (k < 0 || k > kMaxHermiteOrder) {
    throw Error(ErrorKind::invalid_input, "Hermite order must lie in [0, " + std::to_string(kMaxHermiteOrder) + "]");
  }
  if (!std::isfinite(m) || !(m > 0.0)) throw Error(ErrorKind::invalid_input, "Hermite width must be positive");
  const double u = std::sqrt(2.0 * kPi * m) * t;
  // Orthonormal Hermite functions psi_k(u) in the variable u.
  double prev = 0.0;
  double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * u * u);
  for (int j = 0; j < k; ++j) {
    const double next = std::sqrt(2.0 / (j + 1)) * u * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return std::pow(2.0 * kPi * m, 0.25) * cur;
}

SampledSignal hermite(int k, double m, const GridSpec& grid) {
  SampledSignal out(grid);
  for (std::size_t i = 0; i < grid.n; ++i) out.samples[i] = hermite_value(k, m, grid.t(i));
  return out;
}

void write_signal_csv(std::ostream& out, const SampledSignal& f) {
  out << "t,re,im\n";
  char line[128];
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", f.grid.t(k), f.samples[k].real(), f.samples[k].imag());
    out << line;
  }
}

}  // namespace gfsi
