// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "gfsi/frame.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "detail/fft.hpp"
#include "gfsi/error.hpp"
#include "gfsi/kernels.hpp"
#include "gfsi/tfa.hpp"

namespace gfsi {
namespace {

constexpr double kPi = std::numbers::pi;

// exp(2 pi i omega t_k) for all k, re-seeded every 64 steps to bound drift.
void modulate(std::vector<cplx>& v, const GridSpec& g, double omega) {
  if (omega == 0.0) return;
  const double step = 2.0 * kPi * omega * g.dt;
  const cplx rot = std::polar(1.0, step);
  cplx phase;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k % 64 == 0) phase = std::polar(1.0, 2.0 * kPi * omega * g.t(k));
    v[k] *= phase;
    phase *= rot;
  }
}

// Translates of one window, sharing its spectrum.
class AtomFactory {
 public:
  explicit AtomFactory(const SampledSignal& g) : g_(g), spec_(spectrum(g)), total_(kernels::norm2(g.samples)) {}

  SampledSignal make(Point p) const {
    const GridSpec& grid = g_.grid;
    SampledSignal out(grid);
    double dropped = 0.0;
    const double steps = p.x / grid.dt;
    if (std::abs(steps - std::round(steps)) <= 1e-12 * std::max(1.0, std::abs(steps))) {
      const auto shift = std::llround(steps);
      const auto n = static_cast<long long>(grid.n);
      for (long long k = 0; k < n; ++k) {
        const long long src = k - shift;
        if (src >= 0 && src < n) {
          out.samples[static_cast<std::size_t>(k)] = g_.samples[static_cast<std::size_t>(src)];
        }
        const long long dst = k + shift;
        if (dst < 0 || dst >= n) dropped += std::norm(g_.samples[static_cast<std::size_t>(k)]);
      }
    } else {
      std::vector<cplx> work(grid.n);
      const double dphase = -2.0 * kPi * p.x / (static_cast<double>(grid.n) * grid.dt);
      const cplx rot = std::polar(1.0, dphase);
      cplx phase;
      for (std::size_t j = 0; j < grid.n; ++j) {
        if (j % 64 == 0) phase = std::polar(1.0, -2.0 * kPi * grid.omega(j) * p.x);
        work[j] = spec_[j] * phase;
        phase *= rot;
      }
      detail::centered_dft(work, +1);
      const double inv_n = 1.0 / static_cast<double>(grid.n);
      const double lo = grid.t(0) - 0.5 * grid.dt;
      const double hi = grid.t(grid.n - 1) + 0.5 * grid.dt;
      for (std::size_t k = 0; k < grid.n; ++k) {
        const double src = grid.t(k) - p.x;
        const cplx v = work[k] * inv_n;
        if (src < lo || src > hi) {
          dropped += std::norm(v);
        } else {
          out.samples[k] = v;
        }
      }
    }
    out.truncated = total_ > 0.0 && std::sqrt(dropped / total_) > 1e-12;
    modulate(out.samples, grid, p.omega);
    return out;
  }

 private:
  const SampledSignal& g_;
  std::vector<cplx> spec_;
  double total_;
};

std::vector<Point> annulus(const Lattice& lattice, double inner, double outer) {
  std::vector<Point> out;
  for (const Point& p : enumerate(lattice, outer).points) {
    if (std::hypot(p.x, p.omega) > inner * (1.0 + 1e-12)) out.push_back(p);
  }
  return out;
}

double max_row_energy(const Eigen::MatrixXcd& c) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < c.rows(); ++j) worst = std::max(worst, c.row(j).squaredNorm());
  return worst;
}

FrameBoundsEstimate base_estimate(const GaborSystem& sys, const char* method) {
  FrameBoundsEstimate e;
  e.method = method;
  e.point_count = sys.points().count();
  e.radius = sys.radius();
  e.grid = sys.window().grid;
  e.volume = sys.lattice().volume();
  return e;
}

Eigen::MatrixXcd assemble_dense(const GaborSystem& sys, const DenseOptions& options, std::size_t& point_count) {
  const GridSpec& grid = sys.window().grid;
  if (grid.n > 2048) throw Error(ErrorKind::cost_guard, "dense frame operator limited to N <= 2048");
  const std::size_t lo = grid.n / 4;
  const std::size_t m = grid.n / 2;
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  const AtomFactory factory(sys.window());
  const auto pts = enumerate(sys.lattice(), options.radius);
  point_count = pts.count();
  const auto& table = kernels::active();
  for (const Point& p : pts.points) {
    // Mass pushed past the grid edge never meets the central half.
    const SampledSignal atom = factory.make(p);
    table.rank_one(mat.data(), atom.samples.data() + lo, m, grid.dt);
  }
  return mat;
}

}  // namespace

// --- systems and batteries -------------------------------------------------

GaborSystem::GaborSystem(SampledSignal window, Lattice lattice, double radius)
    : window_(std::move(window)), lattice_(lattice), radius_(radius), points_(enumerate(lattice, radius)) {
  const double n = window_.norm();
  if (std::abs(n - 1.0) > 1e-8) {
    throw Error(ErrorKind::invalid_input, "Gabor window must have unit norm (got " + std::to_string(n) + ")");
  }
  for (cplx& v : window_.samples) v /= n;
  if (points_.count() == 0) throw Error(ErrorKind::invalid_lattice, "no lattice points within the radius");
  tail_ = annulus(lattice_, radius_, radius_ + 2.0);
}

TestBattery TestBattery::hermite(int k, const GridSpec& grid, double m) {
  if (k < 1 || k > kMaxHermiteOrder + 1) throw Error(ErrorKind::invalid_input, "battery size out of range");
  TestBattery b;
  for (int i = 0; i < k; ++i) b.members.push_back(gfsi::hermite(i, m, grid));
  b.gram.resize(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) b.gram(i, j) = grid.dt * kernels::dot(b.members[i].samples, b.members[j].samples);
  }
  const double defect = (b.gram - Eigen::MatrixXcd::Identity(k, k)).cwiseAbs().maxCoeff();
  if (defect > 1e-9) throw Error(ErrorKind::resolution, "battery is not orthonormal on this grid");
  // Concentration: mass outside |t| <= span/4.
  for (const SampledSignal& h : b.members) {
    double outside = 0.0;
    for (std::size_t i = 0; i < grid.n; ++i) {
      if (std::abs(grid.t(i)) > 0.25 * grid.span()) outside += std::norm(h.samples[i]);
    }
    if (std::sqrt(outside * grid.dt) > 1e-12) throw Error(ErrorKind::resolution, "battery member not concentrated");
  }
  return b;
}

std::vector<SampledSignal> atoms(const SampledSignal& g, const std::vector<Point>& points) {
  const AtomFactory factory(g);
  std::vector<SampledSignal> out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back(factory.make(p));
  return out;
}

Eigen::MatrixXcd analysis_coefficients(const std::vector<SampledSignal>& fs, const SampledSignal& g,
                                       const std::vector<Point>& points) {
  const AtomFactory factory(g);
  Eigen::MatrixXcd c(static_cast<Eigen::Index>(fs.size()), static_cast<Eigen::Index>(points.size()));
  const auto& table = kernels::active();
  for (std::size_t l = 0; l < points.size(); ++l) {
    // Atom mass dropped at the grid edge is irrelevant for concentrated f_j;
    // convergence of the frame sum is policed by the tail check instead.
    const SampledSignal atom = factory.make(points[l]);
    for (std::size_t j = 0; j < fs.size(); ++j) {
      c(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) =
          g.grid.dt * table.dot(fs[j].samples.data(), atom.samples.data(), g.grid.n);
    }
  }
  return c;
}

double frame_quadratic_form(const GaborSystem& sys, const SampledSignal& f) {
  const double n2 = f.norm() * f.norm();
  if (!(n2 > 0.0)) throw Error(ErrorKind::invalid_input, "quadratic form of the zero signal");
  const std::vector<SampledSignal> one{f};
  const double tail = analysis_coefficients(one, sys.window(), sys.tail_points()).squaredNorm() / n2;
  if (tail > kTailTol) {
    throw Error(ErrorKind::truncation, "frame sum not converged at R = " + std::to_string(sys.radius()) +
                                           " (annulus energy " + std::to_string(tail) + "); widen R");
  }
  return analysis_coefficients(one, sys.window(), sys.points().points).squaredNorm() / n2;
}

FrameBoundsEstimate estimate_bounds(const GaborSystem& sys, const TestBattery& battery) {
  FrameBoundsEstimate e = base_estimate(sys, "battery");
  e.subspace_dim = battery.size();
  e.tail = max_row_energy(analysis_coefficients(battery.members, sys.window(), sys.tail_points()));
  if (e.tail > kTailTol) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "frame sum not converged at R = %g (annulus energy %.3g > %.0e); widen R",
                  sys.radius(), e.tail, kTailTol);
    throw Error(ErrorKind::truncation, buf);
  }
  const Eigen::MatrixXcd c = analysis_coefficients(battery.members, sys.window(), sys.points().points);
  const Eigen::MatrixXcd q = c * c.adjoint();
  const double scale = std::max(1.0, q.cwiseAbs().maxCoeff());
  if ((q - q.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw Error(ErrorKind::eigen_failure, "frame matrix on the battery is not Hermitian");
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> solver(q, battery.gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::eigen_failure, "generalized eigensolver failed");
  e.a = solver.eigenvalues().minCoeff();
  e.b = solver.eigenvalues().maxCoeff();
  return e;
}

FrameBoundsEstimate estimate_bounds_dense(const GaborSystem& sys, const DenseOptions& options) {
  FrameBoundsEstimate e = base_estimate(sys, "dense");
  e.radius = options.radius;
  const GridSpec& grid = sys.window().grid;
  if (!(options.time_half > 0.0) || options.time_half > 0.25 * grid.span()) {
    throw Error(ErrorKind::invalid_input, "concentration box must lie in the central half of the grid");
  }
  const Eigen::MatrixXcd full = assemble_dense(sys, options, e.point_count);

  // Time-limited index set inside the central half.
  const std::size_t lo = grid.n / 4;
  std::vector<Eigen::Index> idx;
  for (std::size_t k = lo; k < lo + grid.n / 2; ++k) {
    if (std::abs(grid.t(k)) <= options.time_half) idx.push_back(static_cast<Eigen::Index>(k - lo));
  }
  const auto nt = static_cast<Eigen::Index>(idx.size());

  // Band limiting kernel b(d) = (1/N) sum_{|omega_j| <= W} exp(2 pi i omega_j d dt).
  std::vector<cplx> kernel(2 * idx.size() + 1);
  const double n = static_cast<double>(grid.n);
  for (std::size_t d = 0; d < kernel.size(); ++d) {
    const double off = static_cast<double>(d) - static_cast<double>(idx.size());
    cplx sum = 0.0;
    for (std::size_t j = 0; j < grid.n; ++j) {
      if (std::abs(grid.omega(j)) <= options.band_half) {
        sum += std::polar(1.0, 2.0 * kPi * (static_cast<double>(j) - n / 2) * off / n);
      }
    }
    kernel[d] = sum / n;
  }
  Eigen::MatrixXcd conc(nt, nt);
  for (Eigen::Index r = 0; r < nt; ++r) {
    for (Eigen::Index c = 0; c < nt; ++c) conc(r, c) = kernel[static_cast<std::size_t>(r - c + nt)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> prolate(conc);
  if (prolate.info() != Eigen::Success) throw Error(ErrorKind::eigen_failure, "concentration eigensolver failed");
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < nt; ++i) {
    if (prolate.eigenvalues()(i) >= 1.0 - options.concentration) keep.push_back(i);
  }
  if (keep.empty()) throw Error(ErrorKind::invalid_input, "concentration box holds no well-concentrated functions");
  Eigen::MatrixXcd u(nt, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) u.col(static_cast<Eigen::Index>(i)) = prolate.eigenvectors().col(keep[i]);

  Eigen::MatrixXcd sub(nt, nt);
  for (Eigen::Index r = 0; r < nt; ++r) {
    for (Eigen::Index c = 0; c < nt; ++c) sub(r, c) = full(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
  }
  const Eigen::MatrixXcd compressed = u.adjoint() * sub * u;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(compressed, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::eigen_failure, "dense eigensolver failed");
  e.subspace_dim = keep.size();
  e.a = solver.eigenvalues().minCoeff();
  e.b = solver.eigenvalues().maxCoeff();
  return e;
}

DenseDiagnostics dense_diagnostics(const GaborSystem& sys, const DenseOptions& options) {
  std::size_t count = 0;
  const Eigen::MatrixXcd full = assemble_dense(sys, options, count);
  DenseDiagnostics d;
  d.hermitian_defect = (full - full.adjoint()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(full, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::eigen_failure, "dense eigensolver failed");
  d.min_eigenvalue = solver.eigenvalues().minCoeff();
  return d;
}

// --- invariance verdicts ---------------------------------------------------

namespace {

double discrepancy(const FrameBoundsEstimate& one, const FrameBoundsEstimate& two) {
  return std::max(std::abs(one.a - two.a) / one.a, std::abs(one.b - two.b) / one.b);
}

SampledSignal transport(const SymplecticMat& s, const SampledSignal& g) {
  const OperatorWord word = metaplectic_of(s);
  const double scale = std::max(1.0, s.mat().norm_inf());
  if (natural_projection(word).mat().max_abs_diff(s.mat()) > 1e-9 * scale * scale) {
    throw Error(ErrorKind::convention_violation, "metaplectic word does not project onto the deformation");
  }
  return apply(word, g);
}

InvarianceReport compare(const std::string& name, const GaborSystem& first, const GaborSystem& second,
                         const TestBattery& battery, double tolerance) {
  InvarianceReport r;
  r.name = name;
  r.original = estimate_bounds(first, battery);
  r.deformed = estimate_bounds(second, battery);
  r.discrepancy = discrepancy(r.original, r.deformed);
  r.tolerance = tolerance;
  r.pass = r.discrepancy <= tolerance;
  return r;
}

}  // namespace

double compare_invariance(const GaborSystem& first, const GaborSystem& second, const TestBattery& battery) {
  return discrepancy(estimate_bounds(first, battery), estimate_bounds(second, battery));
}

InvarianceReport verify_covariance(const SampledSignal& g, const Lattice& lattice, const SymplecticMat& s,
                              const TestBattery& battery, double tolerance, double radius) {
  const GaborSystem original(g, lattice, radius);
  const GaborSystem deformed(transport(s, g), deform(lattice, s), radius);
  return compare("symplectic deformation", original, deformed, battery, tolerance);
}

FlowReport verify_flow_invariance(double m, const Lattice& lattice, const std::vector<double>& taus, const TestBattery& battery,
                        const GridSpec& grid, double tolerance) {
  FlowReport report;
  report.m = m;
  report.pass = true;
  const SampledSignal gm = gaussian(m).sample(grid);
  const GaborSystem original(gm, lattice);
  const FrameBoundsEstimate base = estimate_bounds(original, battery);
  const TFGrid tf = TFGrid::symmetric(3.0, 0.25);
  for (const double tau : taus) {
    FlowCheck c;
    c.tau = tau;
    const SymplecticMat flow = oscillator_flow(tau, m);
    const SampledSignal moved = transport(flow, gm);
    c.eigen_residual = phase_align(moved, gm).residual;
    c.ambiguity_deviation = max_deviation(ambiguity(moved, tf), [m](double x, double w) {
      return cplx(ambiguity_gaussian_closed(m, x, w), 0.0);
    });
    c.bounds.name = "elliptic flow";
    c.bounds.original = base;
    c.bounds.deformed = estimate_bounds(GaborSystem(gm, deform(lattice, flow)), battery);
    c.bounds.discrepancy = discrepancy(base, c.bounds.deformed);
    c.bounds.tolerance = tolerance;
    c.bounds.pass = c.bounds.discrepancy <= tolerance;
    c.pass = c.eigen_residual <= 1e-7 && c.ambiguity_deviation <= 1e-6 && c.bounds.pass;
    report.pass = report.pass && c.pass;
    report.checks.push_back(c);
  }
  return report;
}

ModularReport verify_modular_invariance(const SampledSignal& g, double delta, const SymplecticMat& b, const SymplecticMat& s,
                           const TestBattery& battery, double tolerance) {
  if (!is_modular(b, 1e-12)) throw Error(ErrorKind::invalid_input, "basis change must be an integer matrix");
  if (!(delta > 1.0)) throw Error(ErrorKind::invalid_input, "density must exceed 1");
  const Lattice lattice = Lattice::integer(delta);
  ModularReport r;
  const Lattice plain = deform(lattice, s);
  const Lattice changed = deform(lattice, s * b);
  r.lattices_equal = lattices_equal(plain, changed, 1e-9);
  const SampledSignal gs = transport(s, g);
  const SampledSignal gsb = transport(s, transport(b, g));
  r.window_residual = phase_align(gsb, gs).residual;
  r.windows_coincide = r.window_residual < 1e-6;
  r.bounds = compare("modular basis change", GaborSystem(gs, plain), GaborSystem(gsb, changed), battery, tolerance);
  r.pass = r.lattices_equal && r.bounds.pass && (r.windows_coincide || r.window_residual > 0.1);
  return r;
}

}  // namespace gfsi
