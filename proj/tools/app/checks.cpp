// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "checks.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "gfsi/error.hpp"
#include "gfsi/frame.hpp"
#include "gfsi/lattice.hpp"
#include "gfsi/signal.hpp"
#include "gfsi/symplectic.hpp"
#include "gfsi/tfa.hpp"

namespace gfsi::app {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double max_diff(const SampledSignal& f, const SampledSignal& g) {
  double m = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) m = std::max(m, std::abs(f.samples[k] - g.samples[k]));
  return m;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

 private:
  std::mt19937_64 engine_;
};

// Free matrix with |a|, |d| <= amax and |b| in [bmin, bmax].
SymplecticMat random_free(Rng& rng, double amax, double bmin, double bmax) {
  const double a = rng.uniform(-amax, amax);
  const double d = rng.uniform(-amax, amax);
  double b = rng.uniform(bmin, bmax);
  if (rng.coin()) b = -b;
  return SymplecticMat::from(Mat2{a, b, (a * d - 1.0) / b, d});
}

SymplecticMat random_word(Rng& rng, int count, double max_shear, double max_log_dilation) {
  SymplecticMat s = SymplecticMat::identity();
  for (int i = 0; i < count; ++i) {
    const double pick = rng.uniform(0.0, 3.0);
    if (pick < 1.0) {
      s = s * SymplecticMat::shear(rng.uniform(-max_shear, max_shear));
    } else if (pick < 2.0) {
      double l = std::exp(rng.uniform(-max_log_dilation, max_log_dilation));
      if (rng.coin(0.3)) l = -l;
      s = s * SymplecticMat::dilation(l);
    } else {
      s = s * SymplecticMat::J();
    }
  }
  return s;
}

ojson matrix_json(const Mat2& m) { return ojson::array({m.a, m.b, m.c, m.d}); }

std::vector<SampledSignal> hermite_battery(int count, const GridSpec& grid) {
  std::vector<SampledSignal> out;
  for (int k = 0; k < count; ++k) out.push_back(hermite(k, 1.0, grid));
  return out;
}

// ---- symplectic algebra --------------------------------------------------

std::vector<CaseRecord> check_algebra(const RunConfig& cfg) {
  const double tol = cfg.tol_algebraic;
  std::vector<CaseRecord> out;
  out.push_back(run_case("free factorization", {{"matrices", 1000}, {"seed", 1}}, [&](CaseRecord& rec) {
    Rng rng(1);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const SymplecticMat s = random_free(rng, 3.0, 0.2, 3.0);
      worst = std::max(worst, free_factorize(s).product().mat().max_abs_diff(s.mat()));
    }
    rec.metrics.push_back(at_most("max entry residual", worst, 10.0 * tol, "V_{-P} M_L J V_{-Q} product"));
  }));
  out.push_back(run_case("generating form round trip", {{"matrices", 1000}, {"seed", 2}}, [&](CaseRecord& rec) {
    Rng rng(2);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const SymplecticMat s = random_free(rng, 3.0, 0.2, 3.0);
      worst = std::max(worst, matrix_of_form(generating_form(s)).mat().max_abs_diff(s.mat()));
    }
    rec.metrics.push_back(at_most("max entry residual", worst, tol, "matrix_of_form(generating_form(S))"));
  }));
  out.push_back(run_case("two-free factorization", {{"matrices", 1000}, {"seed", 3}}, [&](CaseRecord& rec) {
    Rng rng(3);
    double worst = 0.0;
    int not_free = 0;
    for (int i = 0; i < 1000; ++i) {
      const SymplecticMat s = (i % 2) ? random_free(rng, 3.0, 0.2, 3.0) : random_word(rng, 6, 1.5, 0.5);
      const auto [f1, f2] = two_free_factorization(s);
      not_free += (f1.is_free() && f2.is_free()) ? 0 : 1;
      worst = std::max(worst, (f1 * f2).mat().max_abs_diff(s.mat()) / std::max(1.0, s.mat().norm_inf()));
    }
    rec.metrics.push_back(at_most("non-free factors", not_free, 0.0, "|b| > 1e-9 max(1, ||S||)"));
    rec.metrics.push_back(at_most("relative residual", worst, tol, "F1 F2 - S, scaled by max(1, ||S||)"));
  }));
  return out;
}

std::vector<CaseRecord> check_flow(const RunConfig& cfg) {
  std::vector<CaseRecord> out;
  const std::vector<double> masses = {1.0 / std::sqrt(3.0), 1.0, std::sqrt(3.0), 2.0};
  out.push_back(run_case("numeric flow", {{"omega", 1}, {"steps", 2000}, {"tau", "25 points on [-pi, pi]"}},
                         [&](CaseRecord& rec) {
                           double worst = 0.0;
                           for (const double m : masses) {
                             for (int i = 0; i < 25; ++i) {
                               const double tau = -kPi + 2.0 * kPi * i / 24.0;
                               worst = std::max(worst, oscillator_flow_numeric(tau, m, 1.0, 2000)
                                                           .max_abs_diff(oscillator_flow(tau, m).mat()));
                             }
                           }
                           rec.details["masses"] = masses;
                           rec.metrics.push_back(at_most("max entry deviation", worst, 1e-8, "RK4 vs closed form"));
                         }));
  out.push_back(run_case("flow intertwining", {{"tau", "25 points on [-pi, pi]"}}, [&](CaseRecord& rec) {
    double worst = 0.0;
    for (const double m : masses) {
      const SymplecticMat root = SymplecticMat::dilation(std::sqrt(m));
      for (int i = 0; i < 25; ++i) {
        const double tau = -kPi + 2.0 * kPi * i / 24.0;
        worst = std::max(worst, (oscillator_flow(tau, m) * root).mat().max_abs_diff((root * oscillator_flow(tau, 1.0)).mat()));
      }
    }
    rec.metrics.push_back(at_most("max entry deviation", worst, cfg.tol_algebraic, "S_{tau,m} M_{sqrt m} - M_{sqrt m} S_tau"));
  }));
  return out;
}

// ---- metaplectic operators -----------------------------------------------

std::vector<CaseRecord> check_operators(const RunConfig& cfg) {
  const GridSpec grid = cfg.grid();
  const double scale = cfg.transform_scale();
  const std::vector<SampledSignal> battery = hermite_battery(10, grid);
  std::vector<CaseRecord> out;
  Rng rng(4);
  for (int i = 0; i < 10; ++i) {
    const SymplecticMat s = random_free(rng, 1.5, 0.5, 2.0);
    out.push_back(run_case("free matrix " + std::to_string(i + 1), {{"matrix", matrix_json(s.mat())}, {"battery", "h_0..h_9"}},
                           [&](CaseRecord& rec) {
                             const auto desc = MetaplecticDescriptor::of(s);
                             const auto inv = metaplectic_inverse(desc);
                             const auto cover = MetaplecticDescriptor(desc.form, desc.maslov + 2);
                             double quad = 0.0, unit = 0.0, round = 0.0, sign = 0.0;
                             for (const SampledSignal& h : battery) {
                               const SampledSignal a = metaplectic_apply(desc, h);
                               quad = std::max(quad, max_diff(a, metaplectic_quadrature(desc, h)));
                               unit = std::max(unit, std::abs(a.norm() - h.norm()));
                               round = std::max(round, max_diff(metaplectic_apply(inv, a), h));
                               const SampledSignal c = metaplectic_apply(cover, h);
                               for (std::size_t k = 0; k < c.size(); ++k) sign = std::max(sign, std::abs(c.samples[k] + a.samples[k]));
                             }
                             rec.metrics.push_back(at_most("pipeline vs quadrature", quad, cfg.transform_tolerance(), "max abs sample difference"));
                             rec.metrics.push_back(at_most("unitarity", unit, 1e-9 * scale, "| ||S f|| - ||f|| |"));
                             rec.metrics.push_back(at_most("inverse round trip", round, 1e-8 * scale, "max abs sample difference"));
                             rec.metrics.push_back(at_most("cover sign", sign, cfg.tol_algebraic, "S_{n+2} f + S_n f"));
                           }));
  }
  return out;
}

std::vector<CaseRecord> check_eigen(const RunConfig& cfg) {
  const GridSpec grid = cfg.grid();
  std::vector<CaseRecord> out;
  for (const double tau : {kPi / 12, -kPi / 12, kPi / 6, -kPi / 6, kPi / 4, -kPi / 4, 1.0}) {
    for (const double m : {1.0 / std::sqrt(3.0), 1.0, std::sqrt(3.0), 2.0}) {
      out.push_back(run_case("flow eigenfunction tau=" + fmt("%.4f", tau) + " m=" + fmt("%.4f", m), {{"tau", tau}, {"m", m}},
                             [&](CaseRecord& rec) {
                               const auto desc = MetaplecticDescriptor::of(oscillator_flow(tau, m));
                               const AnalyticGaussian gm = gaussian(m);
                               const SampledSignal sampled = gm.sample(grid);
                               const auto al = phase_align(metaplectic_apply(desc, sampled), sampled);
                               const AnalyticGaussian exact = metaplectic_apply(desc, gm);
                               rec.details["phase"] = {{"re", al.c.real()}, {"im", al.c.imag()}, {"method", "<S g, g> / |<S g, g>|"}};
                               rec.metrics.push_back(at_most("sampled residual", al.residual, cfg.transform_tolerance(), "phase-aligned relative L2"));
                               const double analytic = std::max(std::abs(exact.q - m) / m, std::abs(std::abs(exact.a) - gm.a.real()) / gm.a.real());
                               rec.metrics.push_back(at_most("analytic residual", analytic, cfg.tol_algebraic, "Gaussian parameters, relative"));
                             }));
    }
  }
  return out;
}

// ---- time-frequency identities -------------------------------------------

std::vector<CaseRecord> check_ambiguity(const RunConfig& cfg) {
  const GridSpec grid = cfg.grid();
  const double scale = cfg.transform_scale();
  std::vector<CaseRecord> out;
  const TFGrid box = TFGrid::symmetric(3.0, 0.125);
  for (const double m : {1.0 / std::sqrt(3.0), 1.0, std::sqrt(3.0), 2.0}) {
    out.push_back(run_case("gaussian ambiguity m=" + fmt("%.4f", m), {{"m", m}, {"box", "[-3,3]^2 step 0.125"}},
                           [&](CaseRecord& rec) {
                             const double dev = max_deviation(ambiguity(gaussian(m).sample(grid), box), [m](double x, double w) {
                               return cplx(ambiguity_gaussian_closed(m, x, w), 0.0);
                             });
                             rec.metrics.push_back(at_most("max deviation", dev, 1e-8 * scale, "numeric vs closed form"));
                           }));
  }
  const std::vector<std::pair<std::string, SampledSignal>> signals = {
      {"g_1", gaussian(1.0).sample(grid)},
      {"h_3(m=0.8)", hermite(3, 0.8, grid)},
      {"shifted chirped g_1.5", tf_shift(chirp_apply(0.7, gaussian(1.5).sample(grid)), 0.75, -0.5)},
  };
  out.push_back(run_case("ambiguity vs short-time Fourier transform", {{"box", "[-2.5,2.5]^2 step 0.25"}}, [&](CaseRecord& rec) {
    const TFGrid tf = TFGrid::symmetric(2.5, 0.25);
    double worst = 0.0;
    for (const auto& [fname, f] : signals) {
      for (const auto& [gname, g] : signals) {
        const TFSurface ag = cross_ambiguity(f, g, tf);
        const TFSurface vg = stft(f, g, tf);
        for (std::size_t i = 0; i < tf.nx; ++i) {
          for (std::size_t j = 0; j < tf.nomega; ++j) {
            worst = std::max(worst, std::abs(ag.at(i, j) - std::polar(1.0, kPi * tf.x(i) * tf.omega(j)) * vg.at(i, j)));
          }
        }
      }
    }
    rec.metrics.push_back(at_most("max deviation", worst, 1e-9 * scale, "A_g f - exp(pi i x w) V_g f"));
  }));
  for (const auto& [fname, f] : signals) {
    out.push_back(run_case("wigner vs symplectic fourier of ambiguity " + fname, {{"signal", fname}}, [&](CaseRecord& rec) {
      const TFGrid wgrid = TFGrid::symmetric(2.0, 0.25);
      const TFSurface w = wigner(f, wgrid);
      const TFSurface a = ambiguity(f, TFGrid::symmetric(7.0, 0.125));
      double worst = 0.0;
      for (std::size_t i = 0; i < wgrid.nx; i += 2) {
        for (std::size_t j = 0; j < wgrid.nomega; j += 2) {
          worst = std::max(worst, std::abs(symplectic_fourier(a, Point{wgrid.x(i), wgrid.omega(j)}) - w.at(i, j)));
        }
      }
      rec.metrics.push_back(at_most("max deviation", worst, 1e-7 * scale, "Riemann sum over [-7,7]^2 step 0.125"));
    }));
  }
  Rng rng(5);
  const TFGrid cov = TFGrid::symmetric(3.0, 0.5);
  for (int i = 0, found = 0; found < 20 && i < 1000; ++i) {
    const SymplecticMat s = random_word(rng, 4, 1.0, 0.4);
    if (s.mat().norm_inf() > 4.0) continue;
    const auto& [fname, f] = signals[static_cast<std::size_t>(found) % signals.size()];
    ++found;
    out.push_back(run_case("covariance word " + std::to_string(found), {{"matrix", matrix_json(s.mat())}, {"signal", fname}},
                           [&](CaseRecord& rec) {
                             rec.metrics.push_back(at_most("max deviation", covariance_check(s, f, cov), 1e-6 * scale,
                                                           "A(S f)(l) - A f(S^-1 l) on [-3,3]^2 step 0.5"));
                           }));
  }
  return out;
}

std::vector<CaseRecord> check_rotated_windows(const RunConfig& cfg) {
  std::vector<CaseRecord> out;
  out.push_back(run_case("rotated sqrt(3) windows", {{"delta", 2.0}, {"box", "[-2,2]^2 step 0.125"}}, [&](CaseRecord& rec) {
    const auto res = modular_example_surfaces(2.0, TFGrid::symmetric(2.0, 0.125), cfg.grid());
    const char* method = "numeric ambiguity vs exp(-(pi/2)(2/sqrt3)(x^2 +- x w + w^2))";
    rec.metrics.push_back(at_most("plus deviation", res.plus_deviation, 1e-6 * cfg.transform_scale(), method));
    rec.metrics.push_back(at_most("minus deviation", res.minus_deviation, 1e-6 * cfg.transform_scale(), method));
  }));
  return out;
}

std::vector<CaseRecord> check_hex_square(const RunConfig& cfg) {
  std::vector<CaseRecord> out;
  for (const double delta : {1.5, 2.0, 4.0}) {
    out.push_back(run_case("hexagonal to rotated square delta=" + fmt("%g", delta), {{"delta", delta}}, [&](CaseRecord& rec) {
      const auto res = resolve_hex_to_square(delta);
      const Lattice target = Lattice::square45(delta);
      const Lattice other = deform(hexagonal(delta).lattice, SymplecticMat::dilation(std::pow(3.0, -0.25 * res.sign)));
      rec.details["sign"] = res.sign;
      rec.details["dilation"] = res.dilation;
      rec.metrics.push_back(holds("chosen sign matches", lattices_equal(res.lattice, target, 1e-9), "unimodular change of basis"));
      rec.metrics.push_back(holds("other sign differs", !lattices_equal(other, target, 1e-9), "unimodular change of basis"));
      const SampledSignal window = apply(metaplectic_of(SymplecticMat::dilation(res.dilation)), gaussian(1.0).sample(cfg.grid()));
      const double r3 = std::sqrt(3.0);
      const double dev = max_deviation(ambiguity(window, TFGrid::symmetric(3.0, 0.25)), [r3](double x, double w) {
        return cplx(std::exp(-0.5 * kPi * (r3 * x * x + w * w / r3)), 0.0);
      });
      rec.metrics.push_back(at_most("window ambiguity deviation", dev, 1e-6 * cfg.transform_scale(),
                                    "numeric vs exp(-(pi/2)(sqrt3 x^2 + w^2/sqrt3))"));
    }));
  }
  return out;
}

// ---- frame bounds ---------------------------------------------------------

struct NamedLattice {
  std::string name;
  Lattice lattice;
};

std::vector<NamedLattice> shipped_lattices() {
  std::vector<NamedLattice> out;
  for (const double delta : {1.5, 2.0, 4.0}) {
    out.push_back({"square:delta=" + fmt("%g", delta), Lattice::integer(delta)});
    out.push_back({"hex:delta=" + fmt("%g", delta), hexagonal(delta).lattice});
    out.push_back({"square45:delta=" + fmt("%g", delta), Lattice::square45(delta)});
  }
  return out;
}

const std::vector<double>& shipped_masses() {
  static const std::vector<double> m = {1.0 / std::sqrt(3.0), 1.0, std::sqrt(3.0)};
  return m;
}

ojson bounds_json(const FrameBoundsEstimate& e) {
  return {{"a", e.a}, {"b", e.b}, {"method", e.method}, {"subspace_dim", e.subspace_dim}, {"points", e.point_count},
          {"radius", e.radius}, {"tail", e.tail}};
}

std::string method_tag(const RunConfig& cfg) {
  return "battery K=" + std::to_string(cfg.battery_k) + " R=" + fmt("%g", cfg.frame_radius);
}

// G B G^-1 for the lattice basis G: maps the lattice onto itself.
SymplecticMat conjugate_modular(const Lattice& lattice, const Mat2& b) {
  const Mat2 g = lattice.basis();
  const double det = g.det();
  const Mat2 inv{g.d / det, -g.b / det, -g.c / det, g.a / det};
  return SymplecticMat::from(g * b * inv);
}

std::vector<CaseRecord> check_invariance(const RunConfig& cfg) {
  const GridSpec grid = cfg.grid();
  const TestBattery battery = TestBattery::hermite(cfg.battery_k, grid);
  const double radius = cfg.frame_radius;
  const std::string method = method_tag(cfg);
  std::vector<CaseRecord> out;
  for (const double m : shipped_masses()) {
    const SampledSignal g = gaussian(m).sample(grid);
    const std::string wname = "gaussian:m=" + fmt("%.6g", m);
    for (const NamedLattice& nl : shipped_lattices()) {
      auto record = [&](const InvarianceReport& r, CaseRecord& rec) {
        rec.details["original"] = bounds_json(r.original);
        rec.details["deformed"] = bounds_json(r.deformed);
        rec.metrics.push_back(at_most("bound discrepancy", r.discrepancy, cfg.tol_bounds, method));
      };
      auto inputs = [&](const std::string& deformation) {
        return ojson{{"window", wname}, {"lattice", nl.name}, {"deformation", deformation}};
      };
      const std::string base = wname + " " + nl.name + " ";
      {
        const std::string d = "rotate:tau=pi/5";
        out.push_back(run_case(base + d, inputs(d), [&](CaseRecord& rec) {
          record(verify_covariance(g, nl.lattice, SymplecticMat::rotation(kPi / 5), battery, cfg.tol_bounds, radius), rec);
        }));
      }
      {
        const std::string d = "flow:tau=pi/6,m=" + fmt("%.6g", m) + " (window kept)";
        out.push_back(run_case(base + d, inputs(d), [&](CaseRecord& rec) {
          const GaborSystem first(g, nl.lattice, radius);
          const GaborSystem second(g, deform(nl.lattice, oscillator_flow(kPi / 6, m)), radius);
          InvarianceReport r;
          r.original = estimate_bounds(first, battery);
          r.deformed = estimate_bounds(second, battery);
          r.discrepancy = compare_invariance(first, second, battery);
          record(r, rec);
        }));
      }
      {
        const std::string d = "shear:p=0.5 (window compensated)";
        out.push_back(run_case(base + d, inputs(d), [&](CaseRecord& rec) {
          record(verify_covariance(g, nl.lattice, SymplecticMat::shear(0.5), battery, cfg.tol_bounds, radius), rec);
        }));
      }
      for (const Mat2& b : {Mat2{1, 1, 0, 1}, Mat2{2, 1, 1, 1}}) {
        const std::string d = "modular:" + fmt("%g", b.a) + "," + fmt("%g", b.b) + "," + fmt("%g", b.c) + "," + fmt("%g", b.d);
        out.push_back(run_case(base + d, inputs(d), [&](CaseRecord& rec) {
          const SymplecticMat s = conjugate_modular(nl.lattice, b);
          rec.metrics.push_back(holds("lattice unchanged", lattices_equal(nl.lattice, deform(nl.lattice, s), 1e-9),
                                      "unimodular change of basis"));
          record(verify_covariance(g, nl.lattice, s, battery, cfg.tol_bounds, radius), rec);
        }));
      }
    }
  }
  return out;
}

std::vector<CaseRecord> check_control(const RunConfig& cfg) {
  const GridSpec grid = cfg.grid();
  const TestBattery battery = TestBattery::hermite(cfg.battery_k, grid);
  std::vector<CaseRecord> out;
  out.push_back(run_case("uncompensated shear",
                         {{"window", "gaussian:m=1"}, {"lattice", "square:delta=2"}, {"deformation", "shear:p=0.5 (window kept)"}},
                         [&](CaseRecord& rec) {
                           const SampledSignal g = gaussian(1.0).sample(grid);
                           const Lattice lattice = Lattice::integer(2.0);
                           const GaborSystem first(g, lattice, cfg.frame_radius);
                           const GaborSystem second(g, deform(lattice, SymplecticMat::shear(0.5)), cfg.frame_radius);
                           rec.details["original"] = bounds_json(estimate_bounds(first, battery));
                           rec.details["deformed"] = bounds_json(estimate_bounds(second, battery));
                           rec.metrics.push_back(above("bound discrepancy", compare_invariance(first, second, battery), 5e-2, method_tag(cfg)));
                         }));
  return out;
}

std::vector<CaseRecord> check_estimators(const RunConfig& cfg) {
  const GridSpec grid = cfg.grid();
  const TestBattery battery = TestBattery::hermite(cfg.battery_k, grid);
  std::vector<CaseRecord> out;
  for (const double m : shipped_masses()) {
    const SampledSignal g = gaussian(m).sample(grid);
    const std::string wname = "gaussian:m=" + fmt("%.6g", m);
    for (const NamedLattice& nl : shipped_lattices()) {
      out.push_back(run_case(wname + " " + nl.name, {{"window", wname}, {"lattice", nl.name}}, [&](CaseRecord& rec) {
        const GaborSystem sys(g, nl.lattice, cfg.frame_radius);
        const FrameBoundsEstimate est = estimate_bounds(sys, battery);
        const FrameBoundsEstimate dense = estimate_bounds_dense(sys);
        const DenseDiagnostics diag = dense_diagnostics(sys);
        const FrameBoundsEstimate wide = estimate_bounds(GaborSystem(g, nl.lattice, cfg.frame_radius + 2.0), battery);
        rec.details["battery"] = bounds_json(est);
        rec.details["dense"] = bounds_json(dense);
        rec.metrics.push_back(at_most("lower bound agreement", std::abs(est.a - dense.a) / dense.a, 5e-3, "battery vs dense, relative"));
        rec.metrics.push_back(at_most("upper bound agreement", std::abs(est.b - dense.b) / dense.b, 5e-3, "battery vs dense, relative"));
        rec.metrics.push_back(at_most("negative eigenvalue", -diag.min_eigenvalue, 1e-9, "smallest eigenvalue of assembled operator"));
        rec.metrics.push_back(at_most("hermitian defect", diag.hermitian_defect, 1e-10, "max |M - M^*|"));
        rec.metrics.push_back(at_most("upper bound drift R->R+2", std::abs(wide.b - est.b) / est.b, 1e-6, "battery, relative"));
      }));
    }
  }
  return out;
}

}  // namespace

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {1, "symplectic", "symplectic algebra", 5.0, check_algebra},
      {2, "symplectic", "oscillator flow", 5.0, check_flow},
      {3, "metaplectic", "metaplectic operators", 60.0, check_operators},
      {4, "metaplectic", "gaussian eigenfunctions of the flow", 30.0, check_eigen},
      {5, "tfa", "ambiguity identities", 120.0, check_ambiguity},
      {6, "tfa", "rotated window surfaces", 30.0, check_rotated_windows},
      {7, "tfa", "hexagonal to rotated square lattice", 10.0, check_hex_square},
      {8, "frames", "frame-bound invariance", 600.0, check_invariance},
      {9, "frames", "falsifiability control", 0.0, check_control},
      {10, "frames", "estimator soundness", 0.0, check_estimators},
  };
  return all;
}

std::vector<const Check*> checks_for_suite(std::string_view suite) {
  if (suite != "all" && suite != "symplectic" && suite != "metaplectic" && suite != "tfa" && suite != "frames") {
    throw Error(ErrorKind::config, "unknown suite '" + std::string(suite) + "' (all, symplectic, metaplectic, tfa, frames)");
  }
  std::vector<const Check*> out;
  for (const Check& c : checks()) {
    if (suite == "all" || c.suite == suite) out.push_back(&c);
  }
  return out;
}

VerdictReport run_suite(std::string_view suite, const RunConfig& config) {
  VerdictReport report;
  report.suite = std::string(suite);
  report.config = config.to_json();
  for (const Check* c : checks_for_suite(suite)) {
    for (CaseRecord& rec : c->run(config)) {
      rec.name = c->title + ": " + rec.name;
      report.cases.push_back(std::move(rec));
    }
  }
  return report;
}

}  // namespace gfsi::app
