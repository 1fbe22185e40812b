// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gfsi/lattice.hpp"
#include "gfsi/signal.hpp"
#include "gfsi/symplectic.hpp"

namespace gfsi {

inline constexpr double kDefaultRadius = 8.0;
inline constexpr double kTailTol = 1e-10;

// G(g, Lambda) truncated to lattice points with |lambda| <= radius.
class GaborSystem {
 public:
  // The window must have unit norm to 1e-8; it is renormalized exactly.
  GaborSystem(SampledSignal window, Lattice lattice, double radius = kDefaultRadius);

  const SampledSignal& window() const noexcept { return window_; }
  const Lattice& lattice() const noexcept { return lattice_; }
  double radius() const noexcept { return radius_; }
  const LatticePointSet& points() const noexcept { return points_; }
  // Points in the annulus radius < |lambda| <= radius + 2 used by the tail check.
  const std::vector<Point>& tail_points() const noexcept { return tail_; }

 private:
  SampledSignal window_;
  Lattice lattice_;
  double radius_;
  LatticePointSet points_;
  std::vector<Point> tail_;
};

// Orthonormal test functions spanning the subspace the frame operator is
// probed on. Default: Hermite functions h_0 .. h_{K-1} of width 1.
struct TestBattery {
  std::vector<SampledSignal> members;
  Eigen::MatrixXcd gram;

  static TestBattery hermite(int k, const GridSpec& grid, double m = 1.0);
  std::size_t size() const noexcept { return members.size(); }
};

// M_omega T_x g for every point, computed from one spectrum of g.
std::vector<SampledSignal> atoms(const SampledSignal& g, const std::vector<Point>& points);

// C(j, l) = <f_j, pi(lambda_l) g>.
Eigen::MatrixXcd analysis_coefficients(const std::vector<SampledSignal>& fs, const SampledSignal& g,
                                       const std::vector<Point>& points);

// sum_lambda |<f, pi(lambda) g>|^2 / ||f||^2. Throws ErrorKind::truncation
// when the annulus beyond the radius still carries more than 1e-10.
double frame_quadratic_form(const GaborSystem& sys, const SampledSignal& f);

struct FrameBoundsEstimate {
  double a = 0.0;
  double b = 0.0;
  std::string method;  // "battery" or "dense"
  std::size_t subspace_dim = 0;
  std::size_t point_count = 0;
  double radius = 0.0;
  double tail = 0.0;  // largest annulus energy seen by the tail check
  GridSpec grid;
  double volume = 0.0;

  // A below 1e-3 B: no evidence of a lower frame bound.
  bool not_a_frame() const noexcept { return !(a >= 1e-3 * b); }
  double ratio() const noexcept { return b / a; }
};

// Extreme Rayleigh quotients of the frame operator over span(battery). These
// are inner approximations: A_est >= A and B_est <= B.
FrameBoundsEstimate estimate_bounds(const GaborSystem& sys, const TestBattery& battery);

struct DenseOptions {
  double radius = 12.0;      // enumeration radius for the assembled operator
  double time_half = 5.0;    // concentration box [-T, T] x [-W, W]
  double band_half = 5.0;
  double concentration = 1e-9;  // keep prolate vectors with eigenvalue >= 1 - this
};

// Assembles sum_lambda dt a_lambda a_lambda^* on the central half of the grid
// and returns its extreme eigenvalues on the functions concentrated in the
// box (prolate subspace). Throws ErrorKind::cost_guard for N > 2048.
FrameBoundsEstimate estimate_bounds_dense(const GaborSystem& sys, const DenseOptions& options = {});

struct DenseDiagnostics {
  double hermitian_defect = 0.0;  // max |M - M^*| of the assembled matrix
  double min_eigenvalue = 0.0;    // of the full assembled matrix
};
// Runs the dense assembly and reports operator sanity data.
DenseDiagnostics dense_diagnostics(const GaborSystem& sys, const DenseOptions& options = {});

// max(|A1 - A2| / A1, |B1 - B2| / B1) with the same battery for both systems.
double compare_invariance(const GaborSystem& first, const GaborSystem& second, const TestBattery& battery);

struct InvarianceReport {
  std::string name;
  FrameBoundsEstimate original;
  FrameBoundsEstimate deformed;
  double discrepancy = 0.0;
  double tolerance = 1e-2;
  bool pass = false;
};

// (g, Lambda) against (S-hat g, S Lambda).
InvarianceReport verify_covariance(const SampledSignal& g, const Lattice& lattice, const SymplecticMat& s,
                              const TestBattery& battery, double tolerance = 1e-2, double radius = kDefaultRadius);

struct FlowCheck {
  double tau = 0.0;
  double eigen_residual = 0.0;        // phase_align(S-hat g_m, g_m)
  double ambiguity_deviation = 0.0;   // |A(S-hat g_m) - A g_m| on a TF grid
  InvarianceReport bounds;            // (g_m, Lambda) vs (g_m, S_{tau,m} Lambda)
  bool pass = false;
};
struct FlowReport {
  double m = 0.0;
  std::vector<FlowCheck> checks;
  bool pass = false;
};

FlowReport verify_flow_invariance(double m, const Lattice& lattice, const std::vector<double>& taus, const TestBattery& battery,
                        const GridSpec& grid = {}, double tolerance = 1e-2);

struct ModularReport {
  bool lattices_equal = false;
  double window_residual = 0.0;  // phase_align(S-hat B-hat g, S-hat g)
  bool windows_coincide = false;  // B-hat fixes g up to phase
  InvarianceReport bounds;        // (S-hat g, S Lambda) vs (S-hat B-hat g, S B Lambda)
  bool pass = false;
};

ModularReport verify_modular_invariance(const SampledSignal& g, double delta, const SymplecticMat& b, const SymplecticMat& s,
                           const TestBattery& battery, double tolerance = 1e-2);

}  // namespace gfsi
