// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "gfsi/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gfsi/error.hpp"

namespace gfsi {

namespace {

// det(S) = 1 is checked relative to the entry scale so that products of
// large matrices do not trip the invariant on rounding alone.
constexpr double kDetTol = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_free(const SymplecticMat& s) {
  if (!s.is_free()) {
    throw Error(ErrorKind::not_free, "|b| = " + std::to_string(std::abs(s.b())) + " is below the freeness threshold " +
                                         std::to_string(s.free_threshold()));
  }
}

}  // namespace

double Mat2::norm_inf() const noexcept {
  return std::max(std::abs(a) + std::abs(b), std::abs(c) + std::abs(d));
}

double Mat2::max_abs_diff(const Mat2& o) const noexcept {
  return std::max({std::abs(a - o.a), std::abs(b - o.b), std::abs(c - o.c), std::abs(d - o.d)});
}

bool Mat2::finite() const noexcept {
  return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d);
}

bool is_symplectic(const Mat2& m, double tol) {
  if (!m.finite()) throw Error(ErrorKind::invalid_input, "matrix has non-finite entries");
  return std::abs(m.det() - 1.0) <= tol;
}

SymplecticMat SymplecticMat::from(const Mat2& m) {
  if (!m.finite()) throw Error(ErrorKind::invalid_input, "matrix has non-finite entries");
  const double scale = std::max(1.0, m.norm_inf() * m.norm_inf());
  if (std::abs(m.det() - 1.0) > kDetTol * scale) {
    throw Error(ErrorKind::invalid_input, "determinant " + std::to_string(m.det()) + " is not 1");
  }
  return SymplecticMat(m);
}

SymplecticMat SymplecticMat::J() { return SymplecticMat(Mat2{0.0, 1.0, -1.0, 0.0}); }

SymplecticMat SymplecticMat::shear(double p) { return SymplecticMat(Mat2{1.0, 0.0, -p, 1.0}); }

SymplecticMat SymplecticMat::dilation(double l) {
  if (l == 0.0 || !std::isfinite(l)) throw Error(ErrorKind::invalid_input, "dilation parameter must be finite and nonzero");
  return SymplecticMat(Mat2{1.0 / l, 0.0, 0.0, l});
}

SymplecticMat SymplecticMat::rotation(double tau) { return oscillator_flow(tau, 1.0); }

SymplecticMat SymplecticMat::operator*(const SymplecticMat& o) const { return SymplecticMat(m_ * o.m_); }

double SymplecticMat::free_threshold() const noexcept { return 1e-9 * std::max(1.0, m_.norm_inf()); }

bool SymplecticMat::is_free() const noexcept { return std::abs(m_.b) > free_threshold(); }

SymplecticMat sympl_inverse(const SymplecticMat& s) {
  return SymplecticMat::from(Mat2{s.d(), -s.b(), -s.c(), s.a()});
}

QuadraticFormW generating_form(const SymplecticMat& s) {
  require_free(s);
  return {s.d() / s.b(), 1.0 / s.b(), s.a() / s.b()};
}

SymplecticMat matrix_of_form(const QuadraticFormW& w) {
  if (w.l == 0.0 || !std::isfinite(w.l) || !std::isfinite(w.p) || !std::isfinite(w.q)) {
    throw Error(ErrorKind::invalid_form, "generating form needs finite P, Q and nonzero L");
  }
  return SymplecticMat::from(Mat2{w.q / w.l, 1.0 / w.l, w.p * w.q / w.l - w.l, w.p / w.l});
}

bool verify_generating_relation(const SymplecticMat& s, double xp, double omegap) {
  const QuadraticFormW w = generating_form(s);
  const Point out = s * Point{xp, omegap};
  const double scale = std::max({1.0, std::abs(out.omega), std::abs(omegap)});
  const double r1 = std::abs(out.omega - w.d_x(out.x, xp));
  const double r2 = std::abs(omegap + w.d_xp(out.x, xp));
  return r1 <= 1e-10 * scale && r2 <= 1e-10 * scale;
}

SymplecticMat FreeFactors::product() const {
  return SymplecticMat::shear(-p) * SymplecticMat::dilation(l) * SymplecticMat::J() * SymplecticMat::shear(-q);
}

FreeFactors free_factorize(const SymplecticMat& s) {
  require_free(s);
  return {s.d() / s.b(), 1.0 / s.b(), s.a() / s.b()};
}

std::pair<SymplecticMat, SymplecticMat> two_free_factorization(const SymplecticMat& s) {
  // F2 = (V_P J)^-1 = [[-P, -1], [1, 0]] is free for every P; F1 = S V_P J has
  // upper-right entry a - bP, so P is picked to keep it away from zero.
  double best_p = 0.0;
  double best = -1.0;
  for (const double p : {0.0, 1.0, -1.0}) {
    const double entry = std::abs(s.a() - s.b() * p);
    if (entry > best * (1.0 + 1e-12)) {
      best = entry;
      best_p = p;
    }
  }
  const SymplecticMat vj = SymplecticMat::shear(best_p) * SymplecticMat::J();
  return {s * vj, sympl_inverse(vj)};
}

namespace {

void append_free(GeneratorWord& word, const SymplecticMat& f) {
  const FreeFactors ff = free_factorize(f);
  const int maslov = ff.l < 0.0 ? 1 : 0;
  word.factors.emplace_back(ChirpFactor{-ff.p});
  word.factors.emplace_back(RescaleFactor{ff.l, maslov});
  word.factors.emplace_back(FourierFactor{});
  word.factors.emplace_back(ChirpFactor{-ff.q});
}

}  // namespace

GeneratorWord word_decompose(const SymplecticMat& s) {
  GeneratorWord word;
  if (s.is_free()) {
    append_free(word, s);
  } else {
    const auto [f1, f2] = two_free_factorization(s);
    append_free(word, f1);
    append_free(word, f2);
  }
  return word.simplified();
}

Mat2 matrix_of(const Generator& g) {
  return std::visit(overloaded{[](const ChirpFactor& c) { return SymplecticMat::shear(c.p).mat(); },
                               [](const RescaleFactor& r) { return SymplecticMat::dilation(r.l).mat(); },
                               [](const FourierFactor&) { return SymplecticMat::J().mat(); }},
                    g);
}

SymplecticMat GeneratorWord::projection() const {
  Mat2 acc{};
  for (const Generator& g : factors) acc = acc * matrix_of(g);
  return SymplecticMat::from(acc);
}

GeneratorWord GeneratorWord::simplified() const {
  GeneratorWord out;
  for (const Generator& g : factors) {
    if (const auto* c = std::get_if<ChirpFactor>(&g)) {
      if (!out.factors.empty()) {
        if (auto* prev = std::get_if<ChirpFactor>(&out.factors.back())) {
          prev->p += c->p;
          if (prev->p == 0.0) out.factors.pop_back();
          continue;
        }
      }
      if (c->p == 0.0) continue;
    } else if (const auto* r = std::get_if<RescaleFactor>(&g)) {
      if (r->l == 1.0 && r->maslov % 4 == 0) continue;
    }
    out.factors.push_back(g);
  }
  return out;
}

SymplecticMat oscillator_flow(double tau, double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorKind::invalid_mass, "mass must be positive");
  const double c = std::cos(tau);
  const double s = std::sin(tau);
  return SymplecticMat::from(Mat2{c, s / m, -m * s, c});
}

Mat2 oscillator_flow_numeric(double tau, double m, double omega_res, int steps) {
  if (!(m > 0.0)) throw Error(ErrorKind::invalid_mass, "mass must be positive");
  if (!(omega_res > 0.0)) throw Error(ErrorKind::invalid_input, "resonance must be positive");
  if (tau == 0.0) return Mat2{};
  if (steps < 100) throw Error(ErrorKind::invalid_input, "steps = " + std::to_string(steps) + " is below the minimum of 100");
  // RK4 on a rotation of rate Omega: global phase error ~ |tau| Omega (h Omega)^4 / 120,
  // amplified in the matrix entries by the aspect ratio of the flow ellipse.
  const double theta = std::abs(tau) * omega_res;
  const double aspect = std::max({1.0, m * omega_res, 1.0 / (m * omega_res)});
  const double predicted = theta * std::pow(theta / steps, 4) / 120.0 * aspect;
  if (predicted > 1e-9) {
    throw Error(ErrorKind::invalid_input, "steps = " + std::to_string(steps) +
                                              " cannot meet the accuracy contract (predicted error " +
                                              std::to_string(predicted) + ")");
  }
  // d/dtau (x, w) = (w / m, -m Omega^2 x); both basis solutions propagate together.
  const Mat2 gen{0.0, 1.0 / m, -m * omega_res * omega_res, 0.0};
  const double h = tau / steps;
  const auto rhs = [&](const Mat2& y) { return gen * y; };
  const auto axpy = [](const Mat2& y, double s, const Mat2& k) {
    return Mat2{y.a + s * k.a, y.b + s * k.b, y.c + s * k.c, y.d + s * k.d};
  };
  Mat2 y{};
  for (int i = 0; i < steps; ++i) {
    const Mat2 k1 = rhs(y);
    const Mat2 k2 = rhs(axpy(y, 0.5 * h, k1));
    const Mat2 k3 = rhs(axpy(y, 0.5 * h, k2));
    const Mat2 k4 = rhs(axpy(y, h, k3));
    y = Mat2{y.a + h / 6.0 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a),
             y.b + h / 6.0 * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b),
             y.c + h / 6.0 * (k1.c + 2.0 * k2.c + 2.0 * k3.c + k4.c),
             y.d + h / 6.0 * (k1.d + 2.0 * k2.d + 2.0 * k3.d + k4.d)};
  }
  return y;
}

bool is_modular(const SymplecticMat& s, double tol) {
  const Mat2& m = s.mat();
  for (const double v : {m.a, m.b, m.c, m.d}) {
    if (std::abs(v - std::round(v)) > tol) return false;
  }
  return std::abs(m.det() - 1.0) <= tol;
}

}  // namespace gfsi
