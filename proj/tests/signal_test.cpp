// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "gfsi/error.hpp"
#include "gfsi/signal.hpp"
#include "test_support.hpp"

using namespace gfsi;
using gfsi::testing::uniform;

namespace {

constexpr double kPi = std::numbers::pi;
const GridSpec kGrid{};

double max_diff(const SampledSignal& f, const SampledSignal& g) {
  double m = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) m = std::max(m, std::abs(f.samples[k] - g.samples[k]));
  return m;
}

SampledSignal scaled(const SampledSignal& f, cplx c) {
  SampledSignal out = f;
  for (cplx& v : out.samples) v *= c;
  return out;
}

// Smooth unit-norm test signals.
std::vector<SampledSignal> battery() {
  std::vector<SampledSignal> out;
  out.push_back(gaussian(1.0).sample(kGrid));
  out.push_back(gaussian(std::sqrt(3.0)).sample(kGrid));
  out.push_back(gaussian(1.0 / std::sqrt(3.0)).sample(kGrid));
  for (int k = 1; k <= 5; ++k) out.push_back(hermite(k, 1.0, kGrid));
  out.push_back(tf_shift(chirp_apply(0.7, gaussian(1.5).sample(kGrid)), 0.75, -0.5));
  return out;
}

// Moderate free matrices: |a|, |d| <= 1.5 and |b| in [0.5, 2].
SymplecticMat moderate_free() {
  const double a = uniform(-1.5, 1.5);
  const double d = uniform(-1.5, 1.5);
  double b = uniform(0.5, 2.0);
  if (uniform(0, 1) < 0.5) b = -b;
  return SymplecticMat::from(Mat2{a, b, (a * d - 1.0) / b, d});
}

}  // namespace

TEST_CASE("grid") {
  CHECK(kGrid.n == 1024);
  CHECK(kGrid.dt == 1.0 / 32);
  CHECK(kGrid.is_self_dual());
  CHECK(kGrid.t(512) == 0.0);
  CHECK(kGrid.t(0) == -16.0);
  CHECK(kGrid.omega(513) == doctest::Approx(1.0 / 32));
  CHECK(GridSpec::self_dual(256).dt == doctest::Approx(1.0 / 16));
  CHECK_FALSE(GridSpec::make(1024, 1.0 / 40).is_self_dual());
  CHECK_THROWS_AS(GridSpec::make(1023, 0.1), Error);
  CHECK_THROWS_AS(GridSpec::make(1024, 0.0), Error);
}

TEST_CASE("gaussian windows") {
  for (const double m : {0.3, 1.0, std::sqrt(3.0), 2.0, 5.0}) {
    const AnalyticGaussian g = gaussian(m);
    CHECK(g.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(g.sample(kGrid).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(gaussian(1.0)(0.0).real() == doctest::Approx(std::pow(2.0, 0.25)));
  CHECK_THROWS_AS(gaussian(0.0), Error);
  CHECK_THROWS_AS(gaussian(-1.0), Error);
  CHECK_THROWS_AS(AnalyticGaussian(1.0, cplx(0.0, 1.0)), Error);
  const AnalyticGaussian chirped(cplx(0.5, 0.5), cplx(2.0, -3.0));
  CHECK(chirped.sample(kGrid).norm() == doctest::Approx(chirped.norm()).epsilon(1e-12));
}

TEST_CASE("tf_shift") {
  const SampledSignal g = gaussian(1.0).sample(kGrid);
  CHECK(max_diff(tf_shift(g, 0.0, 0.0), g) == 0.0);
  for (int i = 0; i < 20; ++i) {
    const double x = uniform(-6, 6);
    const double w = uniform(-6, 6);
    const SampledSignal s = tf_shift(g, x, w);
    CHECK_FALSE(s.truncated);
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-10));
    // Exact atom.
    double err = 0.0;
    for (std::size_t k = 0; k < kGrid.n; ++k) {
      const double t = kGrid.t(k);
      const cplx exact = gaussian(1.0)(t - x) * std::polar(1.0, 2 * kPi * w * t);
      err = std::max(err, std::abs(s.samples[k] - exact));
    }
    CHECK(err < 1e-10);
    // M_w T_x f = e^{2 pi i w x} T_x M_w f
    const SampledSignal other = scaled(tf_shift(tf_shift(g, 0.0, w), x, 0.0), std::polar(1.0, 2 * kPi * w * x));
    CHECK(max_diff(s, other) < 1e-10);
  }
  // Grid-multiple shifts take the exact path.
  const SampledSignal whole = tf_shift(g, 32 * kGrid.dt, 0.0);
  CHECK(whole.samples[544] == g.samples[512]);
  // Pushing the window off the grid drops mass and is flagged.
  CHECK(tf_shift(g, 15.0, 0.0).truncated);
  CHECK(tf_shift(g, 15.5, 0.0).truncated);
}

TEST_CASE("chirp") {
  const AnalyticGaussian g = gaussian(1.3);
  const SampledSignal s = g.sample(kGrid);
  CHECK(max_diff(chirp_apply(0.0, s), s) == 0.0);
  for (const double p : {-3.0, -0.4, 1.0, 2.5}) {
    const SampledSignal c = chirp_apply(p, s);
    CHECK(c.norm() == doctest::Approx(s.norm()).epsilon(1e-14));
    CHECK(max_diff(c, chirp_apply(p, g).sample(kGrid)) < 1e-12);
  }
}

TEST_CASE("rescale") {
  const AnalyticGaussian g1 = gaussian(1.0);
  const SampledSignal s = g1.sample(kGrid);
  CHECK(max_diff(rescale_apply(1.0, 0, s), s) == 0.0);
  for (const double m : {1.0 / std::sqrt(3.0), std::sqrt(3.0), 2.0}) {
    const SampledSignal r = rescale_apply(std::sqrt(m), 0, s);
    const auto al = phase_align(r, gaussian(m).sample(kGrid));
    CHECK(al.residual < 1e-9);
    CHECK(std::abs(al.c - 1.0) < 1e-9);
    CHECK(r.norm() == doctest::Approx(1.0).epsilon(1e-9));
  }
  for (const double l : {-2.0, -1.0, -0.6, 0.5, 1.7}) {
    const int n = l < 0 ? 3 : 2;
    const AnalyticGaussian a = rescale_apply(l, n, AnalyticGaussian(1.0, cplx(1.0, 0.8)));
    const SampledSignal b = rescale_apply(l, n, AnalyticGaussian(1.0, cplx(1.0, 0.8)).sample(kGrid));
    CHECK(max_diff(a.sample(kGrid), b) < 1e-9);
  }
  CHECK_THROWS_AS(rescale_apply(-2.0, 0, s), Error);
  CHECK_THROWS_AS(rescale_apply(0.0, 0, s), Error);
  // Spreading past the span and compressing past Nyquist.
  CHECK_THROWS_WITH_AS(rescale_apply(0.08, 0, s), doctest::Contains("span"), Error);
  CHECK_THROWS_WITH_AS(rescale_apply(12.0, 0, s), doctest::Contains("dt"), Error);
  try {
    rescale_apply(0.08, 0, s);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::resolution);
  }
}

TEST_CASE("modified Fourier transform") {
  const AnalyticGaussian g1 = gaussian(1.0);
  const SampledSignal s = g1.sample(kGrid);
  const auto al = phase_align(fourier_mod(s), s);
  CHECK(al.residual < 1e-9);
  CHECK(std::abs(al.c - std::polar(1.0, -kPi / 4)) < 1e-9);
  const AnalyticGaussian ag = fourier_mod(g1);
  CHECK(std::abs(ag.q - 1.0) < 1e-15);
  CHECK(std::abs(ag.a - std::polar(1.0, -kPi / 4) * g1.a) < 1e-15);

  const SampledSignal f = tf_shift(chirp_apply(0.5, gaussian(2.0).sample(kGrid)), 1.0, 0.5);
  const SampledSignal f4 = fourier_mod(fourier_mod(fourier_mod(fourier_mod(f))));
  const auto p4 = phase_align(f4, f);
  CHECK(p4.residual < 1e-9);
  CHECK(std::abs(std::abs(p4.c) - 1.0) < 1e-12);
  CHECK(std::abs(p4.c + 1.0) < 1e-9);  // (e^{-i pi/4})^4 = -1

  for (const cplx q : {cplx(1.0, 0.0), cplx(0.5, 1.0), cplx(3.0, -2.0)}) {
    const AnalyticGaussian a(cplx(0.3, -0.7), q);
    CHECK(max_diff(fourier_mod(a).sample(kGrid), fourier_mod(a.sample(kGrid))) < 1e-9);
    // Direct-sum path on a grid that is not self-dual.
    const GridSpec g2 = GridSpec::make(1024, 1.0 / 36);
    CHECK(max_diff(fourier_mod(a).sample(g2), fourier_mod(a.sample(g2))) < 1e-9);
  }
  // Spectrum crowding the Nyquist edge is refused.
  CHECK_THROWS_AS(fourier_mod(chirp_apply(25.0, s)), Error);
}

TEST_CASE("maslov index") {
  CHECK(maslov_index(1.0) == 0);
  CHECK(maslov_index(-2.0) == 1);
  CHECK(maslov_index(std::pow(3.0, 0.25)) == 0);
  CHECK_THROWS_AS(maslov_index(0.0), Error);
}

TEST_CASE("metaplectic apply on Gaussians") {
  const SampledSignal g1 = gaussian(1.0).sample(kGrid);
  const auto d = MetaplecticDescriptor::of(SymplecticMat::rotation(kPi / 3));
  const SampledSignal out = metaplectic_apply(d, g1);
  const auto al = phase_align(out, g1);
  CHECK(al.residual < 1e-8);
  CHECK(std::abs(std::abs(al.c) - 1.0) < 1e-12);
  CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-9));

  // Hermite eigenproperty on both paths.
  for (const double tau : {kPi / 12, -kPi / 12, kPi / 6, -kPi / 6, kPi / 4, -kPi / 4, 1.0}) {
    for (const double m : {1.0 / std::sqrt(3.0), 1.0, std::sqrt(3.0), 2.0}) {
      const auto desc = MetaplecticDescriptor::of(oscillator_flow(tau, m));
      const AnalyticGaussian gm = gaussian(m);
      const SampledSignal sampled = metaplectic_apply(desc, gm.sample(kGrid));
      CHECK(phase_align(sampled, gm.sample(kGrid)).residual < 1e-7);
      const AnalyticGaussian exact = metaplectic_apply(desc, gm);
      CHECK(std::abs(exact.q - m) < 1e-12 * m);
      CHECK(std::abs(std::abs(exact.a) - gm.a.real()) < 1e-12);
    }
  }
  CHECK(std::abs(metaplectic_apply(d, gaussian(1.0)).q - 1.0) < 1e-12);
}

TEST_CASE("quadrature oracle") {
  const SampledSignal g1 = gaussian(1.0).sample(kGrid);
  const auto d45 = MetaplecticDescriptor::of(SymplecticMat::rotation(kPi / 4));
  CHECK(max_diff(metaplectic_quadrature(d45, g1), metaplectic_apply(d45, g1)) < 1e-7);

  // J reduces to the modified Fourier transform.
  const auto dj = MetaplecticDescriptor::of(SymplecticMat::J());
  CHECK(dj.form.p == 0.0);
  CHECK(dj.form.q == 0.0);
  CHECK(dj.form.l == 1.0);
  const SampledSignal f = battery().back();
  CHECK(max_diff(metaplectic_quadrature(dj, f), fourier_mod(f)) < 1e-10);

  std::vector<SymplecticMat> set = {SymplecticMat::rotation(kPi / 3), oscillator_flow(0.7, std::sqrt(3.0)),
                                    SymplecticMat::J(), SymplecticMat::from(Mat2{1, 1, 0, 1}) * SymplecticMat::J()};
  for (int i = 0; i < 8; ++i) set.push_back(moderate_free());
  for (const SymplecticMat& s : set) {
    const auto desc = MetaplecticDescriptor::of(s);
    for (const SampledSignal& h : battery()) {
      const SampledSignal a = metaplectic_apply(desc, h);
      const SampledSignal q = metaplectic_quadrature(desc, h);
      CHECK(max_diff(a, q) < 1e-7);
      CHECK(q.norm() / h.norm() == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
  const MetaplecticDescriptor steep(QuadraticFormW{0.0, 1.0, 40.0}, 0);
  try {
    metaplectic_quadrature(steep, g1);
    FAIL("expected an undersampling error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kernel_undersampled);
  }
}

TEST_CASE("inverse and composition") {
  const auto dj = MetaplecticDescriptor::of(SymplecticMat::J());
  const SampledSignal f = battery().back();
  const auto back = phase_align(metaplectic_apply(metaplectic_inverse(dj), metaplectic_apply(dj, f)), f);
  CHECK(back.residual < 1e-8);

  for (int i = 0; i < 10; ++i) {
    const SymplecticMat s = moderate_free();
    const auto desc = MetaplecticDescriptor(generating_form(s), static_cast<int>(uniform(0, 2)) * 2 + (generating_form(s).l < 0));
    const auto inv = metaplectic_inverse(desc);
    CHECK(natural_projection(inv).mat().max_abs_diff(sympl_inverse(s).mat()) < 1e-10);
    for (const SampledSignal& h : battery()) {
      const SampledSignal r = metaplectic_apply(inv, metaplectic_apply(desc, h));
      // The inverse is exact, not merely up to a phase.
      CHECK(max_diff(r, h) < 1e-8);
    }
    const AnalyticGaussian g(cplx(0.4, 0.2), cplx(1.2, 0.5));
    const AnalyticGaussian rg = metaplectic_apply(inv, metaplectic_apply(desc, g));
    CHECK(std::abs(rg.a - g.a) < 1e-12);
    CHECK(std::abs(rg.q - g.q) < 1e-12);
  }

  // Exact composition, including the Maslov class.
  for (int i = 0; i < 40; ++i) {
    const SymplecticMat s1 = moderate_free();
    const SymplecticMat s2 = moderate_free();
    if (!(s1 * s2).is_free()) continue;
    const auto d1 = MetaplecticDescriptor(generating_form(s1), maslov_index(generating_form(s1).l) + 2 * (i % 2));
    const auto d2 = MetaplecticDescriptor::of(s2);
    const auto d12 = compose(d1, d2);
    CHECK(natural_projection(d12).mat().max_abs_diff((s1 * s2).mat()) < 1e-9);
    const AnalyticGaussian g(1.0, cplx(0.9, -0.3));
    const AnalyticGaussian two = metaplectic_apply(d1, metaplectic_apply(d2, g));
    const AnalyticGaussian one = metaplectic_apply(d12, g);
    CHECK(std::abs(two.a - one.a) < 1e-10 * std::abs(one.a));
    CHECK(std::abs(two.q - one.q) < 1e-10 * std::abs(one.q));
  }
  const auto a = MetaplecticDescriptor(QuadraticFormW{0.0, 1.0, 1.0}, 0);
  const auto b = MetaplecticDescriptor(QuadraticFormW{-1.0, 1.0, 0.0}, 0);
  CHECK_THROWS_AS(compose(a, b), Error);
}

TEST_CASE("natural projection") {
  CHECK(natural_projection(MetaOp{ChirpOp{0.7}}).mat().max_abs_diff(SymplecticMat::shear(-0.7).mat()) == 0.0);
  CHECK(natural_projection(MetaOp{RescaleOp{2.0, 0}}).mat().max_abs_diff(SymplecticMat::dilation(2.0).mat()) == 0.0);
  CHECK(natural_projection(MetaOp{FourierOp{}}).mat().max_abs_diff(SymplecticMat::J().mat()) == 0.0);

  // Two-fold cover: classes n and n + 2 give opposite operators.
  const SymplecticMat s = SymplecticMat::rotation(0.9);
  const auto d0 = MetaplecticDescriptor::of(s);
  const auto d2 = MetaplecticDescriptor(d0.form, d0.maslov + 2);
  CHECK(natural_projection(d0).mat().max_abs_diff(natural_projection(d2).mat()) == 0.0);
  for (const SampledSignal& h : battery()) {
    CHECK(max_diff(metaplectic_apply(d2, h), scaled(metaplectic_apply(d0, h), -1.0)) < 1e-12);
  }

  // Homomorphism on sampled signals, up to sign.
  const auto moderate = [](const SymplecticMat& m) {
    if (!m.is_free()) return false;
    const QuadraticFormW w = generating_form(m);
    return std::abs(w.p) <= 3 && std::abs(w.q) <= 3 && std::abs(w.l) <= 3;
  };
  for (int i = 0, found = 0; found < 6 && i < 200; ++i) {
    const SymplecticMat s1 = moderate_free();
    const SymplecticMat s2 = moderate_free();
    if (!moderate(s1 * s2)) continue;
    const SampledSignal h = battery()[static_cast<std::size_t>(found++)];
    const SampledSignal lhs = metaplectic_apply(MetaplecticDescriptor::of(s1 * s2), h);
    const SampledSignal rhs = metaplectic_apply(MetaplecticDescriptor::of(s1), metaplectic_apply(MetaplecticDescriptor::of(s2), h));
    const auto al = phase_align(lhs, rhs);
    CHECK(al.residual < 1e-7);
    CHECK(std::min({std::abs(al.c - 1.0), std::abs(al.c + 1.0), std::abs(al.c - cplx(0, 1)), std::abs(al.c + cplx(0, 1))}) < 1e-7);
  }

  // Lifts of generator words, including non-free matrices.
  for (int i = 0; i < 30; ++i) {
    const SymplecticMat s = gfsi::testing::random_generator_product(5);
    const GeneratorWord w = word_decompose(s);
    CHECK(natural_projection(lift(w)).mat().max_abs_diff(s.mat()) < 1e-10);
  }
  for (const SymplecticMat& s : {SymplecticMat::dilation(1.5), SymplecticMat::shear(0.8), SymplecticMat::identity(),
                                 SymplecticMat::dilation(-0.8), oscillator_flow(kPi, 2.0)}) {
    const AnalyticGaussian g(1.0, cplx(1.0, 0.4));
    const AnalyticGaussian exact = apply(metaplectic_of(s), g);
    const SampledSignal sampled = apply(metaplectic_of(s), g.sample(kGrid));
    CHECK(max_diff(sampled, exact.sample(kGrid)) < 1e-9);
  }
}

TEST_CASE("phase_align") {
  const SampledSignal g = gaussian(1.0).sample(kGrid);
  const auto a = phase_align(scaled(g, cplx(0, 1)), g);
  CHECK(std::abs(a.c - cplx(0, 1)) < 1e-15);
  CHECK(a.residual < 1e-15);
  const auto b = phase_align(g, g);
  CHECK(std::abs(b.c - 1.0) < 1e-15);
  CHECK(b.residual == 0.0);
  CHECK_THROWS_AS(phase_align(g, SampledSignal(kGrid)), Error);
}

TEST_CASE("hermite functions") {
  const SampledSignal h0 = hermite(0, 1.0, kGrid);
  CHECK(max_diff(h0, gaussian(1.0).sample(kGrid)) < 1e-12);
  CHECK(max_diff(hermite(0, 2.0, kGrid), gaussian(2.0).sample(kGrid)) < 1e-12);
  std::vector<SampledSignal> hs;
  for (int k = 0; k <= 40; ++k) hs.push_back(hermite(k, 1.0, kGrid));
  double worst = 0.0;
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      cplx ip = 0.0;
      for (std::size_t k = 0; k < kGrid.n; ++k) ip += hs[i].samples[k] * std::conj(hs[j].samples[k]);
      ip *= kGrid.dt;
      worst = std::max(worst, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
  }
  CHECK(worst < 1e-10);
  for (int k = 0; k <= 12; ++k) {
    const cplx expect = std::polar(1.0, -kPi / 4) * std::pow(cplx(0, -1), k);
    CHECK(max_diff(fourier_mod(hs[k]), scaled(hs[k], expect)) < 1e-9);
    const auto desc = MetaplecticDescriptor::of(SymplecticMat::rotation(kPi / 5));
    const auto al = phase_align(metaplectic_apply(desc, hs[k]), hs[k]);
    CHECK(al.residual < 1e-7);
  }
  CHECK_THROWS_AS(hermite(61, 1.0, kGrid), Error);
  CHECK_THROWS_AS(hermite(-1, 1.0, kGrid), Error);
}

TEST_CASE("unitarity of generator operators") {
  for (const SampledSignal& h : battery()) {
    CHECK(chirp_apply(1.3, h).norm() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rescale_apply(1.4, 0, h).norm() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rescale_apply(-0.7, 1, h).norm() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fourier_mod(h).norm() == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("analytic and sampled paths agree on a random Gaussian family") {
  int resolved = 0;
  int refused = 0;
  for (int i = 0; i < 60; ++i) {
    const AnalyticGaussian g(std::polar(1.0, uniform(-3, 3)), cplx(uniform(0.2, 5.0), uniform(-5.0, 5.0)));
    const SampledSignal s = g.sample(kGrid);
    const double p = uniform(-2, 2);
    double l = std::exp(uniform(-0.7, 0.7));
    if (i % 2 == 1) l = -l;
    const int n = maslov_index(l);
    CHECK(max_diff(chirp_apply(p, g).sample(kGrid), chirp_apply(p, s)) < 1e-12);
    try {
      const SampledSignal r = rescale_apply(l, n, s);
      CHECK(max_diff(rescale_apply(l, n, g).sample(kGrid), r) < 1e-9);
      ++resolved;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::resolution);
      ++refused;
    }
    try {
      const SampledSignal r = fourier_mod(s);
      CHECK(max_diff(fourier_mod(g).sample(kGrid), r) < 1e-9);
      ++resolved;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::resolution);
      ++refused;
    }
  }
  MESSAGE("resolved " << resolved << ", refused as under-resolved " << refused);
  CHECK(resolved > refused);
}

TEST_CASE("signal csv") {
  std::ostringstream out;
  write_signal_csv(out, gaussian(1.0).sample(GridSpec::make(8, 0.5)));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,re,im");
  std::getline(in, line);
  CHECK(line.rfind("-2,", 0) == 0);
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 8);
}
