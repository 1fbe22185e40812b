// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "gfsi/symplectic.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "gfsi/error.hpp"
#include "test_support.hpp"

using namespace gfsi;
using gfsi::testing::uniform;

namespace {

const SymplecticMat kShear11 = SymplecticMat::from(Mat2{1.0, 1.0, 0.0, 1.0});

Mat2 flow_matrix(double tau, double m) { return oscillator_flow(tau, m).mat(); }

}  // namespace

TEST_CASE("is_symplectic") {
  CHECK(is_symplectic(SymplecticMat::J().mat(), 1e-12));
  CHECK(is_symplectic(Mat2{1.0, 1.0, 0.0, 1.0}, 1e-12));
  CHECK_FALSE(is_symplectic(Mat2{2.0, 0.0, 0.0, 1.0}, 1e-12));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(is_symplectic(Mat2{nan, 0.0, 0.0, 1.0}, 1e-12), Error);
  CHECK_THROWS_AS(SymplecticMat::from(Mat2{2.0, 0.0, 0.0, 1.0}), Error);
}

TEST_CASE("sympl_inverse") {
  const Mat2 minus_j{0.0, -1.0, 1.0, 0.0};
  CHECK(sympl_inverse(SymplecticMat::J()).mat().max_abs_diff(minus_j) == 0.0);
  CHECK(sympl_inverse(kShear11).mat().max_abs_diff(testing::generic_inverse(kShear11.mat())) <= 1e-15);
  CHECK(sympl_inverse(SymplecticMat::identity()).mat().max_abs_diff(Mat2{}) == 0.0);

  for (int i = 0; i < 200; ++i) {
    const SymplecticMat s = testing::random_free();
    CHECK((s * sympl_inverse(s)).mat().max_abs_diff(Mat2{}) <= 1e-12);
    CHECK(sympl_inverse(s).mat().max_abs_diff(testing::generic_inverse(s.mat())) <= 1e-12);
  }
}

TEST_CASE("group closure") {
  for (int i = 0; i < 200; ++i) {
    const SymplecticMat s1 = testing::random_free();
    const SymplecticMat s2 = testing::random_free();
    const Mat2 p = (s1 * s2).mat();
    CHECK(std::abs(p.det() - 1.0) <= 1e-12 * std::max(1.0, p.norm_inf() * p.norm_inf()));
    CHECK(std::abs(sympl_inverse(s1).mat().det() - 1.0) <= 1e-12 * std::max(1.0, s1.mat().norm_inf() * s1.mat().norm_inf()));
  }
}

TEST_CASE("generating_form and matrix_of_form") {
  const QuadraticFormW wj = generating_form(SymplecticMat::J());
  CHECK(wj.p == 0.0);
  CHECK(wj.l == 1.0);
  CHECK(wj.q == 0.0);

  const QuadraticFormW ws = generating_form(kShear11);
  CHECK(ws.p == doctest::Approx(1.0));
  CHECK(ws.l == doctest::Approx(1.0));
  CHECK(ws.q == doctest::Approx(1.0));
  CHECK(matrix_of_form(ws).mat().max_abs_diff(kShear11.mat()) <= 1e-12);

  const double m = 1.7;
  const QuadraticFormW wf = generating_form(oscillator_flow(std::numbers::pi / 2, m));
  CHECK(std::abs(wf.p) <= 1e-15);
  CHECK(wf.l == doctest::Approx(m).epsilon(1e-14));
  CHECK(std::abs(wf.q) <= 1e-15);

  CHECK(matrix_of_form({0.0, 1.0, 0.0}).mat().max_abs_diff(SymplecticMat::J().mat()) == 0.0);
  CHECK(matrix_of_form({1.0, 1.0, 1.0}).mat().max_abs_diff(kShear11.mat()) <= 1e-15);
  CHECK_THROWS_AS(matrix_of_form({1.0, 0.0, 1.0}), Error);

  for (int i = 0; i < 100; ++i) {
    const QuadraticFormW w{uniform(-5, 5), uniform(0.1, 5) * (i % 2 ? 1 : -1), uniform(-5, 5)};
    CHECK(std::abs(matrix_of_form(w).mat().det() - 1.0) <= 1e-12);
  }

  CHECK_THROWS_AS(generating_form(SymplecticMat::shear(1.0)), Error);
  try {
    (void)generating_form(SymplecticMat::dilation(2.0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_free);
  }
}

TEST_CASE("generating form round trip on 1000 random free matrices") {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SymplecticMat s = testing::random_free();
    worst = std::max(worst, matrix_of_form(generating_form(s)).mat().max_abs_diff(s.mat()));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("verify_generating_relation") {
  CHECK(verify_generating_relation(SymplecticMat::J(), 1.0, 0.0));
  CHECK(verify_generating_relation(kShear11, 0.3, -0.7));
  for (int i = 0; i < 20; ++i) {
    const SymplecticMat s = testing::random_free();
    for (int k = 0; k < 100; ++k) CHECK(verify_generating_relation(s, uniform(-4, 4), uniform(-4, 4)));
  }
  // Dilations have b = 0 and no generating form.
  CHECK_THROWS_AS(verify_generating_relation(SymplecticMat::dilation(3.0), 1.0, 1.0), Error);
}

TEST_CASE("free_factorize") {
  const FreeFactors fj = free_factorize(SymplecticMat::J());
  CHECK(fj.p == 0.0);
  CHECK(fj.l == 1.0);
  CHECK(fj.q == 0.0);
  CHECK(fj.product().mat().max_abs_diff(SymplecticMat::J().mat()) == 0.0);

  const FreeFactors fs = free_factorize(kShear11);
  CHECK(fs.p == doctest::Approx(1.0));
  CHECK(fs.l == doctest::Approx(1.0));
  CHECK(fs.q == doctest::Approx(1.0));
  CHECK(fs.product().mat().max_abs_diff(kShear11.mat()) <= 1e-15);

  const double m = 0.6;
  const SymplecticMat quarter = SymplecticMat::from(Mat2{0.0, 1.0 / m, -m, 0.0});
  const FreeFactors fq = free_factorize(quarter);
  CHECK(fq.l == doctest::Approx(m));
  CHECK(fq.product().mat().max_abs_diff(quarter.mat()) <= 1e-15);

  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SymplecticMat s = testing::random_free();
    worst = std::max(worst, free_factorize(s).product().mat().max_abs_diff(s.mat()));
  }
  CHECK(worst <= 1e-11);
}

TEST_CASE("two_free_factorization") {
  SUBCASE("V_1 takes the P = 0 branch") {
    const SymplecticMat v1 = SymplecticMat::shear(1.0);
    const auto [f1, f2] = two_free_factorization(v1);
    CHECK(f1.mat().max_abs_diff((v1 * SymplecticMat::J()).mat()) == 0.0);
    CHECK(f2.mat().max_abs_diff(sympl_inverse(SymplecticMat::J()).mat()) == 0.0);
    CHECK((f1 * f2).mat().max_abs_diff(v1.mat()) <= 1e-12);
  }
  SUBCASE("a = 0 takes the P = 1 branch") {
    const SymplecticMat s = SymplecticMat::from(Mat2{0.0, 2.0, -0.5, 0.0});
    const auto [f1, f2] = two_free_factorization(s);
    CHECK(f2.mat().max_abs_diff(Mat2{-1.0, -1.0, 1.0, 0.0}) == 0.0);
    CHECK(f1.is_free());
    CHECK((f1 * f2).mat().max_abs_diff(s.mat()) <= 1e-12);
  }
  SUBCASE("J uses P = 1 so both factors are free") {
    const auto [f1, f2] = two_free_factorization(SymplecticMat::J());
    CHECK(f1.is_free());
    CHECK(f2.is_free());
    CHECK((f1 * f2).mat().max_abs_diff(SymplecticMat::J().mat()) <= 1e-12);
  }
  SUBCASE("random matrices") {
    for (int i = 0; i < 1000; ++i) {
      const SymplecticMat s = (i % 2) ? testing::random_free() : testing::random_generator_product(6);
      const auto [f1, f2] = two_free_factorization(s);
      const double norm = s.mat().norm_inf();
      CHECK(std::abs(f1.b()) > 1e-9 * norm);
      CHECK(std::abs(f2.b()) > 1e-9 * norm);
      CHECK((f1 * f2).mat().max_abs_diff(s.mat()) <= 1e-12 * std::max(1.0, norm));
    }
  }
}

TEST_CASE("word_decompose") {
  const GeneratorWord wj = word_decompose(SymplecticMat::J());
  REQUIRE(wj.factors.size() == 1);
  CHECK(std::holds_alternative<FourierFactor>(wj.factors[0]));

  const GeneratorWord w2 = word_decompose(SymplecticMat::dilation(2.0));
  CHECK(w2.projection().mat().max_abs_diff(Mat2{0.5, 0.0, 0.0, 2.0}) <= 1e-15);

  for (int i = 0; i < 500; ++i) {
    const SymplecticMat s = testing::random_generator_product(5);
    const GeneratorWord w = word_decompose(s);
    CHECK(w.projection().mat().max_abs_diff(s.mat()) <= 1e-11 * std::max(1.0, s.mat().norm_inf()));
    for (const Generator& g : w.factors) {
      if (const auto* r = std::get_if<RescaleFactor>(&g)) CHECK((r->maslov % 2 == 1) == (r->l < 0.0));
    }
  }
}

TEST_CASE("simplified merges chirps and drops identities") {
  GeneratorWord w{{ChirpFactor{0.5}, ChirpFactor{-0.5}, RescaleFactor{1.0, 0}, FourierFactor{}, ChirpFactor{0.0}}};
  const GeneratorWord s = w.simplified();
  REQUIRE(s.factors.size() == 1);
  CHECK(std::holds_alternative<FourierFactor>(s.factors[0]));
  // M_1 with odd class is -identity on signals and must survive.
  GeneratorWord odd{{RescaleFactor{1.0, 2}}};
  CHECK(odd.simplified().factors.size() == 1);
}

TEST_CASE("oscillator_flow") {
  CHECK(flow_matrix(0.0, 2.5).max_abs_diff(Mat2{}) == 0.0);
  CHECK(flow_matrix(std::numbers::pi / 2, 1.0).max_abs_diff(SymplecticMat::J().mat()) <= 1e-16);
  CHECK_THROWS_AS(oscillator_flow(1.0, 0.0), Error);
  CHECK_THROWS_AS(oscillator_flow(1.0, -1.0), Error);

  for (double tau = -3.0; tau <= 3.0; tau += 0.37) {
    for (const double m : {0.3, 1.0 / std::sqrt(3.0), 1.0, std::sqrt(3.0), 2.0, 5.0}) {
      const SymplecticMat root = SymplecticMat::dilation(std::sqrt(m));
      const Mat2 lhs = (oscillator_flow(tau, m) * root).mat();
      const Mat2 rhs = (root * oscillator_flow(tau, 1.0)).mat();
      CHECK(lhs.max_abs_diff(rhs) <= 1e-12);
      const double tau2 = 0.81 - tau / 3.0;
      CHECK((oscillator_flow(tau, m) * oscillator_flow(tau2, m)).mat().max_abs_diff(flow_matrix(tau + tau2, m)) <=
            1e-12 * std::max(1.0, m));
    }
  }
}

TEST_CASE("oscillator_flow_numeric") {
  CHECK(oscillator_flow_numeric(1.0, 1.0, 1.0, 2000).max_abs_diff(flow_matrix(1.0, 1.0)) <= 1e-8);
  CHECK(oscillator_flow_numeric(0.0, 3.0, 2.0, 1).max_abs_diff(Mat2{}) == 0.0);
  const Mat2 fast = oscillator_flow_numeric(1.0, 2.0, 3.0, 4000);
  CHECK(std::abs(fast.det() - 1.0) <= 1e-8);
  // Closed form for general resonance: rotation at rate Omega with mass m * Omega.
  CHECK(fast.max_abs_diff(Mat2{std::cos(3.0), std::sin(3.0) / 6.0, -6.0 * std::sin(3.0), std::cos(3.0)}) <= 1e-8);
  CHECK_THROWS_AS(oscillator_flow_numeric(1.0, 1.0, 1.0, 50), Error);
  CHECK_THROWS_AS(oscillator_flow_numeric(20.0, 1.0, 1.0, 2000), Error);
  CHECK_THROWS_AS(oscillator_flow_numeric(1.0, 1.0, 30.0, 2000), Error);
  // 2000 steps suffice over a full half period.
  for (const double m : {1.0 / std::sqrt(3.0), 1.0, 2.0}) {
    CHECK(oscillator_flow_numeric(-std::numbers::pi, m, 1.0, 2000).max_abs_diff(flow_matrix(-std::numbers::pi, m)) <= 1e-8);
  }
}

TEST_CASE("is_modular") {
  CHECK(is_modular(SymplecticMat::J(), 1e-12));
  CHECK(is_modular(kShear11, 1e-12));
  CHECK_FALSE(is_modular(SymplecticMat::from(Mat2{1.0, 0.5, 0.0, 1.0}), 1e-12));
  CHECK(is_modular(SymplecticMat::from(Mat2{2.0, 1.0, 1.0, 1.0}), 1e-12));
}
