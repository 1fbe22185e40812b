// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "kernels_impl.hpp"

#include <cmath>

namespace gfsi::kernels::detail {

namespace {

cplx dot_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    // a * conj(b)
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].imag() * b[k].real() - a[k].real() * b[k].imag();
  }
  return {re, im};
}

cplx phase_dot_scalar(const cplx* a, std::size_t n, double phase0, double dphase) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double phase = phase0 + static_cast<double>(k) * dphase;
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    re += a[k].real() * c - a[k].imag() * s;
    im += a[k].real() * s + a[k].imag() * c;
  }
  return {re, im};
}

void multiply_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * b[k];
}

void rank_one_scalar(cplx* m, const cplx* v, std::size_t n, double w) {
  for (std::size_t j = 0; j < n; ++j) {
    const cplx s = w * std::conj(v[j]);
    cplx* col = m + j * n;
    for (std::size_t i = 0; i < n; ++i) col[i] += v[i] * s;
  }
}

double norm2_scalar(const cplx* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += std::norm(a[k]);
  return acc;
}

}  // namespace

const Table kScalarTable{Isa::scalar, dot_scalar, phase_dot_scalar, multiply_scalar,
                         rank_one_scalar, norm2_scalar};

}  // namespace gfsi::kernels::detail
