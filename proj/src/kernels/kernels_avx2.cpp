// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors
//
// AVX2/FMA variants. This translation unit is the only one compiled with
// -mavx2 -mfma; nothing here may run unless dispatch.cpp saw the CPU flags.

#include "kernels_impl.hpp"

#include <immintrin.h>

#include <cmath>

namespace gfsi::kernels::detail {

namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d b_sw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

inline __m256d conj(__m256d a) {
  const __m256d sign = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  return _mm256_xor_pd(a, sign);
}

inline cplx hsum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return {lanes[0] + lanes[2], lanes[1] + lanes[3]};
}

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

cplx dot_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    acc0 = _mm256_add_pd(acc0, cmul(load2(a + k), conj(load2(b + k))));
    acc1 = _mm256_add_pd(acc1, cmul(load2(a + k + 2), conj(load2(b + k + 2))));
  }
  cplx tail = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) tail += a[k] * std::conj(b[k]);
  return tail;
}

// The phase factors are advanced by complex multiplication and re-seeded from
// std::polar every kBlock terms, which bounds the recurrence drift near 1e-14.
constexpr std::size_t kBlock = 64;

cplx phase_dot_avx2(const cplx* a, std::size_t n, double phase0, double dphase) {
  const cplx step2 = std::polar(1.0, 2.0 * dphase);
  const __m256d vstep = _mm256_set_pd(step2.imag(), step2.real(), step2.imag(), step2.real());
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n_even = n & ~std::size_t{1};
  std::size_t k = 0;
  while (k < n_even) {
    const std::size_t end = (k + kBlock < n_even) ? k + kBlock : n_even;
    const cplx z0 = std::polar(1.0, phase0 + static_cast<double>(k) * dphase);
    const cplx z1 = std::polar(1.0, phase0 + static_cast<double>(k + 1) * dphase);
    __m256d z = _mm256_set_pd(z1.imag(), z1.real(), z0.imag(), z0.real());
    for (std::size_t j = k; j < end; j += 2) {
      acc = _mm256_add_pd(acc, cmul(load2(a + j), z));
      z = cmul(z, vstep);
    }
    k = end;
  }
  cplx total = hsum(acc);
  for (; k < n; ++k) total += a[k] * std::polar(1.0, phase0 + static_cast<double>(k) * dphase);
  return total;
}

void multiply_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) store2(out + k, cmul(load2(a + k), load2(b + k)));
  for (; k < n; ++k) out[k] = a[k] * b[k];
}

void rank_one_avx2(cplx* m, const cplx* v, std::size_t n, double w) {
  for (std::size_t j = 0; j < n; ++j) {
    const cplx s = w * std::conj(v[j]);
    const __m256d vs = _mm256_set_pd(s.imag(), s.real(), s.imag(), s.real());
    cplx* col = m + j * n;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) store2(col + i, _mm256_add_pd(load2(col + i), cmul(load2(v + i), vs)));
    for (; i < n; ++i) col[i] += v[i] * s;
  }
}

double norm2_avx2(const cplx* a, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(a);
  const std::size_t len = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= len; k += 8) {
    const __m256d x0 = _mm256_loadu_pd(p + k);
    const __m256d x1 = _mm256_loadu_pd(p + k + 4);
    acc0 = _mm256_fmadd_pd(x0, x0, acc0);
    acc1 = _mm256_fmadd_pd(x1, x1, acc1);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; k < len; ++k) total += p[k] * p[k];
  return total;
}

}  // namespace

const Table kAvx2Table{Isa::avx2, dot_avx2, phase_dot_avx2, multiply_avx2, rank_one_avx2, norm2_avx2};

}  // namespace gfsi::kernels::detail
