// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace gfsi::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa) noexcept;

// Inner loops shared by the transforms and the frame estimators. Every entry
// has a scalar reference in kernels_scalar.cpp; vector variants must agree
// with it to rounding (see tests/kernels_test.cpp).
struct Table {
  Isa isa;
  // sum_k a[k] * conj(b[k])
  cplx (*dot)(const cplx* a, const cplx* b, std::size_t n);
  // sum_k a[k] * exp(i * (phase0 + k * dphase))
  cplx (*phase_dot)(const cplx* a, std::size_t n, double phase0, double dphase);
  // out[k] = a[k] * b[k]; out may alias a or b
  void (*multiply)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
  // m += w * v v^H for an n x n column-major matrix
  void (*rank_one)(cplx* m, const cplx* v, std::size_t n, double w);
  // sum_k |a[k]|^2
  double (*norm2)(const cplx* a, std::size_t n);
};

const Table& scalar_table() noexcept;

// nullptr when the vector variant was not compiled in or the CPU lacks it.
const Table* avx2_table() noexcept;

// Best table supported by this CPU.
Isa detect() noexcept;

// Table used by the library. Defaults to detect(); select() overrides it for
// the whole process and throws gfsi::Error if the ISA is unavailable.
const Table& active() noexcept;
void select(Isa isa);

inline cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  return active().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline cplx phase_dot(std::span<const cplx> a, double phase0, double dphase) {
  return active().phase_dot(a.data(), a.size(), phase0, dphase);
}

inline double norm2(std::span<const cplx> a) { return active().norm2(a.data(), a.size()); }

}  // namespace gfsi::kernels
