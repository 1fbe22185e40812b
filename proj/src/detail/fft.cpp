// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include "detail/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

#include "gfsi/error.hpp"

namespace gfsi::detail {
namespace {

// Plans are created once per (size, sign) and only executed afterwards;
// fftw_execute_dft is thread safe, the planner is not.
fftw_plan plan_for(int n, int sign) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, fftw_plan> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({n, sign});
  if (it != cache.end()) return it->second;
  std::vector<fftw_complex> scratch(static_cast<std::size_t>(n));
  fftw_plan plan = fftw_plan_dft_1d(n, scratch.data(), scratch.data(), sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plan == nullptr) throw Error(ErrorKind::invalid_input, "FFTW planning failed");
  cache.emplace(std::make_pair(n, sign), plan);
  return plan;
}

}  // namespace

void centered_dft(std::vector<std::complex<double>>& x, int sign) {
  const std::size_t n = x.size();
  if (n == 0 || n % 2 != 0) throw Error(ErrorKind::invalid_input, "centered DFT needs an even length");
  for (std::size_t k = 1; k < n; k += 2) x[k] = -x[k];
  auto* data = reinterpret_cast<fftw_complex*>(x.data());
  fftw_execute_dft(plan_for(static_cast<int>(n), sign), data, data);
  const double tail = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  for (std::size_t j = 0; j < n; ++j) x[j] *= (j % 2 == 0) ? tail : -tail;
}

}  // namespace gfsi::detail
