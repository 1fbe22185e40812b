// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include <complex>
#include <vector>

namespace gfsi::detail {

// In place: x_j <- sum_k x_k exp(sign * 2 pi i (j - N/2)(k - N/2) / N).
// N must be even. sign is -1 or +1.
void centered_dft(std::vector<std::complex<double>>& x, int sign);

}  // namespace gfsi::detail
