// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#pragma once

#include "gfsi/kernels.hpp"

namespace gfsi::kernels::detail {

extern const Table kScalarTable;

#if defined(GFSI_HAVE_AVX2)
extern const Table kAvx2Table;
#endif

}  // namespace gfsi::kernels::detail
