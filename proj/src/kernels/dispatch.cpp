// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The gfsi Authors

#include <atomic>

#include "gfsi/error.hpp"
#include "kernels_impl.hpp"

namespace gfsi::kernels {

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

const Table& scalar_table() noexcept { return detail::kScalarTable; }

const Table* avx2_table() noexcept {
#if defined(GFSI_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &detail::kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

Isa detect() noexcept { return avx2_table() != nullptr ? Isa::avx2 : Isa::scalar; }

namespace {

const Table* table_for(Isa isa) noexcept {
  return isa == Isa::avx2 ? avx2_table() : &scalar_table();
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{table_for(detect())};
  return table;
}

}  // namespace

const Table& active() noexcept { return *current().load(std::memory_order_acquire); }

void select(Isa isa) {
  const Table* table = table_for(isa);
  if (table == nullptr) {
    throw Error(ErrorKind::invalid_input, std::string("kernel set not available on this CPU: ") + to_string(isa));
  }
  current().store(table, std::memory_order_release);
}

}  // namespace gfsi::kernels
