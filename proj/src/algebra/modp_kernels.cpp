#include "novikov/algebra/modp_kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace novikov::algebra::kernels {

void axpy_mod_scalar(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
                     std::uint32_t factor, std::uint32_t p) {
  const std::size_t n = row.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t v = row[i] + static_cast<std::uint64_t>(factor) * pivot[i];
    row[i] = static_cast<std::uint32_t>(v % p);
  }
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

std::atomic<int>& isa_slot() {
  static std::atomic<int> slot{cpu_has_avx2() ? static_cast<int>(Isa::Avx2)
                                              : static_cast<int>(Isa::Scalar)};
  return slot;
}

}  // namespace

Isa active_isa() { return static_cast<Isa>(isa_slot().load(std::memory_order_relaxed)); }

void set_isa(Isa isa) {
  if (isa == Isa::Avx2 && !cpu_has_avx2()) throw std::runtime_error("AVX2 not available on this CPU");
  isa_slot().store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { set_isa(cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar); }

void axpy_mod(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
              std::uint32_t factor, std::uint32_t p) {
  if (factor == 0) return;
  if (active_isa() == Isa::Avx2 && p < kVectorPrimeLimit) {
    axpy_mod_avx2(row, pivot, factor, p);
  } else {
    axpy_mod_scalar(row, pivot, factor, p);
  }
}

}  // namespace novikov::algebra::kernels
