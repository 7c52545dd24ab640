#pragma once

// Row-update kernels for Gaussian elimination over Z_p.
//
// The scalar kernel is the reference; the AVX2 kernel must produce bit-identical
// rows. Dispatch is decided once at runtime from CPUID and can be pinned for
// equivalence testing.

#include <cstdint>
#include <span>

namespace novikov::algebra::kernels {

enum class Isa { Scalar, Avx2 };

/// Primes below this bound keep every intermediate of the vector kernel inside
/// a signed 32-bit lane.
inline constexpr std::uint32_t kVectorPrimeLimit = 1u << 15;

/// row[i] = (row[i] + factor * pivot[i]) mod p, all inputs already reduced.
void axpy_mod_scalar(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
                     std::uint32_t factor, std::uint32_t p);

/// Same contract; only valid when p < kVectorPrimeLimit and the CPU has AVX2.
void axpy_mod_avx2(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
                   std::uint32_t factor, std::uint32_t p);

bool cpu_has_avx2();

/// ISA used by axpy_mod(); defaults to the best one available.
Isa active_isa();
/// Pin the ISA (tests). Requesting Avx2 on a CPU without it throws.
void set_isa(Isa isa);
void reset_isa();

/// Dispatching entry point.
void axpy_mod(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
              std::uint32_t factor, std::uint32_t p);

}  // namespace novikov::algebra::kernels
