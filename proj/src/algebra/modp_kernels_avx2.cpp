// Compiled with -mavx2; only reached through the runtime dispatcher.

#include "novikov/algebra/modp_kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace novikov::algebra::kernels {

#if defined(__AVX2__)

namespace {

// v mod p for 8 signed lanes with 0 <= v < 2^31. The double quotient is off by
// at most one, fixed up by the two conditional corrections.
inline __m256i reduce_lanes(__m256i v, __m256d inv_p, __m256i p_vec) {
  __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(v));
  __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(v, 1));
  __m128i q_lo = _mm256_cvttpd_epi32(_mm256_floor_pd(_mm256_mul_pd(lo, inv_p)));
  __m128i q_hi = _mm256_cvttpd_epi32(_mm256_floor_pd(_mm256_mul_pd(hi, inv_p)));
  __m256i q = _mm256_set_m128i(q_hi, q_lo);
  __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, p_vec));
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, p_vec));
  __m256i over = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(p_vec, _mm256_set1_epi32(1)));
  r = _mm256_sub_epi32(r, _mm256_and_si256(over, p_vec));
  return r;
}

}  // namespace

void axpy_mod_avx2(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
                   std::uint32_t factor, std::uint32_t p) {
  const std::size_t n = row.size();
  const __m256i f = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i p_vec = _mm256_set1_epi32(static_cast<int>(p));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pivot.data() + i));
    __m256i v = _mm256_add_epi32(a, _mm256_mullo_epi32(b, f));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row.data() + i), reduce_lanes(v, inv_p, p_vec));
  }
  if (i < n) axpy_mod_scalar(row.subspan(i), pivot.subspan(i), factor, p);
}

#else

void axpy_mod_avx2(std::span<std::uint32_t> row, std::span<const std::uint32_t> pivot,
                   std::uint32_t factor, std::uint32_t p) {
  axpy_mod_scalar(row, pivot, factor, p);
}

#endif

}  // namespace novikov::algebra::kernels
