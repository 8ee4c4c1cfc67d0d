// Compiled with -mavx2; only reached after a runtime cpu check.
#include "ct_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace lgm::detail {
namespace {

void add_broadcast_avx2(const std::int32_t* a, const std::int32_t* b, std::int32_t* out,
                        std::size_t n, std::size_t stride) {
  for (std::size_t t = 0; t < n; ++t) {
    const std::int32_t* row = b + t * stride;
    std::int32_t* dst = out + t * stride;
    for (std::size_t c = 0; c < stride; c += 8) {
      __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + c));
      __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + c));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + c), _mm256_add_epi32(va, vb));
    }
  }
}

void filter_bounds_avx2(const std::int32_t* e, const std::int32_t* lo, const std::int32_t* hi,
                        std::uint8_t* keep, std::size_t n, std::size_t stride) {
  for (std::size_t t = 0; t < n; ++t) {
    const std::int32_t* row = e + t * stride;
    int bad = 0;
    for (std::size_t c = 0; c < stride && !bad; c += 8) {
      __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + c));
      __m256i vlo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo + c));
      __m256i vhi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi + c));
      __m256i below = _mm256_cmpgt_epi32(vlo, v);
      __m256i above = _mm256_cmpgt_epi32(v, vhi);
      bad = _mm256_movemask_epi8(_mm256_or_si256(below, above));
    }
    keep[t] = bad ? 0 : 1;
  }
}

}  // namespace

const CtKernels& avx2_kernels() {
  static const CtKernels k{add_broadcast_avx2, filter_bounds_avx2};
  return k;
}

}  // namespace lgm::detail

#else

namespace lgm::detail {
const CtKernels& avx2_kernels() { return scalar_kernels(); }
}  // namespace lgm::detail

#endif
