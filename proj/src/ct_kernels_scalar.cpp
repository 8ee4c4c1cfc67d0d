#include "ct_kernels.hpp"

namespace lgm::detail {
namespace {

void add_broadcast_scalar(const std::int32_t* a, const std::int32_t* b, std::int32_t* out,
                          std::size_t n, std::size_t stride) {
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t c = 0; c < stride; ++c) out[t * stride + c] = a[c] + b[t * stride + c];
}

void filter_bounds_scalar(const std::int32_t* e, const std::int32_t* lo, const std::int32_t* hi,
                          std::uint8_t* keep, std::size_t n, std::size_t stride) {
  for (std::size_t t = 0; t < n; ++t) {
    std::uint8_t ok = 1;
    for (std::size_t c = 0; c < stride; ++c) {
      std::int32_t v = e[t * stride + c];
      if (v < lo[c] || v > hi[c]) {
        ok = 0;
        break;
      }
    }
    keep[t] = ok;
  }
}

}  // namespace

const CtKernels& scalar_kernels() {
  static const CtKernels k{add_broadcast_scalar, filter_bounds_scalar};
  return k;
}

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

}  // namespace lgm::detail
