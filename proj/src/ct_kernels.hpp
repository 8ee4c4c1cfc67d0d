#pragma once

#include <cstddef>
#include <cstdint>

namespace lgm::detail {

// Integer inner loops of the constant-term kernel, in a scalar reference
// flavor and an AVX2 flavor selected at runtime. `stride` is the padded
// exponent-vector width (multiple of 8); pad lanes hold 0 and the bound
// arrays hold 0 there, so they never reject.
struct CtKernels {
  // out[t*stride + c] = a[c] + b[t*stride + c]
  void (*add_broadcast)(const std::int32_t* a, const std::int32_t* b, std::int32_t* out,
                        std::size_t n, std::size_t stride);
  // keep[t] = 1 iff lo[c] <= e[t*stride + c] <= hi[c] for every c
  void (*filter_bounds)(const std::int32_t* e, const std::int32_t* lo, const std::int32_t* hi,
                        std::uint8_t* keep, std::size_t n, std::size_t stride);
};

const CtKernels& scalar_kernels();
const CtKernels& avx2_kernels();
bool avx2_supported();

}  // namespace lgm::detail
