#pragma once

#include "lgm/laurent.hpp"

namespace lgm {

struct CtOptions {
  bool force_scalar = false;  // bypass the runtime-dispatched SIMD kernels
};

// Constant term of f^j. Binary powering with reachability pruning (a term of
// a partial power survives only if the remaining factors can still cancel it
// coordinatewise), then a meet-in-the-middle pairing of f^ceil(j/2) with
// f^floor(j/2).
Rational constant_term_of_power(const LaurentPolynomial& f, unsigned j,
                                const CtOptions& opts = {});

bool ct_avx2_available();

}  // namespace lgm
