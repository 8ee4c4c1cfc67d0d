#pragma once

#include <vector>

#include "lgm/laurent.hpp"

namespace lgm {

// A lattice polytope given by its vertex set, grlex-sorted.
using Polytope = std::vector<Exps>;

// Vertex set of the convex hull of the support of f. Throws input_error on
// the zero polynomial. Exact integer/rational arithmetic throughout.
Polytope newton_polytope(const LaurentPolynomial& f);

// p lies in the convex hull of `points` (exact LP feasibility).
bool point_in_hull(const Exps& p, const std::vector<Exps>& points);

// The origin is an interior point of conv(points): the hull is
// full-dimensional and 0 is a strictly positive convex combination.
bool origin_in_interior(const std::vector<Exps>& points);

}  // namespace lgm
