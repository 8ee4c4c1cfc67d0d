#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lgm/laurent.hpp"
#include "lgm/ratfun.hpp"

namespace lgm {

// Weight matrix of P(2,2+k): k rows, 3k columns. Column j in [1,k] carries
// the variable x_{1,j}, column 2k+c carries x_{2,c+1}, and middle column k+c
// carries the monomial M_{k+1-c}. Row m records the relation
// M_m * prod_{j<=m} x_{1,j} * prod_{j>m} x_{2,j} = 1.
struct WeightMatrix {
  int k = 0;
  std::vector<std::vector<int>> rows;
};

// Builds and validates the matrix: every row relation must multiply to the
// unit monomial, the middle block must be the anti-identity, and each row
// must sum to k+2. Throws input_error for k < 2, invariant_error if the
// generalized pattern fails validation.
WeightMatrix build_weight_matrix(int k);

// The x-coordinate presentation of the P(2,2+k) superpotential together with
// the hyperplane equations f_1 = x_{1,1}, f_j = x_{1,j} + x_{2,j} for
// j in [2,k], f_{k+1} = x_{2,k+1}.
struct XChange {
  VarsPtr vars;                      // x_1_1..x_1_k and x_2_2..x_2_{k+1}
  LaurentPolynomial superpotential;  // 3k terms: the variables plus the M_i
  std::vector<LaurentPolynomial> f;  // f[j-1] = f_j, j in [1,k+1]
};

XChange appendix_x_change(int k);

// Nef partition in terms of 1-based weight-matrix columns. E is the echelon
// column set (the middle block unless the caller overrides it); Em lists the
// column sets of the nef terms; sm picks the distinguished column of each.
struct NefPartition {
  std::vector<int> E;
  std::vector<std::vector<int>> Em;
  std::vector<int> sm;
};

// Groups f_1..f_{k+1} consecutively from j = 1 to match the degree sequence;
// E_m collects the columns of the grouped terms and s_m is the smallest one.
NefPartition default_partition(int k, const std::vector<int>& degrees);

// Name of the x-variable carried by a non-middle column. input_error for
// middle columns or out-of-range indices.
std::string column_variable(int k, int col);

// The term of the superpotential carried by any column, as a monomial.
LaurentPolynomial column_term(int k, int col);

// Pullback of w under the chart u_{s_m} = 1/(1+sum y), u_i = y_i/(1+sum y)
// over E_m \ {s_m}; the y-variable of a column renames x to y. The result is
// certified Laurent (the partition conditions guarantee it; a failure means
// the partition was invalid in a way the structural checks cannot see).
LaurentPolynomial torus_chart_substitute(const LaurentPolynomial& w,
                                         const NefPartition& p, int k);

// End-to-end appendix mirror for l hypersurfaces of the given degrees in
// G(2,k+2): x-change, partition (default when omitted), then the chart
// pullback of the superpotential minus the nef terms. Certifies that each
// nef sum pulls back to 1 and that the mirror has 2k-l variables.
LaurentPolynomial run_appendix(
    int k, const std::vector<int>& degrees,
    const std::optional<NefPartition>& partition = std::nullopt);

// Certified-Laurent pullback of f under arbitrary bindings. Throws
// verify_error when the image is not a Laurent polynomial.
LaurentPolynomial apply_birational_map(const LaurentPolynomial& f,
                                       const Substitution& bindings);

nlohmann::json weight_matrix_to_json(const WeightMatrix& m);
nlohmann::json partition_to_json(const NefPartition& p);

}  // namespace lgm
