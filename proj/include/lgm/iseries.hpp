#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lgm/laurent.hpp"
#include "lgm/model_spec.hpp"

namespace lgm {

// Power series in t, truncated at `order`, with zero coefficients omitted.
struct Series {
  int order = 0;
  std::map<int, Rational> coeffs;

  Rational at(int j) const;
  void set(int j, Rational c);  // drops exact zeros

  friend bool operator==(const Series& a, const Series& b) {
    return a.order == b.order && a.coeffs == b.coeffs;
  }
};

// Exact harmonic number gamma(r) = 1 + 1/2 + ... + 1/r, gamma(0) = 0.
Rational harmonic_gamma(int r);

// Regularized I-series of the complete intersection described by `spec`.
// Coefficients sit at exponents d0*d only. The Grassmannian coefficient at
// t^(d0*d) is
//
//   prod_{i=0..l} (d_i*d)! / (d!)^(k+2)
//     * (-1)^d/2 * sum_{r=0..d} C(d,r)^(k+2)
//         * ((k+2)(d-2r)(gamma(r)-gamma(d-r)) + 2)
//
// with d_0 the Fano index. The normalization (the i=0 factor uses (d0*d)!,
// the global (-1)^d/2, and the +2 in the bracket) is pinned by
// verify_iseries_calibration below; see the README for the evidence.
Series grassmannian_iseries(const ModelSpec& spec, int n_terms);

// Projective complete intersection I-series: (d0*j)! * prod (di*j)! / (j!)^(N+1)
// at t^(d0*j).
Series projective_ci_iseries(const ModelSpec& spec, int n_terms);

// The standard toric LG mirror of a complete intersection of degrees
// d_1..d_l in P^N:
//
//   prod_i (x_{i,1}+...+x_{i,d_i-1}+1)^{d_i} / (prod x * prod y)
//     + y_1 + ... + y_{d0-1}
//
// in N-l variables; degree-1 hypersurfaces contribute an empty x-group.
LaurentPolynomial projective_ci_lg(const ModelSpec& spec);

// Main period of f: phi_j = constant term of f^j, j = 0..n_terms.
Series main_period(const LaurentPolynomial& f, int n_terms);

// Recomputes the calibration pins for the Grassmannian I-series
// normalization and throws invariant_error on any mismatch:
//   (k=2, [])  -> coefficient 48 at t^4
//   (k=2, [1]) -> coefficients 12 at t^3 and 540 at t^6.
// Runs automatically (once) on the first grassmannian_iseries call.
void verify_iseries_calibration();

enum class PeriodMethod { Main, Appendix, ClosedForm };

PeriodMethod parse_method(const std::string& name);  // main|appendix|closed-form
std::string method_name(PeriodMethod m);

// Default truncation order by mirror variable count: 8 up to 4 variables,
// 6 for 5-6, 4 above.
int default_terms(std::size_t n_vars);

struct PeriodReport {
  ModelSpec spec;
  PeriodMethod method = PeriodMethod::Main;
  int terms = 0;
  Series period;   // constant terms of powers of the mirror
  Series iseries;  // matching I-series
  bool pass = false;
  std::vector<int> mismatches;
  // Index-1 targets only: the measured linear correction. The period is
  // compared against exp(alpha*t) * iseries with alpha = phi_1 - I_1.
  std::optional<Rational> alpha;
};

// Builds the mirror for `spec` by the requested method.
LaurentPolynomial mirror_for(const ModelSpec& spec, PeriodMethod method,
                             bool strict_verify = false);

// Builds the mirror, computes its main period, and compares against the
// I-series coefficient by coefficient. n_terms <= 0 picks the default order.
PeriodReport check_period_condition(const ModelSpec& spec, PeriodMethod method,
                                    int n_terms = 0, bool strict_verify = false);

nlohmann::json series_to_json(const Series& s);
nlohmann::json report_to_json(const PeriodReport& r);

}  // namespace lgm
