#include "lgm/nef.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "lgm/errors.hpp"

namespace lgm {

namespace {

std::vector<std::string> x_names(int k) {
  std::vector<std::string> names;
  for (int j = 1; j <= k; ++j) names.push_back("x_1_" + std::to_string(j));
  for (int j = 2; j <= k + 1; ++j) names.push_back("x_2_" + std::to_string(j));
  std::sort(names.begin(), names.end());
  return names;
}

void check_k(int k) {
  if (k < 2) throw input_error("the appendix construction needs k >= 2");
}

void check_col(int k, int col) {
  if (col < 1 || col > 3 * k)
    throw input_error("weight-matrix column out of range: " + std::to_string(col));
}

}  // namespace

WeightMatrix build_weight_matrix(int k) {
  check_k(k);
  WeightMatrix m;
  m.k = k;
  for (int row = 1; row <= k; ++row) {
    std::vector<int> r(3 * k, 0);
    for (int j = 1; j <= k; ++j) r[j - 1] = j <= row ? 1 : 0;
    r[k + (k + 1 - row) - 1] = 1;
    for (int c = 1; c <= k; ++c) r[2 * k + c - 1] = c >= row ? 1 : 0;
    m.rows.push_back(std::move(r));
  }
  // The pattern is extrapolated from the two printed instances; make sure it
  // really encodes relations of the superpotential terms before using it.
  VarsPtr vars = make_vars(x_names(k));
  for (int row = 1; row <= k; ++row) {
    int sum = 0;
    Exps product(vars->size(), 0);
    for (int col = 1; col <= 3 * k; ++col) {
      int e = m.rows[row - 1][col - 1];
      sum += e;
      if (e == 0) continue;
      const LaurentPolynomial t = column_term(k, col);
      for (std::size_t i = 0; i < vars->size(); ++i)
        product[i] += e * t.terms().front().exps[i];
    }
    bool unit = std::all_of(product.begin(), product.end(),
                            [](int e) { return e == 0; });
    if (!unit || sum != k + 2)
      throw invariant_error("weight matrix row " + std::to_string(row) +
                            " is not a relation of the superpotential terms");
    if (m.rows[row - 1][k + (k + 1 - row) - 1] != 1)
      throw invariant_error("weight matrix middle block is not the anti-identity");
  }
  return m;
}

std::string column_variable(int k, int col) {
  check_col(k, col);
  if (col <= k) return "x_1_" + std::to_string(col);
  if (col > 2 * k) return "x_2_" + std::to_string(col - 2 * k + 1);
  throw input_error("column " + std::to_string(col) +
                    " carries a monomial, not a variable");
}

LaurentPolynomial column_term(int k, int col) {
  check_col(k, col);
  VarsPtr vars = make_vars(x_names(k));
  if (col <= k || col > 2 * k)
    return LaurentPolynomial::variable(vars, column_variable(k, col));
  // M_i = 1 / (x_{1,1}..x_{1,i} * x_{2,i+1}..x_{2,k+1})
  int i = k + 1 - (col - k);
  Exps e(vars->size(), 0);
  for (int j = 1; j <= i; ++j) e[vars->index_of("x_1_" + std::to_string(j))] = -1;
  for (int j = i + 1; j <= k + 1; ++j)
    e[vars->index_of("x_2_" + std::to_string(j))] = -1;
  return LaurentPolynomial::monomial(vars, std::move(e), Rational(1));
}

XChange appendix_x_change(int k) {
  check_k(k);
  VarsPtr vars = make_vars(x_names(k));
  LaurentPolynomial w = LaurentPolynomial::zero(vars);
  for (int col = 1; col <= 3 * k; ++col) w = w + column_term(k, col);
  std::vector<LaurentPolynomial> f;
  f.push_back(LaurentPolynomial::variable(vars, "x_1_1"));
  for (int j = 2; j <= k; ++j)
    f.push_back(LaurentPolynomial::variable(vars, "x_1_" + std::to_string(j)) +
                LaurentPolynomial::variable(vars, "x_2_" + std::to_string(j)));
  f.push_back(LaurentPolynomial::variable(vars, "x_2_" + std::to_string(k + 1)));
  return XChange{std::move(vars), std::move(w), std::move(f)};
}

NefPartition default_partition(int k, const std::vector<int>& degrees) {
  check_k(k);
  NefPartition p;
  for (int c = k + 1; c <= 2 * k; ++c) p.E.push_back(c);
  int next = 1;  // next ungrouped f-index
  for (int d : degrees) {
    if (d < 1) throw input_error("degrees must be positive");
    std::vector<int> cols;
    for (int j = next; j < next + d; ++j) {
      if (j > k + 1)
        throw input_error("not enough hyperplane equations for the degrees");
      if (j == 1)
        cols.push_back(1);
      else if (j == k + 1)
        cols.push_back(3 * k);
      else {
        cols.push_back(j);
        cols.push_back(2 * k + j - 1);
      }
    }
    next += d;
    std::sort(cols.begin(), cols.end());
    p.sm.push_back(cols.front());
    p.Em.push_back(std::move(cols));
  }
  return p;
}

namespace {

void check_partition_structure(const NefPartition& p, int k) {
  if (p.sm.size() != p.Em.size())
    throw input_error("partition needs one distinguished column per part");
  std::set<int> seen(p.E.begin(), p.E.end());
  for (int c : p.E) check_col(k, c);
  if (seen.size() != p.E.size())
    throw input_error("partition column sets are not disjoint");
  for (std::size_t m = 0; m < p.Em.size(); ++m) {
    if (p.Em[m].empty()) throw input_error("empty nef part");
    bool has_s = false;
    for (int c : p.Em[m]) {
      check_col(k, c);
      if (c > k && c <= 2 * k)
        throw input_error("column " + std::to_string(c) +
                          " carries a monomial and cannot join a nef part");
      if (!seen.insert(c).second)
        throw input_error("partition column sets are not disjoint");
      has_s = has_s || c == p.sm[m];
    }
    if (!has_s)
      throw input_error("distinguished column is not in its part");
  }
}

std::string y_name(const std::string& x) { return "y" + x.substr(1); }

}  // namespace

LaurentPolynomial torus_chart_substitute(const LaurentPolynomial& w,
                                         const NefPartition& p, int k) {
  check_k(k);
  check_partition_structure(p, k);
  if (p.Em.empty()) return w;

  std::vector<std::string> names = w.vars()->names();
  for (std::size_t m = 0; m < p.Em.size(); ++m)
    for (int c : p.Em[m]) {
      const std::string x = column_variable(k, c);
      if (!w.vars()->contains(x))
        throw input_error("partition column variable " + x +
                          " is absent from the polynomial");
      names.erase(std::remove(names.begin(), names.end(), x), names.end());
      if (c != p.sm[m]) names.push_back(y_name(x));
    }
  std::sort(names.begin(), names.end());
  VarsPtr target = make_vars(std::move(names));

  Substitution sub;
  sub.target = target;
  for (std::size_t m = 0; m < p.Em.size(); ++m) {
    LaurentPolynomial ym = LaurentPolynomial::constant(target, Rational(1));
    for (int c : p.Em[m])
      if (c != p.sm[m])
        ym = ym + LaurentPolynomial::variable(target,
                                              y_name(column_variable(k, c)));
    for (int c : p.Em[m]) {
      const std::string x = column_variable(k, c);
      if (c == p.sm[m])
        sub.map.emplace(x, RationalFunction::of(
                               LaurentPolynomial::constant(target, Rational(1)), ym));
      else
        sub.map.emplace(x, RationalFunction::of(
                               LaurentPolynomial::variable(target, y_name(x)), ym));
    }
  }
  return RationalFunction::of(w).substituted(sub).expect_laurent(
      "torus chart pullback");
}

LaurentPolynomial run_appendix(int k, const std::vector<int>& degrees,
                               const std::optional<NefPartition>& partition) {
  check_k(k);
  int total = 0;
  for (int d : degrees) {
    if (d < 1) throw input_error("degrees must be positive");
    total += d;
  }
  if (total >= k + 2)
    throw input_error("not Fano: degrees sum to " + std::to_string(total) +
                      " but must stay below k+2 = " + std::to_string(k + 2));

  WeightMatrix D = build_weight_matrix(k);
  NefPartition p = partition ? *partition : default_partition(k, degrees);
  check_partition_structure(p, k);
  if (p.Em.size() != degrees.size())
    throw input_error("partition has " + std::to_string(p.Em.size()) +
                      " parts for " + std::to_string(degrees.size()) +
                      " degrees");
  // Each part must realize d_m times the anticanonical class (1,...,1).
  for (std::size_t m = 0; m < p.Em.size(); ++m)
    for (int row = 0; row < k; ++row) {
      int s = 0;
      for (int c : p.Em[m]) s += D.rows[row][c - 1];
      if (s != degrees[m])
        throw input_error("nef part " + std::to_string(m + 1) +
                          " does not sum to degree " +
                          std::to_string(degrees[m]));
    }

  XChange xc = appendix_x_change(k);
  LaurentPolynomial rest = xc.superpotential;
  for (std::size_t m = 0; m < p.Em.size(); ++m) {
    LaurentPolynomial fm = LaurentPolynomial::zero(xc.vars);
    for (int c : p.Em[m]) fm = fm + column_term(k, c);
    rest = rest - fm;
    LaurentPolynomial pulled = torus_chart_substitute(fm, p, k);
    if (!pulled.is_constant() || pulled.constant_coefficient() != Rational(1))
      throw invariant_error("nef sum does not pull back to 1");
  }
  LaurentPolynomial mirror = torus_chart_substitute(rest, p, k);
  std::size_t l = degrees.size();
  if (mirror.vars()->size() != 2 * static_cast<std::size_t>(k) - l)
    throw invariant_error("appendix mirror does not have 2k-l variables");
  return mirror;
}

LaurentPolynomial apply_birational_map(const LaurentPolynomial& f,
                                       const Substitution& bindings) {
  RationalFunction image = RationalFunction::of(f).substituted(bindings);
  auto lp = image.to_laurent();
  if (!lp) throw verify_error("pullback is not a Laurent polynomial");
  return *lp;
}

nlohmann::json weight_matrix_to_json(const WeightMatrix& m) {
  return nlohmann::json{{"k", m.k}, {"rows", m.rows}};
}

nlohmann::json partition_to_json(const NefPartition& p) {
  return nlohmann::json{{"E", p.E}, {"Em", p.Em}, {"sm", p.sm}};
}

}  // namespace lgm
