#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgm/rational.hpp"

namespace lgm {

// Immutable, shared ordered list of variable names. The order fixes the
// exponent-vector layout and with it the canonical (graded-lex) term order.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws input_error
  bool contains(std::string_view name) const { return find(name).has_value(); }

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

VarsPtr make_vars(std::vector<std::string> names);
// Union of two sets, names sorted; used when callers align operands.
VarsPtr merge_vars(const VarsPtr& a, const VarsPtr& b);

using Exps = std::vector<int>;

int total_degree(const Exps& e);
// Graded lex: higher total degree first, ties broken by the lexicographically
// larger exponent vector. Returns <0 when a precedes b in canonical order.
int compare_grlex(const Exps& a, const Exps& b);

struct Term {
  Exps exps;
  Rational coeff;
};

class LaurentPolynomial {
 public:
  static LaurentPolynomial zero(VarsPtr vars);
  static LaurentPolynomial constant(VarsPtr vars, Rational c);
  static LaurentPolynomial variable(VarsPtr vars, std::string_view name, int exp = 1);
  static LaurentPolynomial monomial(VarsPtr vars, Exps exps, Rational c);
  // Merges duplicates, drops zero coefficients, sorts into canonical order.
  static LaurentPolynomial from_terms(VarsPtr vars, std::vector<Term> terms);

  const VarsPtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool depends_on(std::size_t var) const;
  const Rational* coeff_of(const Exps& e) const;  // nullptr when absent
  Rational constant_coefficient() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial scaled(const Rational& c) const;
  LaurentPolynomial mul_monomial(const Exps& e, const Rational& c) const;
  LaurentPolynomial pow(unsigned e) const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }

  // Name-based embedding into another variable set; every variable actually
  // used must exist in the target.
  LaurentPolynomial with_vars(const VarsPtr& target) const;

  // Componentwise minimum of the exponent vectors (the monomial content
  // exponent). Zero vector for the zero polynomial.
  Exps min_exps() const;

 private:
  explicit LaurentPolynomial(VarsPtr vars) : vars_(std::move(vars)) {}

  VarsPtr vars_;
  std::vector<Term> terms_;  // canonical order, unique exps, nonzero coeffs
};

// Quotient num/den when it is a Laurent polynomial, std::nullopt otherwise.
std::optional<LaurentPolynomial> exact_quotient(const LaurentPolynomial& num,
                                                const LaurentPolynomial& den);

}  // namespace lgm
