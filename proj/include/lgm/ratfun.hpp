#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "lgm/laurent.hpp"

namespace lgm {

class RationalFunction;

// Variable bindings for a pullback. Variables absent from the map are carried
// over by name (and must therefore exist in the target set).
struct Substitution {
  VarsPtr target;
  std::map<std::string, RationalFunction, std::less<>> map;
};

// num/den with lazy normalization: only the monomial content is extracted
// (den is made content-free with leading coefficient 1, the monomial quotient
// folded into num). No polynomial gcd is ever computed; equality and
// emptiness tests work through cross-multiplication and exact division.
class RationalFunction {
 public:
  static RationalFunction of(LaurentPolynomial num);
  static RationalFunction of(LaurentPolynomial num, LaurentPolynomial den);
  static RationalFunction constant(const VarsPtr& vars, Rational c);
  static RationalFunction variable(const VarsPtr& vars, std::string_view name);

  const LaurentPolynomial& num() const { return num_; }
  const LaurentPolynomial& den() const { return den_; }
  const VarsPtr& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  // Exact value equality via cross-multiplication.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }
  bool equals_constant(const Rational& c) const;

  std::optional<LaurentPolynomial> to_laurent() const;
  // Throws invariant_error mentioning `what` when the value is not Laurent.
  LaurentPolynomial expect_laurent(std::string_view what) const;

  // Exact dependence test: true iff the *value* depends on the variable.
  // Decided by comparing against a copy with the variable renamed fresh, so
  // unnormalized common factors cannot fool it.
  bool depends_on(std::string_view name) const;

  RationalFunction substituted(const Substitution& s) const;
  RationalFunction with_vars(const VarsPtr& target) const;

 private:
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  LaurentPolynomial num_, den_;
};

}  // namespace lgm
