#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lgm/constant_term.hpp"
#include "lgm/io.hpp"
#include "lgm/laurent.hpp"
#include "oracles.hpp"

using namespace lgm;

namespace {

LaurentPolynomial random_small(std::mt19937& rng, const VarsPtr& vars,
                               int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<unsigned long> den(1, 3);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exps e(vars->names().size());
    for (int& x : e) x = exp(rng);
    terms.push_back({std::move(e), Rational(num(rng), den(rng))});
  }
  return LaurentPolynomial::from_terms(vars, std::move(terms));
}

}  // namespace

TEST_CASE("central binomials from x + 1/x") {
  LaurentPolynomial f = parse_laurent("x + x^-1");
  long expect[] = {1, 0, 2, 0, 6, 0, 20, 0, 70};
  for (unsigned j = 0; j <= 8; ++j)
    CHECK(constant_term_of_power(f, j) == Rational(expect[j]));
}

TEST_CASE("kernel equals naive expansion for small polynomials") {
  LaurentPolynomial fixed[] = {
      parse_laurent("x + y + x^-1*y^-1"),
      parse_laurent("x + y + x^-1 + y^-1"),
      parse_laurent("x + x^-1*y + x^-1*z + z^-1 + y^-1"),
      parse_laurent("2*x^2 - 1/3*x^-1 + 5"),
  };
  for (const LaurentPolynomial& f : fixed)
    for (unsigned j = 0; j <= 6; ++j)
      CHECK(constant_term_of_power(f, j) == oracles::naive_constant_term(f, j));

  std::mt19937 rng(1503);
  for (int vars = 1; vars <= 3; ++vars) {
    std::vector<std::string> names;
    for (int i = 0; i < vars; ++i) names.push_back(std::string(1, char('x' + i)));
    VarsPtr vp = make_vars(names);
    for (int trial = 0; trial < 12; ++trial) {
      LaurentPolynomial f = random_small(rng, vp, 6);
      for (unsigned j = 0; j <= 6; ++j)
        CHECK(constant_term_of_power(f, j) ==
              oracles::naive_constant_term(f, j));
    }
  }
}

TEST_CASE("scalar and simd paths agree") {
  std::mt19937 rng(8080);
  VarsPtr vp = make_vars({"a", "b", "c", "d"});
  CtOptions scalar;
  scalar.force_scalar = true;
  for (int trial = 0; trial < 8; ++trial) {
    LaurentPolynomial f = random_small(rng, vp, 10);
    for (unsigned j = 0; j <= 8; ++j)
      CHECK(constant_term_of_power(f, j) ==
            constant_term_of_power(f, j, scalar));
  }
  // also on a structured mirror-shaped input
  LaurentPolynomial f = parse_laurent(
      "a + b + c + d + a^-1*b + b^-1*c + c^-1*d + d^-1 + "
      "a^-1*b^-1*c^-1*d^-1");
  for (unsigned j = 0; j <= 10; ++j)
    CHECK(constant_term_of_power(f, j) == constant_term_of_power(f, j, scalar));
}

TEST_CASE("degenerate inputs") {
  VarsPtr vp = make_vars({"x"});
  CHECK(constant_term_of_power(LaurentPolynomial::zero(vp), 0) == Rational(1));
  CHECK(constant_term_of_power(LaurentPolynomial::zero(vp), 3) == Rational(0));
  CHECK(constant_term_of_power(parse_laurent("x", vp), 5) == Rational(0));
  CHECK(constant_term_of_power(parse_laurent("7/2", vp), 3) ==
        Rational(343, 8));
}
