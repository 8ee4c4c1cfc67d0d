#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "lgm/errors.hpp"
#include "lgm/io.hpp"
#include "lgm/laurent.hpp"
#include "lgm/newton.hpp"
#include "lgm/ratfun.hpp"
#include "lgm/rational.hpp"
#include "oracles.hpp"

using namespace lgm;

namespace {

LaurentPolynomial random_poly(std::mt19937& rng, const VarsPtr& vars,
                              int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<unsigned long> den(1, 4);
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

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rational("4/6") == Rational(2, 3));
  CHECK(Rational("-10/4").str() == "-5/2");
  CHECK(Rational(3, 4) + Rational(1, 4) == Rational(1));
  CHECK((Rational(2, 3) * Rational(9, 4)).str() == "3/2");
  CHECK(Rational(1, 3).inverse() == Rational(3));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK(Rational(2).pow(-2) == Rational(1, 4));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(7, 7).is_one());
  CHECK(Rational(-3, 2).sgn() == -1);
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational::factorial(10) == Rational(3628800));
  CHECK(Rational::binomial(10, 4) == Rational(210));
  CHECK(Rational::binomial(52, 26).str() == "495918532948104");
  CHECK_THROWS_AS(Rational(1) / Rational(0), invariant_error);
}

TEST_CASE("variable sets") {
  VarsPtr v = make_vars({"b", "a", "c"});
  CHECK(v->names() == std::vector<std::string>{"b", "a", "c"});
  VarsPtr m = merge_vars(make_vars({"x", "a"}), make_vars({"b", "x"}));
  CHECK(m->names() == std::vector<std::string>{"a", "b", "x"});
}

TEST_CASE("laurent ring axioms on random polynomials") {
  VarsPtr vars = make_vars({"x", "y", "z"});
  std::mt19937 rng(20240811);
  LaurentPolynomial zero = LaurentPolynomial::zero(vars);
  LaurentPolynomial one = LaurentPolynomial::constant(vars, Rational(1));
  for (int trial = 0; trial < 25; ++trial) {
    LaurentPolynomial p = random_poly(rng, vars, 6);
    LaurentPolynomial q = random_poly(rng, vars, 6);
    LaurentPolynomial r = random_poly(rng, vars, 4);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + zero == p);
    CHECK(p * one == p);
    CHECK(p - p == zero);
    CHECK(p.pow(3) == p * p * p);
    CHECK(-(-p) == p);
    CHECK(p.scaled(Rational(-7, 2)) + p.scaled(Rational(7, 2)) == zero);
  }
}

TEST_CASE("monomial helpers") {
  VarsPtr vars = make_vars({"x", "y"});
  LaurentPolynomial f = parse_laurent("x + 2*y^-1", vars);
  CHECK(f.mul_monomial({-1, 2}, Rational(3)) ==
        parse_laurent("3*y^2 + 6*x^-1*y", vars));
  CHECK(f.min_exps() == Exps{0, -1});
  CHECK(f.term_count() == 2);
  CHECK(*f.coeff_of({0, -1}) == Rational(2));
  CHECK(f.coeff_of({1, 1}) == nullptr);
  CHECK(parse_laurent("5", vars).is_constant());
  CHECK(parse_laurent("x*y^-2", vars).is_monomial());
  CHECK(parse_laurent("3", vars).constant_coefficient() == Rational(3));
}

TEST_CASE("text round trip") {
  VarsPtr vars = make_vars({"x", "y", "z"});
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPolynomial p = random_poly(rng, vars, 8);
    CHECK(parse_laurent(to_text(p), vars) == p);
  }
  LaurentPolynomial fixed = parse_laurent("x^2*y^-1 - 1/2*z + 3");
  CHECK(to_text(fixed) == "x^2*y^-1 - 1/2*z + 3");
  CHECK(to_text(LaurentPolynomial::zero(vars)) == "0");
  // inferred variables are the names that occur, sorted
  LaurentPolynomial inferred = parse_laurent("b*a + c^-1");
  CHECK(inferred.vars()->names() == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(parse_laurent("w + 1", vars), input_error);
  CHECK_THROWS_AS(parse_laurent("x +* y"), input_error);
}

TEST_CASE("json round trip") {
  LaurentPolynomial p = parse_laurent("2*x^3*y^-2 - 7/3 + y");
  CHECK(laurent_from_json(laurent_to_json(p)) == p);
}

TEST_CASE("exact quotient") {
  VarsPtr vars = make_vars({"x", "y"});
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    LaurentPolynomial p = random_poly(rng, vars, 5);
    LaurentPolynomial q = random_poly(rng, vars, 5);
    if (q.is_zero()) continue;
    auto back = exact_quotient(p * q, q);
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
  // dividing by a monomial always works in the Laurent ring
  auto shifted = exact_quotient(parse_laurent("x + y", vars),
                                parse_laurent("x", vars));
  REQUIRE(shifted.has_value());
  CHECK(*shifted == parse_laurent("1 + x^-1*y", vars));
  CHECK_FALSE(exact_quotient(parse_laurent("x^2 + 1", vars),
                             parse_laurent("x + 1", vars))
                  .has_value());
  CHECK_THROWS_AS(exact_quotient(parse_laurent("x", vars),
                              LaurentPolynomial::zero(vars)),
                  invariant_error);
}

TEST_CASE("rational functions") {
  VarsPtr vars = make_vars({"u", "v"});
  RationalFunction u = RationalFunction::variable(vars, "u");
  RationalFunction v = RationalFunction::variable(vars, "v");
  RationalFunction one = RationalFunction::constant(vars, Rational(1));
  RationalFunction r = (u + v) / (u - v);
  CHECK(r * (u - v) == u + v);
  CHECK(r.inverse() * r == one);
  CHECK((u / v + v / u) == (u * u + v * v) / (u * v));
  CHECK((u - u).equals_constant(Rational(0)));
  CHECK(r.depends_on("v"));
  CHECK_FALSE((u / u).depends_on("u"));
  CHECK(u.pow(-2) == one / (u * u));
  CHECK_FALSE(r.to_laurent().has_value());
  CHECK_THROWS_AS(r.expect_laurent("test"), invariant_error);
  CHECK((u * v + v) / v == u + one);

  Substitution s;
  s.target = make_vars({"v", "w"});
  s.map.emplace("u", RationalFunction::variable(s.target, "w").pow(2));
  CHECK(r.substituted(s) ==
        (RationalFunction::variable(s.target, "w").pow(2) +
         RationalFunction::variable(s.target, "v")) /
            (RationalFunction::variable(s.target, "w").pow(2) -
             RationalFunction::variable(s.target, "v")));
}

TEST_CASE("newton polytope vertices") {
  LaurentPolynomial f =
      parse_laurent("x + x^-1*y + 1/2*x^-1*z + z^-1 + y^-1 + 4");
  Polytope p = newton_polytope(f);
  CHECK(p.size() == 5);  // the constant term is interior
  for (const Exps& v : p) CHECK(*f.coeff_of(v) != Rational(0));
  CHECK_THROWS_AS(newton_polytope(LaurentPolynomial::zero(make_vars({"x"}))),
                  input_error);
  // collinear middle points are not vertices
  LaurentPolynomial seg = parse_laurent("x^2 + x + 1 + x^-2");
  CHECK(newton_polytope(seg).size() == 2);
}

TEST_CASE("hull membership matches the Caratheodory oracle") {
  std::mt19937 rng(987);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<int> npts(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Exps> pts(npts(rng), Exps(3));
    for (Exps& p : pts)
      for (int& x : p) x = coord(rng);
    Exps target(3);
    for (int& x : target) x = coord(rng);
    CHECK(point_in_hull(target, pts) == oracles::in_hull_oracle(target, pts));
  }
}

TEST_CASE("origin interiorness") {
  CHECK(origin_in_interior({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(origin_in_interior({{1}, {-1}}));
  // origin on the boundary (a vertex)
  CHECK_FALSE(origin_in_interior({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  // not full-dimensional
  CHECK_FALSE(origin_in_interior({{1, 0}, {-1, 0}}));
  CHECK_FALSE(origin_in_interior({{2, 3}, {4, 5}, {3, 4}}));
}
