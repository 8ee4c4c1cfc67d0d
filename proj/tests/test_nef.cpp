#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "lgm/errors.hpp"
#include "lgm/io.hpp"
#include "lgm/nef.hpp"
#include "lgm/quiver.hpp"
#include "lgm/transform.hpp"

using namespace lgm;
using RF = RationalFunction;

namespace {
LaurentPolynomial var(const VarsPtr& v, const std::string& n) {
  return LaurentPolynomial::variable(v, n);
}
}  // namespace

TEST_CASE("weight matrix displays") {
  WeightMatrix m2 = build_weight_matrix(2);
  CHECK(m2.rows == std::vector<std::vector<int>>{{1, 0, 0, 1, 1, 1},
                                                 {1, 1, 1, 0, 0, 1}});
  WeightMatrix m4 = build_weight_matrix(4);
  CHECK(m4.rows == std::vector<std::vector<int>>{
                       {1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
                       {1, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1},
                       {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1, 1},
                       {1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1}});
  for (int k = 2; k <= 7; ++k) {
    WeightMatrix m = build_weight_matrix(k);  // self-validating
    for (const auto& row : m.rows)
      CHECK(std::accumulate(row.begin(), row.end(), 0) == k + 2);
  }
  CHECK_THROWS_AS(build_weight_matrix(1), input_error);
}

TEST_CASE("column lookups") {
  CHECK(column_variable(2, 1) == "x_1_1");
  CHECK(column_variable(2, 2) == "x_1_2");
  CHECK(column_variable(2, 5) == "x_2_2");
  CHECK(column_variable(2, 6) == "x_2_3");
  CHECK_THROWS_AS(column_variable(2, 3), input_error);  // middle block
  CHECK_THROWS_AS(column_variable(2, 7), input_error);
  CHECK_THROWS_AS(column_variable(2, 0), input_error);

  // middle column k+c carries M_{k+1-c}; M_2 = 1/(x_1_1 x_1_2 x_2_3)
  LaurentPolynomial m2 = column_term(2, 3);
  VarsPtr v = m2.vars();
  CHECK(RF::of(m2) ==
        RF::constant(v, Rational(1)) /
            (RF::variable(v, "x_1_1") * RF::variable(v, "x_1_2") *
             RF::variable(v, "x_2_3")));
  CHECK(to_text(column_term(2, 5)) == "x_2_2");
}

TEST_CASE("x-change fixture for k=2") {
  XChange xc = appendix_x_change(2);
  const VarsPtr& v = xc.vars;
  LaurentPolynomial expect =
      var(v, "x_1_1") + var(v, "x_1_2") + var(v, "x_2_2") + var(v, "x_2_3") +
      RF::of(LaurentPolynomial::constant(v, Rational(1)),
             var(v, "x_1_1") * var(v, "x_1_2") * var(v, "x_2_3"))
          .expect_laurent("m2") +
      RF::of(LaurentPolynomial::constant(v, Rational(1)),
             var(v, "x_1_1") * var(v, "x_2_2") * var(v, "x_2_3"))
          .expect_laurent("m1");
  CHECK(xc.superpotential == expect);
  REQUIRE(xc.f.size() == 3);
  CHECK(xc.f[0] == var(v, "x_1_1"));
  CHECK(xc.f[1] == var(v, "x_1_2") + var(v, "x_2_2"));
  CHECK(xc.f[2] == var(v, "x_2_3"));
}

TEST_CASE("x-change pulls back to the original superpotential") {
  for (int k : {2, 3, 4}) {
    XChange x = appendix_x_change(k);
    Triplet orig = build_initial_triplet(k, TripletKind::Original);
    auto a = [&](int i, int j) {
      return RF::variable(orig.vars, grid_var_name(i, j));
    };
    Substitution to_a;
    to_a.target = orig.vars;
    to_a.map.emplace("x_1_1", a(1, 1));
    for (int j = 2; j <= k; ++j) {
      to_a.map.emplace("x_1_" + std::to_string(j), a(j, 1) / a(j - 1, 1));
      to_a.map.emplace("x_2_" + std::to_string(j), a(j, 2) / a(j - 1, 2));
    }
    to_a.map.emplace("x_2_" + std::to_string(k + 1), a(k, 2).inverse());
    CHECK(RF::of(x.superpotential).substituted(to_a) == superpotential(orig));
  }
}

TEST_CASE("default partitions") {
  NefPartition p = default_partition(2, {3});
  CHECK(p.E == std::vector<int>{3, 4});
  CHECK(p.Em == std::vector<std::vector<int>>{{1, 2, 5, 6}});
  CHECK(p.sm == std::vector<int>{1});

  NefPartition q = default_partition(4, {1, 1, 1, 1});
  CHECK(q.E == std::vector<int>{5, 6, 7, 8});
  CHECK(q.Em == std::vector<std::vector<int>>{{1}, {2, 9}, {3, 10}, {4, 11}});
  CHECK(q.sm == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("quadric-cubic chart via the default partition") {
  LaurentPolynomial a1 = run_appendix(2, {3});
  VarsPtr v = a1.vars();
  CHECK(v->names() == std::vector<std::string>{"y_1_2", "y_2_2", "y_2_3"});
  LaurentPolynomial one = LaurentPolynomial::constant(v, Rational(1));
  LaurentPolynomial Y =
      one + var(v, "y_1_2") + var(v, "y_2_2") + var(v, "y_2_3");
  LaurentPolynomial num = (var(v, "y_1_2") + var(v, "y_2_2")) * Y.pow(3);
  Exps e(v->size(), -1);
  CHECK(a1 == num.mul_monomial(e, Rational(1)));
}

TEST_CASE("fourfold chart via an explicit partition") {
  NefPartition p;
  p.E = {5, 6, 7, 8};
  p.Em = {{1}, {12}, {2, 9}, {3, 10}};
  p.sm = {1, 12, 2, 3};
  LaurentPolynomial a2 = run_appendix(4, {1, 1, 1, 1}, p);
  VarsPtr v = a2.vars();
  CHECK(v->names() ==
        std::vector<std::string>{"x_1_4", "x_2_4", "y_2_2", "y_2_3"});
  CHECK(v->size() == 2 * 4 - 4);
  LaurentPolynomial one = LaurentPolynomial::constant(v, Rational(1));
  LaurentPolynomial c22 = one + var(v, "y_2_2");
  LaurentPolynomial c23 = one + var(v, "y_2_3");
  RF expect =
      RF::of(var(v, "x_1_4")) + RF::of(var(v, "x_2_4")) +
      RF::of(c22 * c23 *
                 (one + var(v, "y_2_2") + var(v, "y_2_2") * var(v, "y_2_3")),
             var(v, "y_2_2") * var(v, "y_2_3") * var(v, "x_2_4")) +
      RF::of(c22 * c23, var(v, "x_1_4"));
  CHECK(RF::of(a2) == expect);
}

TEST_CASE("mirror variable counts") {
  CHECK(run_appendix(3, {1, 1}).vars()->size() == 4);
  CHECK(run_appendix(3, {2, 1}).vars()->size() == 4);
  CHECK(run_appendix(4, {2, 2, 1}).vars()->size() == 5);
}

TEST_CASE("partition validation") {
  auto run = [](NefPartition p, std::vector<int> deg) {
    run_appendix(2, deg, p);
  };
  NefPartition mid;  // middle column inside a nef part
  mid.E = {3, 4};
  mid.Em = {{1, 2, 3, 6}};
  mid.sm = {1};
  CHECK_THROWS_AS(run(mid, {3}), input_error);

  NefPartition overlap;
  overlap.E = {3, 4};
  overlap.Em = {{1, 2}, {2, 5, 6}};
  overlap.sm = {1, 2};
  CHECK_THROWS_AS(run(overlap, {2, 1}), input_error);

  NefPartition count;  // one part for two degrees
  count.E = {3, 4};
  count.Em = {{1, 2, 5, 6}};
  count.sm = {1};
  CHECK_THROWS_AS(run(count, {2, 1}), input_error);

  NefPartition range;
  range.E = {3, 4};
  range.Em = {{1, 2, 5, 7}};
  range.sm = {1};
  CHECK_THROWS_AS(run(range, {3}), input_error);

  NefPartition short_part;  // columns sum below the stated degree
  short_part.E = {3, 4};
  short_part.Em = {{1, 2, 5}};
  short_part.sm = {1};
  CHECK_THROWS_AS(run(short_part, {3}), input_error);

  CHECK_THROWS_AS(run_appendix(2, {2, 2}), input_error);
  CHECK_THROWS_AS(run_appendix(1, {1}), input_error);
}

TEST_CASE("birational chain from the chart to the main-theorem mirror") {
  LaurentPolynomial a1 = run_appendix(2, {3});
  VarsPtr v = a1.vars();
  Substitution phi1;
  phi1.target = v;
  phi1.map.emplace(
      "y_2_3", RF::of((var(v, "y_1_2") + var(v, "y_2_2")) * var(v, "y_2_3")));
  LaurentPolynomial g = apply_birational_map(a1, phi1);

  VarsPtr av = make_vars({"a_1_1", "a_1_2", "a_2_1"});
  Substitution relabel;
  relabel.target = av;
  relabel.map.emplace("y_1_2", RF::variable(av, "a_2_1"));
  relabel.map.emplace("y_2_2", RF::of(var(av, "a_2_1") * var(av, "a_2_1"),
                                      var(av, "a_1_1")));
  relabel.map.emplace("y_2_3", RF::variable(av, "a_1_2"));
  LaurentPolynomial g2 = apply_birational_map(g, relabel);

  Substitution phi2;
  phi2.target = av;
  LaurentPolynomial den = var(av, "a_1_1") + var(av, "a_2_1");
  for (const char* n : {"a_1_1", "a_1_2", "a_2_1"})
    phi2.map.emplace(n, RF::of(var(av, n) * var(av, "a_1_1"), den));
  LaurentPolynomial h = apply_birational_map(g2, phi2);

  LaurentPolynomial ex23 = run_main_theorem(2, {3}).result;
  CHECK(h.with_vars(ex23.vars()) == ex23);
}

TEST_CASE("apply_birational_map certifies the image") {
  VarsPtr v = make_vars({"x"});
  LaurentPolynomial f = var(v, "x") + LaurentPolynomial::variable(v, "x", -1);
  Substitution id;
  id.target = v;
  CHECK(apply_birational_map(f, id) == f);

  Substitution shift;  // x -> x+1 sends 1/x outside the Laurent ring
  shift.target = v;
  shift.map.emplace(
      "x", RF::of(var(v, "x") + LaurentPolynomial::constant(v, Rational(1))));
  CHECK_THROWS_AS(apply_birational_map(f, shift), verify_error);
}
