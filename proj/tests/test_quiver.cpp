#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgm/errors.hpp"
#include "lgm/io.hpp"
#include "lgm/quiver.hpp"

using namespace lgm;

TEST_CASE("quiver shape") {
  for (int k = 2; k <= 6; ++k) {
    Quiver q = build_quiver(k);
    CHECK(q.vertices.size() == std::size_t(2 * k + 2));
    CHECK(q.arrows.size() == std::size_t(3 * k));
    CHECK(q.has_arrow({{0, 1}, {1, 1}}));
    CHECK(q.has_arrow({{k, 2}, {k, 3}}));
    CHECK(q.has_arrow({{1, 1}, {1, 2}}));
    CHECK_FALSE(q.has_arrow({{1, 2}, {1, 1}}));
    int horizontal = 0;
    for (const Arrow& a : q.arrows) horizontal += a.horizontal();
    CHECK(horizontal == k + 1);  // k row arrows plus the sink
  }
  CHECK_THROWS_AS(build_quiver(1), input_error);
}

TEST_CASE("initial triplets") {
  Triplet aux = build_initial_triplet(2);
  CHECK(aux.kind == TripletKind::Auxiliary);
  CHECK(aux.vars->names() ==
        std::vector<std::string>{"a", "a_1_1", "a_1_2", "a_2_1"});
  CHECK(aux.label({2, 2}).equals_constant(Rational(1)));
  CHECK(aux.label({0, 1}) == aux.label({2, 3}));
  CHECK(to_text(superpotential(aux)) ==
        "a + a_1_1^-1*a_1_2 + a_1_1^-1*a_2_1 + a^-1*a_1_1 + a_2_1^-1 + "
        "a_1_2^-1");

  Triplet orig = build_initial_triplet(2, TripletKind::Original);
  CHECK(orig.vars->names() ==
        std::vector<std::string>{"a_1_1", "a_1_2", "a_2_1", "a_2_2"});
  CHECK(orig.label({0, 1}).equals_constant(Rational(1)));
  VarsPtr v = orig.vars;
  auto var = [&](const char* n) { return RationalFunction::variable(v, n); };
  RationalFunction expect = var("a_1_1") + var("a_1_2") / var("a_1_1") +
                            var("a_2_1") / var("a_1_1") +
                            var("a_2_2") / var("a_1_2") +
                            var("a_2_2") / var("a_2_1") +
                            var("a_2_2").inverse();
  CHECK(superpotential(orig) == expect);
}

TEST_CASE("auxiliary pulls back to original") {
  for (int k = 2; k <= 4; ++k) {
    Triplet aux = build_initial_triplet(k);
    Triplet orig = build_initial_triplet(k, TripletKind::Original);
    Substitution map = aux_to_original_map(k);
    CHECK(superpotential(aux).substituted(map) == superpotential(orig));
  }
}

TEST_CASE("grid names") {
  CHECK(grid_var_name(3, 1) == "a_3_1");
  CHECK(grid_var_name(1, 2) == "a_1_2");
}

TEST_CASE("block selection") {
  // all-horizontal placement when the degrees sum below k+1
  BlockPlan p = select_blocks(4, {1, 2, 1});
  CHECK(p.sorted_degrees == std::vector<int>{2, 1, 1});
  CHECK(p.permutation == std::vector<std::size_t>{1, 0, 2});
  REQUIRE(p.blocks.size() == 3);
  CHECK(p.blocks[0].kind == BlockKind::Horizontal);
  CHECK(p.blocks[0].size == 2);
  CHECK(p.blocks[0].start_row == 0);
  CHECK(p.blocks[0].arrows.size() == 3);  // row 0 has no second column
  CHECK(p.blocks[1].start_row == 2);
  CHECK(p.blocks[2].start_row == 3);

  // sum k+1 with a final degree 1: trailing vertical block
  BlockPlan pv = select_blocks(2, {1, 1, 1});
  REQUIRE(pv.blocks.size() == 3);
  CHECK(pv.blocks[2].kind == BlockKind::Vertical);
  CHECK(pv.blocks[2].arrows.size() == 2);
  for (const Arrow& a : pv.blocks[2].arrows) CHECK(a.horizontal());

  // sum k+1, single degree >=2: one mixed block of everything but the sink
  BlockPlan pm = select_blocks(2, {3});
  REQUIRE(pm.blocks.size() == 1);
  CHECK(pm.blocks[0].kind == BlockKind::Mixed);
  CHECK(pm.blocks[0].arrows.size() == 5);

  // sum k+1, several degrees, last >=2: horizontals then a mixed block
  BlockPlan pmm = select_blocks(3, {2, 2});
  REQUIRE(pmm.blocks.size() == 2);
  CHECK(pmm.blocks[0].kind == BlockKind::Horizontal);
  CHECK(pmm.blocks[1].kind == BlockKind::Mixed);

  CHECK(select_blocks(3, {}).blocks.empty());
  CHECK_THROWS_AS(select_blocks(2, {2, 2}), input_error);
  CHECK_THROWS_AS(select_blocks(2, {0}), input_error);
  CHECK_THROWS_AS(select_blocks(1, {1}), input_error);
}

TEST_CASE("block history validation") {
  BlockHistory h;
  h.M = {2};
  h.W = {1, 3};
  h.gamma = 4;
  CHECK(validate_block_history(h, 4).ok);
  CHECK_FALSE(validate_block_history(h, 3).ok);  // gamma outside [1, r]

  BlockHistory dup;
  dup.M = {1};
  dup.W = {1};
  dup.gamma = 2;
  CHECK_FALSE(validate_block_history(dup, 2).ok);

  BlockHistory unsorted;
  unsorted.W = {2, 1};
  unsorted.gamma = 1;
  CHECK_FALSE(validate_block_history(unsorted, 2).ok);

  BlockHistory empty;
  CHECK(validate_block_history(empty, 1).ok);
  CHECK_FALSE(validate_block_history(empty, 0).ok);
}

TEST_CASE("mwgamma weighting") {
  // fresh history: row 1 weighs 1, its second column is flattened
  BlockHistory none;
  WeightFunction w1 = build_mwgamma_weighting(none, 1, 2);
  CHECK(w1.at("a_1_1") == 1);
  CHECK(w1.weights.at("a_1_2") == 0);
  CHECK(w1.weights.count("a_2_1") == 0);
  CHECK(w1.at("a_2_1") == 0);  // outside the domain

  BlockHistory h2;
  h2.W = {1};
  h2.gamma = 2;
  WeightFunction w2 = build_mwgamma_weighting(h2, 2, 3);
  CHECK(w2.at("a_1_1") == 1);
  CHECK(w2.at("a_1_2") == -1);
  CHECK(w2.at("a_2_1") == 1);
  CHECK(w2.at("a_2_2") == 0);
  CHECK_THROWS_AS(build_mwgamma_weighting(h2, 1, 2), input_error);
  CHECK_THROWS_AS(build_mwgamma_weighting(h2, 3, 2), input_error);

  VarsPtr vars = make_vars({"a_1_1", "a_1_2", "a_2_1", "a_2_2"});
  CHECK(lambda_degree(w2, *vars, {1, 0, 0, 0}) == 1);
  CHECK(lambda_degree(w2, *vars, {1, 1, 0, 0}) == 0);
  CHECK(lambda_degree(w2, *vars, {2, -1, 3, 5}) == 6);
}
