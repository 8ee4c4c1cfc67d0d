#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "lgm/corpus.hpp"
#include "lgm/errors.hpp"
#include "lgm/io.hpp"
#include "lgm/newton.hpp"

using namespace lgm;

TEST_CASE("every example regenerates its stored mirror") {
  const std::vector<ExampleRecord>& all = corpus();
  CHECK(all.size() == 18);
  for (const ExampleRecord& r : all) {
    INFO(r.id);
    LaurentPolynomial fresh = regenerate(r);
    CHECK(fresh.with_vars(r.mirror.vars()) == r.mirror);
  }
}

TEST_CASE("corpus is sorted and searchable") {
  const auto& all = corpus();
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(all[i - 1].id < all[i].id);
  CHECK(find_example("quadric-threefold").spec.size == 2);
  CHECK_THROWS_AS(find_example("nonsense"), input_error);
}

TEST_CASE("stored mirrors round-trip through text") {
  for (const ExampleRecord& r : corpus()) {
    INFO(r.id);
    CHECK(parse_laurent(to_text(r.mirror), r.mirror.vars()) == r.mirror);
  }
}

TEST_CASE("origin sits strictly inside every Newton polytope") {
  for (const ExampleRecord& r : corpus()) {
    INFO(r.id);
    CHECK(origin_in_interior(newton_polytope(r.mirror)));
  }
}

TEST_CASE("mirror dimension is 2k minus the number of hypersurfaces") {
  for (const ExampleRecord& r : corpus()) {
    INFO(r.id);
    std::size_t expect = 2 * r.spec.size - r.spec.degrees.size();
    CHECK(r.mirror.vars()->size() == expect);
  }
}

TEST_CASE("records serialize with their route details") {
  nlohmann::json j = example_to_json(find_example("chart-x14-fourfold"));
  CHECK(j["route"] == "appendix");
  CHECK(j.contains("partition"));
  CHECK(j["partition"]["sm"] == nlohmann::json::array({1, 12, 2, 3}));
  CHECK(j["variables"].size() == 4);

  nlohmann::json q = example_to_json(find_example("quadric-threefold"));
  CHECK(q["route"] == "main");
  CHECK_FALSE(q.contains("partition"));
  CHECK(q["spec"]["ambient"] == "grassmannian");
  CHECK(q["spec"]["degrees"] == nlohmann::json::array({1}));
  CHECK(q["terms"] == 5);
}
