#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lgm/laurent.hpp"
#include "lgm/model_spec.hpp"
#include "lgm/nef.hpp"

namespace lgm {

// A worked example: the model, the construction route, and the expected
// mirror frozen as a fixture.
struct ExampleRecord {
  std::string id;
  std::string title;
  ModelSpec spec;
  // "main" runs the block pipeline, "appendix" the nef-partition chart,
  // "special" the alternative two-block elimination of quadric-surface-2.
  std::string route;
  std::optional<NefPartition> partition;  // appendix route only
  LaurentPolynomial mirror = LaurentPolynomial::zero(make_vars({}));
};

// All worked examples, sorted by id.
const std::vector<ExampleRecord>& corpus();

// Throws input_error when no record carries the id.
const ExampleRecord& find_example(const std::string& id);

// Reruns the record's construction from scratch; strict turns on the
// per-step certificates of the main route.
LaurentPolynomial regenerate(const ExampleRecord& r, bool strict = false);

nlohmann::json example_to_json(const ExampleRecord& r);

}  // namespace lgm
