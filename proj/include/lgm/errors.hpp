#pragma once

#include <stdexcept>
#include <string>

namespace lgm {

// Bad user-supplied data: unknown variable in a parse, non-Fano degrees,
// malformed JSON, ... The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical check failed: a period comparison, a corpus mismatch, a
// strict triplet-condition violation. CLI exit code 1.
struct verify_error : std::runtime_error {
  explicit verify_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A supposedly-impossible state: a lemma that the dispatch chose is not
// applicable, a pullback that must be Laurent is not, ... CLI exit code 3.
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace lgm
