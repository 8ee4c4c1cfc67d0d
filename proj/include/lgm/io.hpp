#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "lgm/ratfun.hpp"

namespace lgm {

// Canonical text form: terms in canonical order joined by " + ", each term
// "c*v1^e1*v2^e2..." with coefficient "p/q" ("/q" dropped for integers, "1*"
// dropped, "-1*" rendered as "-"), exponent "^1" dropped. Zero prints "0".
std::string to_text(const LaurentPolynomial& p);
std::string to_text(const RationalFunction& r);  // "num" or "(num)/(den)"

// Parses the canonical text form (plus leading '-' and binary '-' between
// terms). With vars == nullptr the variable set is inferred: the names that
// occur, sorted.
LaurentPolynomial parse_laurent(std::string_view text, VarsPtr vars = nullptr);

nlohmann::json laurent_to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const nlohmann::json& j);
nlohmann::json ratfun_to_json(const RationalFunction& r);

}  // namespace lgm
