#pragma once

// Internal JSON (de)serialization helpers shared by the design loader
// and the report module. Not installed.

#include <string>

#include <json.hpp>

#include "bellgram/designs.hpp"
#include "bellgram/rational.hpp"
#include "bellgram/search.hpp"

namespace bellgram::jsonutil {

// Integers render as JSON numbers while they fit in int64, as decimal
// digit strings beyond that, so nothing is ever truncated.
nlohmann::ordered_json big_to_json(const BigInt& value);
BigInt big_from_json(const nlohmann::json& j, const std::string& what);

// {"num": ..., "den": ...}
nlohmann::ordered_json fraction_to_json(const Rational& value);
Rational fraction_from_json(const nlohmann::json& j, const std::string& what);

// "phrase" | {"collocate": w}
nlohmann::ordered_json mode_to_json(const Mode& mode);
Mode mode_from_json(const nlohmann::json& j);  // throws DesignError

// Design-file schema: {name, mode, a, a_prime, b, b_prime}.
nlohmann::ordered_json design_to_json(const ChshDesign& design);
ChshDesign design_from_json(const nlohmann::json& j, const std::string& fallback_name);

}  // namespace bellgram::jsonutil
