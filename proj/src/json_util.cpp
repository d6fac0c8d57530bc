#include "json_util.hpp"

#include <cstdint>
#include <limits>

#include "bellgram/errors.hpp"

namespace bellgram::jsonutil {

nlohmann::ordered_json big_to_json(const BigInt& value) {
  static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
  static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
  if (value >= kMin && value <= kMax) return static_cast<std::int64_t>(value);
  return value.str();
}

BigInt big_from_json(const nlohmann::json& j, const std::string& what) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw FormatError(what + " is not a decimal integer string");
    }
  }
  throw FormatError(what + " must be an integer or a digit string");
}

nlohmann::ordered_json fraction_to_json(const Rational& value) {
  nlohmann::ordered_json j;
  j["num"] = big_to_json(numerator(value));
  j["den"] = big_to_json(denominator(value));
  return j;
}

Rational fraction_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw FormatError(what + " must be a {num, den} object");
  }
  const BigInt num = big_from_json(j["num"], what + ".num");
  const BigInt den = big_from_json(j["den"], what + ".den");
  if (den == 0) throw FormatError(what + " has a zero denominator");
  return make_rational(num, den);
}

nlohmann::ordered_json mode_to_json(const Mode& mode) {
  if (mode.kind == Mode::Kind::phrase) return "phrase";
  return nlohmann::ordered_json{{"collocate", mode.window}};
}

Mode mode_from_json(const nlohmann::json& j) {
  if (j.is_string() && j.get<std::string>() == "phrase") return Mode::phrase();
  if (j.is_object() && j.contains("collocate") && j["collocate"].is_number_unsigned()) {
    const auto w = j["collocate"].get<std::uint64_t>();
    if (w >= 1 && w <= std::numeric_limits<std::uint32_t>::max()) {
      return Mode::collocate(static_cast<std::uint32_t>(w));
    }
  }
  throw DesignError("mode must be \"phrase\" or {\"collocate\": w} with w >= 1");
}

namespace {

nlohmann::ordered_json setting_to_json(const MeasurementSetting& s) {
  nlohmann::ordered_json j;
  j["label"] = s.concept_label;
  j["plus"] = s.exemplar_plus;
  j["minus"] = s.exemplar_minus;
  return j;
}

MeasurementSetting setting_from_json(const nlohmann::json& j, const char* which) {
  if (!j.is_object() || !j.contains("label") || !j.contains("plus") || !j.contains("minus") ||
      !j["label"].is_string() || !j["plus"].is_string() || !j["minus"].is_string()) {
    throw DesignError(std::string("setting ") + which + " must be {label, plus, minus} of strings");
  }
  return MeasurementSetting{j["label"].get<std::string>(), j["plus"].get<std::string>(),
                            j["minus"].get<std::string>()};
}

}  // namespace

nlohmann::ordered_json design_to_json(const ChshDesign& design) {
  nlohmann::ordered_json j;
  j["name"] = design.name;
  j["mode"] = mode_to_json(design.mode);
  j["a"] = setting_to_json(design.a);
  j["a_prime"] = setting_to_json(design.a_prime);
  j["b"] = setting_to_json(design.b);
  j["b_prime"] = setting_to_json(design.b_prime);
  return j;
}

ChshDesign design_from_json(const nlohmann::json& j, const std::string& fallback_name) {
  if (!j.is_object()) throw DesignError("design must be a JSON object");
  ChshDesign d;
  d.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : fallback_name;
  if (!j.contains("mode")) throw DesignError("design is missing \"mode\"");
  d.mode = mode_from_json(j["mode"]);
  for (const char* key : {"a", "a_prime", "b", "b_prime"}) {
    if (!j.contains(key)) throw DesignError(std::string("design is missing \"") + key + "\"");
  }
  d.a = setting_from_json(j["a"], "a");
  d.a_prime = setting_from_json(j["a_prime"], "a_prime");
  d.b = setting_from_json(j["b"], "b");
  d.b_prime = setting_from_json(j["b_prime"], "b_prime");
  validate_design(d);
  return d;
}

}  // namespace bellgram::jsonutil
