#include "bellgram/report.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "bellgram/errors.hpp"
#include "json_util.hpp"

namespace bellgram {

namespace {

constexpr std::array<std::string_view, 4> kCellNames = {"n11", "n12", "n21", "n22"};
constexpr std::array<std::string_view, 4> kProbNames = {"p11", "p12", "p21", "p22"};
constexpr std::array<std::string_view, 4> kExpectationKeys = {"ab", "abp", "apb", "apbp"};

std::string mode_string(const Mode& mode) {
  if (mode.kind == Mode::Kind::phrase) return "phrase";
  return "collocate (window " + std::to_string(mode.window) + ")";
}

std::array<std::string, 4> cell_labels(const ChshDesign* design, std::size_t m) {
  if (!design) {
    return {std::string(kCellNames[0]), std::string(kCellNames[1]), std::string(kCellNames[2]),
            std::string(kCellNames[3])};
  }
  const MeasurementSetting& first = *design->first_concept()[m / 2];
  const MeasurementSetting& second = *design->second_concept()[m % 2];
  return {first.exemplar_plus + " " + second.exemplar_plus,
          first.exemplar_plus + " " + second.exemplar_minus,
          first.exemplar_minus + " " + second.exemplar_plus,
          first.exemplar_minus + " " + second.exemplar_minus};
}

std::string value_pair(const Rational& value) {
  return fraction_string(value) + " (" + decimal_string(value) + ")";
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void csv_row(std::ostringstream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << '\n';
}

std::uint64_t cell_from_json(const nlohmann::json& j, const std::string& what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  throw FormatError(what + " must be a non-negative integer");
}

CoincidenceCounts counts_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_object()) throw FormatError(what + " must be a {n11, n12, n21, n22} object");
  CoincidenceCounts c;
  std::array<std::uint64_t*, 4> slots = {&c.n11, &c.n12, &c.n21, &c.n22};
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string key(kCellNames[i]);
    if (!j.contains(key)) throw FormatError(what + " is missing \"" + key + "\"");
    *slots[i] = cell_from_json(j[key], what + "." + key);
  }
  return c;
}

}  // namespace

std::string render_table(const ChshReport& report, const ReportContext& context) {
  const ChshDesign* design = context.design ? &*context.design : nullptr;

  std::array<std::array<std::string, 4>, 4> labels;
  std::size_t label_width = 0;
  std::size_t count_width = 1;
  for (std::size_t m = 0; m < 4; ++m) {
    labels[m] = cell_labels(design, m);
    for (std::size_t cell = 0; cell < 4; ++cell) {
      label_width = std::max(label_width, labels[m][cell].size());
      count_width = std::max(count_width, std::to_string(report.measurements[m].counts.cells()[cell]).size());
    }
  }

  std::ostringstream out;
  out << "dataset: " << context.dataset << "\n";
  out << "mode: " << mode_string(context.mode) << "\n";
  if (design) out << "design: " << design->name << "\n";

  for (std::size_t m = 0; m < 4; ++m) {
    const MeasurementResult& result = report.measurements[m];
    out << "\n" << kMeasurementNames[m];
    if (design) {
      const MeasurementSetting& first = *design->first_concept()[m / 2];
      const MeasurementSetting& second = *design->second_concept()[m % 2];
      out << "  [" << first.concept_label << " x " << second.concept_label << "]";
    }
    out << "\n";
    for (std::size_t cell = 0; cell < 4; ++cell) {
      out << "  " << std::left << std::setw(static_cast<int>(label_width)) << labels[m][cell] << "  "
          << std::right << std::setw(static_cast<int>(count_width)) << result.counts.cells()[cell] << "  "
          << value_pair(*result.probabilities.cells()[cell]) << "\n";
    }
    out << "  E = " << value_pair(result.expectation) << "\n";
  }

  out << "\ns = " << value_pair(report.s) << "\n";
  out << "classification: " << to_string(report.classification) << "\n";
  return out.str();
}

std::string render_json(const ChshReport& report, const ReportContext& context) {
  nlohmann::ordered_json j;
  j["dataset"] = context.dataset;
  j["mode"] = jsonutil::mode_to_json(context.mode);
  if (context.design) j["design"] = jsonutil::design_to_json(*context.design);

  j["tables"] = nlohmann::ordered_json::array();
  for (std::size_t m = 0; m < 4; ++m) {
    const MeasurementResult& result = report.measurements[m];
    nlohmann::ordered_json entry;
    entry["setting_pair"] = std::string(kMeasurementNames[m]);
    nlohmann::ordered_json counts;
    for (std::size_t cell = 0; cell < 4; ++cell) {
      counts[std::string(kCellNames[cell])] = result.counts.cells()[cell];
    }
    entry["counts"] = std::move(counts);
    nlohmann::ordered_json probs;
    for (std::size_t cell = 0; cell < 4; ++cell) {
      probs[std::string(kProbNames[cell])] = jsonutil::fraction_to_json(*result.probabilities.cells()[cell]);
    }
    entry["probabilities"] = std::move(probs);
    j["tables"].push_back(std::move(entry));
  }

  nlohmann::ordered_json expectations;
  for (std::size_t m = 0; m < 4; ++m) {
    expectations[std::string(kExpectationKeys[m])] = jsonutil::fraction_to_json(report.measurements[m].expectation);
  }
  j["expectations"] = std::move(expectations);

  nlohmann::ordered_json s = jsonutil::fraction_to_json(report.s);
  s["decimal"] = decimal_string(report.s);
  j["s"] = std::move(s);
  j["classification"] = to_string(report.classification);
  return j.dump(2) + "\n";
}

std::string render_csv(const ChshReport& report, const ReportContext& context) {
  const ChshDesign* design = context.design ? &*context.design : nullptr;
  std::ostringstream out;
  csv_row(out, {"dataset", "setting_pair", "cell", "label", "count", "p_num", "p_den", "p_decimal", "e_num",
                "e_den", "e_decimal", "s_num", "s_den", "s_decimal", "classification"});
  const std::string s_num = numerator(report.s).str();
  const std::string s_den = denominator(report.s).str();
  const std::string s_dec = decimal_string(report.s);
  const std::string cls = to_string(report.classification);
  for (std::size_t m = 0; m < 4; ++m) {
    const MeasurementResult& result = report.measurements[m];
    const std::array<std::string, 4> labels = cell_labels(design, m);
    const std::string e_num = numerator(result.expectation).str();
    const std::string e_den = denominator(result.expectation).str();
    const std::string e_dec = decimal_string(result.expectation);
    for (std::size_t cell = 0; cell < 4; ++cell) {
      const Rational& p = *result.probabilities.cells()[cell];
      csv_row(out, {context.dataset, std::string(kMeasurementNames[m]), std::string(kCellNames[cell]),
                    labels[cell], std::to_string(result.counts.cells()[cell]), numerator(p).str(),
                    denominator(p).str(), decimal_string(p), e_num, e_den, e_dec, s_num, s_den, s_dec, cls});
    }
  }
  return out.str();
}

ParsedReport report_from_json(std::string_view text) {
  const nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw FormatError("report is not a JSON object");

  ParsedReport out;
  if (!j.contains("dataset") || !j["dataset"].is_string()) {
    throw FormatError("report is missing a string \"dataset\"");
  }
  out.context.dataset = j["dataset"].get<std::string>();
  if (!j.contains("mode")) throw FormatError("report is missing \"mode\"");
  try {
    out.context.mode = jsonutil::mode_from_json(j["mode"]);
    if (j.contains("design")) {
      out.context.design = jsonutil::design_from_json(j["design"], out.context.dataset);
    }
  } catch (const DesignError& e) {
    throw FormatError(e.what());
  }

  if (!j.contains("tables") || !j["tables"].is_array() || j["tables"].size() != 4) {
    throw FormatError("report must carry exactly 4 tables");
  }
  std::array<CoincidenceCounts, 4> counts;
  for (std::size_t m = 0; m < 4; ++m) {
    const nlohmann::json& entry = j["tables"][m];
    const std::string what = "tables[" + std::to_string(m) + "]";
    if (!entry.is_object() || !entry.contains("setting_pair") || !entry.contains("counts")) {
      throw FormatError(what + " must be a {setting_pair, counts, probabilities} object");
    }
    if (!entry["setting_pair"].is_string() ||
        entry["setting_pair"].get<std::string>() != kMeasurementNames[m]) {
      throw FormatError(what + " is out of order; expected setting_pair \"" +
                        std::string(kMeasurementNames[m]) + "\"");
    }
    counts[m] = counts_from_json(entry["counts"], what + ".counts");
  }

  ChshReport recomputed;
  try {
    recomputed = run_design(counts[0], counts[1], counts[2], counts[3]);
  } catch (const Error& e) {
    throw FormatError(std::string("report tables cannot be evaluated: ") + e.what());
  }

  if (!j.contains("s")) throw FormatError("report is missing \"s\"");
  const Rational stored = jsonutil::fraction_from_json(j["s"], "s");
  if (stored != recomputed.s) {
    throw FormatError("stored s (" + fraction_string(stored) + ") does not match its count tables (" +
                      fraction_string(recomputed.s) + ")");
  }

  out.report = std::move(recomputed);
  return out;
}

std::string render_comparison_table(const ComparisonTable& table) {
  std::size_t name_width = std::string("dataset").size();
  std::size_t s_width = 1;
  for (const auto& d : table.datasets) {
    name_width = std::max(name_width, d.name.size());
    s_width = std::max(s_width, decimal_string(d.s).size());
  }

  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(name_width)) << "dataset" << "  " << std::setw(static_cast<int>(s_width))
      << "s" << "  classification\n";
  for (const auto& d : table.datasets) {
    out << std::left << std::setw(static_cast<int>(name_width)) << d.name << "  "
        << std::right << std::setw(static_cast<int>(s_width)) << decimal_string(d.s) << "  "
        << to_string(d.classification) << "\n";
  }

  std::size_t pair_width = 0;
  std::size_t label_width = std::string("outcome").size();
  for (const auto& row : table.rows) {
    pair_width = std::max(pair_width, row.setting_pair.size());
    label_width = std::max(label_width, row.label.size());
  }
  std::vector<std::size_t> col_widths;
  for (const auto& d : table.datasets) col_widths.push_back(std::max<std::size_t>(d.name.size(), 4));

  out << "\n" << std::left << std::setw(static_cast<int>(pair_width)) << "pair" << "  "
      << std::setw(static_cast<int>(label_width)) << "outcome";
  for (std::size_t i = 0; i < table.datasets.size(); ++i) {
    out << "  " << std::right << std::setw(static_cast<int>(col_widths[i])) << table.datasets[i].name;
  }
  out << "\n";
  for (const auto& row : table.rows) {
    out << std::left << std::setw(static_cast<int>(pair_width)) << row.setting_pair << "  "
        << std::setw(static_cast<int>(label_width)) << row.label;
    for (std::size_t i = 0; i < row.probabilities.size(); ++i) {
      out << "  " << std::right << std::setw(static_cast<int>(col_widths[i]))
          << decimal_string(row.probabilities[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::string render_comparison_json(const ComparisonTable& table) {
  nlohmann::ordered_json j;
  j["datasets"] = nlohmann::ordered_json::array();
  for (const auto& d : table.datasets) {
    nlohmann::ordered_json entry;
    entry["name"] = d.name;
    nlohmann::ordered_json s = jsonutil::fraction_to_json(d.s);
    s["decimal"] = decimal_string(d.s);
    entry["s"] = std::move(s);
    entry["classification"] = to_string(d.classification);
    j["datasets"].push_back(std::move(entry));
  }
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json entry;
    entry["setting_pair"] = row.setting_pair;
    entry["cell"] = std::string(kCellNames[row.cell]);
    entry["label"] = row.label;
    entry["probabilities"] = nlohmann::ordered_json::array();
    for (const Rational& p : row.probabilities) {
      entry["probabilities"].push_back(jsonutil::fraction_to_json(p));
    }
    j["rows"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

std::string render_comparison_csv(const ComparisonTable& table) {
  std::ostringstream out;
  csv_row(out, {"dataset", "setting_pair", "cell", "label", "p_num", "p_den", "p_decimal", "s_num", "s_den",
                "s_decimal", "classification"});
  for (std::size_t i = 0; i < table.datasets.size(); ++i) {
    const auto& d = table.datasets[i];
    const std::string s_num = numerator(d.s).str();
    const std::string s_den = denominator(d.s).str();
    const std::string s_dec = decimal_string(d.s);
    const std::string cls = to_string(d.classification);
    for (const auto& row : table.rows) {
      const Rational& p = row.probabilities[i];
      csv_row(out, {d.name, row.setting_pair, std::string(kCellNames[row.cell]), row.label,
                    numerator(p).str(), denominator(p).str(), decimal_string(p), s_num, s_den, s_dec, cls});
    }
  }
  return out.str();
}

}  // namespace bellgram
