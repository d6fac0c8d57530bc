#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bellgram/bell.hpp"
#include "bellgram/designs.hpp"
#include "bellgram/search.hpp"

namespace bellgram {

// A ChshReport plus the context needed to present it: where the counts
// came from, how pairs were matched, and (optionally) the design whose
// exemplar terms label the table cells.
struct ReportContext {
  std::string dataset;
  Mode mode;
  std::optional<ChshDesign> design;
};

// Human-readable rendering: four labelled count tables with exact and
// 2-decimal probabilities, the four expectation values, s and the
// classification. Deterministic byte-for-byte.
std::string render_table(const ChshReport& report, const ReportContext& context);

// JSON rendering:
//   {dataset, mode, design?, tables: [{setting_pair, counts,
//    probabilities}], expectations: {ab, abp, apb, apbp},
//    s: {num, den, decimal}, classification}
// Fractions are {num, den} objects; integers leave the int64 range as
// decimal digit strings. Two-space indentation, trailing newline.
std::string render_json(const ChshReport& report, const ReportContext& context);

// One CSV row per joint-measurement cell (16 rows), each carrying its
// measurement's expectation and the report-level s and classification.
std::string render_csv(const ChshReport& report, const ReportContext& context);

// Parses a JSON report, recomputes the analysis from the embedded
// count tables, and checks the recomputed s against the stored one.
// Throws FormatError on malformed input or on a mismatch.
struct ParsedReport {
  ReportContext context;
  ChshReport report;
};
ParsedReport report_from_json(std::string_view text);

// Comparison renderers, same three formats.
std::string render_comparison_table(const ComparisonTable& table);
std::string render_comparison_json(const ComparisonTable& table);
std::string render_comparison_csv(const ComparisonTable& table);

}  // namespace bellgram
