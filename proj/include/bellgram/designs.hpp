#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bellgram/bell.hpp"
#include "bellgram/index.hpp"
#include "bellgram/search.hpp"

namespace bellgram {

// One measurement setting: a concept with two exemplars, the first
// valued +1 and the second -1.
struct MeasurementSetting {
  std::string concept_label;
  std::string exemplar_plus;
  std::string exemplar_minus;

  bool operator==(const MeasurementSetting&) const = default;
};

// A four-measurement coincidence design: two settings per concept,
// crossed into e(A,B), e(A,B'), e(A',B), e(A',B').
struct ChshDesign {
  std::string name;
  MeasurementSetting a, a_prime;  // first concept
  MeasurementSetting b, b_prime;  // second concept
  Mode mode;

  std::array<const MeasurementSetting*, 2> first_concept() const { return {&a, &a_prime}; }
  std::array<const MeasurementSetting*, 2> second_concept() const { return {&b, &b_prime}; }
};

// The Animal/Acts design: A = (horse, bear), A' = (tiger, cat) for
// Animal; B = (growls, whinnies), B' = (snorts, meows) for Acts.
ChshDesign animal_acts_design(const Mode& mode);

// Loads a design from a JSON file:
//   {"name": ..., "mode": "phrase" | {"collocate": w},
//    "a": {"label":..., "plus":..., "minus":...}, "a_prime": {...},
//    "b": {...}, "b_prime": {...}}
// Throws DesignError on anything malformed.
ChshDesign load_design_file(const std::filesystem::path& path);

// Validates exemplar distinctness and window range; throws DesignError.
void validate_design(const ChshDesign& design);

// Published count tables bundled as test and demo data.
struct FixtureDataset {
  std::string name;
  std::string description;
  ChshDesign design;
  CoincidenceCounts counts_ab, counts_abp, counts_apb, counts_apbp;
  Rational expected_s;
};

inline constexpr std::array<std::string_view, 5> kFixtureNames = {"google_books", "now", "coca",
                                                                  "psychology", "coca_collocates"};

// Throws FixtureError for an unknown name.
FixtureDataset load_fixture(std::string_view name);

ChshReport run_fixture(const FixtureDataset& fixture);

// Runs the design's four joint measurements against an index.
std::array<CoincidenceCounts, 4> measure_design(const PositionalIndex& index, const ChshDesign& design);

// Side-by-side view of several evaluated designs over the same
// exemplars: per-dataset s and classification, plus every joint-outcome
// probability across datasets.
struct ComparisonTable {
  struct Dataset {
    std::string name;
    Rational s;
    Classification classification = Classification::Classical;
  };
  struct Row {
    std::string setting_pair;           // e(A,B), ...
    std::string label;                  // e.g. "horse meows"
    std::size_t cell = 0;               // 0..3 within the table
    std::vector<Rational> probabilities;  // one per dataset, row-major with datasets
  };

  std::vector<Dataset> datasets;
  std::vector<Row> rows;  // 16 rows: 4 measurements x 4 cells
};

// Labels come from `design` (the exemplar terms) when one is given,
// otherwise from the cell names n11..n22. At least two reports are
// required.
ComparisonTable compare_datasets(const std::vector<std::string>& names, const std::vector<ChshReport>& reports,
                                 const ChshDesign* design = nullptr);

}  // namespace bellgram
