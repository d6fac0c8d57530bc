#include "bellgram/designs.hpp"

#include <fstream>
#include <utility>

#include <json.hpp>

#include "bellgram/errors.hpp"
#include "json_util.hpp"

namespace bellgram {

ChshDesign animal_acts_design(const Mode& mode) {
  ChshDesign d;
  d.name = "animal_acts";
  d.a = {"Animal", "horse", "bear"};
  d.a_prime = {"Animal", "tiger", "cat"};
  d.b = {"Acts", "growls", "whinnies"};
  d.b_prime = {"Acts", "snorts", "meows"};
  d.mode = mode;
  return d;
}

void validate_design(const ChshDesign& design) {
  auto check_setting = [](const MeasurementSetting& s, const char* which) {
    if (s.exemplar_plus.empty() || s.exemplar_minus.empty()) {
      throw DesignError(std::string("setting ") + which + " has an empty exemplar");
    }
    if (s.exemplar_plus == s.exemplar_minus) {
      throw DesignError(std::string("setting ") + which + " uses the same exemplar twice: \"" +
                        s.exemplar_plus + "\"");
    }
  };
  check_setting(design.a, "a");
  check_setting(design.a_prime, "a_prime");
  check_setting(design.b, "b");
  check_setting(design.b_prime, "b_prime");

  auto same_pair = [](const MeasurementSetting& x, const MeasurementSetting& y) {
    return x.exemplar_plus == y.exemplar_plus && x.exemplar_minus == y.exemplar_minus;
  };
  if (same_pair(design.a, design.a_prime)) throw DesignError("a and a_prime are the same setting");
  if (same_pair(design.b, design.b_prime)) throw DesignError("b and b_prime are the same setting");

  if (design.mode.kind == Mode::Kind::collocate &&
      (design.mode.window < 1 || design.mode.window > kDefaultCollocateWindow)) {
    throw DesignError("collocate window must be in 1.." + std::to_string(kDefaultCollocateWindow));
  }
}

ChshDesign load_design_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DesignError("cannot open design file: " + path.string());

  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw DesignError("design file is not a JSON object: " + path.string());
  }
  return jsonutil::design_from_json(j, path.stem().string());
}

FixtureDataset load_fixture(std::string_view name) {
  FixtureDataset f;
  f.name = std::string(name);

  if (name == "google_books") {
    f.description = "Google Books phrase searches";
    f.design = animal_acts_design(Mode::phrase());
    f.counts_ab = {0, 464, 247, 0};
    f.counts_abp = {202, 0, 0, 0};
    f.counts_apb = {97, 0, 41, 0};
    f.counts_apbp = {0, 0, 0, 331};
    f.expected_s = Rational(3) + make_rational(56, 138);
  } else if (name == "now") {
    f.description = "News on Web phrase searches";
    f.design = animal_acts_design(Mode::phrase());
    f.counts_ab = {0, 2, 6, 0};
    f.counts_abp = {1, 0, 1, 0};
    f.counts_apb = {4, 0, 0, 0};
    f.counts_apbp = {0, 0, 0, 19};
    f.expected_s = 3;
  } else if (name == "coca") {
    f.description = "COCA phrase searches";
    f.design = animal_acts_design(Mode::phrase());
    f.counts_ab = {0, 11, 0, 0};
    f.counts_abp = {6, 0, 0, 0};
    f.counts_apb = {2, 0, 1, 0};
    f.counts_apbp = {0, 0, 0, 19};
    f.expected_s = make_rational(10, 3);
  } else if (name == "psychology") {
    f.description = "questionnaire choices of 81 participants";
    f.design = animal_acts_design(Mode::phrase());
    f.counts_ab = {4, 51, 21, 5};
    f.counts_abp = {48, 2, 24, 7};
    f.counts_apb = {63, 7, 7, 4};
    f.counts_apbp = {12, 7, 8, 54};
    f.expected_s = make_rational(196, 81);
  } else if (name == "coca_collocates") {
    f.description = "COCA collocate searches, window 9";
    f.design = animal_acts_design(Mode::collocate(9));
    f.counts_ab = {0, 12, 3, 0};
    f.counts_abp = {12, 0, 0, 0};
    f.counts_apb = {4, 0, 6, 0};
    f.counts_apbp = {0, 0, 0, 37};
    f.expected_s = make_rational(14, 5);
  } else {
    throw FixtureError("unknown fixture \"" + std::string(name) + "\" (have: google_books, now, coca, "
                       "psychology, coca_collocates)");
  }
  return f;
}

ChshReport run_fixture(const FixtureDataset& fixture) {
  return run_design(fixture.counts_ab, fixture.counts_abp, fixture.counts_apb, fixture.counts_apbp);
}

std::array<CoincidenceCounts, 4> measure_design(const PositionalIndex& index, const ChshDesign& design) {
  validate_design(design);
  const auto pair_of = [](const MeasurementSetting& s) {
    return std::pair<std::string, std::string>{s.exemplar_plus, s.exemplar_minus};
  };
  return {
      coincidence_counts(index, pair_of(design.a), pair_of(design.b), design.mode),
      coincidence_counts(index, pair_of(design.a), pair_of(design.b_prime), design.mode),
      coincidence_counts(index, pair_of(design.a_prime), pair_of(design.b), design.mode),
      coincidence_counts(index, pair_of(design.a_prime), pair_of(design.b_prime), design.mode),
  };
}

ComparisonTable compare_datasets(const std::vector<std::string>& names, const std::vector<ChshReport>& reports,
                                 const ChshDesign* design) {
  if (reports.size() < 2) throw Error("comparison needs at least 2 reports");
  if (names.size() != reports.size()) throw Error("comparison needs one name per report");

  ComparisonTable table;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    table.datasets.push_back({names[i], reports[i].s, reports[i].classification});
  }

  static constexpr std::array<std::string_view, 4> kCellNames = {"n11", "n12", "n21", "n22"};
  for (std::size_t m = 0; m < 4; ++m) {
    for (std::size_t cell = 0; cell < 4; ++cell) {
      ComparisonTable::Row row;
      row.setting_pair = std::string(kMeasurementNames[m]);
      row.cell = cell;
      if (design) {
        const MeasurementSetting& first = *design->first_concept()[m / 2];
        const MeasurementSetting& second = *design->second_concept()[m % 2];
        const std::string& ta = cell < 2 ? first.exemplar_plus : first.exemplar_minus;
        const std::string& tb = cell % 2 == 0 ? second.exemplar_plus : second.exemplar_minus;
        row.label = ta + " " + tb;
      } else {
        row.label = std::string(kCellNames[cell]);
      }
      for (const ChshReport& r : reports) {
        row.probabilities.push_back(*r.measurements[m].probabilities.cells()[cell]);
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace bellgram
