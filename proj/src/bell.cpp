#include "bellgram/bell.hpp"

#include "bellgram/errors.hpp"

namespace bellgram {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Classical:
      return "Classical";
    case Classification::QuantumRange:
      return "QuantumRange";
    case Classification::BeyondCirelson:
      return "BeyondCirelson";
  }
  return "?";
}

ProbabilityTable to_probabilities(const CoincidenceCounts& counts) {
  const BigInt total = counts.total();
  if (total == 0) throw ZeroTotalError("coincidence table has zero total, probabilities undefined");
  return ProbabilityTable{
      make_rational(counts.n11, total),
      make_rational(counts.n12, total),
      make_rational(counts.n21, total),
      make_rational(counts.n22, total),
  };
}

Rational expectation(const ProbabilityTable& table) {
  return table.p11 - table.p12 - table.p21 + table.p22;
}

Rational chsh(const Rational& e_ab, const Rational& e_abp, const Rational& e_apb, const Rational& e_apbp) {
  return e_apbp + e_abp + e_apb - e_ab;
}

Classification classify_by_square(const Rational& s_squared) {
  const BigInt& n = numerator(s_squared);
  const BigInt& d = denominator(s_squared);
  if (n <= 4 * d) return Classification::Classical;
  if (n <= 8 * d) return Classification::QuantumRange;
  return Classification::BeyondCirelson;
}

Classification classify(const Rational& s) { return classify_by_square(s * s); }

ChshReport run_design(const CoincidenceCounts& counts_ab, const CoincidenceCounts& counts_abp,
                      const CoincidenceCounts& counts_apb, const CoincidenceCounts& counts_apbp) {
  const std::array<const CoincidenceCounts*, 4> tables = {&counts_ab, &counts_abp, &counts_apb, &counts_apbp};

  ChshReport report;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (tables[i]->total() == 0) {
      throw DesignError("joint measurement " + std::string(kMeasurementNames[i]) + " has zero total");
    }
    MeasurementResult& m = report.measurements[i];
    m.counts = *tables[i];
    m.probabilities = to_probabilities(m.counts);
    m.expectation = expectation(m.probabilities);
  }

  report.s = chsh(report.ab().expectation, report.abp().expectation, report.apb().expectation,
                  report.apbp().expectation);
  report.classification = classify(report.s);
  return report;
}

}  // namespace bellgram
