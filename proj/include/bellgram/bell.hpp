#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "bellgram/rational.hpp"

namespace bellgram {

// Outcome-value convention for a joint measurement of two concepts with
// two exemplars each: the first exemplar of a concept carries value +1,
// the second -1, and a joint outcome carries the product. Cell n_ij is
// the count for (i-th exemplar of the first concept, j-th of the
// second), so n11 and n22 carry +1, n12 and n21 carry -1.
struct CoincidenceCounts {
  std::uint64_t n11 = 0;
  std::uint64_t n12 = 0;
  std::uint64_t n21 = 0;
  std::uint64_t n22 = 0;

  BigInt total() const { return BigInt(n11) + n12 + n21 + n22; }
  std::array<std::uint64_t, 4> cells() const { return {n11, n12, n21, n22}; }

  bool operator==(const CoincidenceCounts&) const = default;
};

struct ProbabilityTable {
  Rational p11, p12, p21, p22;

  std::array<const Rational*, 4> cells() const { return {&p11, &p12, &p21, &p22}; }
  bool operator==(const ProbabilityTable&) const = default;
};

enum class Classification {
  Classical,       // |s| <= 2
  QuantumRange,    // 2 < |s| <= 2*sqrt(2)
  BeyondCirelson,  // |s| > 2*sqrt(2)
};

std::string to_string(Classification c);

// Relative frequencies p_ij = n_ij / total. Throws ZeroTotalError when
// the table is empty.
ProbabilityTable to_probabilities(const CoincidenceCounts& counts);

// E = p11 - p12 - p21 + p22; always in [-1, 1].
Rational expectation(const ProbabilityTable& table);

// The CHSH combination E(A',B') + E(A,B') + E(A',B) - E(A,B).
Rational chsh(const Rational& e_ab, const Rational& e_abp, const Rational& e_apb, const Rational& e_apbp);

// Classifies by the exact integer comparison of s^2 against 4 and 8;
// no decimal approximation of 2*sqrt(2) is ever involved. Boundaries
// fall into the lower class.
Classification classify(const Rational& s);

// Same decision on a precomputed s^2 (classification depends on s only
// through its square).
Classification classify_by_square(const Rational& s_squared);

// One evaluated joint measurement.
struct MeasurementResult {
  CoincidenceCounts counts;
  ProbabilityTable probabilities;
  Rational expectation;
};

// Conventional order of the four joint measurements: e(A,B), e(A,B'),
// e(A',B), e(A',B').
inline constexpr std::array<std::string_view, 4> kMeasurementNames = {"e(A,B)", "e(A,B')", "e(A',B)",
                                                                      "e(A',B')"};

struct ChshReport {
  std::array<MeasurementResult, 4> measurements;  // kMeasurementNames order

  Rational s;
  Classification classification = Classification::Classical;

  const MeasurementResult& ab() const { return measurements[0]; }
  const MeasurementResult& abp() const { return measurements[1]; }
  const MeasurementResult& apb() const { return measurements[2]; }
  const MeasurementResult& apbp() const { return measurements[3]; }
};

// Evaluates a whole four-measurement design from raw counts. Throws
// DesignError naming the joint measurement whose table is empty.
ChshReport run_design(const CoincidenceCounts& counts_ab, const CoincidenceCounts& counts_abp,
                      const CoincidenceCounts& counts_apb, const CoincidenceCounts& counts_apbp);

}  // namespace bellgram
