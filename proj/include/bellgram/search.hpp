#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bellgram/bell.hpp"
#include "bellgram/index.hpp"

namespace bellgram {

inline constexpr std::uint32_t kDefaultCollocateWindow = 9;
inline constexpr std::size_t kMaxPhraseTerms = 8;

// How a pair of terms counts as a co-occurrence: adjacent tokens of an
// exact phrase, or the second term anywhere within +-window tokens of
// the first.
struct Mode {
  enum class Kind { phrase, collocate };

  Kind kind = Kind::phrase;
  std::uint32_t window = kDefaultCollocateWindow;  // meaningful for collocate only

  static Mode phrase() { return Mode{Kind::phrase, kDefaultCollocateWindow}; }
  static Mode collocate(std::uint32_t window) { return Mode{Kind::collocate, window}; }

  bool operator==(const Mode&) const = default;
};

// 1..8 terms, each already normalized to a single token.
struct PhraseQuery {
  std::vector<std::string> terms;
};

struct CollocateQuery {
  std::string target;
  std::string collocate;
  std::uint32_t window = kDefaultCollocateWindow;  // tokens on each side, >= 1
};

// Validating constructors; both throw QueryError when a term does not
// normalize to exactly one token under `config`, or the shape is off.
PhraseQuery make_phrase_query(const std::vector<std::string>& terms, const BuildConfig& config);
PhraseQuery parse_phrase_query(std::string_view text, const BuildConfig& config);
CollocateQuery make_collocate_query(std::string_view target, std::string_view collocate, std::uint32_t window,
                                    const BuildConfig& config);

// Occurrences of the terms at consecutive positions within one
// document, summed over all documents. Overlapping occurrences count.
std::uint64_t phrase_count(const PositionalIndex& index, const PhraseQuery& query);

// Target occurrences with at least one collocate occurrence within the
// window in the same document; each target occurrence contributes at
// most 1.
std::uint64_t collocate_count(const PositionalIndex& index, const CollocateQuery& query);

// The 2x2 table for one joint measurement: cell (i,j) counts pair
// (pair_a[i], pair_b[j]) under `mode`.
CoincidenceCounts coincidence_counts(const PositionalIndex& index,
                                     const std::pair<std::string, std::string>& pair_a,
                                     const std::pair<std::string, std::string>& pair_b, const Mode& mode);

}  // namespace bellgram
