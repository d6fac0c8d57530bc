#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bellgram/bell.hpp"
#include "bellgram/corpus.hpp"

// Serial reference counters that tokenize and scan every document on
// each call, with no index involved. They define the counting semantics
// the indexed kernels must reproduce; tests compare the two paths and
// the benchmark measures the gap. Deliberately simple; keep them that
// way.

namespace bellgram::scan {

std::uint64_t phrase_count(const Corpus& corpus, const std::vector<std::string>& terms,
                           bool case_sensitive = false);

std::uint64_t collocate_count(const Corpus& corpus, const std::string& target, const std::string& collocate,
                              std::uint32_t window, bool case_sensitive = false);

CoincidenceCounts coincidence_counts_phrase(const Corpus& corpus,
                                            const std::pair<std::string, std::string>& pair_a,
                                            const std::pair<std::string, std::string>& pair_b,
                                            bool case_sensitive = false);

CoincidenceCounts coincidence_counts_collocate(const Corpus& corpus,
                                               const std::pair<std::string, std::string>& pair_a,
                                               const std::pair<std::string, std::string>& pair_b,
                                               std::uint32_t window, bool case_sensitive = false);

}  // namespace bellgram::scan
