#include "bellgram/scan.hpp"

#include <algorithm>

#include "bellgram/tokenizer.hpp"

namespace bellgram::scan {

namespace {

std::vector<std::string> surfaces(const Document& doc, bool case_sensitive) {
  std::vector<std::string> out;
  for (auto& tok : tokenize(doc.raw_text, case_sensitive)) out.push_back(std::move(tok.surface));
  return out;
}

}  // namespace

std::uint64_t phrase_count(const Corpus& corpus, const std::vector<std::string>& terms, bool case_sensitive) {
  std::uint64_t count = 0;
  for (const Document& doc : corpus.documents) {
    const auto toks = surfaces(doc, case_sensitive);
    if (toks.size() < terms.size() || terms.empty()) continue;
    for (std::size_t start = 0; start + terms.size() <= toks.size(); ++start) {
      bool match = true;
      for (std::size_t j = 0; j < terms.size(); ++j) {
        if (toks[start + j] != terms[j]) {
          match = false;
          break;
        }
      }
      if (match) ++count;
    }
  }
  return count;
}

std::uint64_t collocate_count(const Corpus& corpus, const std::string& target, const std::string& collocate,
                              std::uint32_t window, bool case_sensitive) {
  std::uint64_t count = 0;
  for (const Document& doc : corpus.documents) {
    const auto toks = surfaces(doc, case_sensitive);
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i] != target) continue;
      const std::size_t lo = i >= window ? i - window : 0;
      const std::size_t hi = std::min(toks.size() - 1, i + static_cast<std::size_t>(window));
      for (std::size_t j = lo; j <= hi; ++j) {
        if (toks[j] == collocate) {
          ++count;
          break;
        }
      }
    }
  }
  return count;
}

CoincidenceCounts coincidence_counts_phrase(const Corpus& corpus,
                                            const std::pair<std::string, std::string>& pair_a,
                                            const std::pair<std::string, std::string>& pair_b,
                                            bool case_sensitive) {
  return CoincidenceCounts{
      phrase_count(corpus, {pair_a.first, pair_b.first}, case_sensitive),
      phrase_count(corpus, {pair_a.first, pair_b.second}, case_sensitive),
      phrase_count(corpus, {pair_a.second, pair_b.first}, case_sensitive),
      phrase_count(corpus, {pair_a.second, pair_b.second}, case_sensitive),
  };
}

CoincidenceCounts coincidence_counts_collocate(const Corpus& corpus,
                                               const std::pair<std::string, std::string>& pair_a,
                                               const std::pair<std::string, std::string>& pair_b,
                                               std::uint32_t window, bool case_sensitive) {
  return CoincidenceCounts{
      collocate_count(corpus, pair_a.first, pair_b.first, window, case_sensitive),
      collocate_count(corpus, pair_a.first, pair_b.second, window, case_sensitive),
      collocate_count(corpus, pair_a.second, pair_b.first, window, case_sensitive),
      collocate_count(corpus, pair_a.second, pair_b.second, window, case_sensitive),
  };
}

}  // namespace bellgram::scan
