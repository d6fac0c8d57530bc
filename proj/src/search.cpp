#include "bellgram/search.hpp"

#include <algorithm>
#include <cstdint>

#include "bellgram/errors.hpp"
#include "bellgram/tokenizer.hpp"

namespace bellgram {

namespace {

// Parallel kernels engage only past this size; below it the loop runs
// inline on the calling thread.
constexpr std::int64_t kParallelCutoff = 4096;

std::string normalize_or_throw(std::string_view term, const BuildConfig& config) {
  auto normalized = normalize_term(term, config.case_sensitive);
  if (!normalized) {
    throw QueryError("term \"" + std::string(term) + "\" does not normalize to exactly one token");
  }
  return *std::move(normalized);
}

}  // namespace

PhraseQuery make_phrase_query(const std::vector<std::string>& terms, const BuildConfig& config) {
  if (terms.empty() || terms.size() > kMaxPhraseTerms) {
    throw QueryError("phrase query needs 1.." + std::to_string(kMaxPhraseTerms) + " terms, got " +
                     std::to_string(terms.size()));
  }
  PhraseQuery query;
  query.terms.reserve(terms.size());
  for (const auto& term : terms) query.terms.push_back(normalize_or_throw(term, config));
  return query;
}

PhraseQuery parse_phrase_query(std::string_view text, const BuildConfig& config) {
  std::vector<std::string> raw;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find_first_of(" \t", start);
    const std::size_t stop = end == std::string_view::npos ? text.size() : end;
    if (stop > start) raw.emplace_back(text.substr(start, stop - start));
    start = stop + 1;
  }
  if (raw.empty()) throw QueryError("empty phrase query");
  return make_phrase_query(raw, config);
}

CollocateQuery make_collocate_query(std::string_view target, std::string_view collocate, std::uint32_t window,
                                    const BuildConfig& config) {
  if (window < 1) throw QueryError("collocate window must be >= 1");
  CollocateQuery query;
  query.target = normalize_or_throw(target, config);
  query.collocate = normalize_or_throw(collocate, config);
  query.window = window;
  if (query.target == query.collocate) {
    throw QueryError("target and collocate normalize to the same token \"" + query.target + "\"");
  }
  return query;
}

std::uint64_t phrase_count(const PositionalIndex& index, const PhraseQuery& query) {
  if (query.terms.empty() || query.terms.size() > kMaxPhraseTerms) {
    throw QueryError("phrase query needs 1.." + std::to_string(kMaxPhraseTerms) + " terms");
  }

  const std::size_t k = query.terms.size();
  std::vector<const std::vector<Posting>*> lists(k);
  for (std::size_t i = 0; i < k; ++i) {
    lists[i] = &index.postings(query.terms[i]);
    if (lists[i]->empty()) return 0;
  }

  // Drive the scan from the rarest term; every other term is probed by
  // binary search at the required offset.
  std::size_t rare = 0;
  for (std::size_t i = 1; i < k; ++i) {
    if (lists[i]->size() < lists[rare]->size()) rare = i;
  }

  const auto& anchor = *lists[rare];
  const auto n = static_cast<std::int64_t>(anchor.size());
  std::uint64_t count = 0;

#pragma omp parallel for schedule(static) reduction(+ : count) if (n > kParallelCutoff)
  for (std::int64_t i = 0; i < n; ++i) {
    const Posting& p = anchor[static_cast<std::size_t>(i)];
    if (p.position < rare) continue;  // phrase would start before the document
    const std::uint32_t base = p.position - static_cast<std::uint32_t>(rare);

    bool match = true;
    for (std::size_t j = 0; j < k && match; ++j) {
      if (j == rare) continue;
      const Posting want{p.doc_id, base + static_cast<std::uint32_t>(j)};
      match = std::binary_search(lists[j]->begin(), lists[j]->end(), want);
    }
    if (match) ++count;
  }
  return count;
}

std::uint64_t collocate_count(const PositionalIndex& index, const CollocateQuery& query) {
  if (query.window < 1) throw QueryError("collocate window must be >= 1");
  if (query.target == query.collocate) throw QueryError("target and collocate must differ");

  const auto& targets = index.postings(query.target);
  const auto& others = index.postings(query.collocate);
  if (targets.empty() || others.empty()) return 0;

  const auto n = static_cast<std::int64_t>(targets.size());
  const std::uint32_t w = query.window;
  std::uint64_t count = 0;

#pragma omp parallel for schedule(static) reduction(+ : count) if (n > kParallelCutoff)
  for (std::int64_t i = 0; i < n; ++i) {
    const Posting& t = targets[static_cast<std::size_t>(i)];
    const std::uint32_t lo = t.position >= w ? t.position - w : 0;
    const std::uint64_t hi = static_cast<std::uint64_t>(t.position) + w;
    const auto it = std::lower_bound(others.begin(), others.end(), Posting{t.doc_id, lo});
    if (it != others.end() && it->doc_id == t.doc_id && it->position <= hi) ++count;
  }
  return count;
}

CoincidenceCounts coincidence_counts(const PositionalIndex& index,
                                     const std::pair<std::string, std::string>& pair_a,
                                     const std::pair<std::string, std::string>& pair_b, const Mode& mode) {
  const std::array<const std::string*, 2> a = {&pair_a.first, &pair_a.second};
  const std::array<const std::string*, 2> b = {&pair_b.first, &pair_b.second};

  std::array<std::uint64_t, 4> cells{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      std::uint64_t c;
      if (mode.kind == Mode::Kind::phrase) {
        c = phrase_count(index, make_phrase_query({*a[i], *b[j]}, index.config()));
      } else {
        c = collocate_count(index, make_collocate_query(*a[i], *b[j], mode.window, index.config()));
      }
      cells[i * 2 + j] = c;
    }
  }
  return CoincidenceCounts{cells[0], cells[1], cells[2], cells[3]};
}

}  // namespace bellgram
