#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bellgram/corpus.hpp"

namespace bellgram::synthetic {

// A phrase to plant verbatim, one occurrence per generated document.
struct Planted {
  std::string phrase;
  std::uint64_t copies = 0;
};

struct GeneratorOptions {
  std::uint64_t seed = 1;
  std::size_t distractor_docs = 1000;
  std::size_t distractor_tokens = 24;  // per distractor document
  std::vector<std::string> forbidden;  // extra terms the filler must avoid
};

// Builds a corpus in which, under default (case-folded) tokenization,
// each planted phrase occurs exactly `copies` times and nowhere else.
// Filler text is drawn from a fixed vocabulary disjoint from every
// planted term and from `forbidden`, so no accidental matches can
// arise. Fully deterministic for a given option set.
Corpus planted_corpus(const std::vector<Planted>& planted, const GeneratorOptions& options);

// One JSON object per line: {"id": source_name, "text": raw_text}.
void write_jsonl(const Corpus& corpus, const std::filesystem::path& path);

}  // namespace bellgram::synthetic
