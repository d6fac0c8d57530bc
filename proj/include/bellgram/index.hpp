#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "bellgram/corpus.hpp"
#include "bellgram/tokenizer.hpp"

namespace bellgram {

// On-disk format tag. Readers reject anything else.
inline constexpr std::string_view kIndexFormatTag = "bellgram-index-v1";

struct Posting {
  DocId doc_id = 0;
  std::uint32_t position = 0;  // token index within the document

  friend bool operator==(const Posting& a, const Posting& b) = default;
  friend auto operator<=>(const Posting& a, const Posting& b) = default;
};

struct BuildConfig {
  bool case_sensitive = false;
  std::string tokenizer_version = std::string(kTokenizerVersion);

  bool operator==(const BuildConfig&) const = default;
};

// Term -> sorted postings over a whole corpus. Immutable once built;
// safe for concurrent readers.
class PositionalIndex {
public:
  using TermMap = std::unordered_map<std::string, std::vector<Posting>>;

  PositionalIndex() = default;
  PositionalIndex(TermMap terms, std::vector<std::uint32_t> doc_lengths, BuildConfig config)
      : terms_(std::move(terms)), doc_lengths_(std::move(doc_lengths)), config_(std::move(config)) {}

  const BuildConfig& config() const { return config_; }
  DocId doc_count() const { return static_cast<DocId>(doc_lengths_.size()); }
  const std::vector<std::uint32_t>& doc_lengths() const { return doc_lengths_; }
  const TermMap& terms() const { return terms_; }

  // Empty list for unknown terms.
  const std::vector<Posting>& postings(const std::string& term) const;

  std::uint64_t total_postings() const;

  bool operator==(const PositionalIndex&) const = default;

private:
  TermMap terms_;
  std::vector<std::uint32_t> doc_lengths_;
  BuildConfig config_;
};

// Tokenizes every document and assembles the index. Documents are
// tokenized in parallel; the merge walks documents in order, so the
// result is independent of thread count. `threads` of 0 means the
// OpenMP default.
PositionalIndex build_index(const Corpus& corpus, bool case_sensitive = false, int threads = 0);

// Fixed-width little-endian container, independent of host endianness.
// load(save(x)) is structurally equal to x. Throws FormatError for bad
// magic, version or tokenizer mismatch, truncation, or inconsistent
// contents.
void save_index(const PositionalIndex& index, const std::filesystem::path& path);
PositionalIndex load_index(const std::filesystem::path& path);

}  // namespace bellgram
