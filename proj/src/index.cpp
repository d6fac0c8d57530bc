#include "bellgram/index.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bellgram/errors.hpp"
#include "bellgram/tokenizer.hpp"

namespace bellgram {

const std::vector<Posting>& PositionalIndex::postings(const std::string& term) const {
  static const std::vector<Posting> kEmpty;
  auto it = terms_.find(term);
  return it == terms_.end() ? kEmpty : it->second;
}

std::uint64_t PositionalIndex::total_postings() const {
  std::uint64_t n = 0;
  for (const auto& [term, list] : terms_) n += list.size();
  return n;
}

PositionalIndex build_index(const Corpus& corpus, bool case_sensitive, int threads) {
  const auto n_docs = static_cast<std::int64_t>(corpus.documents.size());
  std::vector<std::vector<Token>> doc_tokens(corpus.documents.size());

#ifdef _OPENMP
  [[maybe_unused]] const int n_threads = threads > 0 ? threads : omp_get_max_threads();
#else
  [[maybe_unused]] const int n_threads = 1;
  (void)threads;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(n_threads) if (n_docs > 1)
  for (std::int64_t i = 0; i < n_docs; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    doc_tokens[idx] = tokenize(corpus.documents[idx].raw_text, case_sensitive);
  }

  // Serial merge in document order; postings come out sorted by
  // (doc_id, position) without an explicit sort.
  PositionalIndex::TermMap terms;
  std::vector<std::uint32_t> doc_lengths(corpus.documents.size());
  for (std::size_t d = 0; d < doc_tokens.size(); ++d) {
    doc_lengths[d] = static_cast<std::uint32_t>(doc_tokens[d].size());
    for (const Token& tok : doc_tokens[d]) {
      terms[tok.surface].push_back(Posting{static_cast<DocId>(d), tok.position});
    }
  }

  BuildConfig config;
  config.case_sensitive = case_sensitive;
  return PositionalIndex(std::move(terms), std::move(doc_lengths), std::move(config));
}

namespace {

// -- little-endian primitives -----------------------------------------------

void put_u8(std::ostream& out, std::uint8_t v) { out.put(static_cast<char>(v)); }

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
               static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
  out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v & 0xFFFFFFFFu));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

void put_str(std::ostream& out, std::string_view s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

struct Reader {
  std::istream& in;
  const std::string& path;

  [[noreturn]] void fail(const std::string& why) const {
    throw FormatError(path + ": " + why);
  }

  void bytes(char* dst, std::size_t n) {
    in.read(dst, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n) fail("truncated file");
  }

  std::uint8_t u8() {
    char b;
    bytes(&b, 1);
    return static_cast<std::uint8_t>(b);
  }

  std::uint32_t u32() {
    unsigned char b[4];
    bytes(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
  }

  std::uint64_t u64() {
    const std::uint64_t lo = u32();
    const std::uint64_t hi = u32();
    return lo | (hi << 32);
  }

  std::string str(std::size_t max_len) {
    const std::uint32_t len = u32();
    if (len > max_len) fail("string length out of range");
    std::string s(len, '\0');
    bytes(s.data(), len);
    return s;
  }
};

constexpr std::size_t kMaxTermBytes = 1u << 20;

}  // namespace

void save_index(const PositionalIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open for writing: " + path.string());

  out.write(kIndexFormatTag.data(), static_cast<std::streamsize>(kIndexFormatTag.size()));
  put_u8(out, index.config().case_sensitive ? 1 : 0);
  put_str(out, index.config().tokenizer_version);

  put_u32(out, index.doc_count());
  for (std::uint32_t len : index.doc_lengths()) put_u32(out, len);

  // Sorted term order makes the byte stream a pure function of the
  // index contents.
  std::vector<const std::string*> sorted;
  sorted.reserve(index.terms().size());
  for (const auto& [term, list] : index.terms()) sorted.push_back(&term);
  std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) { return *a < *b; });

  put_u64(out, sorted.size());
  for (const std::string* term : sorted) {
    put_str(out, *term);
    const auto& list = index.terms().at(*term);
    put_u64(out, list.size());
    for (const Posting& p : list) {
      put_u32(out, p.doc_id);
      put_u32(out, p.position);
    }
  }

  out.flush();
  if (!out) throw FormatError("write failed: " + path.string());
}

PositionalIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open: " + path.string());
  Reader r{in, path.string()};

  std::string tag(kIndexFormatTag.size(), '\0');
  r.bytes(tag.data(), tag.size());
  if (tag != kIndexFormatTag) {
    if (tag.rfind("bellgram-index-", 0) == 0) r.fail("unsupported index format version \"" + tag + "\"");
    r.fail("bad magic, not a bellgram index");
  }

  BuildConfig config;
  config.case_sensitive = r.u8() != 0;
  config.tokenizer_version = r.str(64);
  if (config.tokenizer_version != kTokenizerVersion) {
    r.fail("index built with tokenizer \"" + config.tokenizer_version + "\", this build expects \"" +
           std::string(kTokenizerVersion) + "\"");
  }

  const std::uint32_t doc_count = r.u32();
  std::vector<std::uint32_t> doc_lengths(doc_count);
  std::uint64_t total_tokens = 0;
  for (std::uint32_t d = 0; d < doc_count; ++d) {
    doc_lengths[d] = r.u32();
    total_tokens += doc_lengths[d];
  }

  const std::uint64_t term_count = r.u64();
  if (term_count > total_tokens) r.fail("term count exceeds token total");
  PositionalIndex::TermMap terms;
  terms.reserve(static_cast<std::size_t>(term_count));

  std::uint64_t total_postings = 0;
  std::string prev_term;
  for (std::uint64_t t = 0; t < term_count; ++t) {
    std::string term = r.str(kMaxTermBytes);
    if (term.empty()) r.fail("empty term");
    if (t > 0 && !(prev_term < term)) r.fail("terms out of order");

    const std::uint64_t n_postings = r.u64();
    if (n_postings == 0) r.fail("term with no postings");
    if (n_postings > total_tokens) r.fail("posting count exceeds corpus size");
    std::vector<Posting> list;
    list.reserve(static_cast<std::size_t>(n_postings));
    for (std::uint64_t i = 0; i < n_postings; ++i) {
      Posting p;
      p.doc_id = r.u32();
      p.position = r.u32();
      if (p.doc_id >= doc_count) r.fail("posting doc_id out of range");
      if (p.position >= doc_lengths[p.doc_id]) r.fail("posting position out of range");
      if (!list.empty() && !(list.back() < p)) r.fail("postings out of order");
      list.push_back(p);
    }
    total_postings += n_postings;
    prev_term = term;
    terms.emplace(std::move(term), std::move(list));
  }

  if (total_postings != total_tokens) r.fail("posting total does not match document lengths");
  if (in.peek() != std::char_traits<char>::eof()) r.fail("trailing bytes after index data");

  return PositionalIndex(std::move(terms), std::move(doc_lengths), std::move(config));
}

}  // namespace bellgram
