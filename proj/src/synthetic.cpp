#include "bellgram/synthetic.hpp"

#include <array>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string_view>
#include <unordered_set>
#include <utility>

#include <json.hpp>

#include "bellgram/errors.hpp"
#include "bellgram/tokenizer.hpp"

namespace bellgram::synthetic {

namespace {

constexpr std::array<std::string_view, 48> kVocabulary = {
    "river",  "stone",   "cloud",   "meadow", "lantern", "copper",  "violin", "harbor",
    "winter", "garden",  "marble",  "signal", "velvet",  "timber",  "orchard", "candle",
    "mirror", "thunder", "saffron", "granite", "willow", "ember",   "frost",  "prism",
    "drifts", "glows",   "fades",   "turns",  "rests",   "stands",  "leans",  "waits",
    "under",  "over",    "beside",  "along",  "through", "beyond",  "across", "within",
    "slowly", "gently",  "quietly", "softly", "early",   "late",    "often",  "never",
};

}  // namespace

Corpus planted_corpus(const std::vector<Planted>& planted, const GeneratorOptions& options) {
  std::unordered_set<std::string> forbidden;
  for (const std::string& term : options.forbidden) {
    for (const Token& t : tokenize(term)) forbidden.insert(t.surface);
  }
  for (const Planted& p : planted) {
    if (tokenize(p.phrase).empty()) {
      throw std::invalid_argument("planted phrase has no tokens: \"" + p.phrase + "\"");
    }
    for (const Token& t : tokenize(p.phrase)) forbidden.insert(t.surface);
  }

  std::vector<std::string> vocabulary;
  for (std::string_view w : kVocabulary) {
    if (!forbidden.contains(std::string(w))) vocabulary.emplace_back(w);
  }
  if (vocabulary.size() < 8) throw std::invalid_argument("planted terms exhaust the filler vocabulary");

  // rng() % n is biased but deterministic across platforms, which is
  // what matters here; std::shuffle and the distributions are not.
  std::mt19937_64 rng(options.seed);
  const auto filler = [&]() -> const std::string& { return vocabulary[rng() % vocabulary.size()]; };
  const auto append_filler = [&](std::string& text, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) {
      if (!text.empty()) text += ' ';
      text += filler();
    }
  };

  std::vector<std::string> texts;
  for (const Planted& p : planted) {
    for (std::uint64_t copy = 0; copy < p.copies; ++copy) {
      std::string text;
      append_filler(text, rng() % 7);
      if (!text.empty()) text += ' ';
      text += p.phrase;
      append_filler(text, rng() % 7);
      texts.push_back(std::move(text));
    }
  }
  for (std::size_t i = 0; i < options.distractor_docs; ++i) {
    std::string text;
    append_filler(text, options.distractor_tokens);
    texts.push_back(std::move(text));
  }

  for (std::size_t i = texts.size(); i > 1; --i) {
    std::swap(texts[i - 1], texts[rng() % i]);
  }

  Corpus corpus;
  corpus.name = "synthetic";
  corpus.documents.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    Document doc;
    doc.doc_id = static_cast<DocId>(i);
    doc.source_name = "doc-" + std::to_string(i);
    doc.raw_text = std::move(texts[i]);
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

void write_jsonl(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IngestError("cannot open for writing: " + path.string());
  for (const Document& doc : corpus.documents) {
    nlohmann::ordered_json j;
    j["id"] = doc.source_name;
    j["text"] = doc.raw_text;
    out << j.dump() << "\n";
  }
  out.flush();
  if (!out) throw IngestError("write failed: " + path.string());
}

}  // namespace bellgram::synthetic
