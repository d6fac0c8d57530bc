#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bellgram {

// Bumped whenever tokenization rules change; stored in index headers so
// an index is never queried with rules it was not built with.
inline constexpr std::string_view kTokenizerVersion = "tok-v1";

struct Token {
  std::string surface;     // normalized form, never empty
  std::uint32_t position;  // 0-based index in the document's token sequence

  bool operator==(const Token&) const = default;
};

// Splits raw text into normalized tokens.
//
// Tokens are maximal runs of token characters: ASCII alphanumerics plus
// any non-ASCII codepoint that is not common Unicode whitespace or
// punctuation. An apostrophe (straight or curly, the latter normalized
// to ') between two token characters stays inside the token. Everything
// else separates. With case_sensitive off, ASCII and Latin-1 letters are
// lowercased. Malformed UTF-8 bytes act as separators; ingestion rejects
// them before text ever gets here.
std::vector<Token> tokenize(std::string_view raw_text, bool case_sensitive = false);

// Normalizes a single query term. Returns the token surface if the term
// tokenizes to exactly one token, otherwise nullopt.
std::optional<std::string> normalize_term(std::string_view term, bool case_sensitive = false);

}  // namespace bellgram
