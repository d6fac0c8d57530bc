#include "bellgram/tokenizer.hpp"

#include "utf8.hpp"

namespace bellgram {

namespace {

bool is_ascii_alnum(char32_t c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_apostrophe(char32_t c) {
  return c == U'\'' || c == U'’';
}

// Separator codepoints above ASCII: Unicode whitespace plus the common
// punctuation blocks. Anything else non-ASCII counts as a token
// character, so accented words, Greek, Cyrillic and CJK text form
// tokens instead of vanishing.
bool is_non_ascii_separator(char32_t c) {
  switch (c) {
    case 0x0085:  // NEL
    case 0x00A0:  // NBSP
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      break;
  }
  if (c >= 0x2000 && c <= 0x200A) return true;  // spaces
  if (c >= 0x00A1 && c <= 0x00BF) return true;  // Latin-1 punctuation and signs
  if (c == 0x00D7 || c == 0x00F7) return true;  // multiplication, division
  if (c >= 0x2010 && c <= 0x2027) return true;  // dashes, quotes (u2019 handled as apostrophe)
  if (c >= 0x2030 && c <= 0x205E) return true;  // general punctuation
  if (c >= 0x3001 && c <= 0x303F) return true;  // CJK punctuation
  if (c >= 0xFE50 && c <= 0xFE6F) return true;  // small form variants
  if (c >= 0xFF01 && c <= 0xFF0F) return true;  // fullwidth punctuation
  if (c >= 0xFF1A && c <= 0xFF20) return true;
  if (c >= 0xFF3B && c <= 0xFF40) return true;
  if (c >= 0xFF5B && c <= 0xFF65) return true;
  return false;
}

bool is_token_char(char32_t c) {
  if (c < 0x80) return is_ascii_alnum(c);
  if (c == utf8::kInvalid) return false;
  return !is_non_ascii_separator(c) && !is_apostrophe(c);
}

// ASCII + Latin-1 simple folding.
char32_t fold(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 0x20;
  if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return c + 0x20;
  return c;
}

void append_cp(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view raw_text, bool case_sensitive) {
  std::vector<Token> tokens;
  std::string current;

  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(Token{std::move(current), static_cast<std::uint32_t>(tokens.size())});
      current.clear();
    }
  };

  std::size_t pos = 0;
  while (pos < raw_text.size()) {
    const char32_t cp = utf8::decode(raw_text, pos);
    if (is_token_char(cp)) {
      append_cp(current, case_sensitive ? cp : fold(cp));
      continue;
    }
    if (is_apostrophe(cp) && !current.empty() && pos < raw_text.size()) {
      std::size_t look = pos;
      if (is_token_char(utf8::decode(raw_text, look))) {
        current.push_back('\'');  // curly form normalized
        continue;
      }
    }
    flush();
  }
  flush();
  return tokens;
}

std::optional<std::string> normalize_term(std::string_view term, bool case_sensitive) {
  auto toks = tokenize(term, case_sensitive);
  if (toks.size() != 1) return std::nullopt;
  return std::move(toks.front().surface);
}

}  // namespace bellgram
