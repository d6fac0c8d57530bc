#pragma once

// Minimal UTF-8 decoding, shared by ingestion (validation) and the
// tokenizer (codepoint iteration). Rejects overlong forms, surrogates
// and codepoints past U+10FFFF.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace bellgram::utf8 {

inline constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one codepoint starting at `pos`. Advances `pos` past the
// sequence on success; on malformed input advances by one byte and
// returns kInvalid.
inline char32_t decode(std::string_view s, std::size_t& pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }

  int len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++pos;
    return kInvalid;
  }

  if (pos + static_cast<std::size_t>(len) > s.size()) {
    ++pos;
    return kInvalid;
  }
  for (int i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + static_cast<std::size_t>(i)]);
    if ((b & 0xC0) != 0x80) {
      ++pos;
      return kInvalid;
    }
    cp = (cp << 6) | (b & 0x3F);
  }

  // Overlong, surrogate, out of range.
  static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
    ++pos;
    return kInvalid;
  }

  pos += static_cast<std::size_t>(len);
  return cp;
}

// Returns the byte offset of the first invalid sequence, or npos if the
// whole string is well-formed.
inline std::size_t first_invalid(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t at = pos;
    if (decode(s, pos) == kInvalid) return at;
  }
  return std::string_view::npos;
}

inline bool valid(std::string_view s) { return first_invalid(s) == std::string_view::npos; }

}  // namespace bellgram::utf8
