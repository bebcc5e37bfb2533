#pragma once

// Minimal UTF-8 handling and the codepoint classes the normalizer relies on.
// The class tables below are deliberately conservative; the exact ranges are
// documented in docs/normalization.md.

#include <cstdint>
#include <string>
#include <string_view>

namespace adi::uni {

using Codepoint = char32_t;

inline constexpr Codepoint kReplacement = 0xFFFD;

struct Decoded {
  Codepoint cp;
  int length;  // bytes consumed, >= 1
};

// Decodes the codepoint starting at byte offset i. Malformed sequences decode
// as U+FFFD consuming a single byte, so iteration always makes progress.
inline Decoded decode_at(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {static_cast<Codepoint>(b0), 1};

  int len = 0;
  Codepoint cp = 0;
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
    return {kReplacement, 1};
  }
  if (i + static_cast<std::size_t>(len) > s.size()) return {kReplacement, 1};
  for (int k = 1; k < len; ++k) {
    const auto bk = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
    if ((bk & 0xC0) != 0x80) return {kReplacement, 1};
    cp = (cp << 6) | (bk & 0x3F);
  }
  // Reject overlong encodings and out-of-range values.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
      (cp >= 0xD800 && cp <= 0xDFFF)) {
    return {kReplacement, 1};
  }
  return {cp, len};
}

inline void append_utf8(std::string& out, Codepoint cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    const Decoded d = decode_at(s, i);
    out.push_back(d.cp);
    i += static_cast<std::size_t>(d.length);
  }
  return out;
}

inline std::string encode(std::u32string_view s) {
  std::string out;
  out.reserve(s.size() * 2);
  for (Codepoint cp : s) append_utf8(out, cp);
  return out;
}

inline bool is_newline(Codepoint cp) {
  return cp == U'\n' || cp == U'\r' || cp == 0x0085 || cp == 0x2028 || cp == 0x2029;
}

inline bool is_space(Codepoint cp) {
  if (cp == U' ' || cp == U'\t' || cp == U'\v' || cp == U'\f') return true;
  if (is_newline(cp)) return true;
  if (cp == 0x00A0 || cp == 0x1680 || cp == 0x202F || cp == 0x205F || cp == 0x3000)
    return true;
  return cp >= 0x2000 && cp <= 0x200A;
}

// ASCII digits plus Arabic-Indic digits; both map to NUM.
inline bool is_digit(Codepoint cp) {
  return (cp >= U'0' && cp <= U'9') || (cp >= 0x0660 && cp <= 0x0669);
}

inline bool is_ascii_word(Codepoint cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
         (cp >= U'0' && cp <= U'9') || cp == U'_';
}

inline bool is_ascii_lower(Codepoint cp) { return cp >= U'a' && cp <= U'z'; }
inline bool is_ascii_upper(Codepoint cp) { return cp >= U'A' && cp <= U'Z'; }

// Punctuation that the tokenizer splits into standalone tokens. Underscore is
// excluded: it is a word character in usernames and hashtags.
inline bool is_punct(Codepoint cp) {
  if (cp < 0x80) {
    if (cp == U'_') return false;
    return (cp >= U'!' && cp <= U'/') || (cp >= U':' && cp <= U'@') ||
           (cp >= U'[' && cp <= U'`') || (cp >= U'{' && cp <= U'~');
  }
  switch (cp) {
    case 0x00A1:  // inverted exclamation
    case 0x00A7:  // section sign
    case 0x00AB:  // left guillemet
    case 0x00B6:  // pilcrow
    case 0x00B7:  // middle dot
    case 0x00BB:  // right guillemet
    case 0x00BF:  // inverted question
    case 0x060C:  // Arabic comma
    case 0x060D:  // Arabic date separator
    case 0x061B:  // Arabic semicolon
    case 0x061E:  // Arabic triple dot
    case 0x061F:  // Arabic question mark
    case 0x066A:  // Arabic percent
    case 0x066B:  // Arabic decimal separator
    case 0x066C:  // Arabic thousands separator
    case 0x066D:  // Arabic five pointed star
    case 0x06D4:  // Arabic full stop
      return true;
    default:
      break;
  }
  if (cp >= 0x2010 && cp <= 0x2027) return true;  // dashes, quotes, ellipsis
  if (cp >= 0x2030 && cp <= 0x205E) return true;  // per mille .. punctuation
  if (cp >= 0x3001 && cp <= 0x3003) return true;  // CJK comma, full stop
  if (cp >= 0x3008 && cp <= 0x3011) return true;  // CJK brackets
  if (cp >= 0x3014 && cp <= 0x301F) return true;  // CJK brackets, quotes
  return false;
}

// Core emoji ranges (see docs/normalization.md).
inline bool is_emoji(Codepoint cp) {
  return (cp >= 0x1F1E6 && cp <= 0x1F1FF) ||  // regional indicators
         (cp >= 0x1F300 && cp <= 0x1F5FF) ||  // misc symbols and pictographs
         (cp >= 0x1F600 && cp <= 0x1F64F) ||  // emoticons
         (cp >= 0x1F680 && cp <= 0x1F6FF) ||  // transport and map
         (cp >= 0x1F900 && cp <= 0x1F9FF) ||  // supplemental symbols
         (cp >= 0x1FA70 && cp <= 0x1FAFF) ||  // symbols extended-A
         (cp >= 0x2600 && cp <= 0x26FF) ||    // miscellaneous symbols
         (cp >= 0x2700 && cp <= 0x27BF);      // dingbats
}

// Codepoints that extend an emoji run but are not emoji on their own.
inline bool is_emoji_extender(Codepoint cp) {
  return cp == 0x200D ||                       // zero width joiner
         cp == 0xFE0F ||                       // variation selector-16
         cp == 0x20E3 ||                       // combining keycap
         (cp >= 0x1F3FB && cp <= 0x1F3FF);     // skin tone modifiers
}

}  // namespace adi::uni
