#pragma once

// Tweet normalization, tokenization and hashtag segmentation. All functions
// are pure; normalize_tweet is idempotent for any fixed config.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "adi/unicode.hpp"

namespace adi {

struct NormalizationConfig {
  bool replace_mentions = true;
  bool replace_urls = true;
  bool replace_digits = true;
  bool replace_emoji = true;
  bool replace_newlines = true;
  // Only enabled while building the weakly labeled MSA/DA corpus.
  bool replace_relative_pronouns = false;
  bool segment_hashtags = true;
};

namespace placeholders {
inline constexpr std::string_view kUser = "@USER";
inline constexpr std::string_view kUrl = "URL";
inline constexpr std::string_view kNum = "NUM";
inline constexpr std::string_view kEmoji = "EMOJI";
inline constexpr std::string_view kNewline = "NEWLINE";
inline constexpr std::string_view kRelative = "RELATIVE";

inline constexpr std::array<std::string_view, 6> kAll = {
    kUser, kUrl, kNum, kEmoji, kNewline, kRelative};
}  // namespace placeholders

// The five MSA relative pronoun spellings and the two dialectal ones.
inline const std::array<std::string, 5>& msa_relative_pronouns() {
  static const std::array<std::string, 5> p = {
      "الذي", "الذى", "التي", "التى", "الذين"};
  return p;
}

inline const std::array<std::string, 2>& dialectal_relative_pronouns() {
  static const std::array<std::string, 2> p = {"اللي", "اللى"};
  return p;
}

namespace detail {

inline const std::vector<std::u32string>& placeholder_tokens_u32() {
  static const std::vector<std::u32string> toks = [] {
    std::vector<std::u32string> v;
    for (std::string_view p : placeholders::kAll) v.push_back(uni::decode(p));
    return v;
  }();
  return toks;
}

// Placeholder words without the "@" sigil, for "does this username-shaped
// run look like first-pass output" checks.
inline const std::vector<std::u32string>& placeholder_words_u32() {
  static const std::vector<std::u32string> words = [] {
    std::vector<std::u32string> v;
    for (std::string_view p : placeholders::kAll) {
      std::string_view w = p;
      if (!w.empty() && w.front() == '@') w.remove_prefix(1);
      v.push_back(uni::decode(w));
    }
    return v;
  }();
  return words;
}

inline const std::vector<std::u32string>& relative_pronouns_u32() {
  static const std::vector<std::u32string> toks = [] {
    std::vector<std::u32string> v;
    for (const auto& p : msa_relative_pronouns()) v.push_back(uni::decode(p));
    for (const auto& p : dialectal_relative_pronouns()) v.push_back(uni::decode(p));
    return v;
  }();
  return toks;
}

inline bool ascii_ieq(char32_t a, char32_t b) {
  if (a >= U'A' && a <= U'Z') a += 32;
  if (b >= U'A' && b <= U'Z') b += 32;
  return a == b;
}

inline bool matches_at(const std::u32string& s, std::size_t i, std::string_view ascii) {
  if (i + ascii.size() > s.size()) return false;
  for (std::size_t k = 0; k < ascii.size(); ++k) {
    if (!ascii_ieq(s[i + k], static_cast<char32_t>(ascii[k]))) return false;
  }
  return true;
}

// Camel-case split of one underscore-free piece; Arabic has no case, so it
// passes through whole.
inline void camel_split(const std::u32string& piece, std::vector<std::u32string>& out) {
  if (piece.empty()) return;
  std::size_t start = 0;
  for (std::size_t k = 1; k < piece.size(); ++k) {
    if (uni::is_ascii_lower(piece[k - 1]) && uni::is_ascii_upper(piece[k])) {
      out.push_back(piece.substr(start, k - start));
      start = k;
    }
  }
  out.push_back(piece.substr(start));
}

inline std::vector<std::u32string> segment_hashtag_u32(const std::u32string& tag) {
  if (tag.empty() || tag[0] != U'#') return {tag};
  std::vector<std::u32string> out;
  std::u32string piece;
  for (std::size_t i = 1; i < tag.size(); ++i) {
    if (tag[i] == U'_' || tag[i] == U'#') {
      camel_split(piece, out);
      piece.clear();
    } else {
      piece.push_back(tag[i]);
    }
  }
  camel_split(piece, out);
  if (out.empty()) return {tag};  // degenerate tag such as "#" or "#___"
  return out;
}

// Replaces punctuation-bounded runs equal to a relative pronoun spelling with
// RELATIVE. Matches the tokenizer's notion of a standalone token.
inline std::u32string mask_relative_pronouns(const std::u32string& seg) {
  static const std::u32string relative = uni::decode(placeholders::kRelative);
  std::u32string out;
  out.reserve(seg.size());
  std::size_t i = 0;
  while (i < seg.size()) {
    if (uni::is_punct(seg[i])) {
      out.push_back(seg[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < seg.size() && !uni::is_punct(seg[j])) ++j;
    const std::u32string run = seg.substr(i, j - i);
    bool hit = false;
    for (const auto& p : relative_pronouns_u32()) {
      if (run == p) {
        hit = true;
        break;
      }
    }
    out += hit ? relative : run;
    i = j;
  }
  return out;
}

}  // namespace detail

// Splits a hashtag into its constituents: '#' stripped, underscore splits,
// and lower-to-upper case transitions in Latin script. Inputs without a
// leading '#' (or with no content at all) come back unchanged as one token.
inline std::vector<std::string> segment_hashtag(std::string_view tag) {
  const std::u32string u = uni::decode(tag);
  std::vector<std::string> out;
  for (const auto& piece : detail::segment_hashtag_u32(u)) out.push_back(uni::encode(piece));
  return out;
}

namespace detail {

// Character-level replacements within one whitespace-free piece.
inline std::u32string replace_in_piece(const std::u32string& s, const NormalizationConfig& cfg) {
  static const std::u32string user = uni::decode(placeholders::kUser);
  static const std::u32string url = uni::decode(placeholders::kUrl);
  static const std::u32string num = uni::decode(placeholders::kNum);
  static const std::u32string emoji = uni::decode(placeholders::kEmoji);

  std::u32string out;
  out.reserve(s.size());
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    const char32_t cp = s[i];
    const bool at_word_boundary = out.empty() || !uni::is_ascii_word(out.back());
    if (cfg.replace_mentions && cp == U'@' && at_word_boundary) {
      std::size_t j = i + 1;
      while (j < n && uni::is_ascii_word(s[j])) ++j;
      const std::u32string run = s.substr(i + 1, j - i - 1);
      // Runs that begin with a placeholder word are first-pass output
      // ("@USER", "@USERNUM", "@RELATIVE"); rewriting them would make
      // normalization non-idempotent.
      const bool placeholder_prefixed = [&] {
        for (const auto& p : placeholder_words_u32())
          if (run.compare(0, p.size(), p) == 0) return true;
        return false;
      }();
      if (!run.empty() && run.size() <= 15 && !placeholder_prefixed) {
        out += user;
        i = j;
        continue;
      }
    }
    if (cfg.replace_urls &&
        (matches_at(s, i, "http://") || matches_at(s, i, "https://") ||
         matches_at(s, i, "www."))) {
      i = n;  // consume to end of piece (next whitespace in the original text)
      out += url;
      continue;
    }
    if (cfg.replace_digits && uni::is_digit(cp)) {
      while (i < n && uni::is_digit(s[i])) ++i;
      out += num;
      continue;
    }
    if (cfg.replace_emoji && uni::is_emoji(cp)) {
      ++i;
      while (i < n && (uni::is_emoji(s[i]) || uni::is_emoji_extender(s[i]))) ++i;
      out += emoji;
      continue;
    }
    out.push_back(cp);
    ++i;
  }
  return out;
}

}  // namespace detail

inline std::string normalize_tweet(std::string_view text, const NormalizationConfig& cfg = {}) {
  static const std::u32string newline = uni::decode(placeholders::kNewline);

  const std::u32string s = uni::decode(text);
  std::vector<std::u32string> out_tokens;
  std::u32string cur;

  // Hashtags are segmented before character replacements so that anything a
  // split exposes (a glued mention, a digit run) is handled in the same pass.
  auto flush = [&] {
    if (cur.empty()) return;
    std::vector<std::u32string> pieces;
    if (cfg.segment_hashtags && cur[0] == U'#' && cur.size() > 1) {
      pieces = detail::segment_hashtag_u32(cur);
    } else {
      pieces.push_back(cur);
    }
    for (auto& piece : pieces) {
      piece = detail::replace_in_piece(piece, cfg);
      if (cfg.replace_relative_pronouns) piece = detail::mask_relative_pronouns(piece);
      if (!piece.empty()) out_tokens.push_back(std::move(piece));
    }
    cur.clear();
  };

  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    const char32_t cp = s[i];
    if (uni::is_newline(cp)) {
      flush();
      i += (cp == U'\r' && i + 1 < n && s[i + 1] == U'\n') ? 2 : 1;
      if (cfg.replace_newlines) out_tokens.push_back(newline);
      continue;
    }
    if (uni::is_space(cp)) {
      flush();
      ++i;
      continue;
    }
    cur.push_back(cp);
    ++i;
  }
  flush();

  std::u32string joined;
  for (std::size_t k = 0; k < out_tokens.size(); ++k) {
    if (k) joined.push_back(U' ');
    joined += out_tokens[k];
  }
  return uni::encode(joined);
}

struct TokenStream {
  std::vector<std::string> tokens;
};

// Whitespace split, then punctuation codepoints become standalone tokens.
// Placeholder tokens survive intact even though "@USER" starts with
// punctuation.
inline TokenStream tokenize(std::string_view text) {
  const std::u32string s = uni::decode(text);
  TokenStream out;

  const std::size_t n = s.size();
  std::size_t i = 0;
  auto at_boundary = [&](std::size_t pos) {
    return pos >= n || uni::is_space(s[pos]) || uni::is_punct(s[pos]);
  };
  while (i < n) {
    if (uni::is_space(s[i])) {
      ++i;
      continue;
    }
    const bool open = i == 0 || uni::is_space(s[i - 1]) || uni::is_punct(s[i - 1]);
    bool matched = false;
    if (open) {
      for (const auto& p : detail::placeholder_tokens_u32()) {
        if (s.compare(i, p.size(), p) == 0 && at_boundary(i + p.size())) {
          out.tokens.push_back(uni::encode(p));
          i += p.size();
          matched = true;
          break;
        }
      }
    }
    if (matched) continue;
    if (uni::is_punct(s[i])) {
      out.tokens.push_back(uni::encode(std::u32string(1, s[i])));
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !uni::is_space(s[j]) && !uni::is_punct(s[j])) ++j;
    out.tokens.push_back(uni::encode(s.substr(i, j - i)));
    i = j;
  }
  return out;
}

inline std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace adi
