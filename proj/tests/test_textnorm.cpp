#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "adi/textnorm.hpp"

using namespace adi;

namespace {

// Random tweet-shaped strings mixing the things the normalizer cares about.
std::string random_tweet(std::mt19937_64& rng) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  static const std::vector<std::string> arabic = {"مرحبا", "شاهد", "اللي", "الذي",
                                                  "كويس", "والذي", "تونس"};
  static const std::vector<std::string> latin = {"hello", "Great", "CamelCase", "x"};
  static const std::vector<std::string> emoji = {"😀", "🚀🚀", "❤️", "🇪🇬", "😀🏽"};
  static const std::vector<std::string> urls = {"http://t.co/x", "https://a.b/c?d=1",
                                                "www.example.com", "www."};
  static const std::vector<std::string> mentions = {"@ali", "@Some_User42", "@",
                                                    "@abcdefghijklmnopq"};
  static const std::vector<std::string> digits = {"123", "٣٤٥", "7", "1٢3"};
  static const std::vector<std::string> tags = {"#Arab_World", "#ArabLeague", "#x",
                                                "#_", "#تونس_الآن"};
  static const std::vector<std::string> punct = {"!", "،", "؟", "...", "(", ")"};

  std::string out;
  const std::size_t pieces = pick(12);
  for (std::size_t i = 0; i < pieces; ++i) {
    switch (pick(9)) {
      case 0: out += arabic[pick(arabic.size())]; break;
      case 1: out += latin[pick(latin.size())]; break;
      case 2: out += emoji[pick(emoji.size())]; break;
      case 3: out += urls[pick(urls.size())]; break;
      case 4: out += mentions[pick(mentions.size())]; break;
      case 5: out += digits[pick(digits.size())]; break;
      case 6: out += tags[pick(tags.size())]; break;
      case 7: out += punct[pick(punct.size())]; break;
      case 8: out += "\n"; break;
    }
    switch (pick(4)) {
      case 0: out += ' '; break;
      case 1: out += "  "; break;
      case 2: out += '\t'; break;
      default: break;  // glue pieces together
    }
  }
  return out;
}

bool contains_emoji_cp(const std::string& s) {
  for (char32_t cp : uni::decode(s))
    if (uni::is_emoji(cp)) return true;
  return false;
}

bool contains_url_pattern(const std::string& s) {
  const std::u32string u = uni::decode(s);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (detail::matches_at(u, i, "http://") || detail::matches_at(u, i, "https://") ||
        detail::matches_at(u, i, "www."))
      return true;
  }
  return false;
}

}  // namespace

TEST_CASE("normalize_tweet replaces mentions, urls and digits") {
  CHECK(normalize_tweet("@ali شاهد http://t.co/x 123") == "@USER شاهد URL NUM");
  CHECK(normalize_tweet("") == "");
  CHECK(normalize_tweet("@ali") == "@USER");
  CHECK(normalize_tweet("٣٤٥") == "NUM");
  CHECK(normalize_tweet("a1b٢c") == "aNUMbNUMc");
  CHECK(normalize_tweet("see www.example.com now") == "see URL now");
}

TEST_CASE("normalize_tweet mention edge cases") {
  // 16 word characters follow the '@': not a valid username.
  CHECK(normalize_tweet("@abcdefghijklmnopq") == "@abcdefghijklmnopq");
  CHECK(normalize_tweet("@") == "@");
  CHECK(normalize_tweet("a@b") == "a@b");
  // A '@' before a placeholder word must stay put, or re-application would
  // rewrite first-pass output.
  CHECK(normalize_tweet("@12345678901234567") == "@NUM");
  CHECK(normalize_tweet("@NUM") == "@NUM");
}

TEST_CASE("normalize_tweet newlines and emoji") {
  CHECK(normalize_tweet("a\nb") == "a NEWLINE b");
  CHECK(normalize_tweet("a\r\nb") == "a NEWLINE b");
  CHECK(normalize_tweet("😀😀 x") == "EMOJI x");
  CHECK(normalize_tweet("❤️") == "EMOJI");
  NormalizationConfig keep;
  keep.replace_emoji = false;
  CHECK(normalize_tweet("😀 x", keep) == "😀 x");
}

TEST_CASE("normalize_tweet hashtag segmentation") {
  CHECK(normalize_tweet("#Arab_World") == "Arab World");
  CHECK(normalize_tweet("#ArabLeague") == "Arab League");
  NormalizationConfig no_seg;
  no_seg.segment_hashtags = false;
  CHECK(normalize_tweet("#Arab_World", no_seg) == "#Arab_World");
}

TEST_CASE("normalize_tweet relative pronoun masking is token exact") {
  NormalizationConfig cfg;
  cfg.replace_relative_pronouns = true;
  CHECK(normalize_tweet("الذي", cfg) == "RELATIVE");
  CHECK(normalize_tweet("اللي كان", cfg) == "RELATIVE كان");
  CHECK(normalize_tweet("الذي،", cfg) == "RELATIVE،");
  // Clitic-attached spelling is a different token.
  CHECK(normalize_tweet("والذي", cfg) == "والذي");
  // Off by default.
  CHECK(normalize_tweet("الذي") == "الذي");
}

TEST_CASE("normalize_tweet is idempotent on random strings") {
  std::mt19937_64 rng(20260810);
  NormalizationConfig cfgs[3];
  cfgs[1].replace_relative_pronouns = true;
  cfgs[2].segment_hashtags = false;
  cfgs[2].replace_emoji = false;
  for (int iter = 0; iter < 1500; ++iter) {
    const std::string t = random_tweet(rng);
    for (const auto& cfg : cfgs) {
      const std::string once = normalize_tweet(t, cfg);
      const std::string twice = normalize_tweet(once, cfg);
      INFO("input: " << t << "\nonce: " << once << "\ntwice: " << twice);
      REQUIRE(once == twice);
    }
  }
}

TEST_CASE("normalized output carries no emoji or url patterns") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::string t = random_tweet(rng);
    const std::string norm = normalize_tweet(t);
    INFO("input: " << t << "\nnorm: " << norm);
    CHECK_FALSE(contains_emoji_cp(norm));
    CHECK_FALSE(contains_url_pattern(norm));
  }
}

TEST_CASE("tokenize splits punctuation and keeps placeholders") {
  CHECK(tokenize("مرحبا، أهلا").tokens == std::vector<std::string>{"مرحبا", "،", "أهلا"});
  CHECK(tokenize("@USER hi!").tokens == std::vector<std::string>{"@USER", "hi", "!"});
  CHECK(tokenize("").tokens.empty());
  CHECK(tokenize("(@USER)").tokens == std::vector<std::string>{"(", "@USER", ")"});
  CHECK(tokenize("x@USER").tokens == std::vector<std::string>{"x", "@", "USER"});
}

TEST_CASE("tokenize is stable under join") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::string t = random_tweet(rng);
    const auto once = tokenize(t).tokens;
    const auto twice = tokenize(join_tokens(once)).tokens;
    INFO("input: " << t);
    REQUIRE(once == twice);
    for (const auto& tok : once) {
      CHECK_FALSE(tok.empty());
      for (char c : tok) CHECK_FALSE(c == ' ');
    }
  }
}

TEST_CASE("segment_hashtag handles underscores and camel case") {
  CHECK(segment_hashtag("#Arab_World") == std::vector<std::string>{"Arab", "World"});
  CHECK(segment_hashtag("#ArabLeague") == std::vector<std::string>{"Arab", "League"});
  CHECK(segment_hashtag("#x") == std::vector<std::string>{"x"});
  CHECK(segment_hashtag("#تونس_الآن") == std::vector<std::string>{"تونس", "الآن"});
  // No leading '#': unchanged single token.
  CHECK(segment_hashtag("plain") == std::vector<std::string>{"plain"});
  // Degenerate tags with no content come back unchanged.
  CHECK(segment_hashtag("#") == std::vector<std::string>{"#"});
  CHECK(segment_hashtag("#_") == std::vector<std::string>{"#_"});
}

TEST_CASE("segment_hashtag yields clean constituents for real tags") {
  std::mt19937_64 rng(99);
  static const std::vector<std::string> parts = {"Arab", "World", "news", "تونس",
                                                 "اليوم", "Cup2026x", "go"};
  for (int iter = 0; iter < 500; ++iter) {
    std::string tag = "#";
    const std::size_t n = 1 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) {
      if (i) tag += '_';
      tag += parts[rng() % parts.size()];
    }
    const auto segs = segment_hashtag(tag);
    REQUIRE_FALSE(segs.empty());
    for (const auto& seg : segs) {
      CHECK_FALSE(seg.empty());
      CHECK(seg.find('_') == std::string::npos);
      CHECK(seg.find('#') == std::string::npos);
    }
  }
}
