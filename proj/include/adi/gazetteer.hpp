#pragma once

// Country gazetteer: builds the term table (country names, major cities,
// nationality adjectives with generated variants) and matches normalized
// profile descriptions to a unique country.

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "adi/textnorm.hpp"

namespace adi {

// Table-order country codes; this order is also the canonical group order for
// the analysis module.
inline const std::array<std::string, 18>& supported_countries() {
  static const std::array<std::string, 18> codes = {
      "IQ", "BH", "KW", "SA", "AE", "OM", "QA", "YE", "SY",
      "JO", "PL", "LB", "EG", "SD", "LY", "TN", "DZ", "MA"};
  return codes;
}

inline bool is_supported_country(std::string_view code) {
  const auto& c = supported_countries();
  return std::find(c.begin(), c.end(), code) != c.end();
}

enum class TermCategory { country_name, city, nationality_adj };

inline std::string_view to_string(TermCategory c) {
  switch (c) {
    case TermCategory::country_name: return "country_name";
    case TermCategory::city: return "city";
    case TermCategory::nationality_adj: return "nationality_adj";
  }
  return "?";
}

struct GazetteerEntry {
  std::string term;
  std::string country;  // ISO 3166-1 alpha-2
  TermCategory category = TermCategory::country_name;
  std::string lang = "ar";  // ar | en | fr
};

struct CountryMatch {
  std::string country;  // set only when unambiguous
  std::vector<std::string> matched_terms;
  bool ambiguous = false;
};

class Gazetteer {
 public:
  struct TermInfo {
    std::vector<std::string> countries;  // sorted, unique
    std::string surface;                 // first-seen original spelling
  };

  std::unordered_map<std::string, TermInfo> terms;
  std::size_t max_term_tokens = 0;
  // Terms mapping to more than one country, detected at build time.
  std::vector<std::string> collisions;

  bool operator==(const Gazetteer& other) const {
    return terms == other.terms && max_term_tokens == other.max_term_tokens &&
           collisions == other.collisions;
  }
};

inline bool operator==(const Gazetteer::TermInfo& a, const Gazetteer::TermInfo& b) {
  return a.countries == b.countries && a.surface == b.surface;
}

namespace detail {

inline std::string ascii_fold(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
  return out;
}

// Canonical lookup key: tokenized, case-folded, space-joined.
inline std::vector<std::string> term_tokens(std::string_view term) {
  std::vector<std::string> toks = tokenize(term).tokens;
  for (auto& t : toks) t = ascii_fold(t);
  return toks;
}

inline std::string term_key(std::string_view term) {
  return join_tokens(term_tokens(term));
}

}  // namespace detail

// Expands nationality adjectives into the feminine and definite-article
// variants and indexes everything for token-sequence matching. Duplicate
// (term, country) pairs collapse; the same term under different countries is
// kept and flagged so ambiguity can surface at match time.
inline Gazetteer build_gazetteer(const std::vector<GazetteerEntry>& base_entries) {
  static const std::string fem_suffix = "ة";
  static const std::string def_article = "ال";

  Gazetteer gz;
  auto add = [&gz](const std::string& term, const std::string& country) {
    const std::string key = detail::term_key(term);
    if (key.empty()) return;
    auto [it, inserted] = gz.terms.try_emplace(key);
    if (inserted) it->second.surface = term;
    auto& countries = it->second.countries;
    if (std::find(countries.begin(), countries.end(), country) == countries.end())
      countries.push_back(country);
  };

  for (const auto& e : base_entries) {
    if (!is_supported_country(e.country)) {
      throw std::invalid_argument("gazetteer term '" + e.term +
                                  "': unsupported country code '" + e.country + "'");
    }
    if (e.lang != "ar" && e.lang != "en" && e.lang != "fr") {
      throw std::invalid_argument("gazetteer term '" + e.term + "': unsupported lang '" +
                                  e.lang + "'");
    }
    if (e.term.empty()) throw std::invalid_argument("gazetteer entry with empty term");
    add(e.term, e.country);
    if (e.category == TermCategory::nationality_adj && e.lang == "ar") {
      add(e.term + fem_suffix, e.country);
      add(def_article + e.term, e.country);
      add(def_article + e.term + fem_suffix, e.country);
    }
  }

  for (auto& [key, info] : gz.terms) {
    std::sort(info.countries.begin(), info.countries.end());
    gz.max_term_tokens = std::max(gz.max_term_tokens,
                                  detail::term_tokens(key).size());
    if (info.countries.size() > 1) gz.collisions.push_back(info.surface);
  }
  std::sort(gz.collisions.begin(), gz.collisions.end());
  return gz;
}

// Token-sequence matching, longest match first. The description must already
// be normalized with the default config.
inline std::optional<CountryMatch> match_country(std::string_view description,
                                                 const Gazetteer& gz) {
  const std::vector<std::string> tokens = detail::term_tokens(description);
  std::vector<std::string> countries;
  std::vector<std::string> matched;

  std::size_t i = 0;
  while (i < tokens.size()) {
    bool hit = false;
    const std::size_t longest = std::min(gz.max_term_tokens, tokens.size() - i);
    for (std::size_t len = longest; len >= 1; --len) {
      std::string key = tokens[i];
      for (std::size_t k = 1; k < len; ++k) {
        key += ' ';
        key += tokens[i + k];
      }
      const auto it = gz.terms.find(key);
      if (it == gz.terms.end()) continue;
      for (const auto& c : it->second.countries)
        if (std::find(countries.begin(), countries.end(), c) == countries.end())
          countries.push_back(c);
      const auto& surface = it->second.surface;
      if (std::find(matched.begin(), matched.end(), surface) == matched.end())
        matched.push_back(surface);
      i += len;
      hit = true;
      break;
    }
    if (!hit) ++i;
  }

  if (countries.empty()) return std::nullopt;
  CountryMatch m;
  m.matched_terms = std::move(matched);
  if (countries.size() == 1) {
    m.country = countries.front();
  } else {
    m.ambiguous = true;
  }
  return m;
}

// TSV format: term <TAB> country <TAB> category <TAB> lang. '#'-prefixed
// lines and blank lines are ignored.
inline std::vector<GazetteerEntry> parse_gazetteer_tsv(std::istream& in) {
  std::vector<GazetteerEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::array<std::string, 4> cols;
    std::size_t col = 0, start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == '\t') {
        if (col < cols.size()) cols[col] = line.substr(start, i - start);
        ++col;
        start = i + 1;
      }
    }
    if (col != 4) {
      throw std::runtime_error("gazetteer line " + std::to_string(lineno) +
                               ": expected 4 tab-separated columns");
    }
    GazetteerEntry e;
    e.term = cols[0];
    e.country = cols[1];
    if (cols[2] == "country_name") {
      e.category = TermCategory::country_name;
    } else if (cols[2] == "city") {
      e.category = TermCategory::city;
    } else if (cols[2] == "nationality_adj") {
      e.category = TermCategory::nationality_adj;
    } else {
      throw std::runtime_error("gazetteer line " + std::to_string(lineno) +
                               ": unknown category '" + cols[2] + "'");
    }
    e.lang = cols[3];
    entries.push_back(std::move(e));
  }
  return entries;
}

inline std::vector<GazetteerEntry> load_gazetteer_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open gazetteer file: " + path);
  return parse_gazetteer_tsv(in);
}

}  // namespace adi
