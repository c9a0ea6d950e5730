#pragma once

// Word-level country detection and underrepresentation recommendations.
//
// Matching runs over normalized token sequences, so a country can only match
// whole words: "Oman" never fires inside "Roman", nor "Mali" inside
// "formalized".

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tossup/corpus.hpp"

namespace tossup {

struct CountryMention {
  std::string country;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string region;

  friend bool operator==(const CountryMention&, const CountryMention&) = default;
};

// Lexicon indexed by first token; build once and reuse across requests.
class CountryMatcher {
 public:
  explicit CountryMatcher(CountryLexicon lexicon);

  // Longest match first, then leftmost; results in text order.
  std::vector<CountryMention> detect(std::string_view text) const;

  const CountryLexicon& lexicon() const noexcept { return lexicon_; }

 private:
  CountryLexicon lexicon_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_first_token_;
};

std::vector<CountryMention> detect_countries(const CountryLexicon& lex, std::string_view text);

struct RepresentationTable {
  std::map<std::string, std::size_t> counts;
  std::map<std::string, std::string> region_of;
  // Region -> countries ascending by count, ties by name.
  std::map<std::string, std::vector<std::string>> by_region;
};

RepresentationTable build_representation_table(const QuestionSet& qs, const CountryMatcher& matcher);
RepresentationTable build_representation_table(const QuestionSet& qs, const CountryLexicon& lex);

// For each region the draft mentions, the k rarest countries of that region
// not already mentioned; with no mentions, the k rarest overall. Output is
// ascending by count, ties by name.
std::vector<std::pair<std::string, std::size_t>> recommend_underrepresented(
    const RepresentationTable& rt, const std::vector<CountryMention>& mentions, std::size_t k);

}  // namespace tossup
