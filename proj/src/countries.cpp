#include "tossup/countries.hpp"

#include <algorithm>
#include <set>

#include "tossup/text.hpp"

namespace tossup {

CountryMatcher::CountryMatcher(CountryLexicon lexicon) : lexicon_(std::move(lexicon)) {
  for (std::size_t i = 0; i < lexicon_.entries.size(); ++i) {
    by_first_token_[lexicon_.entries[i].tokens.front()].push_back(i);
  }
}

std::vector<CountryMention> CountryMatcher::detect(std::string_view text) const {
  const auto tokens = tokenize(text);

  struct Candidate {
    std::size_t first;
    std::size_t length;
    std::size_t entry;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto it = by_first_token_.find(tokens[i].normalized);
    if (it == by_first_token_.end()) continue;
    for (auto e : it->second) {
      const auto& seq = lexicon_.entries[e].tokens;
      if (i + seq.size() > tokens.size()) continue;
      bool match = true;
      for (std::size_t j = 1; j < seq.size() && match; ++j) {
        match = tokens[i + j].normalized == seq[j];
      }
      if (match) candidates.push_back(Candidate{i, seq.size(), e});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.length != b.length) return a.length > b.length;
    if (a.first != b.first) return a.first < b.first;
    return a.entry < b.entry;
  });

  std::vector<char> taken(tokens.size(), 0);
  std::vector<Candidate> chosen;
  for (const auto& c : candidates) {
    bool free = true;
    for (std::size_t j = c.first; j < c.first + c.length && free; ++j) free = !taken[j];
    if (!free) continue;
    for (std::size_t j = c.first; j < c.first + c.length; ++j) taken[j] = 1;
    chosen.push_back(c);
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const Candidate& a, const Candidate& b) { return a.first < b.first; });

  std::vector<CountryMention> out;
  out.reserve(chosen.size());
  for (const auto& c : chosen) {
    const auto& entry = lexicon_.entries[c.entry];
    out.push_back(CountryMention{entry.name, tokens[c.first].start,
                                 tokens[c.first + c.length - 1].end, entry.region});
  }
  return out;
}

std::vector<CountryMention> detect_countries(const CountryLexicon& lex, std::string_view text) {
  return CountryMatcher(lex).detect(text);
}

RepresentationTable build_representation_table(const QuestionSet& qs, const CountryMatcher& matcher) {
  RepresentationTable rt;
  for (const auto& entry : matcher.lexicon().entries) {
    rt.counts.emplace(entry.name, 0);
    rt.region_of.emplace(entry.name, entry.region);
  }
  for (const auto& q : qs) {
    for (const auto& m : matcher.detect(q.text)) ++rt.counts[m.country];
  }
  for (const auto& [country, region] : rt.region_of) rt.by_region[region].push_back(country);
  for (auto& [region, countries] : rt.by_region) {
    std::sort(countries.begin(), countries.end(), [&](const std::string& a, const std::string& b) {
      const auto ca = rt.counts.at(a);
      const auto cb = rt.counts.at(b);
      return ca != cb ? ca < cb : a < b;
    });
  }
  return rt;
}

RepresentationTable build_representation_table(const QuestionSet& qs, const CountryLexicon& lex) {
  return build_representation_table(qs, CountryMatcher(lex));
}

std::vector<std::pair<std::string, std::size_t>> recommend_underrepresented(
    const RepresentationTable& rt, const std::vector<CountryMention>& mentions, std::size_t k) {
  std::set<std::string> mentioned;
  std::set<std::string> regions;
  for (const auto& m : mentions) {
    mentioned.insert(m.country);
    regions.insert(m.region);
  }

  auto take_rarest = [&](const std::vector<std::string>& ordered, auto& out) {
    std::size_t taken = 0;
    for (const auto& country : ordered) {
      if (taken == k) break;
      if (mentioned.count(country)) continue;
      out.emplace_back(country, rt.counts.at(country));
      ++taken;
    }
  };

  std::vector<std::pair<std::string, std::size_t>> out;
  if (mentions.empty()) {
    std::vector<std::string> all;
    for (const auto& [country, count] : rt.counts) all.push_back(country);
    std::sort(all.begin(), all.end(), [&](const std::string& a, const std::string& b) {
      const auto ca = rt.counts.at(a);
      const auto cb = rt.counts.at(b);
      return ca != cb ? ca < cb : a < b;
    });
    take_rarest(all, out);
    return out;
  }
  for (const auto& region : regions) {
    if (auto it = rt.by_region.find(region); it != rt.by_region.end()) take_rarest(it->second, out);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  return out;
}

}  // namespace tossup
