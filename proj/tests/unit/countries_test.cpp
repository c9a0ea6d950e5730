#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tossup/countries.hpp"
#include "tossup/text.hpp"

using namespace tossup;

namespace {

const CountryMatcher& matcher() {
  static const CountryMatcher m(fixtures::lexicon());
  return m;
}

std::vector<std::string> names_of(const std::vector<CountryMention>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.country);
  return out;
}

std::vector<std::string> lexicon_names() {
  std::vector<std::string> out;
  for (const auto& e : fixtures::lexicon().entries) out.push_back(e.name);
  return out;
}

const RepresentationTable& fixture_table() {
  static const auto rt = build_representation_table(fixtures::corpus(), matcher());
  return rt;
}

Question q(std::string id, std::string text) {
  return Question{std::move(id), std::move(text), "a", "", "", DifficultyLabel::Unlabeled, ""};
}

}  // namespace

TEST(DetectCountries, WordLevelExamples) {
  EXPECT_TRUE(matcher().detect("name this Roman historian").empty());
  EXPECT_TRUE(matcher().detect("formalized the \"Siete Leyes\"").empty());
  const auto p = matcher().detect("received by Jesuits in Paraguay");
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].country, "Paraguay");
  EXPECT_EQ(p[0].start, 23u);
  EXPECT_EQ(p[0].end, 31u);
  EXPECT_EQ(p[0].region, "South America");
}

TEST(DetectCountries, MultiWordAndLongestFirst) {
  const auto bf = matcher().detect("name this West African country, Burkina Faso.");
  ASSERT_EQ(bf.size(), 1u);
  EXPECT_EQ(bf[0].country, "Burkina Faso");
  EXPECT_EQ(bf[0].start, 32u);
  EXPECT_EQ(bf[0].end, 44u);

  std::istringstream lex_in("Guinea\tWest Africa\nEquatorial Guinea\tCentral Africa\nPapua New Guinea\tOceania\n");
  const CountryMatcher m(parse_country_lexicon(lex_in));
  EXPECT_EQ(names_of(m.detect("Equatorial Guinea borders Gabon; Guinea is elsewhere, as is Papua New Guinea.")),
            (std::vector<std::string>{"Equatorial Guinea", "Guinea", "Papua New Guinea"}));
}

TEST(DetectCountries, CaseAndDiacriticsFold) {
  EXPECT_EQ(names_of(matcher().detect("PERU and peru and Perú")), (std::vector<std::string>{"Peru", "Peru", "Peru"}));
}

TEST(DetectCountries, SampleQuestionGoldens) {
  EXPECT_EQ(names_of(matcher().detect(fixtures::table1_question(3).text)), (std::vector<std::string>{"Paraguay"}));
  for (std::size_t n : {2, 5, 8}) {
    for (const auto& m : matcher().detect(fixtures::table1_question(n).text)) {
      EXPECT_NE(m.country, "Oman") << "question " << n;
      EXPECT_NE(m.country, "Mali") << "question " << n;
    }
  }
}

TEST(DetectCountries, LegacySubstringSearchReproducesFalsePositives) {
  const auto names = lexicon_names();
  auto legacy = [&](std::size_t n) { return oracle::legacy_substring_countries(names, fixtures::table1_question(n).text); };
  auto has = [](const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  EXPECT_TRUE(has(legacy(2), "Oman"));  // "Roman"
  EXPECT_TRUE(has(legacy(5), "Mali"));  // "formalized"
  EXPECT_TRUE(has(legacy(8), "Oman"));  // "woman"
  EXPECT_TRUE(has(legacy(3), "Paraguay"));
}

TEST(DetectCountriesProperty, MatchesOnlyWholeTokens) {
  std::mt19937_64 rng(29);
  const std::vector<std::string> words = {"Roman", "woman", "formalized", "Omani", "Chadian", "Peruse", "Oman",
                                          "Mali",  "Chad",  "Peru",       "New",   "Guinea",  "Papua",  "Equatorial",
                                          "the",   "Iran",  "Iranian",    "South", "Sudan",   "Sudanese", "Niger",
                                          "Nigeria", "Nigerian", "-", ",", "'s", "Burkina", "Faso"};
  for (int iter = 0; iter < 3000; ++iter) {
    std::string text;
    for (std::size_t i = 0, n = rng() % 12; i < n; ++i) {
      const auto& w = words[rng() % words.size()];
      if (!text.empty() && w != "'s" && w != ",") text += ' ';
      text += w;
    }
    const auto tokens = tokenize(text);
    std::set<std::size_t> starts, ends;
    for (const auto& t : tokens) {
      starts.insert(t.start);
      ends.insert(t.end);
    }
    const CharIndex chars(text);
    std::size_t prev_end = 0;
    for (const auto& m : matcher().detect(text)) {
      ASSERT_TRUE(starts.count(m.start)) << text;
      ASSERT_TRUE(ends.count(m.end)) << text;
      ASSERT_GE(m.start, prev_end);
      prev_end = m.end;
      std::vector<std::string> seq;
      for (auto& t : tokenize(chars.slice(m.start, m.end))) seq.push_back(t.normalized);
      const auto it = std::find_if(fixtures::lexicon().entries.begin(), fixtures::lexicon().entries.end(),
                                   [&](const CountryEntry& e) { return e.name == m.country; });
      ASSERT_NE(it, fixtures::lexicon().entries.end());
      ASSERT_EQ(seq, it->tokens) << text;
    }
  }
}

TEST(RepresentationTable, ZeroAndSingleMention) {
  const auto none = build_representation_table(QuestionSet({q("a", "No places named here.")}), matcher());
  for (const auto& [c, n] : none.counts) EXPECT_EQ(n, 0u) << c;
  EXPECT_EQ(none.counts.size(), fixtures::lexicon().entries.size());

  const auto one = build_representation_table(
      QuestionSet({q("a", "received by Jesuits in Paraguay"), q("b", "nothing here")}), matcher());
  EXPECT_EQ(one.counts.at("Paraguay"), 1u);
}

TEST(RepresentationTable, FixtureCountsMatchRecount) {
  std::vector<std::pair<std::string, std::vector<std::string>>> names;
  for (const auto& e : fixtures::lexicon().entries) names.emplace_back(e.name, e.tokens);
  std::vector<std::string> texts;
  for (const auto& question : fixtures::corpus()) texts.push_back(question.text);
  const auto want = oracle::recount_countries(names, texts);
  EXPECT_EQ(fixture_table().counts, want);
  EXPECT_EQ(want.at("Paraguay"), 5u);
  EXPECT_EQ(want.at("Bolivia"), 2u);
  EXPECT_EQ(want.at("Suriname"), 0u);
}

TEST(RepresentationTable, RegionOrderingConsistentWithCounts) {
  const auto& rt = fixture_table();
  for (const auto& [region, countries] : rt.by_region) {
    for (std::size_t i = 1; i < countries.size(); ++i) {
      const auto a = rt.counts.at(countries[i - 1]);
      const auto b = rt.counts.at(countries[i]);
      EXPECT_TRUE(a < b || (a == b && countries[i - 1] < countries[i])) << region;
    }
  }
}

TEST(Recommend, SouthAmericaFromParaguay) {
  const auto mentions = matcher().detect("received by Jesuits in Paraguay");
  const auto rec = recommend_underrepresented(fixture_table(), mentions, 2);
  EXPECT_EQ(rec, (std::vector<std::pair<std::string, std::size_t>>{{"Suriname", 0}, {"Bolivia", 2}}));
}

TEST(Recommend, NoMentionsGivesGlobalRarest) {
  const auto& rt = fixture_table();
  const auto rec = recommend_underrepresented(rt, {}, 1);
  ASSERT_EQ(rec.size(), 1u);
  std::pair<std::size_t, std::string> best{SIZE_MAX, ""};
  for (const auto& [c, n] : rt.counts) best = std::min(best, std::make_pair(n, c));
  EXPECT_EQ(rec[0].first, best.second);
  EXPECT_EQ(rec[0].second, best.first);
}

TEST(Recommend, LargeKTruncatesToRegion) {
  const auto& rt = fixture_table();
  const auto mentions = matcher().detect("Jesuits in Paraguay");
  const auto rec = recommend_underrepresented(rt, mentions, 1000);
  EXPECT_EQ(rec.size(), rt.by_region.at("South America").size() - 1);
  for (const auto& [c, n] : rec) EXPECT_NE(c, "Paraguay");
}

TEST(RecommendProperty, DisjointFromMentionsAndAscending) {
  std::mt19937_64 rng(31);
  const auto names = lexicon_names();
  for (int iter = 0; iter < 500; ++iter) {
    std::string text;
    for (std::size_t i = 0, n = rng() % 4; i < n; ++i) text += "in " + names[rng() % names.size()] + " and ";
    const auto mentions = matcher().detect(text);
    const auto rec = recommend_underrepresented(fixture_table(), mentions, 1 + rng() % 5);
    std::set<std::string> mentioned;
    for (const auto& m : mentions) mentioned.insert(m.country);
    for (std::size_t i = 0; i < rec.size(); ++i) {
      EXPECT_FALSE(mentioned.count(rec[i].first)) << text;
      if (i) {
        EXPECT_TRUE(rec[i - 1].second < rec[i].second ||
                    (rec[i - 1].second == rec[i].second && rec[i - 1].first < rec[i].first));
      }
    }
  }
}
