#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tossup/error.hpp"
#include "tossup/wire.hpp"

using namespace tossup;
using namespace std::chrono_literals;

namespace {

TimePoint at(double seconds) {
  return TimePoint{} + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

AnalysisReport report_for(const Question& question) {
  const auto& e = *fixtures::fixture_engines();
  Session s("s", at(0));
  s.apply_edit(e, question.text, question.answer, at(1));
  return analyze(s, e);
}

// Through text, as a client would see it.
AnalysisReport round_trip(const AnalysisReport& r) { return report_from_json(Json::parse(report_to_json(r).dump())); }

void expect_same(const AnalysisReport& a, const AnalysisReport& b) {
  EXPECT_EQ(a.hash, b.hash);
  EXPECT_EQ(a.text_length, b.text_length);
  ASSERT_EQ(a.guesses.value.size(), b.guesses.value.size());
  for (std::size_t i = 0; i < a.guesses.value.size(); ++i) {
    EXPECT_EQ(a.guesses.value[i].answer, b.guesses.value[i].answer);
    EXPECT_NEAR(a.guesses.value[i].score, b.guesses.value[i].score, 1e-9);
    EXPECT_NEAR(a.guesses.value[i].confidence, b.guesses.value[i].confidence, 1e-9);
  }
  ASSERT_EQ(a.evidence.value.size(), b.evidence.value.size());
  for (std::size_t i = 0; i < a.evidence.value.size(); ++i) {
    EXPECT_EQ(a.evidence.value[i].start, b.evidence.value[i].start);
    EXPECT_EQ(a.evidence.value[i].end, b.evidence.value[i].end);
    EXPECT_EQ(a.evidence.value[i].term, b.evidence.value[i].term);
    EXPECT_NEAR(a.evidence.value[i].contribution, b.evidence.value[i].contribution, 1e-9);
  }
  ASSERT_EQ(a.pronunciation.value.size(), b.pronunciation.value.size());
  for (std::size_t i = 0; i < a.pronunciation.value.size(); ++i) {
    EXPECT_EQ(a.pronunciation.value[i].token, b.pronunciation.value[i].token);
    EXPECT_NEAR(a.pronunciation.value[i].surprisal, b.pronunciation.value[i].surprisal, 1e-9);
    EXPECT_EQ(a.pronunciation.value[i].by_rarity, b.pronunciation.value[i].by_rarity);
  }
  ASSERT_EQ(a.countries.value.mentions.size(), b.countries.value.mentions.size());
  for (std::size_t i = 0; i < a.countries.value.mentions.size(); ++i) {
    EXPECT_EQ(a.countries.value.mentions[i].country, b.countries.value.mentions[i].country);
    EXPECT_EQ(a.countries.value.mentions[i].start, b.countries.value.mentions[i].start);
    EXPECT_EQ(a.countries.value.mentions[i].end, b.countries.value.mentions[i].end);
  }
  EXPECT_EQ(a.countries.value.recommendations, b.countries.value.recommendations);
  ASSERT_EQ(a.similar.value.size(), b.similar.value.size());
  for (std::size_t i = 0; i < a.similar.value.size(); ++i) {
    EXPECT_EQ(a.similar.value[i].id, b.similar.value[i].id);
    EXPECT_NEAR(a.similar.value[i].similarity, b.similar.value[i].similarity, 1e-9);
  }
  ASSERT_EQ(a.difficulty.value.has_value(), b.difficulty.value.has_value());
  if (a.difficulty.value) {
    EXPECT_EQ(a.difficulty.value->label, b.difficulty.value->label);
    EXPECT_NEAR(a.difficulty.value->p_college, b.difficulty.value->p_college, 1e-9);
  }
  EXPECT_EQ(a.buzz.locked, b.buzz.locked);
  EXPECT_EQ(a.buzz.position, b.buzz.position);
  EXPECT_EQ(a.buzz.first_incorrect, b.buzz.first_incorrect);
  EXPECT_EQ(a.buzz.history_len, b.buzz.history_len);
  EXPECT_EQ(a.category_distribution, b.category_distribution);
}

}  // namespace

TEST(WireReport, RoundTripsSampleQuestions) {
  for (const auto& q : fixtures::table1()) {
    SCOPED_TRACE(q.id);
    const auto r = report_for(q);
    expect_same(r, round_trip(r));
  }
}

TEST(WireReport, DoublesSurviveTextExactly) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    AnalysisReport r;
    r.guesses.value.push_back(Guess{"x", u(rng), std::ldexp(u(rng), -40)});
    r.similar.value.push_back(SimilarQuestion{"id", u(rng) / 3.0});
    const auto back = round_trip(r);
    ASSERT_EQ(back.guesses.value[0].score, r.guesses.value[0].score);
    ASSERT_EQ(back.guesses.value[0].confidence, r.guesses.value[0].confidence);
    ASSERT_EQ(back.similar.value[0].similarity, r.similar.value[0].similarity);
  }
}

TEST(WireReport, SpanShape) {
  const auto r = report_for(fixtures::table1_question(3));
  const auto j = report_to_json(r);
  std::set<std::string> kinds;
  for (const auto& s : j.at("spans")) {
    kinds.insert(s.at("kind").get<std::string>());
    EXPECT_LT(s.at("start").get<std::size_t>(), s.at("end").get<std::size_t>());
    EXPECT_LE(s.at("end").get<std::size_t>(), r.text_length);
    EXPECT_TRUE(s.at("payload").is_object());
  }
  EXPECT_TRUE(kinds.count("evidence"));
  EXPECT_TRUE(kinds.count("country"));
  for (const auto& k : kinds) EXPECT_TRUE(k == "evidence" || k == "pronunciation" || k == "country") << k;
  EXPECT_TRUE(j.at("buzz").contains("history_len"));
  EXPECT_TRUE(j.at("difficulty").contains("label"));
  EXPECT_TRUE(j.at("difficulty").contains("p"));
  EXPECT_TRUE(j.at("errors").empty());
}

TEST(WireReport, WidgetErrorsSurvive) {
  AnalysisReport r;
  r.difficulty.error = WidgetError{"InsufficientLabels", "no model"};
  const auto j = report_to_json(r);
  EXPECT_EQ(j.at("errors").at("difficulty").at("code"), "InsufficientLabels");
  const auto back = round_trip(r);
  ASSERT_TRUE(back.difficulty.error);
  EXPECT_EQ(back.difficulty.error->message, "no model");
}

TEST(WireReport, RejectsMalformed) {
  EXPECT_THROW(report_from_json(Json::object()), Error);
  auto j = report_to_json(report_for(fixtures::table1_question(3)));
  j["spans"].push_back({{"start", 0}, {"end", 1}, {"kind", "mystery"}, {"payload", Json::object()}});
  EXPECT_THROW(report_from_json(j), Error);
}

TEST(Snapshots, JsonLinesShape) {
  std::vector<EditSnapshot> snaps = {{at(0), "a \"quoted\"\nline", "x", false, std::nullopt},
                                     {at(16.5), "b", "y", true, 7}};
  const auto text = snapshots_to_jsonl(snaps);
  std::istringstream in(text);
  std::string line;
  std::vector<Json> lines;
  while (std::getline(in, line)) lines.push_back(Json::parse(line));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].at("at"), "1970-01-01T00:00:00.000Z");
  EXPECT_EQ(lines[0].at("text"), "a \"quoted\"\nline");
  EXPECT_TRUE(lines[0].at("buzz").at("position").is_null());
  EXPECT_FALSE(lines[0].at("buzz").at("locked").get<bool>());
  EXPECT_EQ(lines[1].at("at"), "1970-01-01T00:00:16.500Z");
  EXPECT_EQ(lines[1].at("buzz").at("position"), 7);
  EXPECT_EQ(snapshots_to_jsonl({}), "");
}

TEST(Submission, OneLineWithHistories) {
  const auto& e = *fixtures::fixture_engines();
  Session s("s", at(0), GameClock{300s, at(0)}, "Literature");
  const auto& q3 = fixtures::table1_question(3);
  s.apply_edit(e, q3.text, q3.answer, at(1));
  s.maybe_snapshot(at(1));
  const auto rec = finalize_submission(s, analyze(s, e), {}, at(2));
  const auto line = submission_to_json(rec);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const auto j = Json::parse(line);
  EXPECT_EQ(j.at("answer"), "Candide");
  EXPECT_EQ(j.at("category"), "Literature");
  EXPECT_EQ(j.at("snapshots").size(), 1u);
  EXPECT_EQ(j.at("buzz_history").size(), rec.buzz_history.size());
  EXPECT_TRUE(j.at("game_score").contains("total"));
  EXPECT_TRUE(j.at("difficulty").contains("label"));
}
