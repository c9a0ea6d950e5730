#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tossup/difficulty.hpp"
#include "tossup/error.hpp"
#include "tossup/text.hpp"

using namespace tossup;

namespace {

Question labeled(std::string id, std::string text, DifficultyLabel label) {
  return Question{std::move(id), std::move(text), "x", "", "", label, ""};
}

QuestionSet separable() {
  return QuestionSet({labeled("c1", "Varignon pseudovector dipole theorem.", DifficultyLabel::College),
                      labeled("c2", "Koussevitzky Takemitsu Connotations premiere.", DifficultyLabel::College),
                      labeled("h1", "Famous easy common simple clue.", DifficultyLabel::HighSchool),
                      labeled("h2", "Simple easy well known answer.", DifficultyLabel::HighSchool)});
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Io;
}

}  // namespace

TEST(TrainDifficulty, SeparableToySetIsLearned) {
  DifficultyTrainOptions opts;
  opts.epochs = 300;
  const auto c = train_difficulty(separable(), opts);
  for (const auto& q : separable()) EXPECT_EQ(classify_difficulty(c, q.text).label, q.difficulty) << q.id;
  EXPECT_EQ(c.weights().size(), c.vocabulary_size());
}

TEST(TrainDifficulty, InsufficientLabels) {
  const QuestionSet same({labeled("a", "one", DifficultyLabel::College), labeled("b", "two", DifficultyLabel::College),
                          labeled("c", "three", DifficultyLabel::College)});
  EXPECT_EQ(code_of([&] { train_difficulty(same); }), ErrorCode::InsufficientLabels);
  const QuestionSet one_each({labeled("a", "one", DifficultyLabel::College),
                              labeled("b", "two", DifficultyLabel::HighSchool),
                              labeled("c", "three", DifficultyLabel::Unlabeled)});
  EXPECT_EQ(code_of([&] { train_difficulty(one_each); }), ErrorCode::InsufficientLabels);
  EXPECT_EQ(code_of([&] { train_difficulty(fixtures::table1()); }), ErrorCode::InsufficientLabels);
}

TEST(TrainDifficulty, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<SparseVector> x;
  std::vector<double> y;
  for (int i = 0; i < 12; ++i) {
    SparseVector v;
    for (std::uint32_t f = 0; f < 5; ++f) {
      if (rng() % 3) v.emplace_back(f, n(rng));
    }
    x.push_back(v);
    y.push_back(static_cast<double>(rng() % 2));
  }
  std::vector<double> w(5);
  for (auto& v : w) v = n(rng);
  const double b = n(rng);
  const double l2 = 0.3;
  const auto g = logistic_loss_and_gradient(x, y, w, b, l2);
  const double h = 1e-6;
  auto rel_ok = [](double analytic, double numeric) {
    return std::abs(analytic - numeric) <= 1e-5 * std::max(1.0, std::abs(numeric));
  };
  for (std::size_t j = 0; j < w.size(); ++j) {
    auto wp = w, wm = w;
    wp[j] += h;
    wm[j] -= h;
    const double numeric =
        (logistic_loss_and_gradient(x, y, wp, b, l2).loss - logistic_loss_and_gradient(x, y, wm, b, l2).loss) / (2 * h);
    EXPECT_TRUE(rel_ok(g.weights[j], numeric)) << j << ": " << g.weights[j] << " vs " << numeric;
  }
  const double numeric_b =
      (logistic_loss_and_gradient(x, y, w, b + h, l2).loss - logistic_loss_and_gradient(x, y, w, b - h, l2).loss) /
      (2 * h);
  EXPECT_TRUE(rel_ok(g.bias, numeric_b)) << g.bias << " vs " << numeric_b;
}

TEST(TrainDifficulty, FixedSeedIsByteIdentical) {
  for (auto grain : {DifficultyGrain::PerQuestion, DifficultyGrain::PerSentence}) {
    DifficultyTrainOptions opts;
    opts.grain = grain;
    opts.seed = 99;
    const auto a = difficulty_model_to_json(train_difficulty(fixtures::corpus(), opts));
    const auto b = difficulty_model_to_json(train_difficulty(fixtures::corpus(), opts));
    EXPECT_EQ(a, b);
  }
}

TEST(TrainDifficulty, HeldOutBeatsMajorityBaseline) {
  const auto [train, held] = split_labeled(fixtures::corpus(), 0.2, 13);
  EXPECT_GT(held.size(), 50u);
  const auto c = train_difficulty(train);
  const auto e = evaluate_difficulty(c, train, held);
  EXPECT_EQ(e.examples, held.size());
  EXPECT_GE(e.accuracy, e.majority_baseline + 0.05);
}

TEST(SplitLabeled, DeterministicDisjointAndLabeledOnly) {
  const auto [a_train, a_held] = split_labeled(fixtures::corpus(), 0.25, 7);
  const auto [b_train, b_held] = split_labeled(fixtures::corpus(), 0.25, 7);
  EXPECT_EQ(question_set_to_json(a_train), question_set_to_json(b_train));
  EXPECT_EQ(question_set_to_json(a_held), question_set_to_json(b_held));
  std::set<std::string> ids;
  for (const auto& q : a_train) ids.insert(q.id);
  for (const auto& q : a_held) EXPECT_FALSE(ids.count(q.id));
  for (const auto& q : a_held) EXPECT_NE(q.difficulty, DifficultyLabel::Unlabeled);
}

TEST(ClassifyDifficulty, EmptyTextUsesBias) {
  for (auto grain : {DifficultyGrain::PerQuestion, DifficultyGrain::PerSentence}) {
    DifficultyTrainOptions opts;
    opts.grain = grain;
    const auto c = train_difficulty(fixtures::corpus(), opts);
    const auto p = classify_difficulty(c, "");
    EXPECT_DOUBLE_EQ(p.p_college, sigmoid(c.bias()));
    EXPECT_EQ(p.label, c.bias() >= 0 ? DifficultyLabel::College : DifficultyLabel::HighSchool);
    const auto oov = classify_difficulty(c, "zzqx wvvb");
    EXPECT_DOUBLE_EQ(oov.p_college, sigmoid(c.bias()));
  }
}

TEST(ClassifyDifficulty, ComplementSumsToOne) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100000; ++i) {
    DifficultyPrediction p;
    p.p_college = u(rng);
    ASSERT_EQ(p.p_college + p.p_high_school(), 1.0) << p.p_college;
  }
  const auto c = train_difficulty(fixtures::corpus());
  for (const auto& q : fixtures::table1()) {
    const auto p = classify_difficulty(c, q.text);
    EXPECT_EQ(p.p_college + p.p_high_school(), 1.0);
    EXPECT_GE(p.p_college, 0.0);
    EXPECT_LE(p.p_college, 1.0);
  }
}

TEST(ClassifyDifficulty, PerSentenceVotes) {
  DifficultyTrainOptions opts;
  opts.grain = DifficultyGrain::PerSentence;
  const auto c = train_difficulty(fixtures::corpus(), opts);
  for (const auto& q : fixtures::table1()) {
    const auto p = classify_difficulty(c, q.text);
    ASSERT_EQ(p.sentence_labels.size(), split_sentences(q.text).size());
    const auto college = std::count(p.sentence_labels.begin(), p.sentence_labels.end(), DifficultyLabel::College);
    const auto hs = static_cast<std::ptrdiff_t>(p.sentence_labels.size()) - college;
    if (college != hs) EXPECT_EQ(p.label, college > hs ? DifficultyLabel::College : DifficultyLabel::HighSchool);
  }
}

TEST(DifficultyModel, JsonRoundTrip) {
  DifficultyTrainOptions opts;
  opts.grain = DifficultyGrain::PerSentence;
  opts.seed = 5;
  const auto c = train_difficulty(fixtures::corpus(), opts);
  const auto text = difficulty_model_to_json(c);
  const auto again = difficulty_model_from_json(text);
  EXPECT_EQ(difficulty_model_to_json(again), text);
  EXPECT_EQ(again.grain(), DifficultyGrain::PerSentence);
  EXPECT_EQ(again.seed(), 5u);
  for (const auto& q : fixtures::table1()) {
    EXPECT_EQ(classify_difficulty(again, q.text).p_college, classify_difficulty(c, q.text).p_college);
  }
  EXPECT_EQ(code_of([] { difficulty_model_from_json("{\"format\":\"other\"}"); }), ErrorCode::MalformedFile);
}
