#include <map>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tossup/config.hpp"
#include "tossup/error.hpp"

using namespace tossup;
using namespace std::chrono_literals;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Io;
}

EnvLookup env_from(std::map<std::string, std::string> vars) {
  return [vars](const std::string& k) -> std::optional<std::string> {
    const auto it = vars.find(k);
    if (it == vars.end()) return std::nullopt;
    return it->second;
  };
}

}  // namespace

TEST(Config, ShippedFileLoads) {
  const auto cfg = load_config(fixtures::data_path("config.json"));
  EXPECT_EQ(cfg.corpus, fixtures::data_path("fixture_corpus.json"));
  EXPECT_EQ(cfg.aliases, fixtures::data_path("aliases.tsv"));
  EXPECT_EQ(cfg.host, "127.0.0.1");
  EXPECT_EQ(cfg.port, 8080);
  EXPECT_EQ(cfg.buzz.confidence_threshold, 0.5);
  EXPECT_EQ(cfg.buzz.grain, EvaluationGrain::PerSentence);
  EXPECT_EQ(cfg.snapshot_interval, 15s);
  EXPECT_EQ(cfg.weights.adversarial, 0.6);
  EXPECT_EQ(cfg.difficulty.seed, 13u);
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_TRUE(cfg.warnings().empty());
}

TEST(Config, DefaultsAndRelativePaths) {
  const auto cfg = parse_config(R"({"corpus": "c.json", "countries": "/abs/countries.tsv"})", "/base");
  EXPECT_EQ(cfg.corpus, std::filesystem::path("/base/c.json"));
  EXPECT_EQ(cfg.countries, std::filesystem::path("/abs/countries.tsv"));
  EXPECT_TRUE(cfg.aliases.empty());
  EXPECT_EQ(cfg.snapshot_interval, kDefaultSnapshotInterval);
  EXPECT_EQ(cfg.widgets.guesses, 10u);
  EXPECT_EQ(cfg.weights.diversity, 0.4);
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  EXPECT_EQ(code_of([] { parse_config(R"({"corpus": "c", "coprus": "d"})"); }), ErrorCode::InvalidConfig);
  EXPECT_EQ(code_of([] { parse_config(R"({"buzzer": {"taus": 0.5}})"); }), ErrorCode::InvalidConfig);
  EXPECT_EQ(code_of([] { parse_config(R"({"buzzer": {"grain": "per_paragraph"}})"); }), ErrorCode::InvalidConfig);
  EXPECT_EQ(code_of([] { parse_config(R"({"listen": "nohost"})"); }), ErrorCode::InvalidConfig);
  EXPECT_EQ(code_of([] { parse_config("[1, 2]"); }), ErrorCode::InvalidConfig);
  EXPECT_EQ(code_of([] { parse_config("{"); }), ErrorCode::InvalidConfig);
  EXPECT_EQ(code_of([] { load_config("/nonexistent/config.json"); }), ErrorCode::InvalidConfig);

  auto cfg = parse_config(R"({"corpus": "c", "buzzer": {"tau": 1.5}})");
  EXPECT_EQ(code_of([&] { cfg.validate(); }), ErrorCode::InvalidConfig);
  cfg = parse_config(R"({"corpus": "c", "game_weights": {"adversarial": 0.9, "diversity": 0.9}})");
  EXPECT_EQ(code_of([&] { cfg.validate(); }), ErrorCode::InvalidConfig);
  cfg = parse_config("{}");
  EXPECT_EQ(code_of([&] { cfg.validate(); }), ErrorCode::InvalidConfig);
}

TEST(Config, IntervalOutsideRangeWarnsOnly) {
  for (int s : {5, 25}) {
    auto cfg = parse_config(R"({"corpus": "c", "snapshot_interval_s": )" + std::to_string(s) + "}");
    EXPECT_NO_THROW(cfg.validate());
    ASSERT_EQ(cfg.warnings().size(), 1u) << s;
  }
  for (int s : {10, 20}) {
    auto cfg = parse_config(R"({"corpus": "c", "snapshot_interval_s": )" + std::to_string(s) + "}");
    EXPECT_TRUE(cfg.warnings().empty()) << s;
  }
}

TEST(Config, EnvironmentOverrides) {
  auto cfg = load_config(fixtures::data_path("config.json"));
  apply_env_overrides(cfg, env_from({{"TOSSUP_TAU", "0.8"},
                                     {"TOSSUP_GRAIN", "per_token"},
                                     {"TOSSUP_LISTEN", "0.0.0.0:9001"},
                                     {"TOSSUP_SNAPSHOT_INTERVAL", "12"},
                                     {"TOSSUP_GAME_WEIGHT_ADVERSARIAL", "0.7"},
                                     {"TOSSUP_CORPUS", "/elsewhere/c.json"}}));
  EXPECT_EQ(cfg.buzz.confidence_threshold, 0.8);
  EXPECT_EQ(cfg.buzz.grain, EvaluationGrain::PerToken);
  EXPECT_EQ(cfg.host, "0.0.0.0");
  EXPECT_EQ(cfg.port, 9001);
  EXPECT_EQ(cfg.snapshot_interval, 12s);
  EXPECT_DOUBLE_EQ(cfg.weights.adversarial + cfg.weights.diversity, 1.0);
  EXPECT_EQ(cfg.corpus, std::filesystem::path("/elsewhere/c.json"));
  EXPECT_NO_THROW(cfg.validate());

  auto untouched = load_config(fixtures::data_path("config.json"));
  apply_env_overrides(untouched, env_from({}));
  EXPECT_EQ(untouched.buzz.confidence_threshold, 0.5);
  EXPECT_EQ(code_of([&] { apply_env_overrides(untouched, env_from({{"TOSSUP_TAU", "high"}})); }),
            ErrorCode::InvalidConfig);
}

TEST(Config, LoadEngineInputs) {
  const auto cfg = load_config(fixtures::data_path("config.json"));
  const auto in = load_engine_inputs(cfg);
  EXPECT_EQ(in.corpus.size(), fixtures::corpus().size());
  EXPECT_FALSE(in.lexicon.entries.empty());
  EXPECT_FALSE(in.difficulty);
  EXPECT_EQ(in.difficulty_options.seed, 13u);

  auto bad = cfg;
  bad.corpus = "/nonexistent.json";
  EXPECT_EQ(code_of([&] { load_engine_inputs(bad); }), ErrorCode::Io);
  EXPECT_EQ(load_engine_inputs(bad, fixtures::table1()).corpus.size(), 10u);
}
