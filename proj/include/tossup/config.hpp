#pragma once

// Service and CLI configuration: one JSON file plus TOSSUP_* environment
// overrides. Relative paths resolve against the config file's directory.

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tossup/buzzer.hpp"
#include "tossup/difficulty.hpp"
#include "tossup/engines.hpp"
#include "tossup/session.hpp"

namespace tossup {

struct Config {
  std::filesystem::path corpus;
  std::filesystem::path aliases;
  std::filesystem::path countries;
  std::filesystem::path difficulty_model;  // empty: train from the corpus at startup
  std::filesystem::path submissions = "submissions.jsonl";
  std::filesystem::path dump_dir;          // empty: dumps only served over HTTP

  std::string host = "127.0.0.1";
  int port = 8080;

  BuzzConfig buzz;
  std::chrono::seconds snapshot_interval = kDefaultSnapshotInterval;
  WidgetSizes widgets;
  GameWeights weights;
  DifficultyTrainOptions difficulty;
  double pronunciation_quantile = 0.95;
  std::size_t pronunciation_min_freq = 3;

  // Throws InvalidConfig.
  void validate() const;
  // Non-fatal issues, e.g. a snapshot interval outside 10-20 s.
  std::vector<std::string> warnings() const;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

std::optional<std::string> process_env(const std::string& name);

// Unknown keys are rejected so typos surface. Throws InvalidConfig.
Config parse_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
Config load_config(const std::filesystem::path& path);

// TOSSUP_CORPUS, TOSSUP_ALIASES, TOSSUP_COUNTRIES, TOSSUP_DIFFICULTY_MODEL,
// TOSSUP_SUBMISSIONS, TOSSUP_DUMP_DIR, TOSSUP_LISTEN (host:port), TOSSUP_TAU,
// TOSSUP_GRAIN, TOSSUP_SNAPSHOT_INTERVAL, TOSSUP_GAME_WEIGHT_ADVERSARIAL.
void apply_env_overrides(Config& cfg, const EnvLookup& env = process_env);

EvaluationGrain parse_evaluation_grain(std::string_view s);
std::string_view to_string(EvaluationGrain g);

// Reads every data file named by the config. Aliases and countries are
// optional; the corpus is read from cfg.corpus unless one is passed in.
EngineInputs load_engine_inputs(const Config& cfg, std::optional<QuestionSet> corpus = std::nullopt);

}  // namespace tossup
