#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "tossup/buzzer.hpp"
#include "tossup/corpus.hpp"
#include "tossup/countries.hpp"
#include "tossup/difficulty.hpp"
#include "tossup/index.hpp"
#include "tossup/pronunciation.hpp"

namespace tossup {

// Everything a report needs, built once and shared read-only by all sessions.
struct Engines {
  TfIdfIndex guesser;     // answer-grouped
  TfIdfIndex similarity;  // per-question
  AliasTable aliases;
  CountryMatcher countries{CountryLexicon{}};
  RepresentationTable representation;
  PronunciationModel pronunciation;
  std::optional<DifficultyClassifier> difficulty;
  std::map<std::string, std::size_t> category_distribution;
  std::map<std::string, std::size_t> subcategory_distribution;
  BuzzConfig buzz;
  std::string corpus_hash;
};

struct EngineInputs {
  QuestionSet corpus;
  AliasTable aliases;
  CountryLexicon lexicon;
  // Used as-is when present; otherwise trained from the corpus if it carries
  // enough labels, else the difficulty widget reports an error.
  std::optional<DifficultyClassifier> difficulty;
  DifficultyTrainOptions difficulty_options;
  BuzzConfig buzz;
  double pronunciation_quantile = 0.95;
  std::size_t pronunciation_min_freq = 3;
};

std::shared_ptr<const Engines> build_engines(EngineInputs inputs);

}  // namespace tossup
