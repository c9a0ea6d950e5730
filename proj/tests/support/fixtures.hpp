#pragma once

// Shared data for the test executables. Everything is loaded once per process.

#include <filesystem>
#include <memory>
#include <string>

#include "tossup/corpus.hpp"
#include "tossup/engines.hpp"

#ifndef TOSSUP_DATA_DIR
#error "TOSSUP_DATA_DIR must point at the repository data directory"
#endif

namespace fixtures {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(TOSSUP_DATA_DIR) / name;
}

inline const tossup::QuestionSet& corpus() {
  static const auto qs = tossup::load_question_set(data_path("fixture_corpus.json"));
  return qs;
}

inline const tossup::QuestionSet& table1() {
  static const auto qs = tossup::load_question_set(data_path("table1_questions.json"));
  return qs;
}

inline const tossup::Question& table1_question(std::size_t number) { return table1()[number - 1]; }

inline const tossup::AliasTable& aliases() {
  static const auto t = tossup::load_alias_table(data_path("aliases.tsv"));
  return t;
}

inline const tossup::CountryLexicon& lexicon() {
  static const auto lex = tossup::load_country_lexicon(data_path("countries.tsv"));
  return lex;
}

inline tossup::QuestionSet concat(const tossup::QuestionSet& a, const tossup::QuestionSet& b) {
  std::vector<tossup::Question> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return tossup::QuestionSet(std::move(all));
}

inline std::shared_ptr<const tossup::Engines> build(tossup::QuestionSet qs, tossup::BuzzConfig buzz = {}) {
  tossup::EngineInputs in;
  in.corpus = std::move(qs);
  in.aliases = aliases();
  in.lexicon = lexicon();
  in.buzz = buzz;
  return tossup::build_engines(std::move(in));
}

// Fixture corpus only; the ten sample questions are not indexed.
inline std::shared_ptr<const tossup::Engines> fixture_engines() {
  static const auto e = build(corpus());
  return e;
}

}  // namespace fixtures
