#pragma once

// The machine buzzer: evaluates growing prefixes of a draft and decides
// where the machine would buzz.
//
// Lock rule: the buzz position only locks when the top guess is both
// confident (>= threshold) and equivalent to the author's answer, directly or
// through the redirect-derived alias table. Once locked it never moves.
// Confident but wrong buzzes are tracked separately; each time the latest
// such position moves past every earlier one, a regression is counted.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tossup/corpus.hpp"
#include "tossup/index.hpp"

namespace tossup {

enum class EvaluationGrain { PerToken, PerSentence };

struct BuzzConfig {
  double confidence_threshold = 0.5;
  EvaluationGrain grain = EvaluationGrain::PerSentence;
  std::size_t top_k = 10;

  // Throws InvalidConfig unless threshold is in (0, 1] and top_k >= 2.
  void validate() const;
};

enum class MatchVia { Exact, Normalized, Alias };

std::string_view to_string(MatchVia via);

struct AnswerMatch {
  std::string user_answer;
  std::string machine_answer;
  bool verdict = false;
  std::optional<MatchVia> via;
};

struct BuzzEvaluation {
  std::size_t prefix_end = 0;
  std::vector<Guess> guesses;
  double confidence = 0.0;
  bool matches_user_answer = false;
};

struct BuzzState {
  bool locked = false;
  std::optional<std::size_t> lock_position;
  std::optional<std::size_t> current_position;  // latest confident-but-wrong buzz
  std::vector<BuzzEvaluation> history;
  std::size_t regression_events = 0;

  // Index into history where the running evaluation pass began.
  std::size_t pass_start = 0;
  // Furthest confident-but-wrong position seen; regressions are moves past it.
  std::optional<std::size_t> furthest_incorrect;

  // Position shown to the author: the lock if any, else the latest wrong buzz.
  std::optional<std::size_t> display_position() const {
    return locked ? lock_position : current_position;
  }
};

// Starts a new evaluation pass; prefix_end ordering is enforced per pass.
void begin_pass(BuzzState& state);

// First confident evaluation whose top guess did not match, if any.
const BuzzEvaluation* first_incorrect_buzz(const BuzzState& state, const BuzzConfig& cfg);

bool answers_match_exact(std::string_view user_answer, std::string_view machine_answer);
AnswerMatch answers_match(const AliasTable& aliases, std::string_view user_answer,
                          std::string_view machine_answer);

// Queries draft[0, prefix_end) only. Throws InvalidConfig if prefix_end is
// beyond the draft, WrongGrouping if the index is not answer-grouped.
BuzzEvaluation evaluate_prefix(const TfIdfIndex& ix, std::string_view draft, std::size_t prefix_end,
                               std::string_view user_answer, const AliasTable& aliases,
                               const BuzzConfig& cfg);

// Folds one evaluation into the state. Throws OutOfOrderEvaluation when
// prefix_end does not increase within the current pass.
BuzzState update_buzz_state(BuzzState state, BuzzEvaluation ev, const BuzzConfig& cfg);
void apply_evaluation(BuzzState& state, BuzzEvaluation ev, const BuzzConfig& cfg);

// Character offsets at which a draft is evaluated under the given grain.
std::vector<std::size_t> evaluation_points(std::string_view draft, EvaluationGrain grain);

// Evaluates every grain boundary of the full question, in order.
BuzzState replay_full_question(const TfIdfIndex& ix, const Question& question,
                               const AliasTable& aliases, const BuzzConfig& cfg);

}  // namespace tossup
