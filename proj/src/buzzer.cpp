#include "tossup/buzzer.hpp"

#include <algorithm>

#include "tossup/error.hpp"
#include "tossup/text.hpp"

namespace tossup {

void BuzzConfig::validate() const {
  if (!(confidence_threshold > 0.0 && confidence_threshold <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig,
                "confidence threshold must be in (0, 1], got " + std::to_string(confidence_threshold));
  }
  if (top_k < 2) {
    throw Error(ErrorCode::InvalidConfig, "top_k must be at least 2");
  }
}

std::string_view to_string(MatchVia via) {
  switch (via) {
    case MatchVia::Exact: return "exact";
    case MatchVia::Normalized: return "normalized";
    case MatchVia::Alias: return "alias";
  }
  return "exact";
}

void begin_pass(BuzzState& state) { state.pass_start = state.history.size(); }

const BuzzEvaluation* first_incorrect_buzz(const BuzzState& state, const BuzzConfig& cfg) {
  for (const auto& ev : state.history) {
    if (!ev.guesses.empty() && ev.confidence >= cfg.confidence_threshold && !ev.matches_user_answer) {
      return &ev;
    }
  }
  return nullptr;
}

bool answers_match_exact(std::string_view user_answer, std::string_view machine_answer) {
  return user_answer == machine_answer;
}

AnswerMatch answers_match(const AliasTable& aliases, std::string_view user_answer,
                          std::string_view machine_answer) {
  AnswerMatch m{std::string(user_answer), std::string(machine_answer), false, std::nullopt};
  if (user_answer.empty() || machine_answer.empty()) return m;
  if (answers_match_exact(user_answer, machine_answer)) {
    m.verdict = true;
    m.via = MatchVia::Exact;
    return m;
  }
  const std::string user_norm = normalize_answer(user_answer);
  const std::string machine_norm = normalize_answer(machine_answer);
  if (!user_norm.empty() && user_norm == machine_norm) {
    m.verdict = true;
    m.via = MatchVia::Normalized;
    return m;
  }
  auto resolve = [&](std::string_view name, const std::string& norm) {
    auto canonical = aliases.lookup(name);
    return canonical ? normalize_answer(*canonical) : norm;
  };
  const std::string user_entity = resolve(user_answer, user_norm);
  if (!user_entity.empty() && user_entity == resolve(machine_answer, machine_norm)) {
    m.verdict = true;
    m.via = MatchVia::Alias;
  }
  return m;
}

BuzzEvaluation evaluate_prefix(const TfIdfIndex& ix, std::string_view draft, std::size_t prefix_end,
                               std::string_view user_answer, const AliasTable& aliases,
                               const BuzzConfig& cfg) {
  if (ix.grouping() != Grouping::ByAnswer) {
    throw Error(ErrorCode::WrongGrouping, "the buzzer needs an answer-grouped index");
  }
  const CharIndex chars(draft);
  if (prefix_end > chars.size()) {
    throw Error(ErrorCode::InvalidConfig, "prefix end " + std::to_string(prefix_end) +
                                              " is past the draft length " +
                                              std::to_string(chars.size()));
  }
  BuzzEvaluation ev;
  ev.prefix_end = prefix_end;
  ev.guesses = query(ix, chars.slice(0, prefix_end), cfg.top_k);
  if (!ev.guesses.empty()) {
    ev.confidence = ev.guesses.front().confidence;
    ev.matches_user_answer = answers_match(aliases, user_answer, ev.guesses.front().answer).verdict;
  }
  return ev;
}

void apply_evaluation(BuzzState& state, BuzzEvaluation ev, const BuzzConfig& cfg) {
  if (state.history.size() > state.pass_start &&
      ev.prefix_end <= state.history.back().prefix_end) {
    throw Error(ErrorCode::OutOfOrderEvaluation,
                "prefix end " + std::to_string(ev.prefix_end) + " does not follow " +
                    std::to_string(state.history.back().prefix_end));
  }
  const bool confident = !ev.guesses.empty() && ev.confidence >= cfg.confidence_threshold;
  if (!state.locked && confident) {
    if (ev.matches_user_answer) {
      state.locked = true;
      state.lock_position = ev.prefix_end;
    } else {
      state.current_position = ev.prefix_end;
      if (state.furthest_incorrect && ev.prefix_end > *state.furthest_incorrect) {
        ++state.regression_events;
      }
      state.furthest_incorrect = std::max(state.furthest_incorrect.value_or(0), ev.prefix_end);
    }
  }
  state.history.push_back(std::move(ev));
}

BuzzState update_buzz_state(BuzzState state, BuzzEvaluation ev, const BuzzConfig& cfg) {
  apply_evaluation(state, std::move(ev), cfg);
  return state;
}

std::vector<std::size_t> evaluation_points(std::string_view draft, EvaluationGrain grain) {
  std::vector<std::size_t> points;
  if (grain == EvaluationGrain::PerSentence) {
    for (const auto& s : split_sentences(draft)) points.push_back(s.end);
  } else {
    for (const auto& t : tokenize(draft)) points.push_back(t.end);
  }
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

BuzzState replay_full_question(const TfIdfIndex& ix, const Question& question,
                               const AliasTable& aliases, const BuzzConfig& cfg) {
  cfg.validate();
  BuzzState state;
  begin_pass(state);
  for (auto end : evaluation_points(question.text, cfg.grain)) {
    apply_evaluation(state, evaluate_prefix(ix, question.text, end, question.answer, aliases, cfg),
                     cfg);
  }
  return state;
}

}  // namespace tossup
