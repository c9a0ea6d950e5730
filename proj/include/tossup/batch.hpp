#pragma once

// Headless runs over question files: each question is "typed" one
// evaluation boundary at a time through a Session, then analyzed.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "tossup/corpus.hpp"
#include "tossup/engines.hpp"
#include "tossup/session.hpp"
#include "tossup/wire.hpp"

namespace tossup {

struct QuestionRun {
  Question question;
  std::optional<Session> session;
  AnalysisReport report;
  std::string transcript;
  std::optional<WidgetError> error;
};

// Edits are spaced `step` apart starting at `start`, with a snapshot check
// after each one.
QuestionRun run_question(const Engines& engines, const Question& q, const WidgetSizes& sizes = {},
                         TimePoint start = TimePoint{}, std::chrono::seconds step = kDefaultSnapshotInterval,
                         std::chrono::seconds snapshot_interval = kDefaultSnapshotInterval);

// Inline markers: "[buzz]" after the locked position, and
// "[buzz] (*guess*)" after the first confident wrong buzz.
std::string render_transcript(std::string_view text, const BuzzState& state, const BuzzConfig& cfg);

std::string run_to_text(const QuestionRun& run, std::size_t number);
Json run_to_json(const QuestionRun& run);

struct BuzzerStats {
  std::size_t questions = 0;
  std::size_t locked_before_final_clue = 0;
  std::size_t locked_at_final_clue = 0;
  std::size_t never_locked = 0;
  std::size_t confident_wrong_first = 0;
  std::size_t regression_events = 0;
  // lock_position / length per question; empty when never locked.
  std::vector<std::optional<double>> lock_fractions;
};

BuzzerStats buzzer_stats(const std::vector<QuestionRun>& runs, const BuzzConfig& cfg);

}  // namespace tossup
