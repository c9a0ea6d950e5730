#pragma once

// One author's live draft: edits, periodic edit-history snapshots, the
// combined analysis report, and game-mode scoring on submission.

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tossup/buzzer.hpp"
#include "tossup/countries.hpp"
#include "tossup/difficulty.hpp"
#include "tossup/engines.hpp"
#include "tossup/index.hpp"
#include "tossup/pronunciation.hpp"

namespace tossup {

using Clock = std::chrono::system_clock;
using TimePoint = Clock::time_point;

inline constexpr std::chrono::seconds kDefaultSnapshotInterval{15};

struct GameClock {
  std::chrono::seconds duration{0};
  TimePoint started_at;

  TimePoint deadline() const { return started_at + duration; }
};

struct GameWeights {
  double adversarial = 0.6;
  double diversity = 0.4;

  void validate() const;
};

struct GameScore {
  double adversarial = 0.0;
  double diversity = 0.0;
  unsigned total = 0;
};

struct EditSnapshot {
  TimePoint at;
  std::string text;
  std::string answer;
  bool locked = false;
  std::optional<std::size_t> position;
};

struct WidgetSizes {
  std::size_t guesses = 10;
  std::size_t similar = 5;
  std::size_t evidence_terms = 10;
  std::size_t recommendations = 3;
};

struct WidgetError {
  std::string code;
  std::string message;
};

template <typename T>
struct Widget {
  T value{};
  std::optional<WidgetError> error;
};

struct BuzzSummary {
  bool locked = false;
  std::optional<std::size_t> position;
  std::optional<std::size_t> first_incorrect;
  std::size_t history_len = 0;
  std::size_t regression_events = 0;
};

struct CountryWidget {
  std::vector<CountryMention> mentions;
  std::vector<std::pair<std::string, std::size_t>> recommendations;
};

struct AnalysisReport {
  std::string hash;  // of (draft text, draft answer)
  std::size_t text_length = 0;
  Widget<std::vector<Guess>> guesses;
  BuzzSummary buzz;
  Widget<std::vector<EvidenceSpan>> evidence;
  Widget<std::vector<FlaggedWord>> pronunciation;
  Widget<CountryWidget> countries;
  Widget<std::vector<SimilarQuestion>> similar;
  Widget<std::optional<DifficultyPrediction>> difficulty;
  std::map<std::string, std::size_t> category_distribution;
};

struct SubmissionRecord {
  std::string session_id;
  std::string text;
  std::string answer;
  std::string category;
  std::optional<DifficultyPrediction> difficulty;
  std::optional<GameScore> game_score;
  std::vector<EditSnapshot> snapshots;
  std::vector<BuzzEvaluation> buzz_history;
  TimePoint submitted_at;
};

std::string draft_hash(std::string_view text, std::string_view answer);

class Session {
 public:
  Session(std::string id, TimePoint created_at, std::optional<GameClock> game = std::nullopt,
          std::string category = {});

  const std::string& id() const noexcept { return id_; }
  const std::string& draft_text() const noexcept { return text_; }
  const std::string& draft_answer() const noexcept { return answer_; }
  const std::string& category() const noexcept { return category_; }
  const BuzzState& buzz_state() const noexcept { return buzz_; }
  const std::vector<EditSnapshot>& snapshots() const noexcept { return snapshots_; }
  TimePoint created_at() const noexcept { return created_at_; }
  TimePoint last_edit_at() const noexcept { return last_edit_at_; }
  const std::optional<GameClock>& game() const noexcept { return game_; }
  bool finalized() const noexcept { return finalized_; }
  std::string content_hash() const { return draft_hash(text_, answer_); }

  // Full-text replacement. Re-runs the buzzer over the draft's grain
  // boundaries, keeping a lock while the text before it is unchanged.
  // Throws SessionFinalized or EditAfterDeadline.
  void apply_edit(const Engines& engines, std::string text, std::string answer, TimePoint now);

  // Records a snapshot when at least `interval` has passed since the last one
  // and the draft changed since then.
  std::optional<EditSnapshot> maybe_snapshot(TimePoint now,
                                             std::chrono::seconds interval = kDefaultSnapshotInterval);

  void set_category(std::string category) { category_ = std::move(category); }

  friend SubmissionRecord finalize_submission(Session& s, const AnalysisReport& report,
                                              const GameWeights& weights, TimePoint now);

 private:
  void run_buzz_pass(const Engines& engines);

  std::string id_;
  std::string text_;
  std::string answer_;
  std::string category_;
  BuzzState buzz_;
  std::vector<EditSnapshot> snapshots_;
  TimePoint created_at_;
  TimePoint last_edit_at_;
  std::optional<GameClock> game_;
  bool finalized_ = false;
  // (prefix, answer) hash -> evaluation; typing only re-evaluates new prefixes.
  std::unordered_map<std::string, BuzzEvaluation> eval_cache_;
};

// Pure given its inputs. A failing widget carries an error entry; the report
// itself always succeeds.
AnalysisReport analyze(const Session& s, const Engines& engines, const WidgetSizes& sizes = {});

// Throws StaleReport when the report was computed for a different draft.
GameScore score_submission(const Session& s, const AnalysisReport& report,
                           const GameWeights& weights = {});

// Freezes the session. Throws SessionFinalized, EmptyDraft or StaleReport.
SubmissionRecord finalize_submission(Session& s, const AnalysisReport& report,
                                     const GameWeights& weights, TimePoint now);

// UTC, millisecond precision: 2024-01-02T03:04:05.678Z
std::string to_iso8601(TimePoint t);

// Append-only JSON Lines store of submissions; safe for concurrent appends.
class SubmissionStore {
 public:
  explicit SubmissionStore(std::filesystem::path path) : path_(std::move(path)) {}
  void append(const SubmissionRecord& record);
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::mutex mutex_;
};

}  // namespace tossup
