#include "tossup/session.hpp"

#include <cmath>
#include <ctime>
#include <fstream>

#include "tossup/error.hpp"
#include "tossup/hash.hpp"
#include "tossup/text.hpp"
#include "tossup/wire.hpp"

namespace tossup {

namespace {

constexpr std::size_t kEvalCacheLimit = 4096;

template <typename T, typename Fn>
void fill_widget(Widget<T>& widget, Fn&& compute) {
  try {
    widget.value = compute();
  } catch (const Error& e) {
    widget.error = WidgetError{std::string(to_string(e.code())), e.what()};
  } catch (const std::exception& e) {
    widget.error = WidgetError{"Internal", e.what()};
  }
}

}  // namespace

void GameWeights::validate() const {
  if (adversarial < 0.0 || diversity < 0.0 || std::abs(adversarial + diversity - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidConfig, "game weights must be non-negative and sum to 1");
  }
}

std::string draft_hash(std::string_view text, std::string_view answer) {
  return Fnv1a().update(text).update(std::string_view("\0", 1)).update(answer).hex();
}

Session::Session(std::string id, TimePoint created_at, std::optional<GameClock> game,
                 std::string category)
    : id_(std::move(id)),
      category_(std::move(category)),
      created_at_(created_at),
      last_edit_at_(created_at),
      game_(game) {}

void Session::apply_edit(const Engines& engines, std::string text, std::string answer, TimePoint now) {
  if (finalized_) throw Error(ErrorCode::SessionFinalized, "session " + id_ + " is finalized");
  if (game_ && now > game_->deadline()) {
    throw Error(ErrorCode::EditAfterDeadline, "the game clock for session " + id_ + " has expired");
  }
  last_edit_at_ = std::max(now, created_at_);
  if (text == text_ && answer == answer_) return;

  bool reset = answer != answer_;
  if (!reset && buzz_.locked) {
    const CharIndex before(text_);
    const CharIndex after(text);
    const std::size_t lock = *buzz_.lock_position;
    reset = after.size() < lock || after.slice(0, lock) != before.slice(0, lock);
  }
  if (reset) buzz_ = BuzzState{};
  text_ = std::move(text);
  answer_ = std::move(answer);
  run_buzz_pass(engines);
}

void Session::run_buzz_pass(const Engines& engines) {
  if (buzz_.locked) return;
  if (eval_cache_.size() > kEvalCacheLimit) eval_cache_.clear();
  const CharIndex chars(text_);
  begin_pass(buzz_);
  for (const auto end : evaluation_points(text_, engines.buzz.grain)) {
    const std::string_view prefix = chars.slice(0, end);
    const std::string key = draft_hash(prefix, answer_);
    auto it = eval_cache_.find(key);
    if (it == eval_cache_.end()) {
      auto ev = evaluate_prefix(engines.guesser, prefix, end, answer_, engines.aliases, engines.buzz);
      it = eval_cache_.emplace(key, std::move(ev)).first;
    }
    apply_evaluation(buzz_, it->second, engines.buzz);
    if (buzz_.locked) break;
  }
}

std::optional<EditSnapshot> Session::maybe_snapshot(TimePoint now, std::chrono::seconds interval) {
  if (!snapshots_.empty()) {
    const auto& last = snapshots_.back();
    if (now <= last.at || now - last.at < interval) return std::nullopt;
    if (last.text == text_ && last.answer == answer_) return std::nullopt;
  } else if (text_.empty() && answer_.empty()) {
    return std::nullopt;
  }
  EditSnapshot snap{now, text_, answer_, buzz_.locked, buzz_.display_position()};
  snapshots_.push_back(snap);
  return snap;
}

AnalysisReport analyze(const Session& s, const Engines& engines, const WidgetSizes& sizes) {
  AnalysisReport report;
  const std::string& text = s.draft_text();
  report.hash = s.content_hash();
  report.text_length = char_length(text);
  report.category_distribution = engines.category_distribution;

  const BuzzState& buzz = s.buzz_state();
  report.buzz.locked = buzz.locked;
  report.buzz.position = buzz.display_position();
  if (const auto* wrong = first_incorrect_buzz(buzz, engines.buzz)) {
    report.buzz.first_incorrect = wrong->prefix_end;
  }
  report.buzz.history_len = buzz.history.size();
  report.buzz.regression_events = buzz.regression_events;

  if (text.empty()) return report;

  fill_widget(report.guesses, [&] { return query(engines.guesser, text, sizes.guesses); });
  fill_widget(report.evidence, [&] {
    if (report.guesses.value.empty()) return std::vector<EvidenceSpan>{};
    return evidence(engines.guesser, text, report.guesses.value.front().answer, sizes.evidence_terms);
  });
  fill_widget(report.pronunciation, [&] { return flag_hard_words(engines.pronunciation, text); });
  fill_widget(report.countries, [&] {
    CountryWidget w;
    w.mentions = engines.countries.detect(text);
    w.recommendations = recommend_underrepresented(engines.representation, w.mentions,
                                                   sizes.recommendations);
    return w;
  });
  fill_widget(report.similar, [&] { return similar_questions(engines.similarity, text, sizes.similar); });
  fill_widget(report.difficulty, [&]() -> std::optional<DifficultyPrediction> {
    if (!engines.difficulty) {
      throw Error(ErrorCode::InsufficientLabels, "no difficulty model is loaded");
    }
    return classify_difficulty(*engines.difficulty, text);
  });
  return report;
}

GameScore score_submission(const Session& s, const AnalysisReport& report, const GameWeights& weights) {
  weights.validate();
  if (report.hash != s.content_hash()) {
    throw Error(ErrorCode::StaleReport, "report does not match the current draft");
  }
  GameScore score;
  const auto& buzz = s.buzz_state();
  const std::size_t length = char_length(s.draft_text());
  if (!buzz.locked || length == 0) {
    score.adversarial = 1.0;
  } else {
    score.adversarial = static_cast<double>(*buzz.lock_position) / static_cast<double>(length);
  }
  double max_similarity = 0.0;
  if (!report.similar.error) {
    for (const auto& sq : report.similar.value) max_similarity = std::max(max_similarity, sq.similarity);
  }
  score.diversity = std::clamp(1.0 - max_similarity, 0.0, 1.0);
  score.adversarial = std::clamp(score.adversarial, 0.0, 1.0);
  score.total = static_cast<unsigned>(
      std::lround(100.0 * (weights.adversarial * score.adversarial + weights.diversity * score.diversity)));
  return score;
}

SubmissionRecord finalize_submission(Session& s, const AnalysisReport& report,
                                     const GameWeights& weights, TimePoint now) {
  if (s.finalized_) throw Error(ErrorCode::SessionFinalized, "session " + s.id_ + " is finalized");
  if (s.text_.empty() || s.answer_.empty()) {
    throw Error(ErrorCode::EmptyDraft, "a submission needs both question text and an answer");
  }
  if (report.hash != s.content_hash()) {
    throw Error(ErrorCode::StaleReport, "report does not match the current draft");
  }
  SubmissionRecord record;
  record.session_id = s.id_;
  record.text = s.text_;
  record.answer = s.answer_;
  record.category = s.category_;
  if (!report.difficulty.error) record.difficulty = report.difficulty.value;
  if (s.game_) record.game_score = score_submission(s, report, weights);
  record.snapshots = s.snapshots_;
  record.buzz_history = s.buzz_.history;
  record.submitted_at = now;
  s.finalized_ = true;
  return record;
}

std::string to_iso8601(TimePoint t) {
  const auto since_epoch = t.time_since_epoch();
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(since_epoch);
  auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(since_epoch - secs).count();
  if (millis < 0) {
    millis += 1000;
    secs -= std::chrono::seconds(1);
  }
  const std::time_t tt = static_cast<std::time_t>(secs.count());
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[48];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(millis));
  return out;
}

void SubmissionStore::append(const SubmissionRecord& record) {
  const std::string line = submission_to_json(record) + "\n";
  std::lock_guard lock(mutex_);
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot append to " + path_.string());
  out << line;
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "short write to " + path_.string());
}

}  // namespace tossup
