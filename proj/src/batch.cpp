#include "tossup/batch.hpp"

#include <cstdio>
#include <map>

#include "tossup/error.hpp"
#include "tossup/text.hpp"

namespace tossup {

namespace {

std::string fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

const BuzzEvaluation* first_confident(const BuzzState& state, const BuzzConfig& cfg) {
  for (const auto& ev : state.history) {
    if (ev.confidence >= cfg.confidence_threshold && !ev.guesses.empty()) return &ev;
  }
  return nullptr;
}

}  // namespace

QuestionRun run_question(const Engines& engines, const Question& q, const WidgetSizes& sizes, TimePoint start,
                         std::chrono::seconds step, std::chrono::seconds snapshot_interval) {
  QuestionRun run;
  run.question = q;
  try {
    Session s(q.id, start, std::nullopt, q.category);
    const CharIndex chars(q.text);
    auto points = evaluation_points(q.text, engines.buzz.grain);
    if (points.empty() || points.back() != chars.size()) points.push_back(chars.size());
    TimePoint now = start;
    for (const auto p : points) {
      s.apply_edit(engines, std::string(chars.slice(0, p)), q.answer, now);
      s.maybe_snapshot(now, snapshot_interval);
      now += step;
    }
    run.report = analyze(s, engines, sizes);
    run.transcript = render_transcript(q.text, s.buzz_state(), engines.buzz);
    run.session = std::move(s);
  } catch (const Error& e) {
    run.error = WidgetError{std::string(to_string(e.code())), e.what()};
  }
  return run;
}

std::string render_transcript(std::string_view text, const BuzzState& state, const BuzzConfig& cfg) {
  // position -> marker; an incorrect marker sorts before a correct one at the same spot
  std::multimap<std::size_t, std::string> markers;
  const auto* wrong = first_incorrect_buzz(state, cfg);
  if (wrong && (!state.locked || wrong->prefix_end < *state.lock_position)) {
    markers.emplace(wrong->prefix_end, "[buzz] (*" + wrong->guesses.front().answer + "*)");
  }
  if (state.locked) markers.emplace(*state.lock_position, "[buzz]");

  const CharIndex chars(text);
  std::string out;
  std::size_t at = 0;
  for (const auto& [pos, marker] : markers) {
    const std::size_t p = std::min(pos, chars.size());
    out += chars.slice(at, p);
    out += ' ';
    out += marker;
    at = p;
  }
  out += chars.slice(at, chars.size());
  return out;
}

std::string run_to_text(const QuestionRun& run, std::size_t number) {
  const Question& q = run.question;
  std::string out = std::to_string(number) + ". ";
  if (!q.category.empty()) out += "[" + q.category + "] ";
  out += q.id + "  ANSWER: " + q.answer + "\n";
  if (run.error) return out + "   error: " + run.error->code + ": " + run.error->message + "\n";
  out += run.transcript + "\n";

  const auto& r = run.report;
  auto line = [&](std::string_view label, const std::string& body) {
    out += "   ";
    out += label;
    out += ": ";
    out += body.empty() ? "-" : body;
    out += '\n';
  };
  std::string s;
  for (std::size_t i = 0; i < std::min<std::size_t>(3, r.guesses.value.size()); ++i) {
    const auto& g = r.guesses.value[i];
    s += (i ? "; " : "") + g.answer + " (" + fixed(g.confidence) + ")";
  }
  line("guesses", s);
  s.clear();
  for (const auto& e : r.evidence.value) s += (s.empty() ? "\"" : "; \"") + e.term + "\" " + fixed(e.contribution, 4);
  line("evidence", s);
  s.clear();
  for (const auto& w : r.pronunciation.value) s += (s.empty() ? "" : ", ") + w.token.surface;
  line("pronunciation", s);
  s.clear();
  for (const auto& m : r.countries.value.mentions) s += (s.empty() ? "" : ", ") + m.country + " (" + m.region + ")";
  line("countries", s);
  s.clear();
  for (const auto& [c, n] : r.countries.value.recommendations) {
    s += (s.empty() ? "" : ", ") + c + " (" + std::to_string(n) + ")";
  }
  line("underrepresented", s);
  s.clear();
  for (const auto& sq : r.similar.value) s += (s.empty() ? "" : ", ") + sq.id + " (" + fixed(sq.similarity) + ")";
  line("similar", s);
  if (r.difficulty.value) {
    line("difficulty", std::string(to_string(r.difficulty.value->label)) + " (p_college " +
                           fixed(r.difficulty.value->p_college) + ")");
  } else {
    line("difficulty", r.difficulty.error ? r.difficulty.error->message : "");
  }
  return out;
}

Json run_to_json(const QuestionRun& run) {
  Json j{{"id", run.question.id}, {"answer", run.question.answer}, {"category", run.question.category}};
  if (run.error) {
    j["error"] = {{"code", run.error->code}, {"message", run.error->message}};
    return j;
  }
  j["transcript"] = run.transcript;
  j["report"] = report_to_json(run.report);
  return j;
}

BuzzerStats buzzer_stats(const std::vector<QuestionRun>& runs, const BuzzConfig& cfg) {
  BuzzerStats st;
  for (const auto& run : runs) {
    if (!run.session) continue;
    ++st.questions;
    const auto& state = run.session->buzz_state();
    const std::string& text = run.question.text;
    const std::size_t length = char_length(text);
    st.regression_events += state.regression_events;
    if (const auto* ev = first_confident(state, cfg); ev && !ev->matches_user_answer) ++st.confident_wrong_first;
    if (!state.locked) {
      ++st.never_locked;
      st.lock_fractions.emplace_back();
      continue;
    }
    const auto sentences = split_sentences(text);
    const std::size_t final_start = sentences.empty() ? 0 : sentences.back().start;
    if (*state.lock_position <= final_start) {
      ++st.locked_before_final_clue;
    } else {
      ++st.locked_at_final_clue;
    }
    st.lock_fractions.emplace_back(length ? static_cast<double>(*state.lock_position) / length : 0.0);
  }
  return st;
}

}  // namespace tossup
