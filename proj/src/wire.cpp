#include "tossup/wire.hpp"

#include <sstream>

#include "tossup/error.hpp"

namespace tossup {

namespace {

Json optional_offset(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::size_t> read_offset(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

template <typename T>
void put_error(Json& errors, std::string_view name, const Widget<T>& w) {
  if (w.error) errors[std::string(name)] = {{"code", w.error->code}, {"message", w.error->message}};
}

template <typename T>
void get_error(const Json& errors, const std::string& name, Widget<T>& w) {
  if (auto it = errors.find(name); it != errors.end()) {
    w.error = WidgetError{it->at("code").get<std::string>(), it->at("message").get<std::string>()};
  }
}

}  // namespace

Json difficulty_to_json(const DifficultyPrediction& d) {
  Json labels = Json::array();
  for (auto l : d.sentence_labels) labels.push_back(to_string(l));
  return {{"label", to_string(d.label)}, {"p", d.p_college}, {"sentence_labels", labels}};
}

Json game_score_to_json(const GameScore& g) {
  return {{"adversarial", g.adversarial}, {"diversity", g.diversity}, {"total", g.total}};
}

Json report_to_json(const AnalysisReport& r) {
  Json spans = Json::array();
  for (const auto& e : r.evidence.value) {
    spans.push_back({{"start", e.start},
                     {"end", e.end},
                     {"kind", "evidence"},
                     {"payload", {{"term", e.term}, {"contribution", e.contribution}}}});
  }
  for (const auto& w : r.pronunciation.value) {
    spans.push_back({{"start", w.token.start},
                     {"end", w.token.end},
                     {"kind", "pronunciation"},
                     {"payload",
                      {{"word", w.token.surface},
                       {"normalized", w.token.normalized},
                       {"surprisal", w.surprisal},
                       {"by_surprisal", w.by_surprisal},
                       {"by_rarity", w.by_rarity}}}});
  }
  for (const auto& m : r.countries.value.mentions) {
    spans.push_back({{"start", m.start},
                     {"end", m.end},
                     {"kind", "country"},
                     {"payload", {{"country", m.country}, {"region", m.region}}}});
  }

  Json guesses = Json::array();
  for (const auto& g : r.guesses.value) {
    guesses.push_back({{"answer", g.answer}, {"score", g.score}, {"confidence", g.confidence}});
  }
  Json similar = Json::array();
  for (const auto& s : r.similar.value) similar.push_back({{"id", s.id}, {"similarity", s.similarity}});
  Json recs = Json::array();
  for (const auto& [country, count] : r.countries.value.recommendations) {
    recs.push_back({{"country", country}, {"count", count}});
  }

  Json errors = Json::object();
  put_error(errors, "guesses", r.guesses);
  put_error(errors, "evidence", r.evidence);
  put_error(errors, "pronunciation", r.pronunciation);
  put_error(errors, "countries", r.countries);
  put_error(errors, "similar", r.similar);
  put_error(errors, "difficulty", r.difficulty);

  Json distribution = Json::object();
  for (const auto& [cat, n] : r.category_distribution) distribution[cat] = n;

  return {{"hash", r.hash},
          {"text_length", r.text_length},
          {"spans", spans},
          {"guesses", guesses},
          {"buzz",
           {{"locked", r.buzz.locked},
            {"position", optional_offset(r.buzz.position)},
            {"first_incorrect", optional_offset(r.buzz.first_incorrect)},
            {"history_len", r.buzz.history_len},
            {"regression_events", r.buzz.regression_events}}},
          {"similar", similar},
          {"difficulty", r.difficulty.value ? difficulty_to_json(*r.difficulty.value) : Json(nullptr)},
          {"recommendations", recs},
          {"distribution", distribution},
          {"errors", errors}};
}

AnalysisReport report_from_json(const Json& j) {
  AnalysisReport r;
  try {
    r.hash = j.at("hash").get<std::string>();
    r.text_length = j.at("text_length").get<std::size_t>();
    for (const auto& s : j.at("spans")) {
      const auto kind = s.at("kind").get<std::string>();
      const auto start = s.at("start").get<std::size_t>();
      const auto end = s.at("end").get<std::size_t>();
      const auto& p = s.at("payload");
      if (kind == "evidence") {
        r.evidence.value.push_back(
            EvidenceSpan{start, end, p.at("term").get<std::string>(), p.at("contribution").get<double>()});
      } else if (kind == "pronunciation") {
        FlaggedWord w;
        w.token = Token{p.at("word").get<std::string>(), start, end, p.at("normalized").get<std::string>()};
        w.surprisal = p.at("surprisal").get<double>();
        w.by_surprisal = p.at("by_surprisal").get<bool>();
        w.by_rarity = p.at("by_rarity").get<bool>();
        r.pronunciation.value.push_back(std::move(w));
      } else if (kind == "country") {
        r.countries.value.mentions.push_back(CountryMention{
            p.at("country").get<std::string>(), start, end, p.at("region").get<std::string>()});
      } else {
        throw Error(ErrorCode::MalformedFile, "unknown span kind '" + kind + "'");
      }
    }
    for (const auto& g : j.at("guesses")) {
      r.guesses.value.push_back(Guess{g.at("answer").get<std::string>(), g.at("score").get<double>(),
                                      g.at("confidence").get<double>()});
    }
    const auto& b = j.at("buzz");
    r.buzz.locked = b.at("locked").get<bool>();
    r.buzz.position = read_offset(b.at("position"));
    r.buzz.first_incorrect = read_offset(b.at("first_incorrect"));
    r.buzz.history_len = b.at("history_len").get<std::size_t>();
    r.buzz.regression_events = b.at("regression_events").get<std::size_t>();
    for (const auto& s : j.at("similar")) {
      r.similar.value.push_back(SimilarQuestion{s.at("id").get<std::string>(), s.at("similarity").get<double>()});
    }
    if (const auto& d = j.at("difficulty"); !d.is_null()) {
      DifficultyPrediction p;
      p.label = parse_difficulty_label(d.at("label").get<std::string>());
      p.p_college = d.at("p").get<double>();
      for (const auto& l : d.at("sentence_labels")) {
        p.sentence_labels.push_back(parse_difficulty_label(l.get<std::string>()));
      }
      r.difficulty.value = std::move(p);
    }
    for (const auto& rec : j.at("recommendations")) {
      r.countries.value.recommendations.emplace_back(rec.at("country").get<std::string>(),
                                                     rec.at("count").get<std::size_t>());
    }
    for (const auto& [cat, n] : j.at("distribution").items()) {
      r.category_distribution[cat] = n.get<std::size_t>();
    }
    const auto& errors = j.at("errors");
    get_error(errors, "guesses", r.guesses);
    get_error(errors, "evidence", r.evidence);
    get_error(errors, "pronunciation", r.pronunciation);
    get_error(errors, "countries", r.countries);
    get_error(errors, "similar", r.similar);
    get_error(errors, "difficulty", r.difficulty);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedFile, std::string("report: ") + e.what());
  }
  return r;
}

Json snapshot_to_json(const EditSnapshot& snap) {
  return {{"at", to_iso8601(snap.at)},
          {"text", snap.text},
          {"answer", snap.answer},
          {"buzz", {{"locked", snap.locked}, {"position", optional_offset(snap.position)}}}};
}

std::string snapshots_to_jsonl(const std::vector<EditSnapshot>& snapshots) {
  std::string out;
  for (const auto& s : snapshots) {
    out += snapshot_to_json(s).dump();
    out += '\n';
  }
  return out;
}

Json evaluation_to_json(const BuzzEvaluation& ev) {
  Json guesses = Json::array();
  for (const auto& g : ev.guesses) {
    guesses.push_back({{"answer", g.answer}, {"score", g.score}, {"confidence", g.confidence}});
  }
  return {{"prefix_end", ev.prefix_end},
          {"confidence", ev.confidence},
          {"matches_user_answer", ev.matches_user_answer},
          {"guesses", guesses}};
}

std::string submission_to_json(const SubmissionRecord& record) {
  Json snaps = Json::array();
  for (const auto& s : record.snapshots) snaps.push_back(snapshot_to_json(s));
  Json history = Json::array();
  for (const auto& ev : record.buzz_history) history.push_back(evaluation_to_json(ev));
  Json j = {{"session_id", record.session_id},
            {"submitted_at", to_iso8601(record.submitted_at)},
            {"text", record.text},
            {"answer", record.answer},
            {"category", record.category},
            {"difficulty", record.difficulty ? difficulty_to_json(*record.difficulty) : Json(nullptr)},
            {"game_score", record.game_score ? game_score_to_json(*record.game_score) : Json(nullptr)},
            {"snapshots", snaps},
            {"buzz_history", history}};
  return j.dump();
}

}  // namespace tossup
