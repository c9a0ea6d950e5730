#include "tossup/config.hpp"

#include <cstdlib>

#include <json.hpp>

#include "tossup/corpus.hpp"
#include "tossup/error.hpp"

namespace tossup {

namespace {

using json = nlohmann::json;

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  if (p.empty()) return {};
  std::filesystem::path path(p);
  if (path.is_relative() && !base.empty()) path = base / path;
  return path;
}

void parse_listen(Config& cfg, const std::string& listen) {
  const auto colon = listen.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidConfig, "listen must be host:port");
  cfg.host = listen.substr(0, colon);
  try {
    std::size_t used = 0;
    cfg.port = std::stoi(listen.substr(colon + 1), &used);
    if (used != listen.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidConfig, "bad port in listen address '" + listen + "'");
  }
}

double parse_double(const std::string& name, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidConfig, name + " is not a number: '" + value + "'");
  }
}

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw Error(ErrorCode::InvalidConfig, "unknown key '" + key + "' in " + std::string(where));
  }
}

}  // namespace

std::optional<std::string> process_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

EvaluationGrain parse_evaluation_grain(std::string_view s) {
  if (s == "per_sentence") return EvaluationGrain::PerSentence;
  if (s == "per_token") return EvaluationGrain::PerToken;
  throw Error(ErrorCode::InvalidConfig, "grain must be per_sentence or per_token, got '" + std::string(s) + "'");
}

std::string_view to_string(EvaluationGrain g) {
  return g == EvaluationGrain::PerSentence ? "per_sentence" : "per_token";
}

void Config::validate() const {
  buzz.validate();
  weights.validate();
  if (corpus.empty()) throw Error(ErrorCode::InvalidConfig, "no corpus configured");
  if (port <= 0 || port > 65535) throw Error(ErrorCode::InvalidConfig, "port out of range");
  if (snapshot_interval.count() <= 0) throw Error(ErrorCode::InvalidConfig, "snapshot interval must be positive");
  if (widgets.guesses == 0 || widgets.similar == 0 || widgets.evidence_terms == 0 ||
      widgets.recommendations == 0) {
    throw Error(ErrorCode::InvalidConfig, "widget sizes must be at least 1");
  }
  if (!(pronunciation_quantile > 0.0 && pronunciation_quantile <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "pronunciation quantile must be in (0, 1]");
  }
}

std::vector<std::string> Config::warnings() const {
  std::vector<std::string> out;
  const auto s = snapshot_interval.count();
  if (s < 10 || s > 20) {
    out.push_back("snapshot interval " + std::to_string(s) + " s is outside the usual 10-20 s range");
  }
  return out;
}

Config parse_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  Config cfg;
  try {
    const json j = json::parse(json_text);
    if (!j.is_object()) throw Error(ErrorCode::InvalidConfig, "config must be a JSON object");
    check_keys(j,
               {"corpus", "aliases", "countries", "difficulty_model", "submissions", "dump_dir", "listen",
                "buzzer", "snapshot_interval_s", "widgets", "game_weights", "difficulty", "pronunciation"},
               "config");
    auto path_of = [&](const char* key, std::filesystem::path& out) {
      if (j.contains(key)) out = resolve(base_dir, j[key].get<std::string>());
    };
    path_of("corpus", cfg.corpus);
    path_of("aliases", cfg.aliases);
    path_of("countries", cfg.countries);
    path_of("difficulty_model", cfg.difficulty_model);
    path_of("submissions", cfg.submissions);
    path_of("dump_dir", cfg.dump_dir);
    if (j.contains("listen")) parse_listen(cfg, j["listen"].get<std::string>());
    if (j.contains("buzzer")) {
      const auto& b = j["buzzer"];
      check_keys(b, {"tau", "grain", "top_k"}, "buzzer");
      cfg.buzz.confidence_threshold = b.value("tau", cfg.buzz.confidence_threshold);
      if (b.contains("grain")) cfg.buzz.grain = parse_evaluation_grain(b["grain"].get<std::string>());
      cfg.buzz.top_k = b.value("top_k", cfg.buzz.top_k);
    }
    if (j.contains("snapshot_interval_s")) {
      cfg.snapshot_interval = std::chrono::seconds(j["snapshot_interval_s"].get<long>());
    }
    if (j.contains("widgets")) {
      const auto& w = j["widgets"];
      check_keys(w, {"guesses", "similar", "evidence_terms", "recommendations"}, "widgets");
      cfg.widgets.guesses = w.value("guesses", cfg.widgets.guesses);
      cfg.widgets.similar = w.value("similar", cfg.widgets.similar);
      cfg.widgets.evidence_terms = w.value("evidence_terms", cfg.widgets.evidence_terms);
      cfg.widgets.recommendations = w.value("recommendations", cfg.widgets.recommendations);
    }
    if (j.contains("game_weights")) {
      const auto& g = j["game_weights"];
      check_keys(g, {"adversarial", "diversity"}, "game_weights");
      cfg.weights.adversarial = g.value("adversarial", cfg.weights.adversarial);
      cfg.weights.diversity = g.value("diversity", 1.0 - cfg.weights.adversarial);
    }
    if (j.contains("difficulty")) {
      const auto& d = j["difficulty"];
      check_keys(d, {"grain", "seed", "epochs", "learning_rate", "l2", "batch_size"}, "difficulty");
      if (d.contains("grain")) {
        const auto g = d["grain"].get<std::string>();
        if (g != "per_question" && g != "per_sentence") {
          throw Error(ErrorCode::InvalidConfig, "difficulty grain must be per_question or per_sentence");
        }
        cfg.difficulty.grain = g == "per_question" ? DifficultyGrain::PerQuestion : DifficultyGrain::PerSentence;
      }
      cfg.difficulty.seed = d.value("seed", cfg.difficulty.seed);
      cfg.difficulty.epochs = d.value("epochs", cfg.difficulty.epochs);
      cfg.difficulty.learning_rate = d.value("learning_rate", cfg.difficulty.learning_rate);
      cfg.difficulty.l2 = d.value("l2", cfg.difficulty.l2);
      cfg.difficulty.batch_size = d.value("batch_size", cfg.difficulty.batch_size);
    }
    if (j.contains("pronunciation")) {
      const auto& p = j["pronunciation"];
      check_keys(p, {"quantile", "min_freq"}, "pronunciation");
      cfg.pronunciation_quantile = p.value("quantile", cfg.pronunciation_quantile);
      cfg.pronunciation_min_freq = p.value("min_freq", cfg.pronunciation_min_freq);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("config: ") + e.what());
  }
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidConfig, e.what());
  }
  return parse_config(text, path.parent_path());
}

void apply_env_overrides(Config& cfg, const EnvLookup& env) {
  if (auto v = env("TOSSUP_CORPUS")) cfg.corpus = *v;
  if (auto v = env("TOSSUP_ALIASES")) cfg.aliases = *v;
  if (auto v = env("TOSSUP_COUNTRIES")) cfg.countries = *v;
  if (auto v = env("TOSSUP_DIFFICULTY_MODEL")) cfg.difficulty_model = *v;
  if (auto v = env("TOSSUP_SUBMISSIONS")) cfg.submissions = *v;
  if (auto v = env("TOSSUP_DUMP_DIR")) cfg.dump_dir = *v;
  if (auto v = env("TOSSUP_LISTEN")) parse_listen(cfg, *v);
  if (auto v = env("TOSSUP_TAU")) cfg.buzz.confidence_threshold = parse_double("TOSSUP_TAU", *v);
  if (auto v = env("TOSSUP_GRAIN")) cfg.buzz.grain = parse_evaluation_grain(*v);
  if (auto v = env("TOSSUP_SNAPSHOT_INTERVAL")) {
    cfg.snapshot_interval =
        std::chrono::seconds(static_cast<long>(parse_double("TOSSUP_SNAPSHOT_INTERVAL", *v)));
  }
  if (auto v = env("TOSSUP_GAME_WEIGHT_ADVERSARIAL")) {
    cfg.weights.adversarial = parse_double("TOSSUP_GAME_WEIGHT_ADVERSARIAL", *v);
    cfg.weights.diversity = 1.0 - cfg.weights.adversarial;
  }
}

EngineInputs load_engine_inputs(const Config& cfg, std::optional<QuestionSet> corpus) {
  EngineInputs in;
  in.corpus = corpus ? std::move(*corpus) : load_question_set(cfg.corpus);
  if (!cfg.aliases.empty()) in.aliases = load_alias_table(cfg.aliases);
  if (!cfg.countries.empty()) in.lexicon = load_country_lexicon(cfg.countries);
  if (!cfg.difficulty_model.empty()) in.difficulty = difficulty_model_from_json(read_file(cfg.difficulty_model));
  in.difficulty_options = cfg.difficulty;
  in.buzz = cfg.buzz;
  in.pronunciation_quantile = cfg.pronunciation_quantile;
  in.pronunciation_min_freq = cfg.pronunciation_min_freq;
  return in;
}

}  // namespace tossup
