// tossup: headless entry points for the question-writing workbench.
//
// Exit codes: 0 success, 1 usage, configuration or input-content error,
// 2 file I/O error.

#include <csignal>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tossup/batch.hpp"
#include "tossup/config.hpp"
#include "tossup/error.hpp"
#include "tossup/service.hpp"

using namespace tossup;

namespace {

struct Options {
  std::string config;
  std::vector<std::string> corpora;
  std::string aliases;
  std::string countries;
  std::string difficulty_model;
  std::optional<double> tau;
  std::string grain;
};

Config resolve_config(const Options& o) {
  Config cfg;
  if (!o.config.empty()) cfg = load_config(o.config);
  apply_env_overrides(cfg);
  if (!o.corpora.empty()) cfg.corpus = o.corpora.front();
  if (!o.aliases.empty()) cfg.aliases = o.aliases;
  if (!o.countries.empty()) cfg.countries = o.countries;
  if (!o.difficulty_model.empty()) cfg.difficulty_model = o.difficulty_model;
  if (o.tau) cfg.buzz.confidence_threshold = *o.tau;
  if (!o.grain.empty()) cfg.buzz.grain = parse_evaluation_grain(o.grain);
  return cfg;
}

// Several --corpus files are concatenated into one question set.
QuestionSet load_corpora(const Options& o, const Config& cfg) {
  if (o.corpora.size() <= 1) return load_question_set(cfg.corpus);
  std::vector<Question> all;
  for (const auto& path : o.corpora) {
    const auto qs = load_question_set(path);
    all.insert(all.end(), qs.begin(), qs.end());
  }
  return QuestionSet(std::move(all));
}

std::shared_ptr<const Engines> engines_for(const Options& o, const Config& cfg) {
  cfg.validate();
  return build_engines(load_engine_inputs(cfg, load_corpora(o, cfg)));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::Io, "short write to " + path);
}

std::vector<QuestionRun> run_all(const Engines& engines, const QuestionSet& questions, const Config& cfg) {
  std::vector<QuestionRun> runs;
  runs.reserve(questions.size());
  for (const auto& q : questions) {
    runs.push_back(run_question(engines, q, cfg.widgets, TimePoint{}, cfg.snapshot_interval, cfg.snapshot_interval));
  }
  return runs;
}

HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adversarial tossup-writing workbench"};
  app.require_subcommand(1);
  Options o;
  auto add_engine_flags = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON config file");
    sub->add_option("--corpus", o.corpora, "question-set JSON (repeatable)");
    sub->add_option("--aliases", o.aliases, "alias TSV");
    sub->add_option("--countries", o.countries, "country lexicon TSV");
    sub->add_option("--difficulty-model", o.difficulty_model, "trained difficulty model JSON");
    sub->add_option("--grain", o.grain, "buzzer evaluation grain: per_sentence or per_token");
  };

  std::string out_path;
  std::string grouping = "answer";
  auto* build = app.add_subcommand("build-index", "build and cache a tf-idf index");
  build->add_option("--corpus", o.corpora, "question-set JSON (repeatable)")->required();
  build->add_option("--out", out_path, "cache file")->required();
  build->add_option("--grouping", grouping, "answer or question")->check(CLI::IsMember({"answer", "question"}));

  std::string questions_path;
  std::string format = "text";
  std::string submissions_path;
  auto* an = app.add_subcommand("analyze", "annotate question texts with buzz markers and widget output");
  add_engine_flags(an);
  an->add_option("--questions", questions_path, "question-set JSON to analyze")->required();
  an->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  an->add_option("--tau", o.tau, "buzz confidence threshold");
  an->add_option("--submissions", submissions_path, "finalize each question and append records here");

  auto* ev = app.add_subcommand("eval-buzzer", "buzz position statistics over a question set");
  add_engine_flags(ev);
  ev->add_option("--questions", questions_path, "question-set JSON")->required();
  ev->add_option("--tau", o.tau, "buzz confidence threshold");

  std::string task;
  std::uint64_t seed = 13;
  double held_out = 0.2;
  std::string difficulty_grain = "per_question";
  std::size_t epochs = 60;
  double quantile = 0.95;
  std::size_t min_freq = 3;
  auto* tr = app.add_subcommand("train", "train the difficulty or pronunciation model");
  tr->add_option("--task", task, "difficulty or pronunciation")
      ->required()
      ->check(CLI::IsMember({"difficulty", "pronunciation"}));
  tr->add_option("--corpus", o.corpora, "question-set JSON (repeatable)")->required();
  tr->add_option("--seed", seed, "random seed");
  tr->add_option("--out", out_path, "model file")->required();
  tr->add_option("--held-out", held_out, "held-out fraction for the difficulty report")->check(CLI::Range(0.0, 0.9));
  tr->add_option("--difficulty-grain", difficulty_grain, "per_question or per_sentence")
      ->check(CLI::IsMember({"per_question", "per_sentence"}));
  tr->add_option("--epochs", epochs, "training epochs");
  tr->add_option("--quantile", quantile, "pronunciation surprisal quantile");
  tr->add_option("--min-freq", min_freq, "pronunciation rarity cutoff");

  auto* serve = app.add_subcommand("serve", "run the HTTP service");
  serve->add_option("--config", o.config, "JSON config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*build) {
      Config cfg;
      cfg.corpus = o.corpora.front();
      const auto qs = load_corpora(o, cfg);
      const auto ix = build_index(qs, grouping == "answer" ? Grouping::ByAnswer : Grouping::ByQuestion);
      save_index(ix, out_path);
      std::cout << "n_docs " << ix.n_docs() << "\nvocabulary " << ix.vocabulary_size() << "\ncorpus_hash "
                << ix.corpus_hash() << "\n";
      return 0;
    }

    if (*an || *ev) {
      Config cfg = resolve_config(o);
      cfg.buzz.validate();
      const auto questions = load_question_set(questions_path);
      if (questions.empty()) {
        if (*an && format == "json") std::cout << "[]\n";
        return 0;
      }
      const auto engines = engines_for(o, cfg);
      const auto runs = run_all(*engines, questions, cfg);

      if (*ev) {
        const auto st = buzzer_stats(runs, engines->buzz);
        for (std::size_t i = 0; i < runs.size(); ++i) {
          std::cout << runs[i].question.id << '\t';
          if (runs[i].error) {
            std::cout << "error " << runs[i].error->message << '\n';
            continue;
          }
          const auto& state = runs[i].session->buzz_state();
          const std::size_t len = char_length(runs[i].question.text);
          if (state.locked) {
            std::cout << *state.lock_position << '/' << len << '\t'
                      << static_cast<double>(*state.lock_position) / static_cast<double>(len);
          } else {
            std::cout << "never";
          }
          std::cout << "\tregressions " << state.regression_events << '\n';
        }
        std::cout << "questions " << st.questions << "\nlocked_before_final_clue " << st.locked_before_final_clue
                  << "\nlocked_at_final_clue " << st.locked_at_final_clue << "\nnever_locked " << st.never_locked
                  << "\nconfident_wrong_first " << st.confident_wrong_first << "\nregression_events "
                  << st.regression_events << "\n";
        return 0;
      }

      if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : runs) arr.push_back(run_to_json(r));
        std::cout << arr.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < runs.size(); ++i) {
          if (i) std::cout << '\n';
          std::cout << run_to_text(runs[i], i + 1);
        }
      }
      if (!submissions_path.empty()) {
        SubmissionStore store(submissions_path);
        for (auto run : runs) {
          if (!run.session) continue;
          const auto record = finalize_submission(*run.session, run.report, cfg.weights, run.session->last_edit_at());
          store.append(record);
        }
      }
      return 0;
    }

    if (*tr) {
      Config cfg;
      cfg.corpus = o.corpora.front();
      const auto corpus = load_corpora(o, cfg);
      if (task == "difficulty") {
        DifficultyTrainOptions opts;
        opts.seed = seed;
        opts.epochs = epochs;
        opts.grain = difficulty_grain == "per_question" ? DifficultyGrain::PerQuestion : DifficultyGrain::PerSentence;
        auto [train, held] = split_labeled(corpus, held_out, seed);
        const auto model = train_difficulty(train, opts);
        write_file(out_path, difficulty_model_to_json(model) + "\n");
        const auto e = evaluate_difficulty(model, train, held);
        std::printf("train %zu held_out %zu\nheld_out_accuracy %.4f\nmajority_baseline %.4f\n", train.size(),
                    e.examples, e.accuracy, e.majority_baseline);
      } else {
        const auto model = train_pronunciation_model(corpus, quantile, min_freq);
        write_file(out_path, pronunciation_model_to_json(model) + "\n");
        std::printf("vocabulary %zu\nthreshold %.6f\n", model.vocab_freq().size(), model.threshold());
      }
      return 0;
    }

    if (*serve) {
      Config cfg = resolve_config(o);
      cfg.validate();
      for (const auto& w : cfg.warnings()) std::cerr << "warning: " << w << "\n";
      Service service(cfg);
      service.load_engines_async([cfg] { return build_engines(load_engine_inputs(cfg)); });
      HttpServer server(service);
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cerr << "listening on " << cfg.host << ":" << cfg.port << "\n";
      if (!server.listen(cfg.host, cfg.port)) {
        std::cerr << "error: cannot listen on " << cfg.host << ":" << cfg.port << "\n";
        return 2;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Io ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
