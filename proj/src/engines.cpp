#include "tossup/engines.hpp"

#include "tossup/error.hpp"

namespace tossup {

std::shared_ptr<const Engines> build_engines(EngineInputs inputs) {
  inputs.buzz.validate();
  auto engines = std::make_shared<Engines>();
  engines->guesser = build_index(inputs.corpus, Grouping::ByAnswer);
  engines->similarity = build_index(inputs.corpus, Grouping::ByQuestion);
  engines->aliases = std::move(inputs.aliases);
  engines->countries = CountryMatcher(std::move(inputs.lexicon));
  engines->representation = build_representation_table(inputs.corpus, engines->countries);
  engines->pronunciation = train_pronunciation_model(inputs.corpus, inputs.pronunciation_quantile,
                                                     inputs.pronunciation_min_freq);
  if (inputs.difficulty) {
    engines->difficulty = std::move(inputs.difficulty);
  } else {
    try {
      engines->difficulty = train_difficulty(inputs.corpus, inputs.difficulty_options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientLabels) throw;
    }
  }
  engines->category_distribution = inputs.corpus.category_counts();
  engines->subcategory_distribution = inputs.corpus.subcategory_counts();
  engines->buzz = inputs.buzz;
  engines->corpus_hash = corpus_hash(inputs.corpus);
  return engines;
}

}  // namespace tossup
