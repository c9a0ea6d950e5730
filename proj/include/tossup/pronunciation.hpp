#pragma once

// Pronunciation-difficulty flagging from a character trigram model.
//
// Each word is scored by its mean per-character surprisal (nats) under an
// add-one-smoothed trigram model trained on corpus tokens, padded as
// "^^word$". A word is flagged when that surprisal reaches the trained
// threshold, or when it is rare in the corpus and at least four characters
// long. Short function words are never flagged.

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tossup/corpus.hpp"
#include "tossup/text.hpp"

namespace tossup {

class PronunciationModel {
 public:
  PronunciationModel() = default;

  // ln P(symbol | context) with add-one smoothing over the trained alphabet.
  // Symbols outside the alphabet share one unknown-symbol slot.
  double log_prob(std::u32string_view context, char32_t symbol) const;
  // Mean per-character surprisal of a normalized word.
  double surprisal(std::string_view normalized_word) const;

  std::size_t frequency(std::string_view normalized_word) const;

  double threshold() const noexcept { return threshold_; }
  std::size_t min_freq() const noexcept { return min_freq_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size() + 1; }
  const std::unordered_map<std::string, std::size_t>& vocab_freq() const noexcept {
    return vocab_freq_;
  }
  // Alphabet including the end symbol, excluding the unknown slot.
  const std::unordered_set<char32_t>& alphabet() const noexcept { return alphabet_; }

  void set_threshold(double threshold) { threshold_ = threshold; }

  friend PronunciationModel train_pronunciation_model(const QuestionSet& qs, double quantile,
                                                      std::size_t min_freq);
  friend std::string pronunciation_model_to_json(const PronunciationModel& m);
  friend PronunciationModel pronunciation_model_from_json(std::string_view text);

 private:
  std::unordered_map<std::u32string, std::size_t> trigram_counts_;
  std::unordered_map<std::u32string, std::size_t> context_counts_;
  std::unordered_set<char32_t> alphabet_;
  std::unordered_map<std::string, std::size_t> vocab_freq_;
  double threshold_ = 0.0;
  std::size_t min_freq_ = 3;
};

// Threshold is set at `quantile` of surprisal over the distinct vocabulary:
// ceil((1 - quantile) * V) words score at or above it. Throws EmptyCorpus.
PronunciationModel train_pronunciation_model(const QuestionSet& qs, double quantile = 0.95,
                                             std::size_t min_freq = 3);

struct FlaggedWord {
  Token token;
  double surprisal = 0.0;
  bool by_surprisal = false;
  bool by_rarity = false;
};

bool is_pronunciation_stopword(std::string_view normalized_word);

std::vector<FlaggedWord> flag_hard_words(const PronunciationModel& m, std::string_view text);

std::string pronunciation_model_to_json(const PronunciationModel& m);
PronunciationModel pronunciation_model_from_json(std::string_view text);

}  // namespace tossup
