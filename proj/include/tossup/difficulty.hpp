#pragma once

// High-school vs. college difficulty classifier: L2-regularized logistic
// regression over L2-normalized tf-idf features, trained by seeded
// mini-batch gradient descent. The per-sentence grain trains on individual
// clues (each inheriting its question's label) and classifies a question by
// majority vote over its sentences.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tossup/corpus.hpp"

namespace tossup {

enum class DifficultyGrain { PerQuestion, PerSentence };

std::string_view to_string(DifficultyGrain grain);

struct DifficultyTrainOptions {
  DifficultyGrain grain = DifficultyGrain::PerQuestion;
  std::uint64_t seed = 13;
  std::size_t epochs = 60;
  double learning_rate = 0.5;
  double l2 = 1e-4;
  std::size_t batch_size = 16;
};

// Sparse feature vector: (feature index, value), ascending by index.
using SparseVector = std::vector<std::pair<std::uint32_t, double>>;

struct LogisticGradient {
  double loss = 0.0;
  std::vector<double> weights;
  double bias = 0.0;
};

// Mean log loss plus (l2 / 2) * |w|^2 and its analytic gradient.
// Labels are 0 (high school) or 1 (college).
LogisticGradient logistic_loss_and_gradient(const std::vector<SparseVector>& features,
                                            const std::vector<double>& labels,
                                            const std::vector<double>& weights, double bias,
                                            double l2);

double sigmoid(double z);

class DifficultyClassifier {
 public:
  DifficultyClassifier() = default;

  DifficultyGrain grain() const noexcept { return grain_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t vocabulary_size() const noexcept { return vocab_.size(); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double bias() const noexcept { return bias_; }

  SparseVector features(std::string_view text) const;
  // P(college) for a single unit of text, ignoring grain.
  double probability(std::string_view text) const;

  friend DifficultyClassifier train_difficulty(const QuestionSet& qs,
                                               const DifficultyTrainOptions& options);
  friend std::string difficulty_model_to_json(const DifficultyClassifier& c);
  friend DifficultyClassifier difficulty_model_from_json(std::string_view text);

 private:
  DifficultyGrain grain_ = DifficultyGrain::PerQuestion;
  std::uint64_t seed_ = 0;
  std::vector<std::string> vocab_;  // sorted; position is the feature index
  std::unordered_map<std::string, std::uint32_t> feature_index_;
  std::vector<double> idf_;
  std::vector<double> weights_;
  double bias_ = 0.0;
};

// Throws InsufficientLabels unless each class has at least two labeled questions.
DifficultyClassifier train_difficulty(const QuestionSet& qs, const DifficultyTrainOptions& options = {});

struct DifficultyPrediction {
  DifficultyLabel label = DifficultyLabel::HighSchool;
  double p_college = 0.0;
  std::vector<DifficultyLabel> sentence_labels;  // per-sentence grain only

  double p_high_school() const { return 1.0 - p_college; }
};

DifficultyPrediction classify_difficulty(const DifficultyClassifier& c, std::string_view text);

std::string difficulty_model_to_json(const DifficultyClassifier& c);
DifficultyClassifier difficulty_model_from_json(std::string_view text);

// Deterministic shuffled split of the labeled questions: (train, held_out).
std::pair<QuestionSet, QuestionSet> split_labeled(const QuestionSet& qs, double held_out_fraction,
                                                  std::uint64_t seed);

struct DifficultyEvaluation {
  std::size_t examples = 0;
  double accuracy = 0.0;
  double majority_baseline = 0.0;  // accuracy of always predicting the training majority
};

DifficultyEvaluation evaluate_difficulty(const DifficultyClassifier& c, const QuestionSet& train,
                                         const QuestionSet& held_out);

}  // namespace tossup
