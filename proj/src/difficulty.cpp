#include "tossup/difficulty.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include <json.hpp>

#include "tossup/error.hpp"
#include "tossup/text.hpp"

namespace tossup {

namespace {

struct Unit {
  std::string text;
  double label;
};

// Uniform in [0, 1) from raw engine bits so results do not depend on the
// standard library's distribution implementations.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

std::vector<Unit> make_units(const QuestionSet& qs, DifficultyGrain grain) {
  std::vector<Unit> units;
  for (const auto& q : qs) {
    if (q.difficulty == DifficultyLabel::Unlabeled) continue;
    const double y = q.difficulty == DifficultyLabel::College ? 1.0 : 0.0;
    if (grain == DifficultyGrain::PerQuestion) {
      units.push_back(Unit{q.text, y});
    } else {
      const CharIndex chars(q.text);
      for (const auto& s : split_sentences(q.text)) {
        units.push_back(Unit{std::string(chars.slice(s.start, s.end)), y});
      }
    }
  }
  return units;
}

double dot(const SparseVector& x, const std::vector<double>& w) {
  double z = 0.0;
  for (const auto& [i, v] : x) z += w[i] * v;
  return z;
}

}  // namespace

std::string_view to_string(DifficultyGrain grain) {
  return grain == DifficultyGrain::PerQuestion ? "per_question" : "per_sentence";
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

LogisticGradient logistic_loss_and_gradient(const std::vector<SparseVector>& features,
                                            const std::vector<double>& labels,
                                            const std::vector<double>& weights, double bias,
                                            double l2) {
  LogisticGradient g;
  g.weights.assign(weights.size(), 0.0);
  const double n = static_cast<double>(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    const double z = dot(features[i], weights) + bias;
    const double p = sigmoid(z);
    // log(1 + e^z) - y z, computed stably
    const double softplus = z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
    g.loss += (softplus - labels[i] * z) / n;
    const double r = (p - labels[i]) / n;
    for (const auto& [j, v] : features[i]) g.weights[j] += r * v;
    g.bias += r;
  }
  double sq = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    sq += weights[j] * weights[j];
    g.weights[j] += l2 * weights[j];
  }
  g.loss += 0.5 * l2 * sq;
  return g;
}

SparseVector DifficultyClassifier::features(std::string_view text) const {
  std::map<std::uint32_t, double> tf;
  for (const auto& tok : tokenize(text)) {
    if (auto it = feature_index_.find(tok.normalized); it != feature_index_.end()) tf[it->second] += 1.0;
  }
  SparseVector x;
  x.reserve(tf.size());
  double sq = 0.0;
  for (const auto& [i, count] : tf) {
    const double v = (1.0 + std::log(count)) * idf_[i];
    x.emplace_back(i, v);
    sq += v * v;
  }
  if (sq > 0.0) {
    const double norm = std::sqrt(sq);
    for (auto& [i, v] : x) v /= norm;
  }
  return x;
}

double DifficultyClassifier::probability(std::string_view text) const {
  return sigmoid(dot(features(text), weights_) + bias_);
}

DifficultyClassifier train_difficulty(const QuestionSet& qs, const DifficultyTrainOptions& options) {
  std::size_t college = 0;
  std::size_t high_school = 0;
  for (const auto& q : qs) {
    if (q.difficulty == DifficultyLabel::College) ++college;
    if (q.difficulty == DifficultyLabel::HighSchool) ++high_school;
  }
  if (college < 2 || high_school < 2) {
    throw Error(ErrorCode::InsufficientLabels,
                "need at least two labeled questions per class (have " + std::to_string(high_school) +
                    " high school, " + std::to_string(college) + " college)");
  }

  DifficultyClassifier c;
  c.grain_ = options.grain;
  c.seed_ = options.seed;
  const auto units = make_units(qs, options.grain);

  std::map<std::string, std::size_t> df;
  for (const auto& u : units) {
    std::vector<std::string> seen;
    for (auto& tok : tokenize(u.text)) seen.push_back(std::move(tok.normalized));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (auto& t : seen) ++df[t];
  }
  const double n_units = static_cast<double>(units.size());
  for (const auto& [term, count] : df) {
    c.feature_index_.emplace(term, static_cast<std::uint32_t>(c.vocab_.size()));
    c.vocab_.push_back(term);
    c.idf_.push_back(std::log((1.0 + n_units) / (1.0 + static_cast<double>(count))) + 1.0);
  }

  std::vector<SparseVector> x;
  std::vector<double> y;
  x.reserve(units.size());
  for (const auto& u : units) {
    x.push_back(c.features(u.text));
    y.push_back(u.label);
  }

  std::mt19937_64 rng(options.seed);
  c.weights_.resize(c.vocab_.size());
  for (auto& w : c.weights_) w = (unit_uniform(rng) - 0.5) * 0.02;
  c.bias_ = 0.0;

  std::vector<std::size_t> order(units.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::size_t batch = std::max<std::size_t>(1, options.batch_size);
  std::vector<SparseVector> bx;
  std::vector<double> by;
  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    shuffle(order, rng);
    for (std::size_t start = 0; start < order.size(); start += batch) {
      bx.clear();
      by.clear();
      for (std::size_t i = start; i < std::min(order.size(), start + batch); ++i) {
        bx.push_back(x[order[i]]);
        by.push_back(y[order[i]]);
      }
      const auto g = logistic_loss_and_gradient(bx, by, c.weights_, c.bias_, options.l2);
      for (std::size_t j = 0; j < c.weights_.size(); ++j) c.weights_[j] -= options.learning_rate * g.weights[j];
      c.bias_ -= options.learning_rate * g.bias;
    }
  }
  return c;
}

DifficultyPrediction classify_difficulty(const DifficultyClassifier& c, std::string_view text) {
  DifficultyPrediction out;
  auto label_of = [](double p) {
    return p >= 0.5 ? DifficultyLabel::College : DifficultyLabel::HighSchool;
  };
  if (c.grain() == DifficultyGrain::PerQuestion) {
    out.p_college = c.probability(text);
    out.label = label_of(out.p_college);
    return out;
  }
  const CharIndex chars(text);
  const auto sentences = split_sentences(text);
  if (sentences.empty()) {
    out.p_college = sigmoid(c.bias());
    out.label = label_of(out.p_college);
    return out;
  }
  std::size_t college_votes = 0;
  double p_sum = 0.0;
  for (const auto& s : sentences) {
    const double p = c.probability(chars.slice(s.start, s.end));
    p_sum += p;
    out.sentence_labels.push_back(label_of(p));
    if (out.sentence_labels.back() == DifficultyLabel::College) ++college_votes;
  }
  out.p_college = p_sum / static_cast<double>(sentences.size());
  const std::size_t hs_votes = sentences.size() - college_votes;
  if (college_votes != hs_votes) {
    out.label = college_votes > hs_votes ? DifficultyLabel::College : DifficultyLabel::HighSchool;
  } else {
    out.label = label_of(out.p_college);
  }
  return out;
}

std::string difficulty_model_to_json(const DifficultyClassifier& c) {
  nlohmann::json j;
  j["format"] = "tossup-difficulty";
  j["version"] = 1;
  j["grain"] = to_string(c.grain_);
  j["seed"] = c.seed_;
  j["labels"] = {"high school", "college"};
  j["bias"] = c.bias_;
  j["vocab"] = c.vocab_;
  j["idf"] = c.idf_;
  j["weights"] = c.weights_;
  return j.dump(1);
}

DifficultyClassifier difficulty_model_from_json(std::string_view text) {
  using json = nlohmann::json;
  DifficultyClassifier c;
  try {
    const json j = json::parse(text);
    if (j.at("format") != "tossup-difficulty" || j.at("version") != 1) {
      throw Error(ErrorCode::MalformedFile, "not a difficulty model (format/version)");
    }
    const auto grain = j.at("grain").get<std::string>();
    if (grain != "per_question" && grain != "per_sentence") {
      throw Error(ErrorCode::MalformedFile, "unknown grain '" + grain + "'");
    }
    c.grain_ = grain == "per_question" ? DifficultyGrain::PerQuestion : DifficultyGrain::PerSentence;
    c.seed_ = j.at("seed").get<std::uint64_t>();
    c.bias_ = j.at("bias").get<double>();
    c.vocab_ = j.at("vocab").get<std::vector<std::string>>();
    c.idf_ = j.at("idf").get<std::vector<double>>();
    c.weights_ = j.at("weights").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedFile, std::string("difficulty model: ") + e.what());
  }
  if (c.idf_.size() != c.vocab_.size() || c.weights_.size() != c.vocab_.size()) {
    throw Error(ErrorCode::MalformedFile, "difficulty model vector lengths disagree");
  }
  for (std::uint32_t i = 0; i < c.vocab_.size(); ++i) c.feature_index_.emplace(c.vocab_[i], i);
  return c;
}

std::pair<QuestionSet, QuestionSet> split_labeled(const QuestionSet& qs, double held_out_fraction,
                                                  std::uint64_t seed) {
  std::vector<Question> labeled;
  for (const auto& q : qs) {
    if (q.difficulty != DifficultyLabel::Unlabeled) labeled.push_back(q);
  }
  std::mt19937_64 rng(seed);
  shuffle(labeled, rng);
  const auto n_held = static_cast<std::size_t>(
      std::ceil(held_out_fraction * static_cast<double>(labeled.size()) - 1e-9));
  std::vector<Question> held(labeled.begin(), labeled.begin() + static_cast<std::ptrdiff_t>(n_held));
  std::vector<Question> train(labeled.begin() + static_cast<std::ptrdiff_t>(n_held), labeled.end());
  return {QuestionSet(std::move(train)), QuestionSet(std::move(held))};
}

DifficultyEvaluation evaluate_difficulty(const DifficultyClassifier& c, const QuestionSet& train,
                                         const QuestionSet& held_out) {
  std::size_t train_college = 0;
  std::size_t train_labeled = 0;
  for (const auto& q : train) {
    if (q.difficulty == DifficultyLabel::Unlabeled) continue;
    ++train_labeled;
    if (q.difficulty == DifficultyLabel::College) ++train_college;
  }
  const DifficultyLabel majority = 2 * train_college > train_labeled ? DifficultyLabel::College
                                                                     : DifficultyLabel::HighSchool;
  DifficultyEvaluation ev;
  std::size_t correct = 0;
  std::size_t majority_correct = 0;
  for (const auto& q : held_out) {
    if (q.difficulty == DifficultyLabel::Unlabeled) continue;
    ++ev.examples;
    if (classify_difficulty(c, q.text).label == q.difficulty) ++correct;
    if (q.difficulty == majority) ++majority_correct;
  }
  if (ev.examples > 0) {
    ev.accuracy = static_cast<double>(correct) / static_cast<double>(ev.examples);
    ev.majority_baseline = static_cast<double>(majority_correct) / static_cast<double>(ev.examples);
  }
  return ev;
}

}  // namespace tossup
