#include "tossup/pronunciation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>

#include <json.hpp>

#include "tossup/error.hpp"

namespace tossup {

namespace {

constexpr char32_t kPad = U'^';
constexpr char32_t kEnd = U'$';

std::u32string decode(std::string_view utf8) {
  const CharIndex chars(utf8);
  std::u32string out;
  out.reserve(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i) out.push_back(chars[i]);
  return out;
}

std::string encode(std::u32string_view s) {
  std::string out;
  for (char32_t c : s) append_utf8(out, c);
  return out;
}

bool has_letter(std::string_view normalized) {
  const CharIndex chars(normalized);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const char32_t c = chars[i];
    if (!(c >= '0' && c <= '9') && is_word_char(c)) return true;
  }
  return false;
}

// Calls fn(context, symbol) for every prediction in "^^word$".
template <typename Fn>
void for_each_prediction(std::u32string_view word, Fn&& fn) {
  char32_t a = kPad;
  char32_t b = kPad;
  for (char32_t c : word) {
    const char32_t ctx[2] = {a, b};
    fn(std::u32string_view(ctx, 2), c);
    a = b;
    b = c;
  }
  const char32_t ctx[2] = {a, b};
  fn(std::u32string_view(ctx, 2), kEnd);
}

}  // namespace

bool is_pronunciation_stopword(std::string_view w) {
  static const std::unordered_set<std::string_view> kStop = {
      "a",     "an",    "and",  "are",  "as",   "at",    "be",    "but",   "by",    "for",
      "from",  "had",   "has",  "have", "he",   "her",   "his",   "in",    "into",  "is",
      "it",    "its",   "name", "not",  "of",   "on",    "or",    "she",   "that",  "the",
      "their", "these", "they", "this", "those", "to",   "was",   "were",  "which", "who",
      "whom",  "with",  "ten",  "points", "one", "two",  "after", "also",  "been",  "than",
      "then",  "when",  "where", "while", "what"};
  return kStop.count(w) > 0;
}

double PronunciationModel::log_prob(std::u32string_view context, char32_t symbol) const {
  const double v = static_cast<double>(alphabet_size());
  std::size_t ctx_count = 0;
  if (auto it = context_counts_.find(std::u32string(context)); it != context_counts_.end()) {
    ctx_count = it->second;
  }
  std::size_t tri_count = 0;
  if (alphabet_.count(symbol)) {
    std::u32string key(context);
    key.push_back(symbol);
    if (auto it = trigram_counts_.find(key); it != trigram_counts_.end()) tri_count = it->second;
  }
  return std::log((static_cast<double>(tri_count) + 1.0) / (static_cast<double>(ctx_count) + v));
}

double PronunciationModel::surprisal(std::string_view normalized_word) const {
  const std::u32string word = decode(normalized_word);
  double total = 0.0;
  for_each_prediction(word, [&](std::u32string_view ctx, char32_t c) { total -= log_prob(ctx, c); });
  return total / static_cast<double>(word.size() + 1);
}

std::size_t PronunciationModel::frequency(std::string_view normalized_word) const {
  auto it = vocab_freq_.find(std::string(normalized_word));
  return it == vocab_freq_.end() ? 0 : it->second;
}

PronunciationModel train_pronunciation_model(const QuestionSet& qs, double quantile,
                                             std::size_t min_freq) {
  if (!(quantile >= 0.0 && quantile <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "quantile must be in [0, 1]");
  }
  PronunciationModel m;
  m.min_freq_ = min_freq;
  for (const auto& q : qs) {
    for (const auto& tok : tokenize(q.text)) ++m.vocab_freq_[tok.normalized];
  }
  if (m.vocab_freq_.empty()) throw Error(ErrorCode::EmptyCorpus, "no words to train on");

  // Token-frequency weighted counts: each distinct word contributes freq times.
  m.alphabet_.insert(kEnd);
  for (const auto& [word, freq] : m.vocab_freq_) {
    for_each_prediction(decode(word), [&](std::u32string_view ctx, char32_t c) {
      m.alphabet_.insert(c);
      std::u32string key(ctx);
      m.context_counts_[key] += freq;
      key.push_back(c);
      m.trigram_counts_[key] += freq;
    });
  }

  std::vector<double> scores;
  scores.reserve(m.vocab_freq_.size());
  for (const auto& [word, freq] : m.vocab_freq_) scores.push_back(m.surprisal(word));
  std::sort(scores.begin(), scores.end());
  const double n = static_cast<double>(scores.size());
  const auto flagged = static_cast<std::size_t>(std::max(0.0, std::ceil((1.0 - quantile) * n - 1e-9)));
  if (flagged == 0) {
    m.threshold_ = std::nextafter(scores.back(), std::numeric_limits<double>::infinity());
  } else {
    m.threshold_ = scores[scores.size() - std::min(flagged, scores.size())];
  }
  return m;
}

std::vector<FlaggedWord> flag_hard_words(const PronunciationModel& m, std::string_view text) {
  std::vector<FlaggedWord> out;
  for (auto& tok : tokenize(text)) {
    if (!has_letter(tok.normalized) || is_pronunciation_stopword(tok.normalized)) continue;
    const double s = m.surprisal(tok.normalized);
    const bool by_surprisal = s >= m.threshold();
    const bool by_rarity = m.frequency(tok.normalized) < m.min_freq() &&
                           char_length(tok.normalized) >= 4;
    if (by_surprisal || by_rarity) out.push_back(FlaggedWord{std::move(tok), s, by_surprisal, by_rarity});
  }
  return out;
}

std::string pronunciation_model_to_json(const PronunciationModel& m) {
  using json = nlohmann::json;
  // Sorted containers keep the file byte-stable.
  std::map<std::string, std::size_t> trigrams;
  for (const auto& [k, v] : m.trigram_counts_) trigrams.emplace(encode(k), v);
  std::map<std::string, std::size_t> vocab(m.vocab_freq_.begin(), m.vocab_freq_.end());
  json j;
  j["format"] = "tossup-pronunciation";
  j["version"] = 1;
  j["threshold"] = m.threshold_;
  j["min_freq"] = m.min_freq_;
  j["trigrams"] = trigrams;
  j["vocab"] = vocab;
  return j.dump(1);
}

PronunciationModel pronunciation_model_from_json(std::string_view text) {
  using json = nlohmann::json;
  PronunciationModel m;
  try {
    const json j = json::parse(text);
    if (j.at("format") != "tossup-pronunciation" || j.at("version") != 1) {
      throw Error(ErrorCode::MalformedFile, "not a pronunciation model (format/version)");
    }
    m.threshold_ = j.at("threshold").get<double>();
    m.min_freq_ = j.at("min_freq").get<std::size_t>();
    m.alphabet_.insert(kEnd);
    for (const auto& [k, v] : j.at("trigrams").items()) {
      const std::u32string key = decode(k);
      if (key.size() != 3) throw Error(ErrorCode::MalformedFile, "bad trigram key");
      const auto count = v.get<std::size_t>();
      m.trigram_counts_[key] += count;
      m.context_counts_[key.substr(0, 2)] += count;
      m.alphabet_.insert(key[2]);
    }
    for (const auto& [k, v] : j.at("vocab").items()) m.vocab_freq_[k] = v.get<std::size_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedFile, std::string("pronunciation model: ") + e.what());
  }
  return m;
}

}  // namespace tossup
