#pragma once

// tf-idf retrieval over the question corpus.
//
// Weighting is SMART ltc (query) x lnc (document):
//   document  w_d(t) = 1 + ln tf,                    cosine-normalized
//   query     w_q(t) = (1 + ln tf_q) * ln(N / df(t)), terms with df = 0 dropped
//   score(d)  = sum_t w_q(t) w_d(t) / |d|
// Similar-question retrieval weights both sides ltc so a duplicate scores 1.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tossup/corpus.hpp"

namespace tossup {

enum class Grouping : std::uint8_t { ByAnswer, ByQuestion };

std::string_view to_string(Grouping grouping);

struct Guess {
  std::string answer;
  double score = 0.0;
  double confidence = 0.0;

  friend bool operator==(const Guess&, const Guess&) = default;
};

struct EvidenceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string term;  // space-joined normalized terms when several tokens merged
  double contribution = 0.0;
};

struct TermContribution {
  std::string term;
  double contribution = 0.0;
};

struct SimilarQuestion {
  std::string id;
  double similarity = 0.0;
};

// One document's weight for a term.
struct Posting {
  std::uint32_t doc;
  double weight;
};

class TfIdfIndex {
 public:
  TfIdfIndex() = default;

  Grouping grouping() const noexcept { return grouping_; }
  std::size_t n_docs() const noexcept { return doc_ids_.size(); }
  std::size_t vocabulary_size() const noexcept { return terms_.size(); }

  const std::vector<std::string>& doc_ids() const noexcept { return doc_ids_; }
  const std::string& doc_id(std::size_t doc) const { return doc_ids_[doc]; }
  double doc_norm(std::size_t doc) const { return doc_norms_[doc]; }
  // Norm of the idf-weighted (ltc) document vector; used for similarity.
  double doc_idf_norm(std::size_t doc) const { return doc_idf_norms_[doc]; }

  std::optional<std::uint32_t> term_id(std::string_view term) const;
  const std::string& term(std::uint32_t id) const { return terms_[id]; }
  std::span<const Posting> postings(std::uint32_t id) const;
  std::size_t df(std::string_view term) const;
  std::size_t df(std::uint32_t id) const { return df_[id]; }
  double idf(std::uint32_t id) const { return idf_[id]; }
  // Document-side weight w_d(t) for one document, 0 if absent.
  double weight(std::uint32_t term, std::size_t doc) const;

  // Resolves a document identifier. ByAnswer indices also accept any
  // spelling with the same normalized answer.
  std::optional<std::size_t> find_doc(std::string_view id) const;

  // Hash of the corpus this index was built from (see corpus_hash()).
  const std::string& corpus_hash() const noexcept { return corpus_hash_; }

  friend TfIdfIndex build_index(const QuestionSet& qs, Grouping grouping);
  friend void save_index(const TfIdfIndex& ix, const std::filesystem::path& path);
  friend TfIdfIndex load_index(const std::filesystem::path& path);
  friend std::string serialize_index(const TfIdfIndex& ix);
  friend TfIdfIndex deserialize_index(std::string_view bytes);

 private:
  void finalize();

  Grouping grouping_ = Grouping::ByAnswer;
  std::vector<std::string> doc_ids_;
  std::vector<std::string> doc_keys_;  // normalized answer (ByAnswer) or id
  std::unordered_map<std::string, std::size_t> doc_lookup_;
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::uint32_t> term_ids_;
  std::vector<std::size_t> posting_offsets_;  // terms_.size() + 1
  std::vector<Posting> postings_;
  std::vector<std::uint32_t> df_;
  std::vector<double> idf_;
  std::vector<double> doc_norms_;
  std::vector<double> doc_idf_norms_;
  std::string corpus_hash_;
};

// Content hash of a question set, independent of fields the index ignores.
std::string corpus_hash(const QuestionSet& qs);

// Throws EmptyCorpus when qs is empty.
TfIdfIndex build_index(const QuestionSet& qs, Grouping grouping);

// Weighted query vector over indexed terms, sorted by term id.
struct QueryVector {
  std::vector<std::pair<std::uint32_t, double>> weights;
  double norm = 0.0;
};
QueryVector make_query_vector(const TfIdfIndex& ix, std::string_view text);

// Score for every document sharing at least one indexed term with the query,
// in ascending document order.
std::vector<std::pair<std::size_t, double>> score_documents(const TfIdfIndex& ix,
                                                            std::string_view text);

// Top-k guesses, score descending then document id ascending.
std::vector<Guess> query(const TfIdfIndex& ix, std::string_view text, std::size_t k);

// s1 / sum of the first min(n, 10) scores; 0 when that sum is 0.
// Throws EmptyScores on an empty list.
double confidence(std::span<const double> scores);

// Per-term contributions to one document's score, descending.
std::vector<TermContribution> term_contributions(const TfIdfIndex& ix, std::string_view text,
                                                 std::string_view answer);

// Highlightable evidence: the top_n contributing terms mapped to every
// occurrence in `text`; flagged tokens separated by at most one unflagged
// token are merged into a single phrase span. Throws UnknownAnswer.
std::vector<EvidenceSpan> evidence(const TfIdfIndex& ix, std::string_view text,
                                   std::string_view answer, std::size_t top_n);

// ltc-ltc cosine against every indexed question. Throws WrongGrouping on
// answer-grouped indices.
std::vector<SimilarQuestion> similar_questions(const TfIdfIndex& ix, std::string_view text,
                                               std::size_t k);

// Versioned binary cache. load_index throws MalformedFile on a bad or
// foreign-version file.
std::string serialize_index(const TfIdfIndex& ix);
TfIdfIndex deserialize_index(std::string_view bytes);
void save_index(const TfIdfIndex& ix, const std::filesystem::path& path);
TfIdfIndex load_index(const std::filesystem::path& path);

}  // namespace tossup
