#include "tossup/index.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "tossup/error.hpp"
#include "tossup/hash.hpp"
#include "tossup/text.hpp"

namespace tossup {

namespace {

constexpr char kMagic[8] = {'T', 'S', 'U', 'P', 'I', 'D', 'X', '\0'};
constexpr std::uint32_t kFormatVersion = 1;
constexpr std::size_t kConfidenceWindow = 10;

std::string doc_key(const Question& q, Grouping grouping) {
  if (grouping == Grouping::ByQuestion) return q.id;
  std::string key = normalize_answer(q.answer);
  return key.empty() ? q.answer : key;
}

// Ranks (score desc, id asc) over document ordinals.
struct RankOrder {
  const std::vector<double>& scores;
  const std::vector<std::string>& ids;
  bool operator()(std::size_t a, std::size_t b) const {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return ids[a] < ids[b];
  }
};

std::vector<std::size_t> top_k(std::vector<std::size_t> candidates, const std::vector<double>& scores,
                               const std::vector<std::string>& ids, std::size_t k) {
  RankOrder order{scores, ids};
  if (candidates.size() > k) {
    std::nth_element(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                     candidates.end(), order);
    candidates.resize(k);
  }
  std::sort(candidates.begin(), candidates.end(), order);
  return candidates;
}

class Writer {
 public:
  template <typename T>
  void pod(T value) {
    out_.append(reinterpret_cast<const char*>(&value), sizeof(T));
  }
  void str(std::string_view s) {
    pod<std::uint64_t>(s.size());
    out_.append(s);
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  template <typename T>
  T pod() {
    need(sizeof(T));
    T value;
    std::memcpy(&value, bytes_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return value;
  }
  std::string str() {
    const auto n = pod<std::uint64_t>();
    need(n);
    std::string s(bytes_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  void raw(char* dst, std::size_t n) {
    need(n);
    std::memcpy(dst, bytes_.data() + pos_, n);
    pos_ += n;
  }
  bool done() const { return pos_ == bytes_.size(); }

 private:
  void need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) throw Error(ErrorCode::MalformedFile, "truncated index cache");
  }
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(Grouping grouping) {
  return grouping == Grouping::ByAnswer ? "by_answer" : "by_question";
}

std::optional<std::uint32_t> TfIdfIndex::term_id(std::string_view term) const {
  auto it = term_ids_.find(std::string(term));
  if (it == term_ids_.end()) return std::nullopt;
  return it->second;
}

std::span<const Posting> TfIdfIndex::postings(std::uint32_t id) const {
  return {postings_.data() + posting_offsets_[id], posting_offsets_[id + 1] - posting_offsets_[id]};
}

std::size_t TfIdfIndex::df(std::string_view term) const {
  auto id = term_id(term);
  return id ? df_[*id] : 0;
}

double TfIdfIndex::weight(std::uint32_t term, std::size_t doc) const {
  auto list = postings(term);
  auto it = std::lower_bound(list.begin(), list.end(), doc,
                             [](const Posting& p, std::size_t d) { return p.doc < d; });
  return (it != list.end() && it->doc == doc) ? it->weight : 0.0;
}

std::optional<std::size_t> TfIdfIndex::find_doc(std::string_view id) const {
  if (auto it = doc_lookup_.find(std::string(id)); it != doc_lookup_.end()) return it->second;
  if (grouping_ == Grouping::ByAnswer) {
    if (auto it = doc_lookup_.find(normalize_answer(id)); it != doc_lookup_.end()) return it->second;
  }
  return std::nullopt;
}

void TfIdfIndex::finalize() {
  const std::size_t n = doc_ids_.size();
  doc_lookup_.clear();
  for (std::size_t d = 0; d < n; ++d) {
    doc_lookup_.emplace(doc_keys_[d], d);
    doc_lookup_.emplace(doc_ids_[d], d);
  }
  term_ids_.clear();
  term_ids_.reserve(terms_.size());
  for (std::uint32_t t = 0; t < terms_.size(); ++t) term_ids_.emplace(terms_[t], t);

  df_.assign(terms_.size(), 0);
  idf_.assign(terms_.size(), 0.0);
  doc_norms_.assign(n, 0.0);
  doc_idf_norms_.assign(n, 0.0);
  const double n_docs = static_cast<double>(n);
  for (std::uint32_t t = 0; t < terms_.size(); ++t) {
    auto list = postings(t);
    df_[t] = static_cast<std::uint32_t>(list.size());
    idf_[t] = std::log(n_docs / static_cast<double>(list.size()));
    for (const auto& p : list) {
      doc_norms_[p.doc] += p.weight * p.weight;
      const double w = p.weight * idf_[t];
      doc_idf_norms_[p.doc] += w * w;
    }
  }
  for (std::size_t d = 0; d < n; ++d) {
    doc_norms_[d] = std::sqrt(doc_norms_[d]);
    doc_idf_norms_[d] = std::sqrt(doc_idf_norms_[d]);
  }
}

std::string corpus_hash(const QuestionSet& qs) {
  Fnv1a h;
  for (const auto& q : qs) {
    h.update(q.id).update(std::string_view("\x1f", 1));
    h.update(q.text).update(std::string_view("\x1f", 1));
    h.update(q.answer).update(std::string_view("\x1e", 1));
  }
  return h.hex();
}

TfIdfIndex build_index(const QuestionSet& qs, Grouping grouping) {
  if (qs.empty()) throw Error(ErrorCode::EmptyCorpus, "cannot index an empty question set");

  TfIdfIndex ix;
  ix.grouping_ = grouping;
  ix.corpus_hash_ = corpus_hash(qs);

  std::unordered_map<std::string, std::size_t> doc_of_key;
  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> counts;
  for (const auto& q : qs) {
    const std::string key = doc_key(q, grouping);
    auto [it, inserted] = doc_of_key.emplace(key, ix.doc_ids_.size());
    if (inserted) {
      ix.doc_ids_.push_back(grouping == Grouping::ByAnswer ? q.answer : q.id);
      ix.doc_keys_.push_back(key);
      counts.emplace_back();
    }
    auto& tf = counts[it->second];
    for (const auto& tok : tokenize(q.text)) {
      auto [tit, new_term] = ix.term_ids_.emplace(tok.normalized, ix.terms_.size());
      if (new_term) ix.terms_.push_back(tok.normalized);
      ++tf[tit->second];
    }
  }

  std::vector<std::size_t> sizes(ix.terms_.size() + 1, 0);
  for (const auto& tf : counts) {
    for (const auto& [term, count] : tf) ++sizes[term + 1];
  }
  for (std::size_t t = 1; t < sizes.size(); ++t) sizes[t] += sizes[t - 1];
  ix.posting_offsets_ = sizes;
  ix.postings_.resize(sizes.back());
  std::vector<std::size_t> cursor(sizes.begin(), sizes.end() - 1);
  for (std::uint32_t d = 0; d < counts.size(); ++d) {
    for (const auto& [term, count] : counts[d]) {
      ix.postings_[cursor[term]++] = Posting{d, 1.0 + std::log(static_cast<double>(count))};
    }
  }
  ix.finalize();
  return ix;
}

QueryVector make_query_vector(const TfIdfIndex& ix, std::string_view text) {
  std::unordered_map<std::uint32_t, std::uint32_t> tf;
  for (const auto& tok : tokenize(text)) {
    if (auto id = ix.term_id(tok.normalized)) ++tf[*id];
  }
  QueryVector qv;
  qv.weights.reserve(tf.size());
  for (const auto& [term, count] : tf) {
    qv.weights.emplace_back(term, (1.0 + std::log(static_cast<double>(count))) * ix.idf(term));
  }
  std::sort(qv.weights.begin(), qv.weights.end());
  double sq = 0.0;
  for (const auto& [term, w] : qv.weights) sq += w * w;
  qv.norm = std::sqrt(sq);
  return qv;
}

namespace {

// Accumulates sum_t w_q(t) w_d(t) per document; returns touched documents.
std::vector<std::size_t> accumulate(const TfIdfIndex& ix, const QueryVector& qv,
                                    std::vector<double>& acc, bool idf_weighted_docs) {
  std::vector<std::size_t> touched;
  std::vector<char> seen(ix.n_docs(), 0);
  for (const auto& [term, wq] : qv.weights) {
    const double scale = idf_weighted_docs ? wq * ix.idf(term) : wq;
    for (const auto& p : ix.postings(term)) {
      if (!seen[p.doc]) {
        seen[p.doc] = 1;
        touched.push_back(p.doc);
      }
      acc[p.doc] += scale * p.weight;
    }
  }
  return touched;
}

}  // namespace

std::vector<std::pair<std::size_t, double>> score_documents(const TfIdfIndex& ix,
                                                            std::string_view text) {
  const QueryVector qv = make_query_vector(ix, text);
  std::vector<double> acc(ix.n_docs(), 0.0);
  auto touched = accumulate(ix, qv, acc, false);
  std::sort(touched.begin(), touched.end());
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(touched.size());
  for (auto d : touched) out.emplace_back(d, acc[d] / ix.doc_norm(d));
  return out;
}

double confidence(std::span<const double> scores) {
  if (scores.empty()) throw Error(ErrorCode::EmptyScores, "confidence needs at least one score");
  const std::size_t m = std::min(scores.size(), kConfidenceWindow);
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) sum += scores[i];
  return sum > 0.0 ? scores[0] / sum : 0.0;
}

std::vector<Guess> query(const TfIdfIndex& ix, std::string_view text, std::size_t k) {
  if (k == 0) return {};
  const QueryVector qv = make_query_vector(ix, text);
  if (qv.weights.empty()) return {};
  std::vector<double> acc(ix.n_docs(), 0.0);
  auto touched = accumulate(ix, qv, acc, false);
  for (auto d : touched) acc[d] /= ix.doc_norm(d);
  const auto ranked = top_k(std::move(touched), acc, ix.doc_ids(), k);

  std::vector<double> scores;
  scores.reserve(ranked.size());
  for (auto d : ranked) scores.push_back(acc[d]);
  const std::size_t m = std::min(scores.size(), kConfidenceWindow);
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) sum += scores[i];

  std::vector<Guess> guesses;
  guesses.reserve(ranked.size());
  for (auto d : ranked) {
    guesses.push_back(Guess{ix.doc_id(d), acc[d], sum > 0.0 ? acc[d] / sum : 0.0});
  }
  return guesses;
}

std::vector<TermContribution> term_contributions(const TfIdfIndex& ix, std::string_view text,
                                                 std::string_view answer) {
  const auto doc = ix.find_doc(answer);
  if (!doc) throw Error(ErrorCode::UnknownAnswer, "no document for answer '" + std::string(answer) + "'");
  const QueryVector qv = make_query_vector(ix, text);
  std::vector<TermContribution> out;
  for (const auto& [term, wq] : qv.weights) {
    const double wd = ix.weight(term, *doc);
    if (wd > 0.0) out.push_back(TermContribution{ix.term(term), wq * wd / ix.doc_norm(*doc)});
  }
  std::sort(out.begin(), out.end(), [](const TermContribution& a, const TermContribution& b) {
    if (a.contribution != b.contribution) return a.contribution > b.contribution;
    return a.term < b.term;
  });
  return out;
}

std::vector<EvidenceSpan> evidence(const TfIdfIndex& ix, std::string_view text,
                                   std::string_view answer, std::size_t top_n) {
  auto contributions = term_contributions(ix, text, answer);
  std::unordered_map<std::string, double> selected;
  for (const auto& tc : contributions) {
    if (selected.size() == top_n) break;
    if (tc.contribution > 0.0) selected.emplace(tc.term, tc.contribution);
  }
  if (selected.empty()) return {};

  const auto tokens = tokenize(text);
  std::vector<EvidenceSpan> spans;
  std::vector<std::string> span_terms;
  std::size_t last_flagged = 0;
  bool open = false;

  auto close = [&] {
    if (!open) return;
    EvidenceSpan& span = spans.back();
    double total = 0.0;
    for (std::size_t i = 0; i < span_terms.size(); ++i) {
      if (i > 0) span.term.push_back(' ');
      span.term += span_terms[i];
      if (std::find(span_terms.begin(), span_terms.begin() + static_cast<std::ptrdiff_t>(i),
                    span_terms[i]) == span_terms.begin() + static_cast<std::ptrdiff_t>(i)) {
        total += selected.at(span_terms[i]);
      }
    }
    span.contribution = total;
    span_terms.clear();
    open = false;
  };

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!selected.count(tokens[i].normalized)) continue;
    // Gap of at most one unflagged token keeps the phrase open.
    if (open && i - last_flagged > 2) close();
    if (!open) {
      spans.push_back(EvidenceSpan{tokens[i].start, tokens[i].end, {}, 0.0});
      open = true;
    }
    spans.back().end = tokens[i].end;
    span_terms.push_back(tokens[i].normalized);
    last_flagged = i;
  }
  close();

  std::stable_sort(spans.begin(), spans.end(), [](const EvidenceSpan& a, const EvidenceSpan& b) {
    return a.contribution > b.contribution;
  });
  return spans;
}

std::vector<SimilarQuestion> similar_questions(const TfIdfIndex& ix, std::string_view text,
                                               std::size_t k) {
  if (ix.grouping() != Grouping::ByQuestion) {
    throw Error(ErrorCode::WrongGrouping, "similar questions need a per-question index");
  }
  if (k == 0) return {};
  const QueryVector qv = make_query_vector(ix, text);
  if (qv.norm == 0.0) return {};
  std::vector<double> acc(ix.n_docs(), 0.0);
  auto touched = accumulate(ix, qv, acc, true);
  std::vector<std::size_t> positive;
  for (auto d : touched) {
    if (acc[d] <= 0.0) continue;
    acc[d] = std::min(1.0, acc[d] / (qv.norm * ix.doc_idf_norm(d)));
    positive.push_back(d);
  }
  const auto ranked = top_k(std::move(positive), acc, ix.doc_ids(), k);
  std::vector<SimilarQuestion> out;
  out.reserve(ranked.size());
  for (auto d : ranked) out.push_back(SimilarQuestion{ix.doc_id(d), acc[d]});
  return out;
}

std::string serialize_index(const TfIdfIndex& ix) {
  Writer w;
  for (char c : kMagic) w.pod(c);
  w.pod(kFormatVersion);
  w.str(ix.corpus_hash_);
  w.pod(static_cast<std::uint8_t>(ix.grouping_));
  w.pod<std::uint64_t>(ix.doc_ids_.size());
  for (std::size_t d = 0; d < ix.doc_ids_.size(); ++d) {
    w.str(ix.doc_ids_[d]);
    w.str(ix.doc_keys_[d]);
  }
  w.pod<std::uint64_t>(ix.terms_.size());
  for (std::uint32_t t = 0; t < ix.terms_.size(); ++t) {
    w.str(ix.terms_[t]);
    auto list = ix.postings(t);
    w.pod<std::uint64_t>(list.size());
    for (const auto& p : list) {
      w.pod(p.doc);
      w.pod(p.weight);
    }
  }
  return w.take();
}

TfIdfIndex deserialize_index(std::string_view bytes) {
  Reader r(bytes);
  char magic[8];
  r.raw(magic, sizeof magic);
  if (std::memcmp(magic, kMagic, sizeof magic) != 0) {
    throw Error(ErrorCode::MalformedFile, "not an index cache");
  }
  if (const auto version = r.pod<std::uint32_t>(); version != kFormatVersion) {
    throw Error(ErrorCode::MalformedFile, "index cache version " + std::to_string(version) +
                                              " (expected " + std::to_string(kFormatVersion) + ")");
  }
  TfIdfIndex ix;
  ix.corpus_hash_ = r.str();
  const auto grouping = r.pod<std::uint8_t>();
  if (grouping > 1) throw Error(ErrorCode::MalformedFile, "bad grouping in index cache");
  ix.grouping_ = static_cast<Grouping>(grouping);
  const auto n_docs = r.pod<std::uint64_t>();
  for (std::uint64_t d = 0; d < n_docs; ++d) {
    ix.doc_ids_.push_back(r.str());
    ix.doc_keys_.push_back(r.str());
  }
  const auto n_terms = r.pod<std::uint64_t>();
  ix.posting_offsets_.push_back(0);
  for (std::uint64_t t = 0; t < n_terms; ++t) {
    ix.terms_.push_back(r.str());
    const auto n = r.pod<std::uint64_t>();
    if (n == 0) throw Error(ErrorCode::MalformedFile, "empty posting list in index cache");
    for (std::uint64_t i = 0; i < n; ++i) {
      Posting p{r.pod<std::uint32_t>(), r.pod<double>()};
      if (p.doc >= n_docs) throw Error(ErrorCode::MalformedFile, "posting out of range");
      ix.postings_.push_back(p);
    }
    ix.posting_offsets_.push_back(ix.postings_.size());
  }
  if (!r.done()) throw Error(ErrorCode::MalformedFile, "trailing bytes in index cache");
  ix.finalize();
  return ix;
}

void save_index(const TfIdfIndex& ix, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  const std::string bytes = serialize_index(ix);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Io, "short write to " + path.string());
}

TfIdfIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize_index(ss.str());
}

}  // namespace tossup
