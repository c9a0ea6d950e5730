#include "tossup/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "tossup/error.hpp"
#include "tossup/text.hpp"

namespace tossup {

using json = nlohmann::json;

std::string_view to_string(DifficultyLabel label) {
  switch (label) {
    case DifficultyLabel::HighSchool: return "high school";
    case DifficultyLabel::College: return "college";
    case DifficultyLabel::Unlabeled: return "unlabeled";
  }
  return "unlabeled";
}

DifficultyLabel parse_difficulty_label(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "high school") return DifficultyLabel::HighSchool;
  if (lower == "college") return DifficultyLabel::College;
  return DifficultyLabel::Unlabeled;
}

QuestionSet::QuestionSet(std::vector<Question> questions) : questions_(std::move(questions)) {
  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < questions_.size(); ++i) {
    const auto& q = questions_[i];
    if (q.text.empty() || q.answer.empty()) {
      throw Error(ErrorCode::MalformedFile,
                  "record " + std::to_string(i) + " has empty text or answer");
    }
    if (!ids.insert(q.id).second) {
      throw Error(ErrorCode::DuplicateId, "question id '" + q.id + "' repeated at record " +
                                              std::to_string(i));
    }
    if (!q.category.empty()) ++category_counts_[q.category];
    if (!q.subcategory.empty()) ++subcategory_counts_[q.subcategory];
  }
}

namespace {

std::string required_string(const json& rec, const char* field, std::size_t index) {
  auto it = rec.find(field);
  if (it == rec.end() || !it->is_string()) {
    throw Error(ErrorCode::MalformedFile, "record " + std::to_string(index) +
                                              " is missing string field \"" + field + "\"");
  }
  return it->get<std::string>();
}

std::string optional_string(const json& rec, const char* field, std::size_t index) {
  auto it = rec.find(field);
  if (it == rec.end() || it->is_null()) return {};
  if (!it->is_string()) {
    throw Error(ErrorCode::MalformedFile, "record " + std::to_string(index) + " field \"" +
                                              field + "\" is not a string");
  }
  return it->get<std::string>();
}

// Splits a TSV line into fields; strips a trailing '\r'.
std::vector<std::string> split_tabs(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    fields.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
    if (tab == std::string::npos) break;
    pos = tab + 1;
  }
  return fields;
}

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QuestionSet parse_question_set(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedFile, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::MalformedFile, "top level is not an array");

  std::vector<Question> questions;
  questions.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& rec = doc[i];
    if (!rec.is_object()) {
      throw Error(ErrorCode::MalformedFile, "record " + std::to_string(i) + " is not an object");
    }
    Question q;
    q.id = required_string(rec, "id", i);
    q.text = required_string(rec, "text", i);
    q.answer = required_string(rec, "answer", i);
    if (q.text.empty() || q.answer.empty()) {
      throw Error(ErrorCode::MalformedFile,
                  "record " + std::to_string(i) + " has empty text or answer");
    }
    q.category = optional_string(rec, "category", i);
    q.subcategory = optional_string(rec, "subcategory", i);
    q.difficulty = parse_difficulty_label(optional_string(rec, "difficulty", i));
    q.source = optional_string(rec, "source", i);
    questions.push_back(std::move(q));
  }
  return QuestionSet(std::move(questions));
}

QuestionSet load_question_set(const std::filesystem::path& path) {
  return parse_question_set(read_file(path));
}

std::string question_set_to_json(const QuestionSet& qs) {
  json out = json::array();
  for (const auto& q : qs) {
    json rec = {{"id", q.id}, {"text", q.text}, {"answer", q.answer}};
    if (!q.category.empty()) rec["category"] = q.category;
    if (!q.subcategory.empty()) rec["subcategory"] = q.subcategory;
    if (q.difficulty != DifficultyLabel::Unlabeled) rec["difficulty"] = to_string(q.difficulty);
    if (!q.source.empty()) rec["source"] = q.source;
    out.push_back(std::move(rec));
  }
  return out.dump(1);
}

AliasTable AliasTable::from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  // normalized alias -> raw target, in first-seen order for determinism
  std::unordered_map<std::string, std::string> redirect;
  std::vector<std::string> targets;
  for (const auto& [alias, target] : pairs) {
    const std::string key = normalize_answer(alias);
    if (key.empty() || normalize_answer(target).empty()) {
      throw Error(ErrorCode::MalformedFile, "empty alias or target in pair '" + alias + "'");
    }
    targets.push_back(target);
    if (key == normalize_answer(target)) continue;
    auto [it, inserted] = redirect.emplace(key, target);
    if (!inserted && normalize_answer(it->second) != normalize_answer(target)) {
      throw Error(ErrorCode::MalformedFile,
                  "alias '" + alias + "' redirects to both '" + it->second + "' and '" + target + "'");
    }
  }

  auto resolve = [&](const std::string& start_key) {
    std::unordered_set<std::string> seen{start_key};
    std::string current = redirect.at(start_key);
    while (true) {
      const std::string k = normalize_answer(current);
      auto it = redirect.find(k);
      if (it == redirect.end()) return current;
      if (!seen.insert(k).second) {
        throw Error(ErrorCode::CycleDetected, "redirect cycle through '" + current + "'");
      }
      current = it->second;
    }
  };

  AliasTable table;
  // Final targets first so a canonical name always maps to itself.
  for (const auto& target : targets) {
    const std::string k = normalize_answer(target);
    if (redirect.count(k)) continue;
    if (table.alias_to_canonical_.emplace(k, target).second) table.canonical_.insert(target);
  }
  for (const auto& [key, target] : redirect) {
    table.alias_to_canonical_[key] = resolve(key);
  }
  // A target that lost a normalization tie maps to the winner; resolve through it.
  for (auto& [key, canonical] : table.alias_to_canonical_) {
    canonical = table.alias_to_canonical_.at(normalize_answer(canonical));
  }
  return table;
}

std::optional<std::string> AliasTable::lookup(std::string_view name) const {
  auto it = alias_to_canonical_.find(normalize_answer(name));
  if (it == alias_to_canonical_.end()) return std::nullopt;
  return it->second;
}

AliasTable parse_alias_table(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2 || trim(fields[0]).empty() || trim(fields[1]).empty()) {
      throw Error(ErrorCode::MalformedFile,
                  "alias line " + std::to_string(line_no) + " is not 'alias<TAB>canonical'");
    }
    pairs.emplace_back(trim(fields[0]), trim(fields[1]));
  }
  return AliasTable::from_pairs(pairs);
}

AliasTable load_alias_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return parse_alias_table(in);
}

std::string alias_table_to_tsv(const AliasTable& table) {
  std::string out;
  for (const auto& [alias, canonical] : table.alias_to_canonical()) {
    out += alias;
    out += '\t';
    out += canonical;
    out += '\n';
  }
  return out;
}

CountryLexicon parse_country_lexicon(std::istream& in) {
  CountryLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2 || trim(fields[0]).empty() || trim(fields[1]).empty()) {
      throw Error(ErrorCode::MalformedFile,
                  "country line " + std::to_string(line_no) + " is not 'country<TAB>region'");
    }
    CountryEntry entry{trim(fields[0]), {}, trim(fields[1])};
    for (auto& tok : tokenize(entry.name)) entry.tokens.push_back(std::move(tok.normalized));
    if (entry.tokens.empty()) {
      throw Error(ErrorCode::MalformedFile,
                  "country line " + std::to_string(line_no) + " has no word characters");
    }
    lex.regions.insert(entry.region);
    lex.entries.push_back(std::move(entry));
  }
  return lex;
}

CountryLexicon load_country_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return parse_country_lexicon(in);
}

}  // namespace tossup
