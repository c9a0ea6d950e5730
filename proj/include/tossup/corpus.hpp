#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tossup {

enum class DifficultyLabel { HighSchool, College, Unlabeled };

std::string_view to_string(DifficultyLabel label);
// "high school" / "college" in any case; anything else is Unlabeled.
DifficultyLabel parse_difficulty_label(std::string_view text);

struct Question {
  std::string id;
  std::string text;
  std::string answer;
  std::string category;
  std::string subcategory;
  DifficultyLabel difficulty = DifficultyLabel::Unlabeled;
  std::string source;
};

class QuestionSet {
 public:
  QuestionSet() = default;
  // Throws DuplicateId or MalformedFile (empty text/answer).
  explicit QuestionSet(std::vector<Question> questions);

  const std::vector<Question>& questions() const noexcept { return questions_; }
  std::size_t size() const noexcept { return questions_.size(); }
  bool empty() const noexcept { return questions_.empty(); }
  const Question& operator[](std::size_t i) const { return questions_[i]; }

  const std::map<std::string, std::size_t>& category_counts() const noexcept { return category_counts_; }
  const std::map<std::string, std::size_t>& subcategory_counts() const noexcept {
    return subcategory_counts_;
  }

  auto begin() const { return questions_.begin(); }
  auto end() const { return questions_.end(); }

 private:
  std::vector<Question> questions_;
  std::map<std::string, std::size_t> category_counts_;
  std::map<std::string, std::size_t> subcategory_counts_;
};

// Whole file as bytes. Throws Io.
std::string read_file(const std::filesystem::path& path);

// JSON array of {"id","text","answer","category"?,"subcategory"?,"difficulty"?,"source"?}.
// Unknown fields are ignored.
QuestionSet parse_question_set(std::string_view json_text);
QuestionSet load_question_set(const std::filesystem::path& path);
std::string question_set_to_json(const QuestionSet& qs);

// Redirect-derived entity aliases, closed under transitive redirects.
class AliasTable {
 public:
  AliasTable() = default;

  // Raw redirect pairs (alias, target). Throws CycleDetected on redirect
  // cycles and MalformedFile when one alias redirects to two targets.
  static AliasTable from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

  // Canonical entity for any spelling (normalized internally).
  std::optional<std::string> lookup(std::string_view name) const;

  const std::set<std::string>& canonical() const noexcept { return canonical_; }
  const std::map<std::string, std::string>& alias_to_canonical() const noexcept {
    return alias_to_canonical_;
  }
  std::size_t size() const noexcept { return alias_to_canonical_.size(); }

  friend bool operator==(const AliasTable&, const AliasTable&) = default;

 private:
  std::set<std::string> canonical_;
  std::map<std::string, std::string> alias_to_canonical_;  // normalized alias -> canonical
};

AliasTable parse_alias_table(std::istream& in);
AliasTable load_alias_table(const std::filesystem::path& path);
// TSV form of the closed table; loading it back reproduces the table.
std::string alias_table_to_tsv(const AliasTable& table);

struct CountryEntry {
  std::string name;
  std::vector<std::string> tokens;  // normalized words
  std::string region;
};

struct CountryLexicon {
  std::vector<CountryEntry> entries;
  std::set<std::string> regions;
};

CountryLexicon parse_country_lexicon(std::istream& in);
CountryLexicon load_country_lexicon(const std::filesystem::path& path);

}  // namespace tossup
