#pragma once

// Offset-carrying tokenization and sentence segmentation.
//
// Every offset in this library is a Unicode scalar-value (character) offset
// into the original UTF-8 string, never a byte offset. Highlights produced by
// the index and annotators are expressed in these units and go over the wire
// unchanged.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tossup {

// Decoded view of a UTF-8 string that maps character offsets back to bytes.
// Invalid bytes decode to U+FFFD one byte at a time so slicing stays lossless.
class CharIndex {
 public:
  explicit CharIndex(std::string_view utf8);

  std::size_t size() const noexcept { return chars_.size(); }
  char32_t operator[](std::size_t i) const { return chars_[i]; }
  std::size_t byte_offset(std::size_t char_offset) const { return bytes_[char_offset]; }

  // Bytes of characters [start, end).
  std::string_view slice(std::size_t start, std::size_t end) const;

 private:
  std::string_view text_;
  std::u32string chars_;
  std::vector<std::size_t> bytes_;  // size() + 1 entries
};

std::size_t char_length(std::string_view utf8);
void append_utf8(std::string& out, char32_t cp);

bool is_word_char(char32_t c);
bool is_upper(char32_t c);
bool is_space(char32_t c);

// Lowercased, diacritic-folded form of one character ("É" -> "e", "ß" -> "ss").
// Returns an empty string for characters that fold to nothing (combining marks).
std::string fold_char(char32_t c);

// Term normalization: fold, lowercase, drop everything that is not alphanumeric.
std::string normalize_term(std::string_view text);

struct Token {
  std::string surface;
  std::size_t start = 0;  // inclusive, characters
  std::size_t end = 0;    // exclusive, characters
  std::string normalized;

  friend bool operator==(const Token&, const Token&) = default;
};

// Maximal runs of alphanumerics, keeping apostrophes and hyphens that sit
// between two alphanumerics ("Saturn's", "Thunder-ten-Tronckh").
std::vector<Token> tokenize(std::string_view text);

struct SentenceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t index = 0;

  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

// Splits on '.', '?' or '!' followed by whitespace and a capital letter, or
// by the end of the text. Capital-letter initials and a short list of title
// abbreviations ("Dr.", "St.") never end a sentence.
std::vector<SentenceSpan> split_sentences(std::string_view text);

// Answer-line normalization: fold, lowercase, dashes to spaces, other
// punctuation dropped, whitespace collapsed, leading articles removed.
// Idempotent.
std::string normalize_answer(std::string_view text);

}  // namespace tossup
