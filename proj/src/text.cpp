#include "tossup/text.hpp"

#include <algorithm>
#include <array>
#include <string_view>

namespace tossup {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one scalar value starting at `pos`; returns the number of bytes used.
std::size_t decode_one(std::string_view s, std::size_t pos, char32_t& out) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    out = b0;
    return 1;
  }
  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
    min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
    min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
    min = 0x10000;
  } else {
    out = kReplacement;
    return 1;
  }
  if (pos + len > s.size()) {
    out = kReplacement;
    return 1;
  }
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) {
      out = kReplacement;
      return 1;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    out = kReplacement;
    return 1;
  }
  out = cp;
  return len;
}

// Base letters for U+00C0..U+00FF; empty entries are not letters.
constexpr std::array<std::string_view, 64> kLatin1Fold = {
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
    "d", "n", "o", "o", "o", "o", "o", "",  "o", "u", "u", "u", "u", "y", "th", "ss",
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
    "d", "n", "o", "o", "o", "o", "o", "",  "o", "u", "u", "u", "u", "y", "th", "y",
};

// Base letters for U+0100..U+017F (Latin Extended-A).
constexpr std::array<std::string_view, 128> kLatinExtAFold = {
    "a",  "a",  "a",  "a",  "a",  "a",                          // 0100
    "c",  "c",  "c",  "c",  "c",  "c",  "c",  "c",              // 0106
    "d",  "d",  "d",  "d",                                      // 010E
    "e",  "e",  "e",  "e",  "e",  "e",  "e",  "e",  "e",  "e",  // 0112
    "g",  "g",  "g",  "g",  "g",  "g",  "g",  "g",              // 011C
    "h",  "h",  "h",  "h",                                      // 0124
    "i",  "i",  "i",  "i",  "i",  "i",  "i",  "i",  "i",  "i",  // 0128
    "ij", "ij",                                                 // 0132
    "j",  "j",                                                  // 0134
    "k",  "k",  "k",                                            // 0136
    "l",  "l",  "l",  "l",  "l",  "l",  "l",  "l",  "l",  "l",  // 0139
    "n",  "n",  "n",  "n",  "n",  "n",  "n",                    // 0143
    "n",  "n",                                                  // 014A
    "o",  "o",  "o",  "o",  "o",  "o",                          // 014C
    "oe", "oe",                                                 // 0152
    "r",  "r",  "r",  "r",  "r",  "r",                          // 0154
    "s",  "s",  "s",  "s",  "s",  "s",  "s",  "s",              // 015A
    "t",  "t",  "t",  "t",  "t",  "t",                          // 0162
    "u",  "u",  "u",  "u",  "u",  "u",  "u",  "u",  "u",  "u",  "u",  "u",  // 0168
    "w",  "w",                                                  // 0174
    "y",  "y",  "y",                                            // 0176
    "z",  "z",  "z",  "z",  "z",  "z",                          // 0179
    "s",                                                        // 017F
};

bool is_combining_mark(char32_t c) {
  return (c >= 0x0300 && c <= 0x036F) || (c >= 0x1AB0 && c <= 0x1AFF) ||
         (c >= 0x1DC0 && c <= 0x1DFF) || (c >= 0x20D0 && c <= 0x20FF);
}

bool is_ascii_alnum(char32_t c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_apostrophe(char32_t c) { return c == '\'' || c == 0x2019; }
bool is_hyphen(char32_t c) { return c == '-' || c == 0x2010 || c == 0x2011; }
bool is_dash(char32_t c) { return is_hyphen(c) || c == 0x2012 || c == 0x2013 || c == 0x2014 || c == '/'; }

bool is_terminator(char32_t c) { return c == '.' || c == '?' || c == '!'; }

bool is_closer(char32_t c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == '*' || c == 0x201D ||
         c == 0x2019 || c == 0x00BB;
}

bool is_opener(char32_t c) {
  return c == '"' || c == '\'' || c == '(' || c == '[' || c == '*' || c == 0x201C ||
         c == 0x2018 || c == 0x00AB;
}

bool is_title_abbreviation(const std::string& lower) {
  static constexpr std::array<std::string_view, 16> kTitles = {
      "dr", "mr", "mrs", "ms", "st", "mt", "jr", "sr", "prof", "gen", "col", "lt", "sgt", "capt",
      "rev", "vs"};
  return std::find(kTitles.begin(), kTitles.end(), lower) != kTitles.end();
}

}  // namespace

CharIndex::CharIndex(std::string_view utf8) : text_(utf8) {
  chars_.reserve(utf8.size());
  bytes_.reserve(utf8.size() + 1);
  std::size_t pos = 0;
  while (pos < utf8.size()) {
    char32_t cp = 0;
    const std::size_t n = decode_one(utf8, pos, cp);
    chars_.push_back(cp);
    bytes_.push_back(pos);
    pos += n;
  }
  bytes_.push_back(utf8.size());
}

std::string_view CharIndex::slice(std::size_t start, std::size_t end) const {
  return text_.substr(bytes_[start], bytes_[end] - bytes_[start]);
}

std::size_t char_length(std::string_view utf8) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < utf8.size()) {
    char32_t cp = 0;
    pos += decode_one(utf8, pos, cp);
    ++n;
  }
  return n;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_word_char(char32_t c) {
  if (c < 0x80) return is_ascii_alnum(c);
  if (c >= 0x00C0 && c <= 0x024F) return c != 0x00D7 && c != 0x00F7;
  if (is_combining_mark(c)) return true;
  return (c >= 0x0370 && c <= 0x03FF) || (c >= 0x0400 && c <= 0x052F) ||
         (c >= 0x3040 && c <= 0x30FF) || (c >= 0x4E00 && c <= 0x9FFF) ||
         (c >= 0xAC00 && c <= 0xD7AF);
}

bool is_upper(char32_t c) {
  if (c >= 'A' && c <= 'Z') return true;
  if (c >= 0x00C0 && c <= 0x00DE) return c != 0x00D7;
  if (c >= 0x0100 && c <= 0x0137) return c % 2 == 0;
  if (c >= 0x0139 && c <= 0x0148) return c % 2 == 1;
  if (c >= 0x014A && c <= 0x0177) return c % 2 == 0;
  return c == 0x0178 || c == 0x0179 || c == 0x017B || c == 0x017D;
}

bool is_space(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' ||
         c == 0x00A0 || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 ||
         c == 0x202F || c == 0x3000;
}

std::string fold_char(char32_t c) {
  std::string out;
  if (c < 0x80) {
    if (c >= 'A' && c <= 'Z') c = c - 'A' + 'a';
    out.push_back(static_cast<char>(c));
  } else if (c >= 0x00C0 && c <= 0x00FF) {
    out = kLatin1Fold[c - 0x00C0];
  } else if (c >= 0x0100 && c <= 0x017F) {
    out = kLatinExtAFold[c - 0x0100];
  } else if (c == 0x0218 || c == 0x0219) {
    out = "s";
  } else if (c == 0x021A || c == 0x021B) {
    out = "t";
  } else if (!is_combining_mark(c)) {
    append_utf8(out, c);
  }
  return out;
}

std::string normalize_term(std::string_view text) {
  const CharIndex chars(text);
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const char32_t c = chars[i];
    if (!is_word_char(c)) continue;
    out += fold_char(c);
  }
  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  const CharIndex chars(text);
  std::vector<Token> tokens;
  const std::size_t n = chars.size();
  std::size_t i = 0;
  while (i < n) {
    if (!is_word_char(chars[i]) || is_combining_mark(chars[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    std::string normalized;
    while (i < n) {
      const char32_t c = chars[i];
      if (is_word_char(c)) {
        normalized += fold_char(c);
        ++i;
      } else if ((is_apostrophe(c) || is_hyphen(c)) && i + 1 < n && is_word_char(chars[i + 1]) &&
                 !is_combining_mark(chars[i + 1])) {
        ++i;
      } else {
        break;
      }
    }
    tokens.push_back(Token{std::string(chars.slice(start, i)), start, i, std::move(normalized)});
  }
  return tokens;
}

std::vector<SentenceSpan> split_sentences(std::string_view text) {
  const CharIndex chars(text);
  const std::size_t n = chars.size();
  std::vector<SentenceSpan> spans;

  auto skip_space = [&](std::size_t i) {
    while (i < n && is_space(chars[i])) ++i;
    return i;
  };
  auto push = [&](std::size_t start, std::size_t end) {
    spans.push_back(SentenceSpan{start, end, spans.size()});
  };

  std::size_t start = skip_space(0);
  std::size_t i = start;
  while (i < n) {
    if (!is_terminator(chars[i])) {
      ++i;
      continue;
    }
    // The word right before a period: initials and titles do not end sentences.
    bool abbreviation = false;
    if (chars[i] == '.') {
      std::size_t w = i;
      while (w > start && is_word_char(chars[w - 1])) --w;
      const std::size_t word_len = i - w;
      if (word_len == 1 && is_upper(chars[w])) {
        abbreviation = true;
      } else if (word_len > 1 && word_len <= 4) {
        abbreviation = is_title_abbreviation(normalize_term(chars.slice(w, i)));
      }
    }
    std::size_t j = i + 1;
    while (j < n && (is_terminator(chars[j]) || is_closer(chars[j]))) ++j;
    if (abbreviation) {
      i = j;
      continue;
    }
    if (j == n) {
      push(start, j);
      start = n;
      break;
    }
    if (is_space(chars[j])) {
      std::size_t k = skip_space(j);
      while (k < n && is_opener(chars[k])) ++k;
      if (k < n && is_upper(chars[k])) {
        push(start, j);
        start = skip_space(j);
        i = start;
        continue;
      }
    }
    i = j;
  }
  if (start < n) {
    std::size_t end = n;
    while (end > start && is_space(chars[end - 1])) --end;
    if (end > start) push(start, end);
  }
  return spans;
}

std::string normalize_answer(std::string_view text) {
  const CharIndex chars(text);
  std::string spaced;
  spaced.reserve(text.size());
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const char32_t c = chars[i];
    if (is_word_char(c)) {
      spaced += fold_char(c);
    } else if (is_space(c) || is_dash(c)) {
      spaced.push_back(' ');
    }
  }
  std::vector<std::string_view> words;
  std::string_view rest(spaced);
  while (!rest.empty()) {
    const auto b = rest.find_first_not_of(' ');
    if (b == std::string_view::npos) break;
    rest.remove_prefix(b);
    const auto e = std::min(rest.find(' '), rest.size());
    words.push_back(rest.substr(0, e));
    rest.remove_prefix(e);
  }
  std::size_t first = 0;
  while (words.size() - first > 1 &&
         (words[first] == "the" || words[first] == "a" || words[first] == "an")) {
    ++first;
  }
  std::string out;
  for (std::size_t w = first; w < words.size(); ++w) {
    if (!out.empty()) out.push_back(' ');
    out += words[w];
  }
  return out;
}

}  // namespace tossup
