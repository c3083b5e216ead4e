#ifndef OFFEVAL_PREPROCESS_HPP
#define OFFEVAL_PREPROCESS_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "offeval/unicode.hpp"

// Tweet normalization: placeholder removal, punctuation/digit stripping,
// elongation collapsing, then whitespace tokenization. All functions are pure.

namespace offeval {

using TokenSequence = std::vector<std::string>;

inline constexpr std::array<std::string_view, 3> kPlaceholders = {"@USER", "URL", "<LF>"};

/// Deletes "@USER", "URL" and "<LF>" (exact, case-sensitive). Deletion is
/// repeated until none is left, since removing one marker can join the halves
/// of another ("U@USERRL").
inline std::string remove_placeholders(std::string_view text) {
  std::string cur(text);
  for (bool changed = true; changed;) {
    changed = false;
    std::string next;
    next.reserve(cur.size());
    std::size_t i = 0;
    while (i < cur.size()) {
      bool hit = false;
      for (auto marker : kPlaceholders) {
        if (std::string_view(cur).substr(i, marker.size()) == marker) {
          i += marker.size();
          hit = changed = true;
          break;
        }
      }
      if (!hit) next.push_back(cur[i++]);
    }
    cur = std::move(next);
  }
  return cur;
}

/// Replaces each punctuation/symbol character and each decimal digit with a space.
inline std::string strip_punct_digits(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : unicode::decode(text)) {
    if (unicode::is_punct_or_symbol(c) || unicode::is_decimal_digit(c))
      out.push_back(' ');
    else
      unicode::append(out, c);
  }
  return out;
}

/// Shortens every run of 3+ identical code points to exactly 2.
inline std::string collapse_elongation(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  char32_t prev = 0;
  int run = 0;
  for (char32_t c : unicode::decode(text)) {
    run = (run > 0 && c == prev) ? run + 1 : 1;
    prev = c;
    if (run <= 2) unicode::append(out, c);
  }
  return out;
}

/// Splits on runs of Unicode whitespace; never yields empty tokens.
inline TokenSequence tokenize(std::string_view text) {
  TokenSequence tokens;
  std::string cur;
  for (char32_t c : unicode::decode(text)) {
    if (unicode::is_whitespace(c)) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      unicode::append(cur, c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

inline TokenSequence preprocess(std::string_view text) {
  return tokenize(collapse_elongation(strip_punct_digits(remove_placeholders(text))));
}

inline std::string join_tokens(const TokenSequence& tokens, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += sep;
    out += tokens[i];
  }
  return out;
}

} // namespace offeval

#endif
