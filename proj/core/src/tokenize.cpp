// SPDX-License-Identifier: Apache-2.0
#include "linesift/tokenize.hpp"

#include <cctype>

namespace linesift {

namespace {

inline bool ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\v' || c == '\f';
}

inline bool ascii_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

inline bool ascii_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

bool is_numeral(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_start) return false;

  // comma grouping: every comma must be followed by exactly three digits
  if (i < s.size() && s[i] == ',') {
    if (i - digits_start > 3) return false;
    while (i < s.size() && s[i] == ',') {
      ++i;
      for (int k = 0; k < 3; ++k, ++i)
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    std::size_t frac_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == frac_start) return false;
  }
  if (i < s.size() && s[i] == '%') ++i;
  return i == s.size();
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && ascii_space(line[pos])) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !ascii_space(line[end])) ++end;
    std::string_view chunk = line.substr(pos, end - pos);
    pos = end;

    if (is_numeral(chunk)) {
      out.push_back({std::string(chunk), TokenKind::Numeral});
      continue;
    }

    // peel leading punctuation
    std::size_t b = 0, e = chunk.size();
    while (b < e && ascii_punct(chunk[b])) {
      out.push_back({std::string(1, chunk[b]), TokenKind::Symbol});
      ++b;
    }
    // collect trailing punctuation, emitted after the core
    std::vector<char> tail;
    while (e > b && ascii_punct(chunk[e - 1])) {
      tail.push_back(chunk[e - 1]);
      --e;
    }
    std::string_view core = chunk.substr(b, e - b);
    if (!core.empty()) {
      TokenKind kind;
      if (is_numeral(core)) {
        kind = TokenKind::Numeral;
      } else {
        bool has_alnum = false;
        for (char c : core) has_alnum |= ascii_alnum(c);
        kind = has_alnum ? TokenKind::Word : TokenKind::Symbol;
      }
      out.push_back({std::string(core), kind});
    }
    for (auto it = tail.rbegin(); it != tail.rend(); ++it)
      out.push_back({std::string(1, *it), TokenKind::Symbol});
  }
  return out;
}

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::vector<std::string> lower_surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(to_lower(t.surface));
  return out;
}

}  // namespace linesift
