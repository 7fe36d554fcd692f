// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace linesift {

enum class TokenKind : unsigned char { Word, Numeral, Symbol };

struct Token {
  std::string surface;
  TokenKind kind;
};

// A token is a numeral iff it is an optional sign, digits with optional
// comma grouping, an optional decimal part, and an optional trailing '%'.
bool is_numeral(std::string_view s);

// Whitespace split, then leading/trailing ASCII punctuation peeled off as
// one-character SYMBOL tokens. A chunk that matches the numeral rule as a
// whole (e.g. "7,000" or "50%") is kept intact.
std::vector<Token> tokenize(std::string_view line);

// Lower-cased surfaces of all tokens; the shared tokenization used by the
// n-gram features, the embedding trainer, the CLM baseline and the TF-IDF
// vectorizer.
std::vector<std::string> lower_surfaces(const std::vector<Token>& tokens);

std::string to_lower(std::string_view s);

}  // namespace linesift
