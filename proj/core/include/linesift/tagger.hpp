// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

#include "linesift/tokenize.hpp"

namespace linesift {

// Coarse part-of-speech proxy. Deliberately shallow: a closed-class lexicon
// plus surface-shape rules, no external parser. Lines of running prose show
// FUNC-heavy tag mixes; identifiers, digits and operators land in
// OTHER/NUM/SYM, which is the separation the syntactic features need.
enum class CoarseTag : unsigned char { NounLike = 0, VerbLike, Func, Num, Sym, Other };

inline constexpr std::size_t kNumCoarseTags = 6;

std::string_view to_string(CoarseTag t);

CoarseTag coarse_tag(const Token& token);

std::vector<CoarseTag> tag_tokens(const std::vector<Token>& tokens);

}  // namespace linesift
