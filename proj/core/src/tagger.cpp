// SPDX-License-Identifier: Apache-2.0
#include "linesift/tagger.hpp"

#include <cctype>
#include <unordered_set>

namespace linesift {

std::string_view to_string(CoarseTag t) {
  switch (t) {
    case CoarseTag::NounLike: return "NOUNLIKE";
    case CoarseTag::VerbLike: return "VERBLIKE";
    case CoarseTag::Func: return "FUNC";
    case CoarseTag::Num: return "NUM";
    case CoarseTag::Sym: return "SYM";
    case CoarseTag::Other: return "OTHER";
  }
  return "OTHER";
}

namespace {

const std::unordered_set<std::string>& function_words() {
  static const std::unordered_set<std::string> kSet = {
      "the",   "a",     "an",    "of",    "in",    "to",    "for",   "with",
      "on",    "at",    "by",    "from",  "as",    "is",    "are",   "was",
      "were",  "be",    "been",  "being", "this",  "that",  "these", "those",
      "it",    "its",   "we",    "our",   "they",  "their", "he",    "she",
      "his",   "her",   "you",   "your",  "i",     "and",   "or",    "but",
      "not",   "no",    "nor",   "if",    "then",  "else",  "than",  "too",
      "very",  "so",    "such",  "which", "who",   "whom",  "whose", "what",
      "when",  "where", "how",   "why",   "can",   "could", "will",  "would",
      "shall", "should","may",   "might", "must",  "do",    "does",  "did",
      "done",  "has",   "have",  "had",   "into",  "over",  "under", "between",
      "both",  "each",  "all",   "any",   "some",  "more",  "most",  "other",
      "also",  "only",  "there", "here",  "while", "during","about", "after",
      "before","above", "below", "up",    "down",  "out",   "off",   "again",
      "once",  "per",   "via",   "among", "within","without","because","since",
      "until", "though","although","however","thus","hence","therefore",
  };
  return kSet;
}

const std::unordered_set<std::string>& common_verbs() {
  static const std::unordered_set<std::string> kSet = {
      "show",    "shows",    "use",     "uses",     "make",    "makes",
      "take",    "takes",    "give",    "gives",    "get",     "gets",
      "run",     "runs",     "call",    "calls",    "see",     "need",
      "needs",   "provide",  "provides","describe", "describes","present",
      "presents","compute",  "computes","define",   "defines", "consider",
      "considers","obtain",  "obtains", "require",  "requires","improve",
      "improves","include",  "includes","represent","represents","contain",
      "contains","produce",  "produces","apply",    "applies", "evaluate",
      "evaluates","observe", "observes","report",   "reports", "select",
      "selects", "perform",  "performs","return",   "returns", "store",
      "stores",  "keep",     "keeps",   "find",     "finds",   "set",
      "sets",    "update",   "updates", "insert",   "inserts", "remove",
      "removes", "add",      "adds",    "write",    "writes",  "read",
      "reads",   "allow",    "allows",  "mean",     "means",   "hold",
      "holds",   "work",     "works",
  };
  return kSet;
}

bool has_verb_suffix(const std::string& w) {
  auto ends_with = [&](std::string_view suf) {
    return w.size() > suf.size() &&
           w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
  };
  return ends_with("ing") || ends_with("ed") || ends_with("ize") ||
         ends_with("izes") || ends_with("ise") || ends_with("ifies") ||
         ends_with("ify");
}

// identifier-shaped: digits or underscores inside, or camelCase
bool looks_like_identifier(const std::string& surface) {
  bool upper_after_first = false;
  bool has_digit = false;
  bool has_underscore = false;
  for (std::size_t i = 0; i < surface.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(surface[i]);
    if (std::isdigit(c)) has_digit = true;
    if (surface[i] == '_') has_underscore = true;
    if (i > 0 && std::isupper(c)) upper_after_first = true;
  }
  return has_digit || has_underscore || upper_after_first;
}

}  // namespace

CoarseTag coarse_tag(const Token& token) {
  switch (token.kind) {
    case TokenKind::Symbol: return CoarseTag::Sym;
    case TokenKind::Numeral: return CoarseTag::Num;
    case TokenKind::Word: break;
  }
  const std::string lower = to_lower(token.surface);
  if (function_words().count(lower)) return CoarseTag::Func;
  if (looks_like_identifier(token.surface)) return CoarseTag::Other;
  if (common_verbs().count(lower) || has_verb_suffix(lower)) return CoarseTag::VerbLike;
  return CoarseTag::NounLike;
}

std::vector<CoarseTag> tag_tokens(const std::vector<Token>& tokens) {
  std::vector<CoarseTag> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(coarse_tag(t));
  return out;
}

}  // namespace linesift
