// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "linesift/tagger.hpp"
#include "linesift/tokenize.hpp"

using namespace linesift;

TEST_CASE("tokenize splits punctuation off words") {
  const auto toks = tokenize("x = 42;");
  REQUIRE(toks.size() == 4);
  CHECK(toks[0].surface == "x");
  CHECK(toks[0].kind == TokenKind::Word);
  CHECK(toks[1].surface == "=");
  CHECK(toks[1].kind == TokenKind::Symbol);
  CHECK(toks[2].surface == "42");
  CHECK(toks[2].kind == TokenKind::Numeral);
  CHECK(toks[3].surface == ";");
  CHECK(toks[3].kind == TokenKind::Symbol);
}

TEST_CASE("tokenize of empty and blank lines") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("   \t ").empty());
}

TEST_CASE("numeral rule covers decimals, comma groups and percent") {
  const auto toks = tokenize("3.14 7,000 50%");
  REQUIRE(toks.size() == 3);
  for (const auto& t : toks) CHECK(t.kind == TokenKind::Numeral);

  CHECK(is_numeral("42"));
  CHECK(is_numeral("-1.5"));
  CHECK(is_numeral("+10"));
  CHECK(is_numeral("1,234,567"));
  CHECK(is_numeral("26.3%"));
  CHECK_FALSE(is_numeral("1234,567"));
  CHECK_FALSE(is_numeral("3."));
  CHECK_FALSE(is_numeral(".5"));
  CHECK_FALSE(is_numeral("x2"));
  CHECK_FALSE(is_numeral(""));
}

TEST_CASE("bracketed numerals stay intact") {
  const auto toks = tokenize("(50%)");
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].surface == "(");
  CHECK(toks[1].surface == "50%");
  CHECK(toks[1].kind == TokenKind::Numeral);
  CHECK(toks[2].surface == ")");
}

TEST_CASE("all-punctuation chunks become one symbol token") {
  const auto toks = tokenize("a == b");
  REQUIRE(toks.size() == 3);
  CHECK(toks[1].surface == "==");
  CHECK(toks[1].kind == TokenKind::Symbol);
}

TEST_CASE("non-ascii math glyphs are symbols") {
  const auto toks = tokenize("∑ α x");
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].kind == TokenKind::Symbol);
  CHECK(toks[1].kind == TokenKind::Symbol);
  CHECK(toks[2].kind == TokenKind::Word);
}

TEST_CASE("coarse tagger buckets") {
  CHECK(coarse_tag({"the", TokenKind::Word}) == CoarseTag::Func);
  CHECK(coarse_tag({"The", TokenKind::Word}) == CoarseTag::Func);
  CHECK(coarse_tag({"computes", TokenKind::Word}) == CoarseTag::VerbLike);
  CHECK(coarse_tag({"running", TokenKind::Word}) == CoarseTag::VerbLike);
  CHECK(coarse_tag({"during", TokenKind::Word}) == CoarseTag::Func);  // lexicon beats suffix
  CHECK(coarse_tag({"document", TokenKind::Word}) == CoarseTag::NounLike);
  CHECK(coarse_tag({"x1", TokenKind::Word}) == CoarseTag::Other);
  CHECK(coarse_tag({"myVar", TokenKind::Word}) == CoarseTag::Other);
  CHECK(coarse_tag({"foo_bar", TokenKind::Word}) == CoarseTag::Other);
  CHECK(coarse_tag({"42", TokenKind::Numeral}) == CoarseTag::Num);
  CHECK(coarse_tag({";", TokenKind::Symbol}) == CoarseTag::Sym);
}
