// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "linesift/corpus.hpp"
#include "linesift/errors.hpp"
#include "linesift/synth.hpp"

using namespace linesift;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("parse_label canonical and case-insensitive") {
  CHECK(parse_label("CODE") == Label::Code);
  CHECK(parse_label("text") == Label::Text);
  CHECK(parse_label("Formula") == Label::Formula);
  CHECK_THROWS_AS(parse_label("figure"), UnknownLabel);
  CHECK_THROWS_AS(parse_label(""), UnknownLabel);
}

TEST_CASE("to_string round trips every label") {
  for (Label l : kAllLabels) CHECK(parse_label(to_string(l)) == l);
}

TEST_CASE("corpus_from_jsonl basic shapes") {
  const std::string text =
      R"({"id":"d1","lines":[{"t":"a","y":"TEXT"},{"t":"b","y":"CODE"},{"t":"","y":"TEXT"}]})"
      "\n"
      R"({"id":"d2","lines":[{"t":"x","y":"TABLE"},{"t":"y","y":"MISC"},{"t":"z","y":"FORMULA"}]})"
      "\n";
  const Corpus c = corpus_from_jsonl(text);
  CHECK(c.documents.size() == 2);
  CHECK(c.total_lines() == 6);
  CHECK(c.fully_labeled);
  CHECK(c.documents[0].lines[2].text.empty());

  SUBCASE("missing y makes the corpus partially labeled") {
    const Corpus p = corpus_from_jsonl(
        R"({"id":"d1","lines":[{"t":"a","y":"TEXT"},{"t":"b"}]})" "\n");
    CHECK_FALSE(p.fully_labeled);
  }
}

TEST_CASE("corpus_from_jsonl error reporting") {
  CHECK_THROWS_AS(corpus_from_jsonl("{oops\n"), ParseError);
  CHECK_THROWS_AS(
      corpus_from_jsonl(R"({"id":"d1","lines":[]})" "\n" R"({"id":"d1","lines":[]})" "\n"),
      DuplicateDocId);
  CHECK_THROWS_AS(corpus_from_jsonl(R"({"id":"","lines":[]})" "\n"), ParseError);
  CHECK_THROWS_AS(corpus_from_jsonl(R"({"id":"d","lines":[{"t":"a","y":"FIGURE"}]})" "\n"),
                  ParseError);

  try {
    corpus_from_jsonl(R"({"id":"d1","lines":[]})" "\n" "not json\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("save/load round trip is byte identical on canonical files") {
  const Corpus c = generate_synthetic_corpus(5, slides_ratios(), 11);
  const auto path = temp_file("linesift_roundtrip.jsonl");
  save_corpus(c, path);

  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string first = buf.str();

  const Corpus reloaded = load_corpus(path);
  CHECK(corpus_to_jsonl(reloaded) == first);
  CHECK(reloaded.total_lines() == c.total_lines());
  std::filesystem::remove(path);
}

TEST_CASE("load_corpus missing file") {
  CHECK_THROWS_AS(load_corpus("/nonexistent/nope.jsonl"), IoError);
}

TEST_CASE("split_folds deals round robin") {
  Corpus c;
  for (int i = 0; i < 11; ++i)
    c.documents.push_back({"doc" + std::to_string(i), {{"x", Label::Text}}});

  const FoldSplit s = split_folds(c, 5, 42);
  REQUIRE(s.folds.size() == 5);
  std::multiset<std::size_t> sizes;
  for (const auto& fold : s.folds) sizes.insert(fold.size());
  CHECK(sizes == std::multiset<std::size_t>{3, 2, 2, 2, 2});

  SUBCASE("deterministic for a fixed seed") {
    const FoldSplit again = split_folds(c, 5, 42);
    CHECK(again.folds == s.folds);
    const FoldSplit other = split_folds(c, 5, 43);
    CHECK(other.folds != s.folds);
  }

  SUBCASE("10 docs and k=5 gives five folds of two") {
    c.documents.pop_back();
    const FoldSplit even = split_folds(c, 5, 42);
    for (const auto& fold : even.folds) CHECK(fold.size() == 2);
  }
}

TEST_CASE("split_folds rejects k larger than the corpus") {
  Corpus c;
  c.documents.push_back({"only", {}});
  CHECK_THROWS_AS(split_folds(c, 2, 1), TooFewDocuments);
  CHECK_THROWS_AS(split_folds(c, 0, 1), ConfigViolation);
}

TEST_CASE("fold property: disjoint cover for random corpora") {
  for (int k : {2, 5, 10}) {
    const Corpus c = generate_synthetic_corpus(23, slides_ratios(), 100 + k);
    const FoldSplit s = split_folds(c, k, 7);
    std::set<std::string> seen;
    std::size_t total = 0;
    for (const auto& fold : s.folds) {
      for (const auto& id : fold) {
        CHECK(seen.insert(id).second);  // pairwise disjoint
        ++total;
      }
    }
    CHECK(total == c.documents.size());
    for (const auto& d : c.documents) CHECK(seen.count(d.id) == 1);
  }
}

TEST_CASE("subset_by_ids keeps corpus order") {
  const Corpus c = generate_synthetic_corpus(6, slides_ratios(), 3);
  const Corpus sub = subset_by_ids(c, {c.documents[4].id, c.documents[1].id});
  REQUIRE(sub.documents.size() == 2);
  CHECK(sub.documents[0].id == c.documents[1].id);
  CHECK(sub.documents[1].id == c.documents[4].id);
}
