// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linesift/label.hpp"

namespace linesift {

// One physical line of extracted plain text. `text` never contains line
// breaks; splitting happened upstream.
struct LineRecord {
  std::string text;
  std::optional<Label> gold;
};

struct AnnotatedDocument {
  std::string id;
  std::vector<LineRecord> lines;
};

struct Corpus {
  std::vector<AnnotatedDocument> documents;
  bool fully_labeled = false;

  std::size_t total_lines() const;
  void recompute_fully_labeled();
};

// K disjoint sets of document ids covering the corpus. Splitting is always
// by document so sequential context never leaks across folds.
struct FoldSplit {
  std::vector<std::vector<std::string>> folds;
};

// JSONL, one document per physical line:
//   {"id": "<string>", "lines": [{"t": "<line text>", "y": "<LABEL>"?}, ...]}
Corpus load_corpus(const std::filesystem::path& path);

// Canonical form: compact JSON, keys sorted, one document per line, "y"
// omitted for unlabeled lines. load_corpus followed by save_corpus is a
// byte-identical round trip on canonical files.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

std::string corpus_to_jsonl(const Corpus& corpus);
Corpus corpus_from_jsonl(const std::string& text);

// Seeded shuffle of document ids, dealt round-robin into k folds.
FoldSplit split_folds(const Corpus& corpus, int k, std::uint64_t seed);

// New corpus containing exactly the documents whose id is in `ids`,
// preserving corpus order.
Corpus subset_by_ids(const Corpus& corpus, const std::set<std::string>& ids);

// Gold labels of every line, in document order; throws UnlabeledCorpus if a
// line has none.
std::vector<Label> gold_labels(const AnnotatedDocument& doc);

}  // namespace linesift
