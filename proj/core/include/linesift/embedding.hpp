// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace linesift {

struct WordVectors {
  int dimension = 0;
  std::unordered_map<std::string, std::vector<float>> table;

  std::size_t vocab_size() const { return table.size(); }
  const std::vector<float>* find(const std::string& word) const;
};

struct LineVector {
  std::vector<float> values;
  double coverage = 0.0;  // fraction of tokens found in vocabulary
};

struct SkipgramConfig {
  int dim = 100;
  int window = 5;
  int min_count = 5;
  int negatives = 5;
  int epochs = 5;
  double learning_rate = 0.025;
  std::uint64_t seed = 0;
};

// Skip-gram with negative sampling over pre-tokenized sentences.
// Single-threaded and deterministic for a fixed seed. Throws
// EmptyVocabulary when no token reaches min_count.
WordVectors train_skipgram(const std::vector<std::vector<std::string>>& sentences,
                           const SkipgramConfig& cfg);

// Text interchange format: header "<vocab_size> <dimension>", then one
// "<word> <v1> ... <vD>" row per word. Duplicate words: last wins;
// the number of clobbered rows is reported through *duplicates when given.
WordVectors load_vectors(const std::filesystem::path& path, std::size_t* duplicates = nullptr);
void save_vectors(const WordVectors& wv, const std::filesystem::path& path);

// Mean of the vectors of in-vocabulary tokens; the zero vector with
// coverage 0 when nothing is in vocabulary.
LineVector line_vector(const std::vector<std::string>& tokens, const WordVectors& wv);

double cosine_similarity(const std::vector<float>& a, const std::vector<float>& b);

}  // namespace linesift
