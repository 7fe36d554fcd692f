// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linesift/corpus.hpp"
#include "linesift/embedding.hpp"
#include "linesift/table_layout.hpp"
#include "linesift/tokenize.hpp"

namespace linesift {

// Sparse feature-id -> weight map for one line. Zero weights are never
// stored. Feature ids are namespaced by family:
//   bias            constant 1
//   u=, b=          unigram / bigram indicators
//   pos_ratio:, pos_bi:, symbol_ratio    coarse-tag syntax proxy
//   tls, tlb:       table layout score and its quantile bin
//   emb:, emb_cov   line embedding components and vocabulary coverage
//   prev=           previous line's label (or <BOS>)
struct SparseFeatureVector {
  std::map<std::string, double> entries;

  void add(const std::string& id, double w) {
    if (w != 0.0) entries[id] += w;
  }
  void set(const std::string& id, double w) {
    if (w != 0.0) entries[id] = w;
  }
  double get(const std::string& id) const {
    auto it = entries.find(id);
    return it == entries.end() ? 0.0 : it->second;
  }
  std::size_t size() const { return entries.size(); }
};

struct FeatureConfig {
  bool use_ngram = true;
  bool use_syntax = true;
  bool use_table_layout = true;
  bool use_embedding = false;
  bool use_sequential = true;
  int layout_bins = 10;
  bool raw_edit_distance = false;

  std::shared_ptr<const WordVectors> embedding;          // required iff use_embedding
  std::shared_ptr<const TableTransitionModel> table_model;  // required iff use_table_layout

  void validate() const;  // throws ConfigViolation on broken invariants

  static FeatureConfig all_off() {
    FeatureConfig cfg;
    cfg.use_ngram = cfg.use_syntax = cfg.use_table_layout = false;
    cfg.use_embedding = cfg.use_sequential = false;
    return cfg;
  }

  static FeatureConfig ngram_only() {
    FeatureConfig cfg = all_off();
    cfg.use_ngram = true;
    return cfg;
  }
};

// Per-feature min/max from the training folds plus the tls quantile bin
// edges. Real-valued features are mapped to [-1, 1] with these statistics;
// indicators pass through untouched.
struct ScalingStats {
  std::map<std::string, std::pair<double, double>> min_max;
  std::vector<double> tls_bin_edges;  // layout_bins - 1 interior edges
  int layout_bins = 10;

  bool empty() const { return min_max.empty() && tls_bin_edges.empty(); }
};

// True for ids whose values are real-valued and subject to scaling.
bool is_scalable_feature(const std::string& id);

SparseFeatureVector ngram_features(const std::vector<Token>& tokens);
SparseFeatureVector syntactic_features(const std::vector<Token>& tokens);

inline constexpr const char* kBosMarker = "<BOS>";

// Raw (unscaled) feature union for line i of doc. prev_label must be given
// when use_sequential is on and i > 0; the first line gets prev=<BOS>.
// When `stats` is provided the training-time scaling and tls binning are
// applied, reproducing training extraction exactly.
SparseFeatureVector assemble_features(const AnnotatedDocument& doc, std::size_t i,
                                      const FeatureConfig& cfg,
                                      std::optional<Label> prev_label,
                                      const ScalingStats* stats = nullptr);

// Min/max plus tls quantile edges over a set of raw training vectors.
ScalingStats fit_scaling(const std::vector<SparseFeatureVector>& raw_vectors, int layout_bins);

// In-place scaling + binning of one raw vector.
void apply_scaling(SparseFeatureVector& v, const ScalingStats& stats);

}  // namespace linesift
