// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "linesift/classifier.hpp"
#include "linesift/corpus.hpp"
#include "linesift/evaluation.hpp"

namespace linesift {

// Top-K TF-IDF representation of one document: raw term counts times
// ln(N / df), truncated to the k highest-weighted terms.
struct DocumentVector {
  std::string doc_id;
  std::map<std::string, double> weights;
  std::size_t k = 0;

  double norm() const;
  bool empty() const { return weights.empty(); }
};

struct GoldClustering {
  std::map<std::string, std::set<std::string>> clusters;  // topic id -> doc ids
  std::map<std::string, std::string> topics;              // topic id -> keyword string

  // clusters as a partition, in sorted topic-id order
  std::vector<std::vector<std::string>> partition() const;
};

enum class SeedScheme { TopicKeywords, Top1Doc, UserSelected };

std::string_view to_string(SeedScheme s);
SeedScheme parse_seed_scheme(std::string_view s);

// Keeps exactly the lines whose label is in `keep` (default {TEXT}),
// preserving order. The id gains a ":removed" suffix once.
AnnotatedDocument remove_unnatural(const AnnotatedDocument& doc,
                                   const std::vector<Label>& labels,
                                   const std::set<Label>& keep = {Label::Text});

std::vector<DocumentVector> build_vectors(const Corpus& corpus, std::size_t k);

// dot / (|a| |b|); 0 when either vector is empty.
double cosine(const DocumentVector& a, const DocumentVector& b);

// One centroid per topic, in sorted topic-id order.
//   TopicKeywords: tf-idf weighted vector of the keyword tokens
//   Top1Doc:       the document vector maximizing cosine with that keyword
//                  vector (ties: lexicographically smaller doc id)
//   UserSelected:  a seeded-random member of the gold cluster
std::vector<DocumentVector> init_seeds(SeedScheme scheme, const GoldClustering& gold,
                                       const std::vector<DocumentVector>& vectors,
                                       std::uint64_t seed);

// Cosine k-means from the given centroids: assign to the most similar
// centroid (ties to the lowest cluster index), recompute centroids as
// component-wise means, keep the previous centroid for empty clusters,
// stop when assignments repeat or after max_iters. Returns doc ids per
// cluster. Deterministic.
std::vector<std::vector<std::string>> seeded_kmeans(
    const std::vector<DocumentVector>& vectors, const std::vector<DocumentVector>& seeds,
    int max_iters = 100);

struct RemovalEffectRow {
  std::size_t k = 0;
  SeedScheme scheme = SeedScheme::TopicKeywords;
  bool removed = false;  // which corpus variant this row scored
  double f1 = 0.0;
};

struct RemovalEffectReport {
  std::vector<RemovalEffectRow> rows;  // 2 rows per (k, scheme)
  double mean_delta = 0.0;             // mean of removed - original over settings
  double max_gain = 0.0;
  double mean_gain = 0.0;  // mean over settings with positive delta, 0 if none
  double mean_loss = 0.0;  // mean |delta| over settings with negative delta
  std::size_t improved = 0;
  std::size_t hurt = 0;
  std::size_t tied = 0;

  std::string to_csv() const;
};

// For every (k, scheme): clustering F1 on the original corpus and on the
// corpus with predicted-unnatural lines removed, plus delta summary stats.
RemovalEffectReport removal_effect_report(const Corpus& corpus, const SequentialModel& model,
                                          const GoldClustering& gold,
                                          const std::vector<std::size_t>& k_values,
                                          const std::vector<SeedScheme>& schemes,
                                          std::uint64_t seed);

// Corpus with every document replaced by its predicted-unnatural-stripped
// version, keeping the original ids.
Corpus strip_predicted_unnatural(const Corpus& corpus, const SequentialModel& model,
                                 const std::set<Label>& keep = {Label::Text});

// All unordered document pairs as (cosine similarity, same gold cluster),
// for the relevance regression.
std::vector<std::pair<double, bool>> similarity_relevance_pairs(
    const std::vector<DocumentVector>& vectors, const GoldClustering& gold);

}  // namespace linesift
