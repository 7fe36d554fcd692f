// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "linesift/corpus.hpp"
#include "linesift/features.hpp"

namespace linesift {

struct TrainConfig {
  double c = 1.0;  // regularization trade-off; lambda = 1 / (c * n)
  int epochs = 10;
  std::uint64_t seed = 0;
  // learning rate eta_t = 1 / (lambda * (t + t0)); t0 <= 0 means 1/lambda,
  // which caps the first step near 1
  double t0 = 0.0;
  int extra_dagger_rounds = 0;

  void validate() const;
};

// One-vs-rest linear max-margin classifier over the five classes, trained
// by stochastic subgradient descent on the L2-regularized hinge loss.
struct LinearModel {
  FeatureConfig feature_config;
  ScalingStats scaling_stats;
  std::unordered_map<std::string, std::array<double, kNumLabels>> weights;

  // objective value per class after each epoch; diagnostics, not serialized
  std::array<std::vector<double>, kNumLabels> epoch_objectives;

  std::array<double, kNumLabels> scores(const SparseFeatureVector& v) const;
  // argmax class score; ties break toward the lower class index
  Label predict(const SparseFeatureVector& v) const;
};

// stage1 is trained with gold previous-line labels; stage2 with the labels
// stage1 itself predicts over the training documents, closing the
// train/inference mismatch of the sequential feature.
struct SequentialModel {
  LinearModel stage1;
  LinearModel stage2;
};

// Trains the gold-previous-label model. If the config asks for table layout
// but carries no transition model, one is trained here from the corpus's
// table-labeled lines; same for scaling statistics. The returned model owns
// the fully resolved config.
LinearModel train_stage1(const Corpus& corpus, FeatureConfig cfg, const TrainConfig& tc);

SequentialModel train_sequential(const Corpus& corpus, FeatureConfig cfg,
                                 const TrainConfig& tc);

// Greedy left-to-right decoding, feeding each prediction to the next line.
std::vector<Label> predict_document_with(const LinearModel& model,
                                         const AnnotatedDocument& doc);

// Decodes with stage2.
std::vector<Label> predict_document(const SequentialModel& model,
                                    const AnnotatedDocument& doc);

// Gold label priors of a fully labeled corpus, as fractions summing to 1.
std::array<double, kNumLabels> label_priors(const Corpus& corpus);

}  // namespace linesift
