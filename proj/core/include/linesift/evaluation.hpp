// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "linesift/classifier.hpp"
#include "linesift/corpus.hpp"

namespace linesift {

struct ConfusionMatrix {
  std::array<std::array<std::uint64_t, kNumLabels>, kNumLabels> counts{};  // [gold][pred]

  std::uint64_t total() const;
  std::uint64_t gold_count(Label l) const;
  std::uint64_t pred_count(Label l) const;
  void add(const ConfusionMatrix& other);
};

struct ClassPrf {
  double precision = 0.0;  // percent
  double recall = 0.0;
  double f1 = 0.0;
};

struct PRFReport {
  std::array<ClassPrf, kNumLabels> per_class;
  double macro_f1_unnatural = 0.0;  // mean F1 over TABLE, CODE, FORMULA, MISC
  double macro_f1_all = 0.0;        // mean F1 over all five classes
  std::uint64_t n_lines = 0;
};

PRFReport report_from_confusion(const ConfusionMatrix& cm);

// Standard per-class precision/recall/F1 from the confusion matrix.
// Throws LengthMismatch when the sequences differ in length.
std::pair<ConfusionMatrix, PRFReport> score(const std::vector<Label>& gold,
                                            const std::vector<Label>& pred);

struct CvResult {
  ConfusionMatrix pooled_confusion;
  PRFReport pooled;  // micro-pooled counts across folds
  std::vector<PRFReport> per_fold;
};

// Per fold: train a SequentialModel on the other k-1 folds (table model and
// scaling statistics fitted on the training side only), decode the held-out
// fold, pool confusion counts. Fold results are independent of scheduling.
CvResult cross_validate(const Corpus& corpus, const FeatureConfig& cfg,
                        const TrainConfig& tc, int k, std::uint64_t seed,
                        int threads = 1);

struct PairwisePrf {
  double precision = 0.0;  // fractions in [0, 1]
  double recall = 0.0;
  double f1 = 0.0;
};

// Positives are unordered same-cluster pairs; symmetric under relabeling of
// either partition's cluster ids. Throws CoverageMismatch when the two
// partitions do not cover the same document ids.
PairwisePrf pairwise_clustering_f1(const std::vector<std::vector<std::string>>& gold,
                                   const std::vector<std::vector<std::string>>& pred);

struct RegressionFit {
  double intercept = 0.0;
  double slope = 0.0;
  double log_likelihood = 0.0;
  double aic = 0.0;  // 2k - 2 log L with k = 2
  std::size_t n = 0;
};

// Logistic regression P(relevant) = sigma(intercept + slope * sim), fitted
// by Newton-Raphson to gradient norm 1e-8. Throws DegenerateLabels when one
// class is absent, NonConvergence on separation or after 100 iterations.
RegressionFit fit_loglinear_aic(const std::vector<std::pair<double, bool>>& pairs);

}  // namespace linesift
