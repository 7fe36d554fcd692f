// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "linesift/corpus.hpp"

namespace linesift {

// Seeded i.i.d. draws from the given label priors, one per line, in corpus
// order. Priors must be nonnegative and sum to 1 over the five labels.
std::vector<Label> baseline_weighted_random(const Corpus& corpus,
                                            const std::map<Label, double>& priors,
                                            std::uint64_t seed);

// Per-class add-one-smoothed unigram language models plus class priors.
struct ClmModel {
  std::array<std::unordered_map<std::string, double>, kNumLabels> log_prob;
  std::array<double, kNumLabels> log_unknown{};
  std::array<double, kNumLabels> priors{};
  std::size_t vocab_size = 0;

  // argmax over classes of the per-token log probability sum normalized by
  // line length; ties (including empty lines) go to TEXT.
  Label classify_line(const std::string& line) const;
};

ClmModel train_clm(const Corpus& train);

// Predictions for every line of `test`, in corpus order.
std::vector<Label> baseline_clm(const Corpus& train, const Corpus& test);

}  // namespace linesift
