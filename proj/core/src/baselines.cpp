// SPDX-License-Identifier: Apache-2.0
#include "linesift/baselines.hpp"

#include <cmath>

#include "linesift/errors.hpp"
#include "linesift/rng.hpp"
#include "linesift/tokenize.hpp"

namespace linesift {

std::vector<Label> baseline_weighted_random(const Corpus& corpus,
                                            const std::map<Label, double>& priors,
                                            std::uint64_t seed) {
  std::array<double, kNumLabels> p{};
  double sum = 0.0;
  for (const auto& [label, frac] : priors) {
    if (frac < 0.0) throw InvalidPriors("negative prior");
    p[label_index(label)] = frac;
    sum += frac;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidPriors("priors must sum to 1");

  std::array<double, kNumLabels> cum{};
  double acc = 0.0;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    acc += p[c];
    cum[c] = acc;
  }

  Rng rng = Rng::stream(seed, "baseline");
  std::vector<Label> out;
  out.reserve(corpus.total_lines());
  for (const auto& doc : corpus.documents) {
    for (std::size_t i = 0; i < doc.lines.size(); ++i) {
      const double u = rng.real();
      std::size_t c = 0;
      while (c + 1 < kNumLabels && u >= cum[c]) ++c;
      out.push_back(static_cast<Label>(c));
    }
  }
  return out;
}

ClmModel train_clm(const Corpus& train) {
  if (train.documents.empty() || train.total_lines() == 0)
    throw EmptyCorpus("CLM training corpus has no lines");
  if (!train.fully_labeled) throw UnlabeledCorpus("CLM training corpus must be fully labeled");

  std::array<std::unordered_map<std::string, std::uint64_t>, kNumLabels> counts;
  std::array<std::uint64_t, kNumLabels> totals{};
  std::array<std::uint64_t, kNumLabels> line_counts{};
  std::unordered_map<std::string, bool> vocab;
  std::uint64_t n_lines = 0;

  for (const auto& doc : train.documents) {
    for (const auto& line : doc.lines) {
      const std::size_t c = label_index(*line.gold);
      ++line_counts[c];
      ++n_lines;
      for (const auto& tok : lower_surfaces(tokenize(line.text))) {
        ++counts[c][tok];
        ++totals[c];
        vocab[tok] = true;
      }
    }
  }

  ClmModel m;
  m.vocab_size = vocab.size();
  const double v = static_cast<double>(m.vocab_size);
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    const double denom = static_cast<double>(totals[c]) + v + 1.0;
    m.log_unknown[c] = std::log(1.0 / denom);
    for (const auto& [tok, count] : counts[c])
      m.log_prob[c].emplace(tok, std::log((static_cast<double>(count) + 1.0) / denom));
    m.priors[c] = static_cast<double>(line_counts[c]) / static_cast<double>(n_lines);
  }
  return m;
}

Label ClmModel::classify_line(const std::string& line) const {
  const std::vector<std::string> toks = lower_surfaces(tokenize(line));
  if (toks.empty()) return Label::Text;

  std::size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    double sum = 0.0;
    for (const auto& tok : toks) {
      auto it = log_prob[c].find(tok);
      sum += it == log_prob[c].end() ? log_unknown[c] : it->second;
    }
    const double score = sum / static_cast<double>(toks.size());
    if (score > best_score) {
      best_score = score;
      best = c;
    }
  }
  return static_cast<Label>(best);
}

std::vector<Label> baseline_clm(const Corpus& train, const Corpus& test) {
  const ClmModel model = train_clm(train);
  std::vector<Label> out;
  out.reserve(test.total_lines());
  for (const auto& doc : test.documents)
    for (const auto& line : doc.lines) out.push_back(model.classify_line(line.text));
  return out;
}

}  // namespace linesift
