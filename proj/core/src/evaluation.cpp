// SPDX-License-Identifier: Apache-2.0
#include "linesift/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <set>

#include "linesift/errors.hpp"
#include "linesift/rng.hpp"

namespace linesift {

std::uint64_t ConfusionMatrix::total() const {
  std::uint64_t n = 0;
  for (const auto& row : counts)
    for (std::uint64_t c : row) n += c;
  return n;
}

std::uint64_t ConfusionMatrix::gold_count(Label l) const {
  std::uint64_t n = 0;
  for (std::uint64_t c : counts[label_index(l)]) n += c;
  return n;
}

std::uint64_t ConfusionMatrix::pred_count(Label l) const {
  std::uint64_t n = 0;
  for (const auto& row : counts) n += row[label_index(l)];
  return n;
}

void ConfusionMatrix::add(const ConfusionMatrix& other) {
  for (std::size_t g = 0; g < kNumLabels; ++g)
    for (std::size_t p = 0; p < kNumLabels; ++p) counts[g][p] += other.counts[g][p];
}

PRFReport report_from_confusion(const ConfusionMatrix& cm) {
  PRFReport rep;
  rep.n_lines = cm.total();
  double sum_all = 0.0, sum_unnatural = 0.0;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    const Label l = static_cast<Label>(c);
    const double tp = static_cast<double>(cm.counts[c][c]);
    const double gold = static_cast<double>(cm.gold_count(l));
    const double pred = static_cast<double>(cm.pred_count(l));
    ClassPrf& prf = rep.per_class[c];
    prf.precision = pred > 0.0 ? 100.0 * tp / pred : 0.0;
    prf.recall = gold > 0.0 ? 100.0 * tp / gold : 0.0;
    prf.f1 = prf.precision + prf.recall > 0.0
                 ? 2.0 * prf.precision * prf.recall / (prf.precision + prf.recall)
                 : 0.0;
    sum_all += prf.f1;
    if (l != Label::Text) sum_unnatural += prf.f1;
  }
  rep.macro_f1_all = sum_all / static_cast<double>(kNumLabels);
  rep.macro_f1_unnatural = sum_unnatural / 4.0;
  return rep;
}

std::pair<ConfusionMatrix, PRFReport> score(const std::vector<Label>& gold,
                                            const std::vector<Label>& pred) {
  if (gold.size() != pred.size())
    throw LengthMismatch("gold has " + std::to_string(gold.size()) + " labels, pred has " +
                         std::to_string(pred.size()));
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < gold.size(); ++i)
    ++cm.counts[label_index(gold[i])][label_index(pred[i])];
  return {cm, report_from_confusion(cm)};
}

namespace {

ConfusionMatrix evaluate_fold(const Corpus& corpus, const FeatureConfig& cfg,
                              const TrainConfig& tc, const FoldSplit& split,
                              std::size_t fold) {
  std::set<std::string> test_ids(split.folds[fold].begin(), split.folds[fold].end());
  std::set<std::string> train_ids;
  for (std::size_t f = 0; f < split.folds.size(); ++f)
    if (f != fold) train_ids.insert(split.folds[f].begin(), split.folds[f].end());

  const Corpus train = subset_by_ids(corpus, train_ids);
  const Corpus test = subset_by_ids(corpus, test_ids);

  TrainConfig fold_tc = tc;
  fold_tc.seed = derive_stream_seed(tc.seed, "cv-fold-" + std::to_string(fold));

  std::vector<Label> gold, pred;
  if (cfg.use_sequential) {
    const SequentialModel model = train_sequential(train, cfg, fold_tc);
    for (const auto& doc : test.documents) {
      const auto labels = predict_document(model, doc);
      pred.insert(pred.end(), labels.begin(), labels.end());
      const auto g = gold_labels(doc);
      gold.insert(gold.end(), g.begin(), g.end());
    }
  } else {
    const LinearModel model = train_stage1(train, cfg, fold_tc);
    for (const auto& doc : test.documents) {
      const auto labels = predict_document_with(model, doc);
      pred.insert(pred.end(), labels.begin(), labels.end());
      const auto g = gold_labels(doc);
      gold.insert(gold.end(), g.begin(), g.end());
    }
  }
  return score(gold, pred).first;
}

}  // namespace

CvResult cross_validate(const Corpus& corpus, const FeatureConfig& cfg,
                        const TrainConfig& tc, int k, std::uint64_t seed, int threads) {
  if (!corpus.fully_labeled) throw UnlabeledCorpus("cross-validation needs gold labels");
  const FoldSplit split = split_folds(corpus, k, seed);

  std::vector<ConfusionMatrix> fold_cms(split.folds.size());
  if (threads > 1) {
    std::vector<std::future<ConfusionMatrix>> futures;
    futures.reserve(split.folds.size());
    for (std::size_t f = 0; f < split.folds.size(); ++f)
      futures.push_back(std::async(std::launch::async, evaluate_fold, std::cref(corpus),
                                   std::cref(cfg), std::cref(tc), std::cref(split), f));
    for (std::size_t f = 0; f < split.folds.size(); ++f) fold_cms[f] = futures[f].get();
  } else {
    for (std::size_t f = 0; f < split.folds.size(); ++f)
      fold_cms[f] = evaluate_fold(corpus, cfg, tc, split, f);
  }

  CvResult result;
  for (std::size_t f = 0; f < fold_cms.size(); ++f) {
    result.pooled_confusion.add(fold_cms[f]);
    result.per_fold.push_back(report_from_confusion(fold_cms[f]));
  }
  result.pooled = report_from_confusion(result.pooled_confusion);
  return result;
}

namespace {

std::map<std::string, std::size_t> cluster_index(
    const std::vector<std::vector<std::string>>& partition, const char* which) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t c = 0; c < partition.size(); ++c)
    for (const auto& id : partition[c])
      if (!idx.emplace(id, c).second)
        throw CoverageMismatch(std::string(which) + " partition repeats id '" + id + "'");
  return idx;
}

double pairs_of(std::uint64_t n) { return static_cast<double>(n) * (n - 1) / 2.0; }

}  // namespace

PairwisePrf pairwise_clustering_f1(const std::vector<std::vector<std::string>>& gold,
                                   const std::vector<std::vector<std::string>>& pred) {
  const auto gidx = cluster_index(gold, "gold");
  const auto pidx = cluster_index(pred, "pred");
  if (gidx.size() != pidx.size())
    throw CoverageMismatch("partitions cover different id sets");
  for (const auto& [id, _] : gidx)
    if (!pidx.count(id)) throw CoverageMismatch("id '" + id + "' missing from pred partition");

  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> contingency;
  std::map<std::size_t, std::uint64_t> gold_sizes, pred_sizes;
  for (const auto& [id, g] : gidx) {
    const std::size_t p = pidx.at(id);
    ++contingency[{g, p}];
    ++gold_sizes[g];
    ++pred_sizes[p];
  }

  double tp = 0.0;
  for (const auto& [_, n] : contingency) tp += pairs_of(n);
  double gold_pairs = 0.0, pred_pairs = 0.0;
  for (const auto& [_, n] : gold_sizes) gold_pairs += pairs_of(n);
  for (const auto& [_, n] : pred_sizes) pred_pairs += pairs_of(n);

  PairwisePrf prf;
  prf.precision = pred_pairs > 0.0 ? tp / pred_pairs : 0.0;
  prf.recall = gold_pairs > 0.0 ? tp / gold_pairs : 0.0;
  prf.f1 = prf.precision + prf.recall > 0.0
               ? 2.0 * prf.precision * prf.recall / (prf.precision + prf.recall)
               : 0.0;
  return prf;
}

RegressionFit fit_loglinear_aic(const std::vector<std::pair<double, bool>>& pairs) {
  std::size_t positives = 0;
  for (const auto& [_, y] : pairs) positives += y ? 1 : 0;
  if (positives == 0 || positives == pairs.size())
    throw DegenerateLabels("need at least one relevant and one irrelevant pair");

  const double n = static_cast<double>(pairs.size());
  const double rate = static_cast<double>(positives) / n;

  double mean_sim = 0.0;
  for (const auto& [s, _] : pairs) mean_sim += s;
  mean_sim /= n;
  double var_sim = 0.0;
  for (const auto& [s, _] : pairs) var_sim += (s - mean_sim) * (s - mean_sim);
  var_sim /= n;

  auto log_likelihood = [&](double a, double b) {
    double ll = 0.0;
    for (const auto& [s, y] : pairs) {
      const double z = a + b * s;
      // log sigma(z) = -log(1 + exp(-z)), stable on both tails
      const double log_p = z >= 0.0 ? -std::log1p(std::exp(-z)) : z - std::log1p(std::exp(z));
      const double log_q = z >= 0.0 ? -z - std::log1p(std::exp(-z)) : -std::log1p(std::exp(z));
      ll += y ? log_p : log_q;
    }
    return ll;
  };

  RegressionFit fit;
  fit.n = pairs.size();

  // constant similarity column: slope is unidentifiable, closed form
  if (var_sim < 1e-15) {
    fit.intercept = std::log(rate / (1.0 - rate));
    fit.slope = 0.0;
    fit.log_likelihood = log_likelihood(fit.intercept, 0.0);
    fit.aic = 4.0 - 2.0 * fit.log_likelihood;
    return fit;
  }

  double a = 0.0, b = 0.0;
  for (int iter = 0; iter < 100; ++iter) {
    double g0 = 0.0, g1 = 0.0;           // gradient
    double h00 = 0.0, h01 = 0.0, h11 = 0.0;  // negative Hessian
    for (const auto& [s, y] : pairs) {
      const double z = a + b * s;
      const double p = 1.0 / (1.0 + std::exp(-z));
      const double r = (y ? 1.0 : 0.0) - p;
      g0 += r;
      g1 += r * s;
      const double w = p * (1.0 - p);
      h00 += w;
      h01 += w * s;
      h11 += w * s * s;
    }
    if (std::sqrt(g0 * g0 + g1 * g1) <= 1e-8) {
      fit.intercept = a;
      fit.slope = b;
      fit.log_likelihood = log_likelihood(a, b);
      fit.aic = 4.0 - 2.0 * fit.log_likelihood;
      return fit;
    }
    const double det = h00 * h11 - h01 * h01;
    if (!(std::abs(det) > 1e-300)) throw NonConvergence("singular Hessian");
    a += (h11 * g0 - h01 * g1) / det;
    b += (-h01 * g0 + h00 * g1) / det;
    if (std::abs(a) > 1e6 || std::abs(b) > 1e6)
      throw NonConvergence("diverging weights (likely complete separation)");
  }
  throw NonConvergence("no convergence after 100 iterations");
}

}  // namespace linesift
