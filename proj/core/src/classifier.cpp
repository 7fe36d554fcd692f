// SPDX-License-Identifier: Apache-2.0
#include "linesift/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "linesift/errors.hpp"
#include "linesift/rng.hpp"

namespace linesift {

void TrainConfig::validate() const {
  if (c <= 0.0) throw ConfigViolation("c must be positive");
  if (epochs < 1) throw ConfigViolation("epochs must be >= 1");
  if (extra_dagger_rounds < 0) throw ConfigViolation("extra_dagger_rounds must be >= 0");
}

std::array<double, kNumLabels> LinearModel::scores(const SparseFeatureVector& v) const {
  std::array<double, kNumLabels> s{};
  for (const auto& [id, x] : v.entries) {
    auto it = weights.find(id);
    if (it == weights.end()) continue;
    for (std::size_t c = 0; c < kNumLabels; ++c) s[c] += x * it->second[c];
  }
  return s;
}

Label LinearModel::predict(const SparseFeatureVector& v) const {
  const auto s = scores(v);
  std::size_t best = 0;
  for (std::size_t c = 1; c < kNumLabels; ++c)
    if (s[c] > s[best]) best = c;
  return static_cast<Label>(best);
}

namespace {

struct InternedExample {
  std::vector<std::pair<int, double>> feats;
  int gold;
};

struct Interner {
  std::unordered_map<std::string, int> index;
  std::vector<std::string> names;

  int intern(const std::string& id) {
    auto [it, inserted] = index.emplace(id, static_cast<int>(names.size()));
    if (inserted) names.push_back(id);
    return it->second;
  }
};

// Five binary hinge problems trained in one pass over shared features.
// Weights are kept as scale * dense to make the per-step L2 shrink O(1).
void sgd_train(const std::vector<InternedExample>& examples, std::size_t n_features,
               const TrainConfig& tc, std::vector<std::array<double, kNumLabels>>& w_out,
               std::array<std::vector<double>, kNumLabels>& objectives) {
  const std::size_t n = examples.size();
  const double lambda = 1.0 / (tc.c * static_cast<double>(n));
  const double t0 = tc.t0 > 0.0 ? tc.t0 : 1.0 / lambda;

  std::vector<std::vector<double>> v(kNumLabels, std::vector<double>(n_features, 0.0));
  std::array<double, kNumLabels> scale;
  scale.fill(1.0);

  Rng rng = Rng::stream(tc.seed, "train");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  std::uint64_t t = 0;
  for (int epoch = 0; epoch < tc.epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t idx : order) {
      const InternedExample& ex = examples[idx];
      ++t;
      const double eta = 1.0 / (lambda * (static_cast<double>(t) + t0));
      for (std::size_t c = 0; c < kNumLabels; ++c) {
        const double y = ex.gold == static_cast<int>(c) ? 1.0 : -1.0;
        double dot = 0.0;
        for (const auto& [f, x] : ex.feats) dot += v[c][static_cast<std::size_t>(f)] * x;
        const double margin = y * scale[c] * dot;
        scale[c] *= 1.0 - eta * lambda;
        if (margin < 1.0) {
          const double step = eta * y / scale[c];
          for (const auto& [f, x] : ex.feats)
            v[c][static_cast<std::size_t>(f)] += step * x;
        }
        if (scale[c] < 1e-100) {
          for (auto& x : v[c]) x *= scale[c];
          scale[c] = 1.0;
        }
      }
    }

    // objective per class at the epoch boundary
    for (std::size_t c = 0; c < kNumLabels; ++c) {
      double norm_sq = 0.0;
      for (double x : v[c]) norm_sq += x * x;
      norm_sq *= scale[c] * scale[c];
      double hinge = 0.0;
      for (const auto& ex : examples) {
        const double y = ex.gold == static_cast<int>(c) ? 1.0 : -1.0;
        double dot = 0.0;
        for (const auto& [f, x] : ex.feats) dot += v[c][static_cast<std::size_t>(f)] * x;
        hinge += std::max(0.0, 1.0 - y * scale[c] * dot);
      }
      objectives[c].push_back(lambda / 2.0 * norm_sq + hinge / static_cast<double>(n));
    }
  }

  w_out.assign(n_features, {});
  for (std::size_t c = 0; c < kNumLabels; ++c)
    for (std::size_t f = 0; f < n_features; ++f) w_out[f][c] = scale[c] * v[c][f];
}

std::string prev_feature_id(std::size_t i, Label prev) {
  return i == 0 ? std::string("prev=") + kBosMarker
                : "prev=" + std::string(to_string(prev));
}

// Extracts the non-sequential part once per line; the per-stage prev
// indicator is spliced in afterwards. Must produce exactly what
// assemble_features produces for the same inputs.
struct TrainingData {
  std::vector<SparseFeatureVector> base_raw;  // corpus order, flattened
  std::vector<int> gold;
  std::vector<std::pair<std::size_t, std::size_t>> doc_spans;  // [begin, end) per doc
};

TrainingData extract_base(const Corpus& corpus, const FeatureConfig& cfg) {
  FeatureConfig base_cfg = cfg;
  base_cfg.use_sequential = false;

  TrainingData data;
  for (const auto& doc : corpus.documents) {
    const std::size_t begin = data.base_raw.size();
    for (std::size_t i = 0; i < doc.lines.size(); ++i) {
      data.base_raw.push_back(assemble_features(doc, i, base_cfg, std::nullopt));
      data.gold.push_back(static_cast<int>(label_index(*doc.lines[i].gold)));
    }
    data.doc_spans.emplace_back(begin, data.base_raw.size());
  }
  return data;
}

LinearModel train_on_prevs(const TrainingData& data, const FeatureConfig& cfg,
                           const ScalingStats& stats, const TrainConfig& tc,
                           const std::vector<Label>& prevs) {
  Interner interner;
  std::vector<InternedExample> examples;
  examples.reserve(data.base_raw.size());

  for (const auto& [begin, end] : data.doc_spans) {
    for (std::size_t i = begin; i < end; ++i) {
      SparseFeatureVector vec = data.base_raw[i];
      if (cfg.use_sequential)
        vec.set(prev_feature_id(i - begin, i > begin ? prevs[i - 1] : Label::Text), 1.0);
      apply_scaling(vec, stats);
      InternedExample ex;
      ex.gold = data.gold[i];
      ex.feats.reserve(vec.entries.size());
      for (const auto& [id, x] : vec.entries) ex.feats.emplace_back(interner.intern(id), x);
      examples.push_back(std::move(ex));
    }
  }

  LinearModel model;
  model.feature_config = cfg;
  model.scaling_stats = stats;

  std::vector<std::array<double, kNumLabels>> dense;
  sgd_train(examples, interner.names.size(), tc, dense, model.epoch_objectives);

  for (std::size_t f = 0; f < dense.size(); ++f) {
    bool all_zero = true;
    for (double x : dense[f]) all_zero &= x == 0.0;
    if (!all_zero) model.weights.emplace(interner.names[f], dense[f]);
  }
  return model;
}

void check_trainable(const Corpus& corpus) {
  if (corpus.documents.empty() || corpus.total_lines() == 0)
    throw EmptyCorpus("training corpus has no lines");
  if (!corpus.fully_labeled)
    throw UnlabeledCorpus("training corpus must be fully labeled");
}

FeatureConfig resolve_config(const Corpus& corpus, FeatureConfig cfg) {
  if (cfg.use_table_layout && !cfg.table_model)
    cfg.table_model = std::make_shared<TableTransitionModel>(train_table_model(corpus));
  cfg.validate();
  return cfg;
}

std::vector<Label> gold_prevs(const Corpus& corpus) {
  std::vector<Label> prevs;
  for (const auto& doc : corpus.documents)
    for (const auto& line : doc.lines) prevs.push_back(*line.gold);
  return prevs;
}

}  // namespace

LinearModel train_stage1(const Corpus& corpus, FeatureConfig cfg, const TrainConfig& tc) {
  tc.validate();
  check_trainable(corpus);
  cfg = resolve_config(corpus, cfg);

  const TrainingData data = extract_base(corpus, cfg);
  const ScalingStats stats = fit_scaling(data.base_raw, cfg.layout_bins);
  return train_on_prevs(data, cfg, stats, tc, gold_prevs(corpus));
}

SequentialModel train_sequential(const Corpus& corpus, FeatureConfig cfg,
                                 const TrainConfig& tc) {
  tc.validate();
  if (!cfg.use_sequential)
    throw ConfigViolation("train_sequential requires use_sequential");
  check_trainable(corpus);
  cfg = resolve_config(corpus, cfg);

  const TrainingData data = extract_base(corpus, cfg);
  const ScalingStats stats = fit_scaling(data.base_raw, cfg.layout_bins);

  SequentialModel model;
  model.stage1 = train_on_prevs(data, cfg, stats, tc, gold_prevs(corpus));

  // feed each stage its predecessor's decoded labels over the training set
  const LinearModel* current = &model.stage1;
  for (int round = 0; round <= tc.extra_dagger_rounds; ++round) {
    std::vector<Label> decoded;
    decoded.reserve(data.gold.size());
    for (const auto& doc : corpus.documents) {
      const std::vector<Label> pred = predict_document_with(*current, doc);
      decoded.insert(decoded.end(), pred.begin(), pred.end());
    }
    model.stage2 = train_on_prevs(data, cfg, stats, tc, decoded);
    current = &model.stage2;
  }
  return model;
}

std::vector<Label> predict_document_with(const LinearModel& model,
                                         const AnnotatedDocument& doc) {
  std::vector<Label> out;
  out.reserve(doc.lines.size());
  std::optional<Label> prev;
  for (std::size_t i = 0; i < doc.lines.size(); ++i) {
    const SparseFeatureVector vec =
        assemble_features(doc, i, model.feature_config, prev, &model.scaling_stats);
    const Label y = model.predict(vec);
    out.push_back(y);
    prev = y;
  }
  return out;
}

std::vector<Label> predict_document(const SequentialModel& model,
                                    const AnnotatedDocument& doc) {
  return predict_document_with(model.stage2, doc);
}

std::array<double, kNumLabels> label_priors(const Corpus& corpus) {
  check_trainable(corpus);
  std::array<double, kNumLabels> priors{};
  std::size_t n = 0;
  for (const auto& doc : corpus.documents)
    for (const auto& line : doc.lines) {
      ++priors[label_index(*line.gold)];
      ++n;
    }
  for (auto& p : priors) p /= static_cast<double>(n);
  return priors;
}

}  // namespace linesift
