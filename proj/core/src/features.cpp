// SPDX-License-Identifier: Apache-2.0
#include "linesift/features.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "linesift/errors.hpp"
#include "linesift/tagger.hpp"

namespace linesift {

void FeatureConfig::validate() const {
  if (use_embedding && !embedding)
    throw ConfigViolation("use_embedding requires word vectors");
  if (use_table_layout && !table_model)
    throw ConfigViolation("use_table_layout requires a table transition model");
  if (layout_bins < 1) throw ConfigViolation("layout_bins must be positive");
}

SparseFeatureVector ngram_features(const std::vector<Token>& tokens) {
  SparseFeatureVector v;
  std::vector<std::string> toks = lower_surfaces(tokens);
  for (const auto& t : toks) v.set("u=" + t, 1.0);

  std::string prev = "<s>";
  for (const auto& t : toks) {
    v.set("b=" + prev + "_" + t, 1.0);
    prev = t;
  }
  v.set("b=" + prev + "_</s>", 1.0);
  return v;
}

SparseFeatureVector syntactic_features(const std::vector<Token>& tokens) {
  SparseFeatureVector v;
  if (tokens.empty()) return v;

  const std::vector<CoarseTag> tags = tag_tokens(tokens);
  std::array<std::size_t, kNumCoarseTags> counts{};
  std::size_t symbols = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    ++counts[static_cast<std::size_t>(tags[i])];
    if (tokens[i].kind == TokenKind::Symbol) ++symbols;
  }
  const double n = static_cast<double>(tokens.size());
  for (std::size_t t = 0; t < kNumCoarseTags; ++t)
    if (counts[t] > 0)
      v.set("pos_ratio:" + std::string(to_string(static_cast<CoarseTag>(t))),
            static_cast<double>(counts[t]) / n);
  for (std::size_t i = 0; i + 1 < tags.size(); ++i)
    v.set("pos_bi:" + std::string(to_string(tags[i])) + "_" +
              std::string(to_string(tags[i + 1])),
          1.0);
  v.set("symbol_ratio", static_cast<double>(symbols) / n);
  return v;
}

bool is_scalable_feature(const std::string& id) {
  return id == "tls" || id == "symbol_ratio" || id == "emb_cov" ||
         id.rfind("pos_ratio:", 0) == 0 || id.rfind("emb:", 0) == 0;
}

SparseFeatureVector assemble_features(const AnnotatedDocument& doc, std::size_t i,
                                      const FeatureConfig& cfg,
                                      std::optional<Label> prev_label,
                                      const ScalingStats* stats) {
  cfg.validate();
  if (i >= doc.lines.size()) throw ConfigViolation("line index out of range");

  const std::vector<Token> tokens = tokenize(doc.lines[i].text);

  SparseFeatureVector v;
  v.set("bias", 1.0);

  if (cfg.use_ngram)
    for (auto& [id, w] : ngram_features(tokens).entries) v.set(id, w);

  if (cfg.use_syntax)
    for (auto& [id, w] : syntactic_features(tokens).entries) v.set(id, w);

  if (cfg.use_table_layout)
    v.set("tls", table_layout_score(doc, i, *cfg.table_model, cfg.raw_edit_distance));

  if (cfg.use_embedding) {
    const LineVector lv = line_vector(lower_surfaces(tokens), *cfg.embedding);
    for (std::size_t d = 0; d < lv.values.size(); ++d)
      v.set("emb:" + std::to_string(d), lv.values[d]);
    v.set("emb_cov", lv.coverage);
  }

  if (cfg.use_sequential) {
    if (i == 0) {
      v.set(std::string("prev=") + kBosMarker, 1.0);
    } else {
      if (!prev_label)
        throw ConfigViolation("sequential features need prev_label for i > 0");
      v.set("prev=" + std::string(to_string(*prev_label)), 1.0);
    }
  }

  if (stats) apply_scaling(v, *stats);
  return v;
}

ScalingStats fit_scaling(const std::vector<SparseFeatureVector>& raw_vectors,
                         int layout_bins) {
  if (layout_bins < 1) throw ConfigViolation("layout_bins must be positive");
  ScalingStats stats;
  stats.layout_bins = layout_bins;

  std::vector<double> tls_values;
  for (const auto& vec : raw_vectors) {
    for (const auto& [id, w] : vec.entries) {
      if (!is_scalable_feature(id)) continue;
      auto it = stats.min_max.find(id);
      if (it == stats.min_max.end()) {
        stats.min_max.emplace(id, std::make_pair(w, w));
      } else {
        it->second.first = std::min(it->second.first, w);
        it->second.second = std::max(it->second.second, w);
      }
      if (id == "tls") tls_values.push_back(w);
    }
  }

  // equal-frequency interior edges over the training-fold tls distribution
  if (!tls_values.empty()) {
    std::sort(tls_values.begin(), tls_values.end());
    for (int b = 1; b < layout_bins; ++b) {
      const std::size_t idx =
          std::min(tls_values.size() - 1,
                   static_cast<std::size_t>(static_cast<double>(b) * tls_values.size() /
                                            layout_bins));
      stats.tls_bin_edges.push_back(tls_values[idx]);
    }
  }
  return stats;
}

void apply_scaling(SparseFeatureVector& v, const ScalingStats& stats) {
  auto tls_it = v.entries.find("tls");
  if (tls_it != v.entries.end() && !stats.tls_bin_edges.empty()) {
    const double score = tls_it->second;
    const std::size_t bin = static_cast<std::size_t>(
        std::upper_bound(stats.tls_bin_edges.begin(), stats.tls_bin_edges.end(), score) -
        stats.tls_bin_edges.begin());
    v.set("tlb:" + std::to_string(bin), 1.0);
  }

  for (auto it = v.entries.begin(); it != v.entries.end();) {
    auto stat = stats.min_max.find(it->first);
    if (stat == stats.min_max.end()) {
      ++it;
      continue;
    }
    const auto [lo, hi] = stat->second;
    double scaled = hi > lo ? -1.0 + 2.0 * (it->second - lo) / (hi - lo) : 0.0;
    if (scaled == 0.0) {
      it = v.entries.erase(it);  // no zero-weight entries stored
    } else {
      it->second = scaled;
      ++it;
    }
  }
}

}  // namespace linesift
