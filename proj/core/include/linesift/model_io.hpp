// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "linesift/classifier.hpp"
#include "linesift/downstream.hpp"
#include "linesift/evaluation.hpp"

namespace linesift {

inline constexpr int kModelFormatVersion = 1;

// On-disk model container. Weights are stored as sorted (feature-id, value)
// pairs and all keys are emitted in sorted order, so identical training runs
// produce byte-identical files.
struct ModelFile {
  SequentialModel model;
  TrainConfig train_config;
  std::array<double, kNumLabels> priors{};
};

std::string model_to_json(const ModelFile& mf);
ModelFile model_from_json(const std::string& text);

void save_model(const ModelFile& mf, const std::filesystem::path& path);
// Throws ModelVersionMismatch when format_version differs.
ModelFile load_model(const std::filesystem::path& path);

// {"topics": {"<tid>": "<keyword string>"}, "clusters": {"<tid>": ["docid", ...]}}
std::string gold_clustering_to_json(const GoldClustering& gold);
GoldClustering gold_clustering_from_json(const std::string& text);
void save_gold_clustering(const GoldClustering& gold, const std::filesystem::path& path);
GoldClustering load_gold_clustering(const std::filesystem::path& path);

// report serializers used by the CLI
std::string prf_report_to_json(const PRFReport& pooled, const ConfusionMatrix& cm,
                               const std::vector<PRFReport>* per_fold = nullptr);
std::string prf_report_to_text(const PRFReport& rep);
std::string removal_report_to_json(const RemovalEffectReport& report);
std::string regression_fit_to_json(const RegressionFit& original, const RegressionFit& removed);

}  // namespace linesift
