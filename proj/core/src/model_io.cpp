// SPDX-License-Identifier: Apache-2.0
#include "linesift/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "linesift/errors.hpp"

namespace linesift {

using nlohmann::json;

namespace {

json feature_config_to_json(const FeatureConfig& cfg) {
  json j;
  j["use_ngram"] = cfg.use_ngram;
  j["use_syntax"] = cfg.use_syntax;
  j["use_table_layout"] = cfg.use_table_layout;
  j["use_embedding"] = cfg.use_embedding;
  j["use_sequential"] = cfg.use_sequential;
  j["layout_bins"] = cfg.layout_bins;
  j["raw_edit_distance"] = cfg.raw_edit_distance;
  if (cfg.embedding) {
    json table = json::object();
    std::vector<std::string> words;
    words.reserve(cfg.embedding->table.size());
    for (const auto& [w, _] : cfg.embedding->table) words.push_back(w);
    std::sort(words.begin(), words.end());
    for (const auto& w : words) table[w] = cfg.embedding->table.at(w);
    j["embedding"] = {{"dimension", cfg.embedding->dimension}, {"table", std::move(table)}};
  } else {
    j["embedding"] = nullptr;
  }
  return j;
}

FeatureConfig feature_config_from_json(const json& j) {
  FeatureConfig cfg;
  cfg.use_ngram = j.at("use_ngram").get<bool>();
  cfg.use_syntax = j.at("use_syntax").get<bool>();
  cfg.use_table_layout = j.at("use_table_layout").get<bool>();
  cfg.use_embedding = j.at("use_embedding").get<bool>();
  cfg.use_sequential = j.at("use_sequential").get<bool>();
  cfg.layout_bins = j.at("layout_bins").get<int>();
  cfg.raw_edit_distance = j.at("raw_edit_distance").get<bool>();
  if (!j.at("embedding").is_null()) {
    auto wv = std::make_shared<WordVectors>();
    wv->dimension = j["embedding"].at("dimension").get<int>();
    for (const auto& [word, vec] : j["embedding"].at("table").items())
      wv->table.emplace(word, vec.get<std::vector<float>>());
    cfg.embedding = std::move(wv);
  }
  return cfg;
}

json table_model_to_json(const TableTransitionModel& m) {
  return json{{"start", m.start},
              {"trans", m.trans},
              {"trained_lines", m.trained_lines}};
}

TableTransitionModel table_model_from_json(const json& j) {
  TableTransitionModel m;
  m.start = j.at("start").get<std::array<double, 2>>();
  m.trans = j.at("trans").get<std::array<std::array<double, 2>, 2>>();
  m.trained_lines = j.at("trained_lines").get<std::uint64_t>();
  return m;
}

json scaling_stats_to_json(const ScalingStats& s) {
  json mm = json::object();
  for (const auto& [id, range] : s.min_max) mm[id] = {range.first, range.second};
  return json{{"min_max", std::move(mm)},
              {"tls_bin_edges", s.tls_bin_edges},
              {"layout_bins", s.layout_bins}};
}

ScalingStats scaling_stats_from_json(const json& j) {
  ScalingStats s;
  for (const auto& [id, range] : j.at("min_max").items())
    s.min_max.emplace(id, std::make_pair(range[0].get<double>(), range[1].get<double>()));
  s.tls_bin_edges = j.at("tls_bin_edges").get<std::vector<double>>();
  s.layout_bins = j.at("layout_bins").get<int>();
  return s;
}

json weights_to_json(const std::unordered_map<std::string, std::array<double, kNumLabels>>& w) {
  std::vector<std::string> ids;
  ids.reserve(w.size());
  for (const auto& [id, _] : w) ids.push_back(id);
  std::sort(ids.begin(), ids.end());

  json out = json::object();
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    json rows = json::array();
    for (const auto& id : ids) {
      const double x = w.at(id)[c];
      if (x != 0.0) rows.push_back(json::array({id, x}));
    }
    out[std::string(to_string(static_cast<Label>(c)))] = std::move(rows);
  }
  return out;
}

std::unordered_map<std::string, std::array<double, kNumLabels>> weights_from_json(
    const json& j) {
  std::unordered_map<std::string, std::array<double, kNumLabels>> w;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    const auto& rows = j.at(std::string(to_string(static_cast<Label>(c))));
    for (const auto& row : rows)
      w[row[0].get<std::string>()][c] = row[1].get<double>();
  }
  return w;
}

json train_config_to_json(const TrainConfig& tc) {
  return json{{"c", tc.c},
              {"epochs", tc.epochs},
              {"seed", tc.seed},
              {"t0", tc.t0},
              {"extra_dagger_rounds", tc.extra_dagger_rounds}};
}

TrainConfig train_config_from_json(const json& j) {
  TrainConfig tc;
  tc.c = j.at("c").get<double>();
  tc.epochs = j.at("epochs").get<int>();
  tc.seed = j.at("seed").get<std::uint64_t>();
  tc.t0 = j.at("t0").get<double>();
  tc.extra_dagger_rounds = j.at("extra_dagger_rounds").get<int>();
  return tc;
}

}  // namespace

std::string model_to_json(const ModelFile& mf) {
  const FeatureConfig& cfg = mf.model.stage1.feature_config;
  json j;
  j["format_version"] = kModelFormatVersion;
  j["feature_config"] = feature_config_to_json(cfg);
  j["scaling_stats"] = scaling_stats_to_json(mf.model.stage1.scaling_stats);
  j["stage1_weights"] = weights_to_json(mf.model.stage1.weights);
  j["stage2_weights"] = weights_to_json(mf.model.stage2.weights);
  j["train_config"] = train_config_to_json(mf.train_config);
  j["table_model"] = cfg.table_model ? table_model_to_json(*cfg.table_model) : json(nullptr);
  json priors = json::object();
  for (std::size_t c = 0; c < kNumLabels; ++c)
    priors[std::string(to_string(static_cast<Label>(c)))] = mf.priors[c];
  j["priors"] = std::move(priors);
  return j.dump(2) + "\n";
}

ModelFile model_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed model JSON", 1);
  if (!j.contains("format_version") || !j["format_version"].is_number_integer())
    throw ParseError("missing format_version", 1);
  if (j["format_version"].get<int>() != kModelFormatVersion)
    throw ModelVersionMismatch("model format_version " +
                               std::to_string(j["format_version"].get<int>()) +
                               " unsupported, expected " +
                               std::to_string(kModelFormatVersion));

  ModelFile mf;
  FeatureConfig cfg = feature_config_from_json(j.at("feature_config"));
  if (!j.at("table_model").is_null())
    cfg.table_model =
        std::make_shared<TableTransitionModel>(table_model_from_json(j["table_model"]));
  const ScalingStats stats = scaling_stats_from_json(j.at("scaling_stats"));

  mf.model.stage1.feature_config = cfg;
  mf.model.stage1.scaling_stats = stats;
  mf.model.stage1.weights = weights_from_json(j.at("stage1_weights"));
  mf.model.stage2.feature_config = cfg;
  mf.model.stage2.scaling_stats = stats;
  mf.model.stage2.weights = weights_from_json(j.at("stage2_weights"));
  mf.train_config = train_config_from_json(j.at("train_config"));
  for (std::size_t c = 0; c < kNumLabels; ++c)
    mf.priors[c] = j.at("priors").at(std::string(to_string(static_cast<Label>(c)))).get<double>();
  return mf;
}

void save_model(const ModelFile& mf, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model file: " + path.string());
  out << model_to_json(mf);
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

std::string gold_clustering_to_json(const GoldClustering& gold) {
  json topics = json::object(), clusters = json::object();
  for (const auto& [tid, keywords] : gold.topics) topics[tid] = keywords;
  for (const auto& [tid, members] : gold.clusters)
    clusters[tid] = std::vector<std::string>(members.begin(), members.end());
  return json{{"topics", std::move(topics)}, {"clusters", std::move(clusters)}}.dump(2) + "\n";
}

GoldClustering gold_clustering_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed gold clustering JSON", 1);
  GoldClustering gold;
  for (const auto& [tid, keywords] : j.at("topics").items())
    gold.topics[tid] = keywords.get<std::string>();
  for (const auto& [tid, members] : j.at("clusters").items())
    for (const auto& id : members) gold.clusters[tid].insert(id.get<std::string>());
  return gold;
}

void save_gold_clustering(const GoldClustering& gold, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write gold clustering: " + path.string());
  out << gold_clustering_to_json(gold);
}

GoldClustering load_gold_clustering(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open gold clustering: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return gold_clustering_from_json(buf.str());
}

namespace {

json class_prf_json(const ClassPrf& p) {
  return json{{"precision", p.precision}, {"recall", p.recall}, {"f1", p.f1}};
}

json prf_json(const PRFReport& rep) {
  json per_class = json::object();
  for (std::size_t c = 0; c < kNumLabels; ++c)
    per_class[std::string(to_string(static_cast<Label>(c)))] = class_prf_json(rep.per_class[c]);
  return json{{"per_class", std::move(per_class)},
              {"macro_f1_unnatural", rep.macro_f1_unnatural},
              {"macro_f1_all", rep.macro_f1_all},
              {"n_lines", rep.n_lines}};
}

}  // namespace

std::string prf_report_to_json(const PRFReport& pooled, const ConfusionMatrix& cm,
                               const std::vector<PRFReport>* per_fold) {
  json j;
  j["report"] = prf_json(pooled);
  json rows = json::array();
  for (std::size_t g = 0; g < kNumLabels; ++g) {
    json row = json::array();
    for (std::size_t p = 0; p < kNumLabels; ++p) row.push_back(cm.counts[g][p]);
    rows.push_back(std::move(row));
  }
  j["confusion"] = std::move(rows);
  if (per_fold) {
    json folds = json::array();
    for (const auto& rep : *per_fold) folds.push_back(prf_json(rep));
    j["per_fold"] = std::move(folds);
  }
  return j.dump(2) + "\n";
}

std::string prf_report_to_text(const PRFReport& rep) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << std::left << std::setw(9) << "class" << std::right << std::setw(10) << "precision"
      << std::setw(9) << "recall" << std::setw(9) << "f1" << '\n';
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    const auto& p = rep.per_class[c];
    out << std::left << std::setw(9) << to_string(static_cast<Label>(c)) << std::right
        << std::setw(10) << p.precision << std::setw(9) << p.recall << std::setw(9) << p.f1
        << '\n';
  }
  out << "macro-F1 (unnatural) " << rep.macro_f1_unnatural << '\n';
  out << "macro-F1 (all)       " << rep.macro_f1_all << '\n';
  out << "lines                " << rep.n_lines << '\n';
  return out.str();
}

std::string removal_report_to_json(const RemovalEffectReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows)
    rows.push_back(json{{"k", row.k},
                        {"scheme", std::string(to_string(row.scheme))},
                        {"variant", row.removed ? "removed" : "original"},
                        {"f1", row.f1}});
  json j{{"rows", std::move(rows)},
         {"mean_delta", report.mean_delta},
         {"max_gain", report.max_gain},
         {"mean_gain", report.mean_gain},
         {"mean_loss", report.mean_loss},
         {"improved", report.improved},
         {"hurt", report.hurt},
         {"tied", report.tied}};
  return j.dump(2) + "\n";
}

std::string regression_fit_to_json(const RegressionFit& original, const RegressionFit& removed) {
  auto fit_json = [](const RegressionFit& f) {
    return json{{"intercept", f.intercept},
                {"slope", f.slope},
                {"log_likelihood", f.log_likelihood},
                {"aic", f.aic},
                {"n", f.n}};
  };
  return json{{"original", fit_json(original)},
              {"removed", fit_json(removed)},
              {"aic_improvement", removed.aic - original.aic}}
             .dump(2) +
         "\n";
}

}  // namespace linesift
