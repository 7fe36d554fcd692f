// SPDX-License-Identifier: Apache-2.0
#include "linesift/downstream.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "linesift/errors.hpp"
#include "linesift/rng.hpp"
#include "linesift/tokenize.hpp"

namespace linesift {

double DocumentVector::norm() const {
  double s = 0.0;
  for (const auto& [_, w] : weights) s += w * w;
  return std::sqrt(s);
}

std::vector<std::vector<std::string>> GoldClustering::partition() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& [_, members] : clusters)
    out.emplace_back(members.begin(), members.end());
  return out;
}

std::string_view to_string(SeedScheme s) {
  switch (s) {
    case SeedScheme::TopicKeywords: return "topic";
    case SeedScheme::Top1Doc: return "top1";
    case SeedScheme::UserSelected: return "user";
  }
  return "topic";
}

SeedScheme parse_seed_scheme(std::string_view s) {
  if (s == "topic") return SeedScheme::TopicKeywords;
  if (s == "top1") return SeedScheme::Top1Doc;
  if (s == "user") return SeedScheme::UserSelected;
  throw ConfigViolation("unknown seed scheme: '" + std::string(s) + "'");
}

AnnotatedDocument remove_unnatural(const AnnotatedDocument& doc,
                                   const std::vector<Label>& labels,
                                   const std::set<Label>& keep) {
  if (labels.size() != doc.lines.size())
    throw LengthMismatch("labels cover " + std::to_string(labels.size()) + " lines, document has " +
                         std::to_string(doc.lines.size()));
  AnnotatedDocument out;
  const std::string suffix = ":removed";
  out.id = doc.id.size() >= suffix.size() &&
                   doc.id.compare(doc.id.size() - suffix.size(), suffix.size(), suffix) == 0
               ? doc.id
               : doc.id + suffix;
  for (std::size_t i = 0; i < doc.lines.size(); ++i)
    if (keep.count(labels[i])) out.lines.push_back(doc.lines[i]);
  return out;
}

std::vector<DocumentVector> build_vectors(const Corpus& corpus, std::size_t k) {
  if (corpus.documents.empty()) throw EmptyCorpus("cannot vectorize an empty corpus");
  const double n_docs = static_cast<double>(corpus.documents.size());

  // document frequency over lower-cased token surfaces
  std::unordered_map<std::string, std::uint64_t> df;
  std::vector<std::unordered_map<std::string, std::uint64_t>> tf(corpus.documents.size());
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    for (const auto& line : corpus.documents[d].lines)
      for (const auto& tok : lower_surfaces(tokenize(line.text))) ++tf[d][tok];
    for (const auto& [term, _] : tf[d]) ++df[term];
  }

  std::vector<DocumentVector> out;
  out.reserve(corpus.documents.size());
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    DocumentVector dv;
    dv.doc_id = corpus.documents[d].id;
    dv.k = k;

    std::vector<std::pair<std::string, double>> scored;
    scored.reserve(tf[d].size());
    for (const auto& [term, count] : tf[d]) {
      const double idf = std::log(n_docs / static_cast<double>(df.at(term)));
      const double w = static_cast<double>(count) * idf;
      if (w > 0.0) scored.emplace_back(term, w);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    if (scored.size() > k) scored.resize(k);
    for (auto& [term, w] : scored) dv.weights.emplace(std::move(term), w);
    out.push_back(std::move(dv));
  }
  return out;
}

double cosine(const DocumentVector& a, const DocumentVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  const DocumentVector& small = a.weights.size() <= b.weights.size() ? a : b;
  const DocumentVector& large = a.weights.size() <= b.weights.size() ? b : a;
  double dot = 0.0;
  for (const auto& [term, w] : small.weights) {
    auto it = large.weights.find(term);
    if (it != large.weights.end()) dot += w * it->second;
  }
  if (dot == 0.0) return 0.0;
  return dot / (a.norm() * b.norm());
}

namespace {

// tf within the keyword string times idf over the document collection
DocumentVector keyword_vector(const std::string& topic_id, const std::string& keywords,
                              const std::vector<DocumentVector>& vectors) {
  std::unordered_map<std::string, std::uint64_t> df;
  for (const auto& v : vectors)
    for (const auto& [term, _] : v.weights) ++df[term];
  const double n = static_cast<double>(vectors.size());

  const std::vector<std::string> toks = lower_surfaces(tokenize(keywords));
  if (toks.empty()) throw EmptyTopic("topic '" + topic_id + "' has no keyword tokens");

  std::map<std::string, std::uint64_t> tf;
  for (const auto& t : toks) ++tf[t];

  DocumentVector kv;
  kv.doc_id = "topic:" + topic_id;
  kv.k = tf.size();
  for (const auto& [term, count] : tf) {
    auto it = df.find(term);
    if (it == df.end()) continue;
    const double idf = std::log(n / static_cast<double>(it->second));
    const double w = static_cast<double>(count) * idf;
    if (w > 0.0) kv.weights.emplace(term, w);
  }
  if (kv.empty())
    throw EmptyTopic("keywords of topic '" + topic_id + "' are absent from the collection");
  return kv;
}

}  // namespace

std::vector<DocumentVector> init_seeds(SeedScheme scheme, const GoldClustering& gold,
                                       const std::vector<DocumentVector>& vectors,
                                       std::uint64_t seed) {
  if (vectors.empty()) throw EmptyCorpus("no document vectors to seed from");

  std::unordered_map<std::string, const DocumentVector*> by_id;
  for (const auto& v : vectors) by_id.emplace(v.doc_id, &v);

  Rng rng = Rng::stream(seed, "user-sim");
  std::vector<DocumentVector> seeds;
  for (const auto& [tid, keywords] : gold.topics) {  // sorted topic-id order
    switch (scheme) {
      case SeedScheme::TopicKeywords: {
        seeds.push_back(keyword_vector(tid, keywords, vectors));
        break;
      }
      case SeedScheme::Top1Doc: {
        const DocumentVector kv = keyword_vector(tid, keywords, vectors);
        const DocumentVector* best = nullptr;
        double best_sim = -1.0;
        for (const auto& v : vectors) {
          const double sim = cosine(kv, v);
          if (sim > best_sim || (sim == best_sim && best && v.doc_id < best->doc_id)) {
            best_sim = sim;
            best = &v;
          }
        }
        seeds.push_back(*best);
        break;
      }
      case SeedScheme::UserSelected: {
        auto cl = gold.clusters.find(tid);
        if (cl == gold.clusters.end() || cl->second.empty())
          throw EmptyTopic("topic '" + tid + "' has no gold cluster members");
        std::vector<std::string> members(cl->second.begin(), cl->second.end());
        const std::string& chosen = members[rng.below(members.size())];
        auto it = by_id.find(chosen);
        if (it == by_id.end())
          throw CoverageMismatch("gold document '" + chosen + "' has no vector");
        seeds.push_back(*it->second);
        break;
      }
    }
  }
  return seeds;
}

std::vector<std::vector<std::string>> seeded_kmeans(
    const std::vector<DocumentVector>& vectors, const std::vector<DocumentVector>& seeds,
    int max_iters) {
  if (seeds.empty()) throw ConfigViolation("k-means needs at least one seed");
  if (max_iters < 1) throw ConfigViolation("max_iters must be >= 1");

  std::vector<DocumentVector> centroids = seeds;
  std::vector<std::size_t> assign(vectors.size(), 0);

  for (int iter = 0; iter < max_iters; ++iter) {
    std::vector<std::size_t> next(vectors.size(), 0);
    for (std::size_t d = 0; d < vectors.size(); ++d) {
      double best = -1.0;
      std::size_t best_c = 0;
      for (std::size_t c = 0; c < centroids.size(); ++c) {
        const double sim = cosine(vectors[d], centroids[c]);
        if (sim > best) {
          best = sim;
          best_c = c;
        }
      }
      next[d] = best_c;
    }
    const bool converged = iter > 0 && next == assign;
    assign = std::move(next);
    if (converged) break;

    // component-wise mean of member vectors; empty clusters keep their centroid
    for (std::size_t c = 0; c < centroids.size(); ++c) {
      std::map<std::string, double> sum;
      std::size_t count = 0;
      for (std::size_t d = 0; d < vectors.size(); ++d) {
        if (assign[d] != c) continue;
        ++count;
        for (const auto& [term, w] : vectors[d].weights) sum[term] += w;
      }
      if (count == 0) continue;
      DocumentVector mean;
      mean.doc_id = "centroid:" + std::to_string(c);
      mean.k = sum.size();
      for (auto& [term, w] : sum) {
        const double avg = w / static_cast<double>(count);
        if (avg != 0.0) mean.weights.emplace(term, avg);
      }
      centroids[c] = std::move(mean);
    }
  }

  std::vector<std::vector<std::string>> partition(centroids.size());
  for (std::size_t d = 0; d < vectors.size(); ++d)
    partition[assign[d]].push_back(vectors[d].doc_id);
  return partition;
}

Corpus strip_predicted_unnatural(const Corpus& corpus, const SequentialModel& model,
                                 const std::set<Label>& keep) {
  Corpus out;
  for (const auto& doc : corpus.documents) {
    const std::vector<Label> pred = predict_document(model, doc);
    AnnotatedDocument stripped = remove_unnatural(doc, pred, keep);
    stripped.id = doc.id;  // same ids so gold clusterings stay applicable
    out.documents.push_back(std::move(stripped));
  }
  out.recompute_fully_labeled();
  return out;
}

std::vector<std::pair<double, bool>> similarity_relevance_pairs(
    const std::vector<DocumentVector>& vectors, const GoldClustering& gold) {
  std::unordered_map<std::string, const std::string*> topic_of;
  for (const auto& [tid, members] : gold.clusters)
    for (const auto& id : members) topic_of.emplace(id, &tid);

  std::vector<std::pair<double, bool>> pairs;
  pairs.reserve(vectors.size() * (vectors.size() - 1) / 2);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto ti = topic_of.find(vectors[i].doc_id);
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      auto tj = topic_of.find(vectors[j].doc_id);
      const bool relevant = ti != topic_of.end() && tj != topic_of.end() &&
                            *ti->second == *tj->second;
      pairs.emplace_back(cosine(vectors[i], vectors[j]), relevant);
    }
  }
  return pairs;
}

std::string RemovalEffectReport::to_csv() const {
  std::ostringstream out;
  out << "k,scheme,variant,f1\n";
  for (const auto& row : rows)
    out << row.k << ',' << to_string(row.scheme) << ','
        << (row.removed ? "removed" : "original") << ',' << row.f1 << '\n';
  return out.str();
}

RemovalEffectReport removal_effect_report(const Corpus& corpus, const SequentialModel& model,
                                          const GoldClustering& gold,
                                          const std::vector<std::size_t>& k_values,
                                          const std::vector<SeedScheme>& schemes,
                                          std::uint64_t seed) {
  std::set<std::string> corpus_ids;
  for (const auto& doc : corpus.documents) corpus_ids.insert(doc.id);
  std::set<std::string> gold_ids;
  for (const auto& [_, members] : gold.clusters) gold_ids.insert(members.begin(), members.end());
  if (corpus_ids != gold_ids)
    throw CoverageMismatch("gold clustering does not cover the corpus document ids");

  const Corpus removed = strip_predicted_unnatural(corpus, model);
  const auto gold_partition = gold.partition();

  RemovalEffectReport report;
  std::vector<double> deltas;
  for (std::size_t k : k_values) {
    const auto vec_orig = build_vectors(corpus, k);
    const auto vec_rem = build_vectors(removed, k);
    for (SeedScheme scheme : schemes) {
      // identical seed stream for both variants: the simulated user picks
      // the same gold documents, so the comparison is paired
      const std::uint64_t setting_seed =
          derive_stream_seed(seed, "sweep-k" + std::to_string(k) + "-" +
                                       std::string(to_string(scheme)));
      const double f1_orig = pairwise_clustering_f1(
          gold_partition,
          seeded_kmeans(vec_orig, init_seeds(scheme, gold, vec_orig, setting_seed))).f1;
      const double f1_rem = pairwise_clustering_f1(
          gold_partition,
          seeded_kmeans(vec_rem, init_seeds(scheme, gold, vec_rem, setting_seed))).f1;

      report.rows.push_back({k, scheme, false, f1_orig});
      report.rows.push_back({k, scheme, true, f1_rem});
      deltas.push_back(f1_rem - f1_orig);
    }
  }

  double gain_sum = 0.0, loss_sum = 0.0, delta_sum = 0.0;
  for (double d : deltas) {
    delta_sum += d;
    if (d > 0.0) {
      ++report.improved;
      gain_sum += d;
      report.max_gain = std::max(report.max_gain, d);
    } else if (d < 0.0) {
      ++report.hurt;
      loss_sum += -d;
    } else {
      ++report.tied;
    }
  }
  report.mean_delta = deltas.empty() ? 0.0 : delta_sum / static_cast<double>(deltas.size());
  report.mean_gain = report.improved ? gain_sum / static_cast<double>(report.improved) : 0.0;
  report.mean_loss = report.hurt ? loss_sum / static_cast<double>(report.hurt) : 0.0;
  return report;
}

}  // namespace linesift
