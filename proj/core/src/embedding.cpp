// SPDX-License-Identifier: Apache-2.0
#include "linesift/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "linesift/errors.hpp"
#include "linesift/rng.hpp"

namespace linesift {

const std::vector<float>* WordVectors::find(const std::string& word) const {
  auto it = table.find(word);
  return it == table.end() ? nullptr : &it->second;
}

namespace {

inline double sigmoid(double x) {
  if (x > 8.0) return 1.0;
  if (x < -8.0) return 0.0;
  return 1.0 / (1.0 + std::exp(-x));
}

struct Vocab {
  std::vector<std::string> words;              // sorted by frequency desc, then lexicographic
  std::vector<std::uint64_t> counts;
  std::unordered_map<std::string, int> index;
};

Vocab build_vocab(const std::vector<std::vector<std::string>>& sentences, int min_count) {
  std::map<std::string, std::uint64_t> freq;
  for (const auto& sent : sentences)
    for (const auto& w : sent) ++freq[w];

  std::vector<std::pair<std::string, std::uint64_t>> kept;
  for (const auto& [w, c] : freq)
    if (c >= static_cast<std::uint64_t>(min_count)) kept.emplace_back(w, c);
  if (kept.empty()) throw EmptyVocabulary("no token reaches min_count");

  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  Vocab v;
  for (const auto& [w, c] : kept) {
    v.index.emplace(w, static_cast<int>(v.words.size()));
    v.words.push_back(w);
    v.counts.push_back(c);
  }
  return v;
}

// cumulative unigram^0.75 distribution for negative sampling
std::vector<double> negative_cdf(const Vocab& v) {
  std::vector<double> cdf(v.counts.size());
  double total = 0.0;
  for (std::size_t i = 0; i < v.counts.size(); ++i) {
    total += std::pow(static_cast<double>(v.counts[i]), 0.75);
    cdf[i] = total;
  }
  for (auto& x : cdf) x /= total;
  return cdf;
}

int sample_negative(const std::vector<double>& cdf, Rng& rng) {
  const double u = rng.real();
  auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<int>(it - cdf.begin());
}

}  // namespace

WordVectors train_skipgram(const std::vector<std::vector<std::string>>& sentences,
                           const SkipgramConfig& cfg) {
  if (sentences.empty()) throw EmptyCorpus("skip-gram needs a nonempty corpus");
  if (cfg.dim < 1 || cfg.window < 1 || cfg.min_count < 1 || cfg.negatives < 1 || cfg.epochs < 1)
    throw ConfigViolation("skip-gram hyperparameters must be positive");

  const Vocab vocab = build_vocab(sentences, cfg.min_count);
  const std::vector<double> cdf = negative_cdf(vocab);
  const int dim = cfg.dim;
  const std::size_t n_words = vocab.words.size();

  Rng rng = Rng::stream(cfg.seed, "embed");

  std::vector<float> in(n_words * dim);
  std::vector<float> out(n_words * dim, 0.0f);
  for (auto& x : in) x = static_cast<float>((rng.real() - 0.5) / dim);

  // pre-map sentences to vocab ids, dropping out-of-vocabulary tokens
  std::vector<std::vector<int>> ids;
  ids.reserve(sentences.size());
  std::uint64_t total_tokens = 0;
  for (const auto& sent : sentences) {
    std::vector<int> row;
    row.reserve(sent.size());
    for (const auto& w : sent) {
      auto it = vocab.index.find(w);
      if (it != vocab.index.end()) row.push_back(it->second);
    }
    total_tokens += row.size();
    if (!row.empty()) ids.push_back(std::move(row));
  }

  const double total_steps =
      static_cast<double>(std::max<std::uint64_t>(1, total_tokens)) * cfg.epochs;
  std::uint64_t step = 0;
  std::vector<double> grad_center(dim);

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (const auto& sent : ids) {
      for (std::size_t c = 0; c < sent.size(); ++c) {
        ++step;
        const double progress = static_cast<double>(step) / total_steps;
        const double lr =
            std::max(cfg.learning_rate * (1.0 - progress), cfg.learning_rate * 1e-4);
        const int center = sent[c];
        const std::size_t span = 1 + static_cast<std::size_t>(rng.below(cfg.window));
        const std::size_t lo = c >= span ? c - span : 0;
        const std::size_t hi = std::min(sent.size() - 1, c + span);

        float* v_c = &in[static_cast<std::size_t>(center) * dim];
        for (std::size_t p = lo; p <= hi; ++p) {
          if (p == c) continue;
          std::fill(grad_center.begin(), grad_center.end(), 0.0);
          for (int k = 0; k <= cfg.negatives; ++k) {
            int target;
            double label;
            if (k == 0) {
              target = sent[p];
              label = 1.0;
            } else {
              target = sample_negative(cdf, rng);
              if (target == sent[p]) continue;
              label = 0.0;
            }
            float* u_t = &out[static_cast<std::size_t>(target) * dim];
            double dot = 0.0;
            for (int d = 0; d < dim; ++d) dot += static_cast<double>(v_c[d]) * u_t[d];
            const double g = (label - sigmoid(dot)) * lr;
            for (int d = 0; d < dim; ++d) {
              grad_center[d] += g * u_t[d];
              u_t[d] += static_cast<float>(g * v_c[d]);
            }
          }
          for (int d = 0; d < dim; ++d) v_c[d] += static_cast<float>(grad_center[d]);
        }
      }
    }
  }

  WordVectors wv;
  wv.dimension = dim;
  wv.table.reserve(n_words);
  for (std::size_t i = 0; i < n_words; ++i) {
    std::vector<float> vec(in.begin() + static_cast<std::ptrdiff_t>(i) * dim,
                           in.begin() + static_cast<std::ptrdiff_t>(i + 1) * dim);
    wv.table.emplace(vocab.words[i], std::move(vec));
  }
  return wv;
}

WordVectors load_vectors(const std::filesystem::path& path, std::size_t* duplicates) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open vector file: " + path.string());

  std::string header;
  if (!std::getline(file, header)) throw ParseError("empty vector file", 1);
  std::istringstream hs(header);
  long long vocab = 0, dim = 0;
  if (!(hs >> vocab >> dim) || vocab < 0 || dim < 1)
    throw ParseError("header must be '<vocab_size> <dimension>'", 1);

  WordVectors wv;
  wv.dimension = static_cast<int>(dim);
  std::size_t dup = 0;
  std::string row;
  std::size_t line_no = 1;
  while (std::getline(file, row)) {
    ++line_no;
    if (row.empty()) continue;
    std::istringstream rs(row);
    std::string word;
    if (!(rs >> word)) throw ParseError("missing word", line_no);
    std::vector<float> vec;
    vec.reserve(static_cast<std::size_t>(dim));
    double x;
    while (rs >> x) vec.push_back(static_cast<float>(x));
    if (vec.size() != static_cast<std::size_t>(dim))
      throw DimensionMismatch("row for '" + word + "' has " + std::to_string(vec.size()) +
                              " components, expected " + std::to_string(dim));
    if (!wv.table.emplace(word, vec).second) {
      wv.table[word] = vec;  // last wins
      ++dup;
    }
  }
  if (duplicates) *duplicates = dup;
  return wv;
}

void save_vectors(const WordVectors& wv, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write vector file: " + path.string());
  file << wv.table.size() << ' ' << wv.dimension << '\n';
  std::vector<std::string> words;
  words.reserve(wv.table.size());
  for (const auto& [w, _] : wv.table) words.push_back(w);
  std::sort(words.begin(), words.end());
  std::ostringstream line;
  for (const auto& w : words) {
    line.str("");
    line << w;
    for (float x : wv.table.at(w)) line << ' ' << x;
    file << line.str() << '\n';
  }
}

LineVector line_vector(const std::vector<std::string>& tokens, const WordVectors& wv) {
  LineVector lv;
  lv.values.assign(static_cast<std::size_t>(wv.dimension), 0.0f);
  std::size_t hits = 0;
  for (const auto& tok : tokens) {
    const std::vector<float>* vec = wv.find(tok);
    if (!vec) continue;
    ++hits;
    for (std::size_t d = 0; d < lv.values.size(); ++d) lv.values[d] += (*vec)[d];
  }
  if (hits > 0) {
    const float inv = 1.0f / static_cast<float>(hits);
    for (auto& x : lv.values) x *= inv;
  }
  lv.coverage = tokens.empty() ? 0.0 : static_cast<double>(hits) / tokens.size();
  return lv;
}

double cosine_similarity(const std::vector<float>& a, const std::vector<float>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace linesift
