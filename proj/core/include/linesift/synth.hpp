// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>

#include "linesift/corpus.hpp"
#include "linesift/downstream.hpp"

namespace linesift {

// Per-line fractions of the four unnatural categories measured on the
// lecture-slide and paper corpora; the remainder is TEXT.
std::map<Label, double> slides_ratios();  // TABLE .014 CODE .146 FORMULA .005 MISC .098
std::map<Label, double> acl_ratios();     // TABLE .040 CODE .006 FORMULA .050 MISC .064

struct SynthOptions {
  int min_doc_lines = 40;
  int max_doc_lines = 70;
  int min_block = 3;  // preferred block length range; quota remainders may be shorter
  int max_block = 7;
  // fraction of code-block lines that are bare prose-like pseudo-code steps
  // ("update the cluster assignment"); these are only separable in context
  double code_step_fraction = 0.3;
  double blank_line_chance = 0.03;  // empty TEXT lines inside prose runs
};

// Seeded-random interleaving of generated blocks: prose, aligned numeric
// table grids, keyword/identifier code, operator-heavy formula lines, and
// fragmented caption debris. Every line carries its generating label.
// Ratios are enforced with running quotas, so realized fractions converge
// to the requested ones as the corpus grows.
Corpus generate_synthetic_corpus(int n_docs, const std::map<Label, double>& ratios,
                                 std::uint64_t seed, const SynthOptions& opt = {});

struct ClusteredSynthOptions {
  int n_topics = 4;        // at most 6
  int docs_per_topic = 10;
  int min_doc_lines = 30;
  int max_doc_lines = 50;
  // fraction of lines taken by code blocks drawn from one shared pool, so
  // identical code text spans documents of different topics
  double injected_code_fraction = 0.35;
  int code_pool_blocks = 6;
  double misc_fraction = 0.05;
  // among prose content words, the share drawn from the topic vocabulary
  double topic_word_fraction = 0.45;
  SynthOptions base;
};

struct ClusteredCorpus {
  Corpus corpus;
  GoldClustering gold;
};

// Topical documents with a gold clustering and (optionally) cross-topic
// injected code blocks: the confound where unrelated documents look similar
// because they share code vocabulary.
ClusteredCorpus generate_clustered_corpus(const ClusteredSynthOptions& opt,
                                          std::uint64_t seed);

}  // namespace linesift
