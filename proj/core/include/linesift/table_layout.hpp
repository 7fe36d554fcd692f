// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "linesift/corpus.hpp"
#include "linesift/tokenize.hpp"

namespace linesift {

// A line reduced to its string/numeral skeleton: one symbol per token,
// S for words and symbols, N for numerals. Flattened tables keep their
// column rhythm in this alphabet even after layout is gone.
enum class SN : unsigned char { S = 0, N = 1 };

struct SNCode {
  std::vector<SN> symbols;

  bool empty() const { return symbols.empty(); }
  std::size_t size() const { return symbols.size(); }
  bool operator==(const SNCode&) const = default;
};

SNCode encode_sn(const std::vector<Token>& tokens);
SNCode encode_sn(std::string_view line);

// For tests and debug output: "S N N" <-> SNCode.
std::string sn_to_string(const SNCode& code);
SNCode sn_from_string(std::string_view s);

// Unit-cost Levenshtein distance over SN symbol sequences.
std::size_t edit_distance(const SNCode& a, const SNCode& b);

// 1 - dist / max(|a|, |b|, 1), in [0, 1].
double edit_similarity(const SNCode& a, const SNCode& b);

// Bigram model over {S, N} with add-one smoothing, trained on the SN codes
// of table-labeled lines.
struct TableTransitionModel {
  std::array<double, 2> start{0.5, 0.5};               // P(first symbol)
  std::array<std::array<double, 2>, 2> trans{{{0.5, 0.5}, {0.5, 0.5}}};  // P(next | prev)
  std::uint64_t trained_lines = 0;
};

TableTransitionModel train_table_model(const std::vector<SNCode>& codes);

// Table-labeled lines of a corpus -> model. A corpus without table lines
// yields the uniform smoothed model.
TableTransitionModel train_table_model(const Corpus& corpus);

// start(c1) * prod_j trans(c_j -> c_{j+1}), evaluated in log space.
// Throws EmptyLine on an empty code.
double table_lm_prob(const SNCode& code, const TableTransitionModel& m);

// Layout evidence for line i: its own bigram probability times the edit
// similarity to the previous line (1 at the document start). Empty lines
// score 0. With raw_edit_distance the similarity factor is replaced by the
// unnormalized distance; scores are then no longer bounded by 1.
double table_layout_score(const AnnotatedDocument& doc, std::size_t i,
                          const TableTransitionModel& m,
                          bool raw_edit_distance = false);

}  // namespace linesift
