// SPDX-License-Identifier: Apache-2.0
#include "linesift/table_layout.hpp"

#include <algorithm>
#include <cmath>

#include "linesift/errors.hpp"

namespace linesift {

SNCode encode_sn(const std::vector<Token>& tokens) {
  SNCode code;
  code.symbols.reserve(tokens.size());
  for (const auto& t : tokens)
    code.symbols.push_back(t.kind == TokenKind::Numeral ? SN::N : SN::S);
  return code;
}

SNCode encode_sn(std::string_view line) { return encode_sn(tokenize(line)); }

std::string sn_to_string(const SNCode& code) {
  std::string out;
  for (std::size_t i = 0; i < code.symbols.size(); ++i) {
    if (i) out += ' ';
    out += code.symbols[i] == SN::S ? 'S' : 'N';
  }
  return out;
}

SNCode sn_from_string(std::string_view s) {
  SNCode code;
  for (char c : s) {
    if (c == 'S')
      code.symbols.push_back(SN::S);
    else if (c == 'N')
      code.symbols.push_back(SN::N);
  }
  return code;
}

std::size_t edit_distance(const SNCode& a, const SNCode& b) {
  const auto& s = a.symbols;
  const auto& t = b.symbols;
  std::vector<std::size_t> row(t.size() + 1);
  for (std::size_t j = 0; j <= t.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j) {
      std::size_t save = row[j];
      std::size_t sub = diag + (s[i - 1] == t[j - 1] ? 0 : 1);
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
      diag = save;
    }
  }
  return row[t.size()];
}

double edit_similarity(const SNCode& a, const SNCode& b) {
  const double denom = static_cast<double>(std::max({a.size(), b.size(), std::size_t{1}}));
  return 1.0 - static_cast<double>(edit_distance(a, b)) / denom;
}

TableTransitionModel train_table_model(const std::vector<SNCode>& codes) {
  std::array<std::uint64_t, 2> start_counts{0, 0};
  std::array<std::array<std::uint64_t, 2>, 2> trans_counts{{{0, 0}, {0, 0}}};
  std::uint64_t lines = 0;
  for (const auto& code : codes) {
    if (code.empty()) continue;
    ++lines;
    ++start_counts[static_cast<std::size_t>(code.symbols[0])];
    for (std::size_t j = 0; j + 1 < code.symbols.size(); ++j)
      ++trans_counts[static_cast<std::size_t>(code.symbols[j])]
                    [static_cast<std::size_t>(code.symbols[j + 1])];
  }

  TableTransitionModel m;
  m.trained_lines = lines;
  const double start_total = static_cast<double>(start_counts[0] + start_counts[1]);
  for (std::size_t a = 0; a < 2; ++a)
    m.start[a] = (static_cast<double>(start_counts[a]) + 1.0) / (start_total + 2.0);
  for (std::size_t a = 0; a < 2; ++a) {
    const double row_total = static_cast<double>(trans_counts[a][0] + trans_counts[a][1]);
    for (std::size_t b = 0; b < 2; ++b)
      m.trans[a][b] = (static_cast<double>(trans_counts[a][b]) + 1.0) / (row_total + 2.0);
  }
  return m;
}

TableTransitionModel train_table_model(const Corpus& corpus) {
  std::vector<SNCode> codes;
  for (const auto& doc : corpus.documents)
    for (const auto& line : doc.lines)
      if (line.gold && *line.gold == Label::Table) codes.push_back(encode_sn(line.text));
  return train_table_model(codes);
}

double table_lm_prob(const SNCode& code, const TableTransitionModel& m) {
  if (code.empty()) throw EmptyLine("table_lm_prob needs a nonempty code");
  double log_p = std::log(m.start[static_cast<std::size_t>(code.symbols[0])]);
  for (std::size_t j = 0; j + 1 < code.symbols.size(); ++j)
    log_p += std::log(m.trans[static_cast<std::size_t>(code.symbols[j])]
                             [static_cast<std::size_t>(code.symbols[j + 1])]);
  return std::exp(log_p);
}

double table_layout_score(const AnnotatedDocument& doc, std::size_t i,
                          const TableTransitionModel& m, bool raw_edit_distance) {
  const SNCode code = encode_sn(doc.lines.at(i).text);
  if (code.empty()) return 0.0;
  const double lm = table_lm_prob(code, m);
  if (i == 0) return lm;
  const SNCode prev = encode_sn(doc.lines[i - 1].text);
  if (raw_edit_distance)
    return lm * static_cast<double>(edit_distance(code, prev));
  return lm * edit_similarity(code, prev);
}

}  // namespace linesift
