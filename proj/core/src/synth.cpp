// SPDX-License-Identifier: Apache-2.0
#include "linesift/synth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "linesift/errors.hpp"
#include "linesift/rng.hpp"

namespace linesift {

std::map<Label, double> slides_ratios() {
  return {{Label::Table, 0.014}, {Label::Code, 0.146}, {Label::Formula, 0.005},
          {Label::Misc, 0.098}};
}

std::map<Label, double> acl_ratios() {
  return {{Label::Table, 0.040}, {Label::Code, 0.006}, {Label::Formula, 0.050},
          {Label::Misc, 0.064}};
}

namespace {

const std::vector<std::string> kGlue = {
    "the", "of", "to", "in", "a", "is", "that", "for", "we", "with", "as", "are",
    "on", "by", "an", "be", "it", "from", "or", "and", "this", "which", "can",
    "at", "has", "have", "not", "each", "when", "more", "also", "than", "into",
    "such", "other", "over", "between", "these", "both", "its", "may", "their",
    "used", "using", "most", "some", "all", "one", "two", "where", "while"};

const std::vector<std::string> kNouns = {
    "system",   "model",    "data",      "method",    "result",   "value",
    "process",  "line",     "structure", "document",  "text",     "feature",
    "word",     "term",     "section",   "example",   "approach", "analysis",
    "function", "problem",  "task",      "set",       "case",     "order",
    "form",     "level",    "state",     "part",      "input",    "output",
    "user",     "time",     "number",    "point",     "step",     "change",
    "type",     "class",    "group",     "space",     "version",  "unit",
    "language", "sentence", "paragraph", "program",   "machine",  "course"};

const std::vector<std::string> kVerbs = {
    "show",     "provide", "describe", "present",  "compute",  "define",
    "consider", "obtain",  "require",  "improve",  "include",  "represent",
    "contain",  "produce", "apply",    "evaluate", "observe",  "report",
    "select",   "perform", "use",      "make",     "take",     "give",
    "run",      "call",    "need",     "store",    "keep",     "find",
    "update",   "insert",  "remove",   "merge",    "sort",     "check"};

const std::vector<std::string> kIdentifiers = {
    "i",   "j",    "k",    "n",    "m",    "x",    "y",    "tmp", "buf",
    "node", "ptr",  "len",  "sum",  "cnt",  "idx",  "arr",  "lst", "head",
    "next", "val",  "item", "key",  "size", "pos",  "cur",  "res", "acc"};

const std::vector<std::string> kFuncNames = {
    "init",   "update", "insert", "remove", "find", "push", "pop",    "get",
    "set",    "merge",  "swap",   "alloc",  "free", "hash", "lookup", "append"};

const std::vector<std::string> kMathSymbols = {
    "α", "β", "γ", "λ", "θ", "μ", "σ", "δ", "ε", "π", "Σ", "Π", "∑", "∫",
    "√", "≤", "≥", "≠", "∈", "∀", "→", "·", "^", "+", "-", "/", "|", "∞"};

const std::vector<std::string> kMiscFragments = {
    "Figure", "Table",  "Slide",  "CPU",    "GPU",   "Cache",  "Disk",
    "Layer",  "Node",   "Client", "Server", "Memory", "Queue",  "Stack",
    "Input",  "Output", "Step",   "Phase",  "Level",  "Block",  "Page",
    "Bus",    "Port",   "Link",   "Core",   "Bucket", "Buffer", "Slot"};

const std::vector<std::string> kArrows = {"→", "⇒", "•", "|", "::", "--"};

// six built-in topic vocabularies for the clustered generator
struct TopicPool {
  std::string keywords;
  std::vector<std::string> words;
};

const std::vector<TopicPool>& topic_pools() {
  static const std::vector<TopicPool> kPools = {
      {"sorting quicksort",
       {"sorting", "quicksort", "mergesort", "heapsort", "pivot", "partition",
        "comparison", "inversion", "stable", "subarray", "recursion", "median"}},
      {"memory cache",
       {"memory", "cache", "paging", "virtual", "tlb", "dram", "locality",
        "prefetch", "eviction", "mapping", "frame", "segment"}},
      {"graph shortest",
       {"graph", "vertex", "edge", "shortest", "dijkstra", "traversal",
        "adjacency", "cycle", "component", "spanning", "bfs", "dfs"}},
      {"network packet",
       {"network", "packet", "router", "congestion", "tcp", "latency",
        "bandwidth", "protocol", "socket", "checksum", "routing", "throughput"}},
      {"filesystem inode",
       {"filesystem", "inode", "journal", "directory", "metadata", "superblock",
        "mount", "durability", "fsync", "allocation", "extent", "bitmap"}},
      {"thread lock",
       {"thread", "lock", "mutex", "deadlock", "scheduler", "atomic", "barrier",
        "race", "semaphore", "preemption", "interleaving", "starvation"}},
  };
  return kPools;
}

std::string capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z')
    s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ' ';
    out += parts[i];
  }
  return out;
}

std::string small_decimal(Rng& rng) {
  std::ostringstream s;
  s << rng.range(0, 99) << '.' << rng.range(0, 9) << rng.range(0, 9);
  return s.str();
}

std::string numeral_cell(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return small_decimal(rng);
    case 1: return std::to_string(rng.range(0, 9999));
    case 2: return std::to_string(rng.range(1, 99)) + "," +
                   std::to_string(rng.range(100, 999));
    default: return std::to_string(rng.range(0, 100)) + "%";
  }
}

std::string prose_line(Rng& rng, const std::vector<std::string>* topic_words,
                       double topic_word_fraction) {
  const int len = static_cast<int>(rng.range(6, 13));
  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(len) + 1);
  for (int i = 0; i < len; ++i) {
    const double u = rng.real();
    if (u < 0.45) {
      words.push_back(rng.pick(kGlue));
    } else if (u < 0.60) {
      words.push_back(rng.pick(kVerbs));
    } else if (topic_words && rng.chance(topic_word_fraction)) {
      words.push_back(rng.pick(*topic_words));
    } else if (rng.chance(0.06)) {
      words.push_back(numeral_cell(rng));
    } else {
      words.push_back(rng.pick(kNouns));
    }
  }
  words[0] = capitalize(words[0]);
  std::string line = join(words);
  line += rng.chance(0.85) ? "." : ",";
  return line;
}

// imperative pseudo-code step, prose-shaped on purpose: only sequence
// context separates it from TEXT
std::string code_step_line(Rng& rng) {
  std::vector<std::string> words;
  words.push_back(rng.pick(kVerbs));
  const int len = static_cast<int>(rng.range(2, 5));
  for (int i = 0; i < len; ++i)
    words.push_back(rng.chance(0.5) ? rng.pick(kGlue) : rng.pick(kNouns));
  return join(words);
}

std::string code_statement_line(Rng& rng) {
  const auto& id = [&]() -> const std::string& { return rng.pick(kIdentifiers); };
  const auto& fn = [&]() -> const std::string& { return rng.pick(kFuncNames); };
  switch (rng.below(10)) {
    case 0: return "for ( " + id() + " = 0 ; " + id() + " < " + id() + " ; " + id() + " ++ ) {";
    case 1: return "while ( " + id() + " < " + std::to_string(rng.range(2, 512)) + " ) {";
    case 2: return "if ( " + id() + " == " + id() + " ) {";
    case 3: return "} else {";
    case 4: return "}";
    case 5: return "return " + id() + " ;";
    case 6: return "int " + id() + " = " + std::to_string(rng.range(0, 64)) + " ;";
    case 7: return id() + " = " + fn() + " ( " + id() + " , " + id() + " ) ;";
    case 8: return id() + " = " + id() + " + " + id() + " [ " + id() + " ] ;";
    default: return fn() + " ( " + id() + " ) ;";
  }
}

std::string formula_line(Rng& rng) {
  const auto& sym = [&]() -> const std::string& { return rng.pick(kMathSymbols); };
  std::vector<std::string> parts;
  parts.push_back(rng.chance(0.5) ? sym() : rng.pick(kIdentifiers));
  if (rng.chance(0.4)) {
    parts.push_back("(");
    parts.push_back(rng.pick(kIdentifiers));
    parts.push_back(")");
  }
  parts.push_back("=");
  const int len = static_cast<int>(rng.range(4, 9));
  for (int i = 0; i < len; ++i) {
    switch (rng.below(4)) {
      case 0: parts.push_back(sym()); break;
      case 1: parts.push_back(rng.pick(kIdentifiers)); break;
      case 2: parts.push_back(std::to_string(rng.range(0, 9))); break;
      default: parts.push_back(sym()); break;
    }
  }
  return join(parts);
}

std::string misc_line(Rng& rng) {
  switch (rng.below(5)) {
    case 0: return rng.pick(kMiscFragments) + " " + std::to_string(rng.range(1, 12)) + " :";
    case 1: return rng.pick(kMiscFragments) + " " + rng.pick(kArrows) + " " +
                   rng.pick(kMiscFragments);
    case 2: return "• " + rng.pick(kMiscFragments);
    case 3: return rng.pick(kMiscFragments);
    default: return rng.pick(kMiscFragments) + " " + rng.pick(kMiscFragments);
  }
}

struct Block {
  Label label;
  std::vector<std::string> lines;
};

// one table block with a stable column pattern shared by its rows
Block table_block(Rng& rng, int rows) {
  Block block{Label::Table, {}};
  const int cols = static_cast<int>(rng.range(3, 6));
  const bool header = rng.chance(0.7);
  int emitted = 0;
  if (header && rows > 1) {
    std::vector<std::string> cells;
    for (int c = 0; c < cols; ++c) cells.push_back(capitalize(rng.pick(kNouns)));
    block.lines.push_back(join(cells));
    ++emitted;
  }
  for (; emitted < rows; ++emitted) {
    std::vector<std::string> cells;
    cells.push_back(rng.pick(kNouns));
    for (int c = 1; c < cols; ++c) cells.push_back(numeral_cell(rng));
    block.lines.push_back(join(cells));
  }
  return block;
}

Block code_block(Rng& rng, int rows, double step_fraction) {
  Block block{Label::Code, {}};
  for (int i = 0; i < rows; ++i)
    block.lines.push_back(rng.chance(step_fraction) ? code_step_line(rng)
                                                    : code_statement_line(rng));
  return block;
}

Block formula_block(Rng& rng, int rows) {
  Block block{Label::Formula, {}};
  for (int i = 0; i < rows; ++i) block.lines.push_back(formula_line(rng));
  return block;
}

Block misc_block(Rng& rng, int rows) {
  Block block{Label::Misc, {}};
  for (int i = 0; i < rows; ++i) block.lines.push_back(misc_line(rng));
  return block;
}

Block prose_block(Rng& rng, int rows, double blank_chance,
                  const std::vector<std::string>* topic_words, double topic_word_fraction) {
  Block block{Label::Text, {}};
  for (int i = 0; i < rows; ++i)
    block.lines.push_back(rng.chance(blank_chance)
                              ? std::string()
                              : prose_line(rng, topic_words, topic_word_fraction));
  return block;
}

Block make_block(Label label, Rng& rng, int rows, const SynthOptions& opt,
                 const std::vector<std::string>* topic_words, double topic_word_fraction) {
  switch (label) {
    case Label::Table: return table_block(rng, rows);
    case Label::Code: return code_block(rng, rows, opt.code_step_fraction);
    case Label::Formula: return formula_block(rng, rows);
    case Label::Misc: return misc_block(rng, rows);
    case Label::Text:
      return prose_block(rng, rows, opt.blank_line_chance, topic_words, topic_word_fraction);
  }
  return prose_block(rng, rows, opt.blank_line_chance, topic_words, topic_word_fraction);
}

void validate_ratios(const std::map<Label, double>& ratios) {
  double sum = 0.0;
  for (const auto& [label, r] : ratios) {
    if (label == Label::Text) throw InvalidRatios("TEXT is the implicit remainder");
    if (r < 0.0 || r > 1.0) throw InvalidRatios("ratio out of [0, 1]");
    sum += r;
  }
  if (sum > 1.0 + 1e-9) throw InvalidRatios("unnatural ratios exceed 1");
}

AnnotatedDocument generate_document(Rng& rng, const std::string& id, int n_lines,
                                    const std::map<Label, double>& ratios,
                                    std::array<double, kNumLabels>& credit,
                                    const SynthOptions& opt,
                                    const std::vector<std::string>* topic_words,
                                    double topic_word_fraction) {
  // running quotas so realized label fractions track the requested ratios
  std::array<int, kNumLabels> quota{};
  int unnatural = 0;
  for (const auto& [label, r] : ratios) {
    const std::size_t c = label_index(label);
    credit[c] += r * n_lines;
    quota[c] = static_cast<int>(std::floor(credit[c]));
    credit[c] -= quota[c];
    unnatural += quota[c];
  }
  while (unnatural > n_lines) {
    auto& q = *std::max_element(quota.begin(), quota.end());
    --q;
    --unnatural;
  }
  quota[label_index(Label::Text)] = n_lines - unnatural;

  std::vector<Block> blocks;
  for (Label label : kAllLabels) {
    int remaining = quota[label_index(label)];
    const int lo = label == Label::Text ? 2 : opt.min_block;
    const int hi = label == Label::Text ? 9 : opt.max_block;
    while (remaining > 0) {
      const int rows = std::min<int>(remaining, static_cast<int>(rng.range(lo, hi)));
      blocks.push_back(make_block(label, rng, rows, opt, topic_words, topic_word_fraction));
      remaining -= rows;
    }
  }
  rng.shuffle(blocks);

  AnnotatedDocument doc;
  doc.id = id;
  for (const auto& block : blocks)
    for (const auto& text : block.lines) doc.lines.push_back({text, block.label});
  return doc;
}

}  // namespace

Corpus generate_synthetic_corpus(int n_docs, const std::map<Label, double>& ratios,
                                 std::uint64_t seed, const SynthOptions& opt) {
  if (n_docs < 1) throw ConfigViolation("n_docs must be positive");
  validate_ratios(ratios);

  Rng rng = Rng::stream(seed, "synth");
  std::array<double, kNumLabels> credit{};

  Corpus corpus;
  corpus.documents.reserve(static_cast<std::size_t>(n_docs));
  for (int d = 0; d < n_docs; ++d) {
    std::ostringstream id;
    id << 'd';
    id.width(5);
    id.fill('0');
    id << d;
    const int n_lines = static_cast<int>(rng.range(opt.min_doc_lines, opt.max_doc_lines));
    corpus.documents.push_back(
        generate_document(rng, id.str(), n_lines, ratios, credit, opt, nullptr, 0.0));
  }
  corpus.recompute_fully_labeled();
  return corpus;
}

ClusteredCorpus generate_clustered_corpus(const ClusteredSynthOptions& opt,
                                          std::uint64_t seed) {
  if (opt.n_topics < 1 || static_cast<std::size_t>(opt.n_topics) > topic_pools().size())
    throw ConfigViolation("n_topics must be between 1 and " +
                          std::to_string(topic_pools().size()));
  if (opt.docs_per_topic < 1) throw ConfigViolation("docs_per_topic must be positive");
  if (opt.injected_code_fraction < 0.0 || opt.injected_code_fraction > 0.8 ||
      opt.misc_fraction < 0.0 || opt.misc_fraction > 0.5)
    throw ConfigViolation("injection fractions out of range");

  Rng rng = Rng::stream(seed, "synth-clustered");

  // one shared pool of code blocks, reused verbatim across topics
  std::vector<Block> code_pool;
  for (int b = 0; b < opt.code_pool_blocks; ++b)
    code_pool.push_back(code_block(rng, static_cast<int>(rng.range(4, 7)),
                                   opt.base.code_step_fraction));

  ClusteredCorpus out;
  for (int t = 0; t < opt.n_topics; ++t) {
    const TopicPool& pool = topic_pools()[static_cast<std::size_t>(t)];
    const std::string tid = "t" + std::to_string(t);
    out.gold.topics[tid] = pool.keywords;

    for (int d = 0; d < opt.docs_per_topic; ++d) {
      std::ostringstream id;
      id << tid << "_d";
      id.width(2);
      id.fill('0');
      id << d;

      const int n_lines =
          static_cast<int>(rng.range(opt.base.min_doc_lines, opt.base.max_doc_lines));
      const int code_target =
          static_cast<int>(std::lround(opt.injected_code_fraction * n_lines));
      const int misc_target = static_cast<int>(std::lround(opt.misc_fraction * n_lines));

      std::vector<Block> blocks;
      int code_lines = 0;
      while (code_lines < code_target && !code_pool.empty()) {
        blocks.push_back(code_pool[rng.below(code_pool.size())]);
        code_lines += static_cast<int>(blocks.back().lines.size());
      }
      int misc_lines = 0;
      while (misc_lines < misc_target) {
        const int rows = std::min<int>(misc_target - misc_lines,
                                       static_cast<int>(rng.range(2, 4)));
        blocks.push_back(misc_block(rng, rows));
        misc_lines += rows;
      }
      int prose_remaining = std::max(0, n_lines - code_lines - misc_lines);
      while (prose_remaining > 0) {
        const int rows = std::min<int>(prose_remaining, static_cast<int>(rng.range(3, 8)));
        blocks.push_back(prose_block(rng, rows, opt.base.blank_line_chance, &pool.words,
                                     opt.topic_word_fraction));
        prose_remaining -= rows;
      }
      rng.shuffle(blocks);

      AnnotatedDocument doc;
      doc.id = id.str();
      for (const auto& block : blocks)
        for (const auto& text : block.lines) doc.lines.push_back({text, block.label});
      out.corpus.documents.push_back(std::move(doc));
      out.gold.clusters[tid].insert(id.str());
    }
  }
  out.corpus.recompute_fully_labeled();
  return out;
}

}  // namespace linesift
