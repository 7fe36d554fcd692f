// SPDX-License-Identifier: Apache-2.0
#include "linesift/corpus.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "linesift/errors.hpp"
#include "linesift/rng.hpp"

namespace linesift {

using nlohmann::json;

std::size_t Corpus::total_lines() const {
  std::size_t n = 0;
  for (const auto& d : documents) n += d.lines.size();
  return n;
}

void Corpus::recompute_fully_labeled() {
  for (const auto& d : documents)
    for (const auto& l : d.lines)
      if (!l.gold) {
        fully_labeled = false;
        return;
      }
  fully_labeled = true;
}

namespace {

AnnotatedDocument parse_document_record(const std::string& record, std::size_t line_no) {
  json j = json::parse(record, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON", line_no);
  if (!j.is_object() || !j.contains("id") || !j.contains("lines"))
    throw ParseError("document record needs \"id\" and \"lines\"", line_no);
  if (!j["id"].is_string() || j["id"].get<std::string>().empty())
    throw ParseError("\"id\" must be a nonempty string", line_no);
  if (!j["lines"].is_array()) throw ParseError("\"lines\" must be an array", line_no);

  AnnotatedDocument doc;
  doc.id = j["id"].get<std::string>();
  for (const auto& item : j["lines"]) {
    if (!item.is_object() || !item.contains("t") || !item["t"].is_string())
      throw ParseError("line record needs string field \"t\"", line_no);
    LineRecord rec;
    rec.text = item["t"].get<std::string>();
    if (rec.text.find('\n') != std::string::npos || rec.text.find('\r') != std::string::npos)
      throw ParseError("line text contains a line break", line_no);
    if (item.contains("y")) {
      if (!item["y"].is_string()) throw ParseError("\"y\" must be a string", line_no);
      try {
        rec.gold = parse_label(item["y"].get<std::string>());
      } catch (const UnknownLabel& e) {
        throw ParseError(e.what(), line_no);
      }
    }
    doc.lines.push_back(std::move(rec));
  }
  return doc;
}

}  // namespace

Corpus corpus_from_jsonl(const std::string& text) {
  Corpus corpus;
  std::unordered_set<std::string> seen;
  std::istringstream in(text);
  std::string record;
  std::size_t line_no = 0;
  while (std::getline(in, record)) {
    ++line_no;
    if (!record.empty() && record.back() == '\r') record.pop_back();
    AnnotatedDocument doc = parse_document_record(record, line_no);
    if (!seen.insert(doc.id).second) throw DuplicateDocId(doc.id);
    corpus.documents.push_back(std::move(doc));
  }
  corpus.recompute_fully_labeled();
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return corpus_from_jsonl(buf.str());
}

std::string corpus_to_jsonl(const Corpus& corpus) {
  std::string out;
  for (const auto& doc : corpus.documents) {
    json j;
    j["id"] = doc.id;
    j["lines"] = json::array();
    for (const auto& rec : doc.lines) {
      json l;
      l["t"] = rec.text;
      if (rec.gold) l["y"] = std::string(to_string(*rec.gold));
      j["lines"].push_back(std::move(l));
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write corpus file: " + path.string());
  out << corpus_to_jsonl(corpus);
}

FoldSplit split_folds(const Corpus& corpus, int k, std::uint64_t seed) {
  if (k < 1) throw ConfigViolation("fold count must be positive");
  if (static_cast<std::size_t>(k) > corpus.documents.size())
    throw TooFewDocuments("need at least " + std::to_string(k) + " documents for " +
                          std::to_string(k) + " folds, have " +
                          std::to_string(corpus.documents.size()));

  std::vector<std::string> ids;
  ids.reserve(corpus.documents.size());
  for (const auto& d : corpus.documents) ids.push_back(d.id);

  Rng rng = Rng::stream(seed, "split");
  rng.shuffle(ids);

  FoldSplit split;
  split.folds.resize(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < ids.size(); ++i)
    split.folds[i % static_cast<std::size_t>(k)].push_back(ids[i]);
  return split;
}

Corpus subset_by_ids(const Corpus& corpus, const std::set<std::string>& ids) {
  Corpus out;
  for (const auto& d : corpus.documents)
    if (ids.count(d.id)) out.documents.push_back(d);
  out.recompute_fully_labeled();
  return out;
}

std::vector<Label> gold_labels(const AnnotatedDocument& doc) {
  std::vector<Label> out;
  out.reserve(doc.lines.size());
  for (const auto& l : doc.lines) {
    if (!l.gold) throw UnlabeledCorpus("document '" + doc.id + "' has unlabeled lines");
    out.push_back(*l.gold);
  }
  return out;
}

}  // namespace linesift
