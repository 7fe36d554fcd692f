// SPDX-License-Identifier: Apache-2.0
#include "linesift/label.hpp"

#include <cctype>

#include "linesift/errors.hpp"

namespace linesift {

std::string_view to_string(Label l) {
  switch (l) {
    case Label::Text: return "TEXT";
    case Label::Table: return "TABLE";
    case Label::Code: return "CODE";
    case Label::Formula: return "FORMULA";
    case Label::Misc: return "MISC";
  }
  return "TEXT";
}

Label parse_label(std::string_view s) {
  std::string up;
  up.reserve(s.size());
  for (char c : s) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (up == "TEXT") return Label::Text;
  if (up == "TABLE") return Label::Table;
  if (up == "CODE") return Label::Code;
  if (up == "FORMULA") return Label::Formula;
  if (up == "MISC") return Label::Misc;
  throw UnknownLabel(std::string(s));
}

}  // namespace linesift
