// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace linesift {

// The five line classes. Enumerator order is the fixed tie-break order used
// everywhere prediction scores tie.
enum class Label : std::uint8_t { Text = 0, Table, Code, Formula, Misc };

inline constexpr std::size_t kNumLabels = 5;

inline constexpr std::array<Label, kNumLabels> kAllLabels = {
    Label::Text, Label::Table, Label::Code, Label::Formula, Label::Misc};

// The four classes that are not running prose.
inline constexpr std::array<Label, 4> kUnnaturalLabels = {
    Label::Table, Label::Code, Label::Formula, Label::Misc};

std::string_view to_string(Label l);

// Case-insensitive parse of the canonical names; throws UnknownLabel.
Label parse_label(std::string_view s);

inline std::size_t label_index(Label l) { return static_cast<std::size_t>(l); }

}  // namespace linesift
