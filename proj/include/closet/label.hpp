#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace closet {

enum class Label { Shirt, Dress, Pants };

inline constexpr std::array<Label, 3> kAllLabels{Label::Shirt, Label::Dress, Label::Pants};

constexpr std::string_view to_string(Label label) {
  switch (label) {
    case Label::Shirt: return "shirt";
    case Label::Dress: return "dress";
    case Label::Pants: return "pants";
  }
  return "?";
}

constexpr std::optional<Label> parse_label(std::string_view text) {
  for (Label l : kAllLabels) {
    if (to_string(l) == text) return l;
  }
  return std::nullopt;
}

}  // namespace closet
