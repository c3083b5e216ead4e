#ifndef OFFEVAL_LABEL_HPP
#define OFFEVAL_LABEL_HPP

#include <string>
#include <string_view>

#include "offeval/errors.hpp"

namespace offeval {

/// Task label: OFF (offensive) or NOT.
enum class Label { NOT, OFF };

inline constexpr std::string_view to_string(Label l) noexcept {
  return l == Label::OFF ? "OFF" : "NOT";
}

/// Case-sensitive; anything other than "OFF" / "NOT" throws DataError.
inline Label parse_label(std::string_view s) {
  if (s == "OFF") return Label::OFF;
  if (s == "NOT") return Label::NOT;
  throw DataError("invalid label '" + std::string(s) + "' (expected OFF or NOT)");
}

/// +1 for OFF, -1 for NOT.
inline constexpr double signed_target(Label l) noexcept {
  return l == Label::OFF ? 1.0 : -1.0;
}

inline constexpr Label flip(Label l) noexcept {
  return l == Label::OFF ? Label::NOT : Label::OFF;
}

} // namespace offeval

#endif
