// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>

namespace segrange {

/// Index of a memory locale. Every segment lives in exactly one locale.
struct locale_id {
  std::size_t value = 0;

  constexpr locale_id() noexcept = default;
  constexpr explicit locale_id(std::size_t v) noexcept : value(v) {}

  friend constexpr bool operator==(locale_id, locale_id) noexcept = default;
  friend constexpr auto operator<=>(locale_id, locale_id) noexcept = default;

  friend std::ostream &operator<<(std::ostream &os, locale_id l) {
    return os << l.value;
  }
};

} // namespace segrange

template <> struct std::hash<segrange::locale_id> {
  std::size_t operator()(segrange::locale_id l) const noexcept {
    return std::hash<std::size_t>{}(l.value);
  }
};
