// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <cstddef>
#include <ranges>
#include <type_traits>
#include <utility>

#include <segrange/core/cpo.hpp>
#include <segrange/core/errors.hpp>

namespace segrange {

/// A sized, index-addressable sequence living in one locale.
template <typename S>
concept remote_range = requires(const S &s, std::size_t i) {
  segrange::rank(s);
  { s.size() } -> std::convertible_to<std::size_t>;
  s[i];
};

/// A remote range whose local view is a contiguous block of memory.
template <typename S>
concept contiguous_remote_range =
    remote_range<S> && requires(const S &s) {
      { segrange::local(s) } -> std::ranges::contiguous_range;
    };

template <typename R>
using segments_t = decltype(segrange::segments(std::declval<R &>()));

template <typename R>
using segment_t = std::ranges::range_value_t<segments_t<R>>;

/// A range split into an ordered sequence of remote segments.
template <typename R>
concept segmented_range = requires(R &r) {
  segrange::segments(r);
} && std::ranges::random_access_range<segments_t<R>> &&
                          remote_range<segment_t<R>>;

/// A segmented range whose segments are all contiguous remote ranges.
template <typename R>
concept contiguous_segmented_range =
    segmented_range<R> && contiguous_remote_range<segment_t<R>>;

/// Something that can be addressed by a global index: containers and views.
template <typename R>
concept indexable_range = requires(const R &r, std::size_t i) {
  { r.size() } -> std::convertible_to<std::size_t>;
  r[i];
};

/// Element type produced when reading one element of a segment.
template <typename S>
using segment_value_t = std::remove_cvref_t<decltype(read_value(
    std::declval<const S &>()[std::size_t{}]))>;

template <segmented_range R>
using range_value_t = segment_value_t<segment_t<R>>;

/// Local view of a segment, checked against the caller's locale.
template <remote_range S>
  requires requires(const S &s) { segrange::local(s); }
auto local_view(const S &s, locale_id current) {
  if (segrange::rank(s) != current) {
    throw off_locale_access(segrange::rank(s), current);
  }
  return segrange::local(s);
}

} // namespace segrange
