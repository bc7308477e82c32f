// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <ranges>
#include <span>
#include <type_traits>
#include <vector>

#include <segrange/core/concepts.hpp>
#include <segrange/runtime/runtime.hpp>
#include <segrange/views/view_base.hpp>
#include <segrange/views/zip.hpp>

namespace segrange::detail {

/// Segments of r as a vector; a plain local range is one segment.
template <typename R> auto segment_list(R &r) {
  if constexpr (segmented_range<R>) {
    auto segs = segrange::segments(r);
    using seg_t = std::ranges::range_value_t<decltype(segs)>;
    return std::vector<seg_t>(std::ranges::begin(segs), std::ranges::end(segs));
  } else {
    return std::vector{local_span(r)};
  }
}

template <typename S> locale_id task_locale(const S &s) {
  if constexpr (ranked<S>) {
    return segrange::rank(s);
  } else {
    return locale_id{0};
  }
}

template <typename S> std::size_t total_size(const std::vector<S> &segs) {
  std::size_t n = 0;
  for (const auto &s : segs) {
    n += static_cast<std::size_t>(s.size());
  }
  return n;
}

template <typename A, typename B>
bool same_shape(const std::vector<A> &a, const std::vector<B> &b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seg_size(a[i]) != seg_size(b[i]) ||
        task_locale(a[i]) != task_locale(b[i])) {
      return false;
    }
  }
  return true;
}

template <typename S>
concept bulk_segment =
    handle_endpoint<S> || requires(const S &s) { std::span(segrange::local(s)); };

} // namespace segrange::detail
