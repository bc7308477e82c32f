// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

#include <segrange/algorithms/detail.hpp>

namespace segrange {

namespace detail {

template <typename A, typename B>
constexpr bool bulk_pair = [] {
  if constexpr (bulk_segment<A> && bulk_segment<B>) {
    using sa = decltype(endpoint_span(std::declval<const A &>()));
    using sb = decltype(endpoint_span(std::declval<const B &>()));
    return std::is_same_v<std::remove_cv_t<typename sa::element_type>,
                          typename sb::element_type>;
  } else {
    return false;
  }
}();

/// Copies one segment list into another of the same total length. Aligned
/// lists copy segment by segment; otherwise both are cut at the union of
/// their boundaries. Contiguous pieces of the same element type go through
/// the copy engines; anything else is copied elementwise by a task.
template <typename A, typename B>
void copy_segment_lists(runtime &rt, const std::vector<A> &src,
                        const std::vector<B> &dst) {
  const auto ns = total_size(src);
  const auto nd = total_size(dst);
  if (ns != nd) {
    throw length_mismatch(nd, ns);
  }
  if (ns == 0) {
    return;
  }
  std::vector<ticket<void>> tickets;
  for (const auto &z : realign_segments(src, dst)) {
    if (z.size() == 0) {
      continue;
    }
    const auto &[a, b] = z.parts();
    if constexpr (bulk_pair<A, B>) {
      tickets.push_back(rt.copy_async(a, b));
    } else {
      const auto where = ranked<B> ? task_locale(b) : task_locale(a);
      tickets.push_back(rt.submit(where, [a, b] {
        const auto n = seg_size(a);
        for (std::size_t i = 0; i < n; ++i) {
          b[i] = read_value(a[i]);
        }
      }));
    }
  }
  wait_all(tickets);
}

} // namespace detail

/// Copies src into dst. Either side may be a segmented range or a plain
/// local contiguous range; lengths must match.
template <typename Src, typename Dst>
void copy(runtime &rt, Src &&src, Dst &&dst) {
  detail::copy_segment_lists(rt, detail::segment_list(src),
                             detail::segment_list(dst));
}

} // namespace segrange
