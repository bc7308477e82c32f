// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <segrange/algorithms/detail.hpp>

namespace segrange {

/// Folds r with op starting from init. Each segment is folded on its own
/// locale; the driver then folds the partials in segment order. op is
/// assumed associative and commutative.
template <segmented_range R, typename T, typename Op = std::plus<>>
T reduce(runtime &rt, R &&r, T init, Op op = {}) {
  const auto segs = detail::segment_list(r);
  std::vector<ticket<std::optional<T>>> tickets;
  for (const auto &s : segs) {
    if (s.size() == 0) {
      continue;
    }
    tickets.push_back(rt.submit(detail::task_locale(s), [s, op] {
      const auto n = static_cast<std::size_t>(s.size());
      std::optional<T> acc(static_cast<T>(read_value(s[0])));
      for (std::size_t i = 1; i < n; ++i) {
        acc = static_cast<T>(op(*acc, read_value(s[i])));
      }
      return acc;
    }));
  }
  T result = std::move(init);
  for (const auto &p : wait_all(tickets)) {
    if (p) {
      result = static_cast<T>(op(result, *p));
    }
  }
  return result;
}

template <segmented_range R> auto reduce(runtime &rt, R &&r) {
  return reduce(rt, r, range_value_t<std::remove_reference_t<R>>{});
}

} // namespace segrange
