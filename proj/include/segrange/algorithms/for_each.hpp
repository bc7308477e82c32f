// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include <segrange/algorithms/detail.hpp>

namespace segrange {

/// Applies fn to every element, one task per non-empty segment on the
/// segment's locale. Zip elements are spread over fn's parameters unless fn
/// takes the tuple. fn is shared by all tasks.
template <segmented_range R, typename F>
void for_each(runtime &rt, R &&r, F fn) {
  const auto segs = detail::segment_list(r);
  std::vector<ticket<void>> tickets;
  for (const auto &s : segs) {
    if (s.size() == 0) {
      continue;
    }
    tickets.push_back(rt.submit(detail::task_locale(s), [s, &fn] {
      const auto n = static_cast<std::size_t>(s.size());
      for (std::size_t i = 0; i < n; ++i) {
        invoke_element(fn, s[i]);
      }
    }));
  }
  wait_all(tickets);
}

} // namespace segrange
