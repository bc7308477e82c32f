// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ranges>
#include <type_traits>
#include <vector>

#include <segrange/algorithms/copy.hpp>
#include <segrange/algorithms/detail.hpp>
#include <segrange/containers/remote_span.hpp>

namespace segrange {

namespace detail {

/// n-1 evenly spaced picks from a sorted sequence; everything if it is
/// shorter than that.
template <typename V>
std::vector<V> spaced_samples(std::span<const V> sorted, std::size_t n) {
  const auto len = sorted.size();
  if (len < n - 1) {
    return {sorted.begin(), sorted.end()};
  }
  std::vector<V> out;
  out.reserve(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    out.push_back(sorted[(j + 1) * len / n]);
  }
  return out;
}

} // namespace detail

/// In-place sample sort over a range with contiguous segments.
template <contiguous_segmented_range R, typename Cmp = std::ranges::less>
void sort(runtime &rt, R &&r, Cmp cmp = {}) {
  const auto segs = detail::segment_list(r);
  using V = std::remove_cv_t<
      std::ranges::range_value_t<decltype(segrange::local(segs[0]))>>;
  const auto n = segs.size();

  // Local sort of every segment.
  std::vector<ticket<void>> sorts;
  for (const auto &s : segs) {
    if (s.size() > 1) {
      sorts.push_back(rt.submit(segrange::rank(s), [s, cmp] {
        auto l = segrange::local(s);
        std::sort(l.begin(), l.end(), cmp);
      }));
    }
  }
  wait_all(sorts);
  if (n <= 1 || detail::total_size(segs) <= 1) {
    return;
  }

  // Samples, gathered and sorted on the driver, give n-1 splitters.
  std::vector<ticket<std::vector<V>>> sampling;
  for (const auto &s : segs) {
    sampling.push_back(rt.submit(segrange::rank(s), [s, n] {
      const auto l = segrange::local(s);
      return detail::spaced_samples(std::span<const V>(l.data(), l.size()), n);
    }));
  }
  std::vector<V> samples;
  for (const auto &part : wait_all(sampling)) {
    samples.insert(samples.end(), part.begin(), part.end());
  }
  std::sort(samples.begin(), samples.end(), cmp);
  const auto splitters = std::make_shared<const std::vector<V>>(
      detail::spaced_samples(std::span<const V>(samples), n));

  // Element e goes to chunk #{splitters s : s < e}; in a sorted segment
  // chunk c ends at the first element greater than splitter c.
  std::vector<ticket<std::vector<std::size_t>>> counting;
  for (const auto &s : segs) {
    counting.push_back(rt.submit(segrange::rank(s), [s, n, splitters, cmp] {
      const auto l = segrange::local(s);
      // Few samples can mean fewer than n-1 splitters; the tail chunks
      // then stay empty.
      std::vector<std::size_t> bounds(n + 1, l.size());
      bounds[0] = 0;
      for (std::size_t c = 0; c < splitters->size(); ++c) {
        bounds[c + 1] = static_cast<std::size_t>(
            std::upper_bound(l.begin(), l.end(), (*splitters)[c], cmp) -
            l.begin());
      }
      return bounds;
    }));
  }
  const auto bounds = wait_all(counting);

  std::vector<std::size_t> chunk_size(n, 0);
  for (const auto &b : bounds) {
    for (std::size_t c = 0; c < n; ++c) {
      chunk_size[c] += b[c + 1] - b[c];
    }
  }

  std::vector<owned_storage<V>> chunks;
  chunks.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    chunks.emplace_back(rt.allocate<V>(segrange::rank(segs[c]), chunk_size[c]));
  }

  // Redistribute, segment order preserved within each chunk.
  std::vector<std::size_t> fill(n, 0);
  std::vector<ticket<void>> moves;
  for (std::size_t k = 0; k < n; ++k) {
    const auto src = remote_span<V>(segrange::local(segs[k]).data(),
                                    segs[k].size(), segrange::rank(segs[k]));
    for (std::size_t c = 0; c < n; ++c) {
      const auto len = bounds[k][c + 1] - bounds[k][c];
      if (len == 0) {
        continue;
      }
      moves.push_back(rt.copy_async(src.slice(bounds[k][c], len),
                                    chunks[c].handle().slice(fill[c], len)));
      fill[c] += len;
    }
  }
  wait_all(moves);

  std::vector<ticket<void>> chunk_sorts;
  std::vector<remote_span<V>> chunk_segs;
  for (auto &ch : chunks) {
    remote_span<V> cs(ch->data(), ch->size(), ch->locale());
    chunk_segs.push_back(cs);
    if (cs.size() > 1) {
      chunk_sorts.push_back(rt.submit(cs.rank(), [cs, cmp] {
        std::sort(cs.begin(), cs.end(), cmp);
      }));
    }
  }
  wait_all(chunk_sorts);

  detail::copy_segment_lists(rt, chunk_segs, segs);
}

} // namespace segrange
