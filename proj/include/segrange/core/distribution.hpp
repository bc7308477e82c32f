// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <segrange/core/concepts.hpp>
#include <segrange/core/locale.hpp>

namespace segrange {

struct segment_descriptor {
  locale_id rank;
  std::size_t global_offset = 0;
  std::size_t length = 0;

  friend bool operator==(const segment_descriptor &,
                         const segment_descriptor &) = default;
};

/// Ordered segment descriptors tiling [0, total_length) without gaps.
class distribution {
public:
  distribution() = default;

  /// Builds from (rank, length) pairs; offsets are the running sum.
  distribution(std::span<const locale_id> ranks,
               std::span<const std::size_t> lengths);

  /// Block rule: p segments of ceil(n/p) elements, tail truncated, segment i
  /// on locale i mod locale_count. n == 0 yields no segments.
  static distribution block(std::size_t n, std::size_t p,
                            std::size_t locale_count);

  std::size_t total_length() const noexcept { return total_length_; }
  std::size_t segment_count() const noexcept { return descriptors_.size(); }
  const std::vector<segment_descriptor> &descriptors() const noexcept {
    return descriptors_;
  }
  const segment_descriptor &operator[](std::size_t i) const {
    return descriptors_[i];
  }

  std::vector<std::size_t> lengths() const;
  std::vector<locale_id> ranks() const;

  /// Internal boundaries (exclusive of 0 and total_length), sorted, unique.
  std::vector<std::size_t> boundaries() const;

  /// Segment index and in-segment offset of global index i (i < total).
  std::pair<std::size_t, std::size_t> locate(std::size_t i) const;

  friend bool operator==(const distribution &, const distribution &) = default;

private:
  std::size_t total_length_ = 0;
  std::vector<segment_descriptor> descriptors_;
};

/// Distribution derived from any segmented range's segments.
template <segmented_range R> distribution distribution_of(R &&r) {
  auto segs = segrange::segments(r);
  std::vector<locale_id> ranks;
  std::vector<std::size_t> lengths;
  ranks.reserve(std::ranges::size(segs));
  lengths.reserve(std::ranges::size(segs));
  for (const auto &s : segs) {
    ranks.push_back(segrange::rank(s));
    lengths.push_back(static_cast<std::size_t>(s.size()));
  }
  return distribution(ranks, lengths);
}

namespace detail {

template <segmented_range A, segmented_range B>
bool aligned_pair(A &a, B &b) {
  auto sa = segrange::segments(a);
  auto sb = segrange::segments(b);
  if (std::ranges::size(sa) != std::ranges::size(sb)) {
    return false;
  }
  auto ib = std::ranges::begin(sb);
  for (const auto &s : sa) {
    if (static_cast<std::size_t>(s.size()) !=
            static_cast<std::size_t>(ib->size()) ||
        segrange::rank(s) != segrange::rank(*ib)) {
      return false;
    }
    ++ib;
  }
  return true;
}

} // namespace detail

/// True iff all ranges have the same segment count and, segment by segment,
/// equal lengths and equal ranks.
template <segmented_range First, segmented_range... Rest>
  requires(sizeof...(Rest) >= 1)
bool is_aligned(First &&first, Rest &&...rest) {
  return (detail::aligned_pair(first, rest) && ...);
}

} // namespace segrange
