// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <ranges>
#include <string>
#include <utility>
#include <vector>

#include <segrange/core/concepts.hpp>
#include <segrange/core/errors.hpp>
#include <segrange/core/iterators.hpp>
#include <segrange/views/view_base.hpp>

namespace segrange {

/// Restricts a segment list to global elements [f, l). Segments wholly inside
/// the interval are passed through unchanged, boundary segments are sliced,
/// and segments outside it (or empty after trimming) are dropped. The full
/// interval returns the list as is, zero-length segments included.
template <std::ranges::random_access_range Segs>
auto trim_segments(const Segs &segs, std::size_t f, std::size_t l) {
  using seg_t = std::ranges::range_value_t<Segs>;
  std::vector<seg_t> out;

  std::size_t total = 0;
  for (const auto &s : segs) {
    total += static_cast<std::size_t>(s.size());
  }
  if (f > l || l > total) {
    throw index_out_of_bounds("trim [" + std::to_string(f) + ", " +
                              std::to_string(l) + ") outside [0, " +
                              std::to_string(total) + ")");
  }
  if (f == l) {
    return out;
  }
  if (f == 0 && l == total) {
    out.assign(std::ranges::begin(segs), std::ranges::end(segs));
    return out;
  }

  std::size_t start = 0;
  for (const auto &s : segs) {
    const auto len = static_cast<std::size_t>(s.size());
    const auto end = start + len;
    const auto lo = std::max(start, f);
    const auto hi = std::min(end, l);
    if (lo < hi) {
      if (lo == start && hi == end) {
        out.push_back(s);
      } else {
        out.push_back(segrange::slice(s, lo - start, hi - lo));
      }
    }
    start = end;
    if (start >= l) {
      break;
    }
  }
  return out;
}

/// Contiguous sub-range [first, last) of a base range; take and drop.
template <typename H> class trim_view : public view_tag {
  using base_t = detail::held_t<H>;

public:
  trim_view(H base, std::size_t first, std::size_t last)
      : base_(std::move(base)), first_(first), last_(last) {}

  std::size_t size() const noexcept { return last_ - first_; }
  bool empty() const noexcept { return size() == 0; }
  std::size_t first() const noexcept { return first_; }

  decltype(auto) operator[](std::size_t i) const {
    return base_.get()[first_ + i];
  }

  auto segments() const
    requires segmented_range<base_t>
  {
    return trim_segments(segrange::segments(base_.get()), first_, last_);
  }

  locale_id rank() const
    requires(!segmented_range<base_t>) &&
            requires(const base_t &b) { segrange::rank(b); }
  {
    return segrange::rank(base_.get());
  }

  index_iterator<trim_view> begin() const { return {this, 0}; }
  index_iterator<trim_view> end() const {
    return {this, static_cast<std::ptrdiff_t>(size())};
  }

private:
  H base_;
  std::size_t first_;
  std::size_t last_;
};

namespace views {

/// At most the first l elements.
template <typename R> auto take(R &&r, std::size_t l) {
  auto h = detail::hold(std::forward<R>(r));
  const auto n = static_cast<std::size_t>(h.get().size());
  return trim_view<decltype(h)>(std::move(h), 0, std::min(l, n));
}

/// Everything after the first f elements.
template <typename R> auto drop(R &&r, std::size_t f) {
  auto h = detail::hold(std::forward<R>(r));
  const auto n = static_cast<std::size_t>(h.get().size());
  return trim_view<decltype(h)>(std::move(h), std::min(f, n), n);
}

struct take_closure {
  std::size_t n;
  template <typename R> friend auto operator|(R &&r, take_closure c) {
    return views::take(std::forward<R>(r), c.n);
  }
};

struct drop_closure {
  std::size_t n;
  template <typename R> friend auto operator|(R &&r, drop_closure c) {
    return views::drop(std::forward<R>(r), c.n);
  }
};

inline take_closure take(std::size_t n) { return {n}; }
inline drop_closure drop(std::size_t n) { return {n}; }

} // namespace views

} // namespace segrange
