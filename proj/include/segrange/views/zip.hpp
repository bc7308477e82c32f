// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <ranges>
#include <span>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include <segrange/core/concepts.hpp>
#include <segrange/core/errors.hpp>
#include <segrange/core/iterators.hpp>
#include <segrange/views/trim.hpp>
#include <segrange/views/view_base.hpp>

namespace segrange {

/// One output piece of a realignment: for each base, the segment it comes
/// from and the offset into that segment.
struct realign_piece {
  std::vector<std::size_t> segment;
  std::vector<std::size_t> offset;
  std::size_t length = 0;
};

/// Common segmentation of several segment-length lists with equal totals.
/// Identical lists zip index by index (empty segments kept); otherwise the
/// lists are swept together, cutting at every input boundary and skipping
/// empty segments.
std::vector<realign_piece>
realign_plan(const std::vector<std::vector<std::size_t>> &lengths);

/// Lengths of the realign_plan pieces.
std::vector<std::size_t>
realign_lengths(const std::vector<std::vector<std::size_t>> &lengths);

namespace detail {

template <typename S>
concept ranked = requires(const S &s) { segrange::rank(s); };

template <typename... S> constexpr std::size_t first_ranked() {
  constexpr bool flags[] = {ranked<S>...};
  for (std::size_t i = 0; i < sizeof...(S); ++i) {
    if (flags[i]) {
      return i;
    }
  }
  return sizeof...(S);
}

template <typename S>
std::size_t seg_size(const S &s) {
  return static_cast<std::size_t>(s.size());
}

template <typename S> S piece_of(const S &s, std::size_t off, std::size_t len) {
  if (off == 0 && len == seg_size(s)) {
    return s;
  }
  return segrange::slice(s, off, len);
}

} // namespace detail

/// Segment of a zip: the element at i is the tuple of each part's element i.
/// Parts are equally long. Its rank is the rank of the first ranked part.
template <typename... S> class zip_segment {
  static constexpr std::size_t ranked_index = detail::first_ranked<S...>();

public:
  zip_segment() = default;
  explicit zip_segment(S... parts) : parts_(std::move(parts)...) {}

  locale_id rank() const
    requires(ranked_index < sizeof...(S))
  {
    return segrange::rank(std::get<ranked_index>(parts_));
  }

  std::size_t size() const {
    return std::apply(
        [](const auto &...p) { return std::min({detail::seg_size(p)...}); },
        parts_);
  }

  auto operator[](std::size_t i) const {
    return std::apply(
        [i](const auto &...p) {
          return std::tuple<decltype(p[i])...>(p[i]...);
        },
        parts_);
  }

  zip_segment slice(std::size_t offset, std::size_t length) const {
    return std::apply(
        [=](const auto &...p) {
          return zip_segment(segrange::slice(p, offset, length)...);
        },
        parts_);
  }

  const std::tuple<S...> &parts() const noexcept { return parts_; }

  index_iterator<zip_segment> begin() const { return {this, 0}; }
  index_iterator<zip_segment> end() const {
    return {this, static_cast<std::ptrdiff_t>(size())};
  }

private:
  std::tuple<S...> parts_;
};

/// Zips segment lists of equal total length into one aligned list.
template <typename... S>
std::vector<zip_segment<S...>>
realign_segments(const std::vector<S> &...lists) {
  std::vector<std::vector<std::size_t>> lengths;
  (
      [&](const auto &l) {
        auto &v = lengths.emplace_back();
        for (const auto &s : l) {
          v.push_back(detail::seg_size(s));
        }
      }(lists),
      ...);
  const auto plan = realign_plan(lengths);

  std::vector<zip_segment<S...>> out;
  out.reserve(plan.size());
  for (const auto &p : plan) {
    std::size_t k = 0;
    out.push_back(std::apply(
        [&](const auto &...l) {
          auto next = [&](const auto &list) {
            const auto j = k++;
            return detail::piece_of(list[p.segment[j]], p.offset[j], p.length);
          };
          // Braced init keeps evaluation order left to right.
          return zip_segment<S...>{next(l)...};
        },
        std::forward_as_tuple(lists...)));
  }
  return out;
}

namespace detail {

template <typename B> auto normalized_segments(B &b, std::size_t n) {
  if constexpr (segmented_range<B>) {
    return trim_segments(segrange::segments(b), 0, n);
  } else if constexpr (ranked<B>) {
    using seg_t = std::remove_cvref_t<B>;
    return std::vector<seg_t>{detail::piece_of(seg_t(b), 0, n)};
  } else {
    auto s = local_span(b).first(n);
    return std::vector<decltype(s)>{s};
  }
}

template <typename B>
using normalized_segment_t = typename decltype(normalized_segments(
    std::declval<B &>(), std::size_t{}))::value_type;

template <typename B> auto lengths_and_ranks(B &b) {
  std::vector<std::pair<std::size_t, locale_id>> out;
  for (const auto &s : segrange::segments(b)) {
    out.emplace_back(seg_size(s), segrange::rank(s));
  }
  return out;
}

} // namespace detail

/// Lazy zip of two or more ranges, truncated to the shortest. Elements are
/// tuples of the bases' element references (or proxies), so writes through
/// them reach the bases.
template <typename... H> class zip_view : public view_tag {
  template <typename X> using base_t = detail::held_t<X>;
  static constexpr bool any_segmented = (segmented_range<base_t<H>> || ...);
  static constexpr std::size_t ranked_index =
      detail::first_ranked<base_t<H>...>();

public:
  zip_view(zip_mode mode, H... bases)
      : bases_(std::move(bases)...), mode_(mode) {
    n_ = std::apply(
        [](const auto &...b) {
          return std::min({static_cast<std::size_t>(b.get().size())...});
        },
        bases_);
    if (mode_ == zip_mode::strict) {
      check_strict();
    }
  }

  zip_mode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  auto operator[](std::size_t i) const {
    return std::apply(
        [i](const auto &...b) {
          return std::tuple<decltype(b.get()[i])...>(b.get()[i]...);
        },
        bases_);
  }

  auto segments() const
    requires any_segmented
  {
    return std::apply(
        [this](const auto &...b) {
          return realign_segments(detail::normalized_segments(b.get(), n_)...);
        },
        bases_);
  }

  locale_id rank() const
    requires(!any_segmented && ranked_index < sizeof...(H))
  {
    return segrange::rank(std::get<ranked_index>(bases_).get());
  }

  index_iterator<zip_view> begin() const { return {this, 0}; }
  index_iterator<zip_view> end() const {
    return {this, static_cast<std::ptrdiff_t>(size())};
  }

private:
  void check_strict() const {
    std::vector<std::vector<std::pair<std::size_t, locale_id>>> shapes;
    std::apply(
        [&](const auto &...b) {
          (
              [&](const auto &h) {
                if constexpr (segmented_range<
                                  std::remove_reference_t<decltype(h.get())>>) {
                  shapes.push_back(detail::lengths_and_ranks(h.get()));
                }
              }(b),
              ...);
        },
        bases_);
    for (std::size_t k = 1; k < shapes.size(); ++k) {
      if (shapes[k] != shapes[0]) {
        throw non_aligned_zip();
      }
    }
  }

  std::tuple<H...> bases_;
  zip_mode mode_;
  std::size_t n_ = 0;
};

namespace views {

/// Zip using the process-wide default mode.
template <typename... R>
  requires(sizeof...(R) >= 2 &&
           !(std::same_as<std::remove_cvref_t<R>, zip_mode> || ...))
auto zip(R &&...r) {
  return zip_view<detail::holder_t<R>...>(default_zip_mode(),
                                          detail::hold(std::forward<R>(r))...);
}

/// Zip with an explicit mode.
template <typename... R>
  requires(sizeof...(R) >= 2)
auto zip(zip_mode mode, R &&...r) {
  return zip_view<detail::holder_t<R>...>(mode,
                                          detail::hold(std::forward<R>(r))...);
}

} // namespace views

} // namespace segrange
