// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <segrange/core/concepts.hpp>
#include <segrange/core/iterators.hpp>
#include <segrange/views/view_base.hpp>

namespace segrange {

/// A segment whose elements are fn applied to another segment's elements.
template <typename S, typename F> class transform_segment {
public:
  transform_segment() = default;
  transform_segment(S seg, F fn) : seg_(std::move(seg)), fn_(std::move(fn)) {}

  locale_id rank() const
    requires requires(const S &s) { segrange::rank(s); }
  {
    return segrange::rank(seg_);
  }

  std::size_t size() const { return static_cast<std::size_t>(seg_.size()); }

  decltype(auto) operator[](std::size_t i) const {
    return invoke_element(fn_, read_value(seg_[i]));
  }

  transform_segment slice(std::size_t offset, std::size_t length) const {
    return {segrange::slice(seg_, offset, length), fn_};
  }

  const S &base() const noexcept { return seg_; }

  index_iterator<transform_segment> begin() const { return {this, 0}; }
  index_iterator<transform_segment> end() const {
    return {this, static_cast<std::ptrdiff_t>(size())};
  }

private:
  S seg_;
  mutable F fn_;
};

/// Lazy elementwise transform. Read-only.
template <typename H, typename F> class transform_view : public view_tag {
  using base_t = detail::held_t<H>;

public:
  transform_view(H base, F fn) : base_(std::move(base)), fn_(std::move(fn)) {}

  std::size_t size() const {
    return static_cast<std::size_t>(base_.get().size());
  }
  bool empty() const { return size() == 0; }

  decltype(auto) operator[](std::size_t i) const {
    return invoke_element(fn_, read_value(base_.get()[i]));
  }

  auto segments() const
    requires segmented_range<base_t>
  {
    using seg_t = transform_segment<segment_t<base_t>, F>;
    std::vector<seg_t> out;
    for (auto &&s : segrange::segments(base_.get())) {
      out.emplace_back(s, fn_);
    }
    return out;
  }

  locale_id rank() const
    requires(!segmented_range<base_t>) &&
            requires(const base_t &b) { segrange::rank(b); }
  {
    return segrange::rank(base_.get());
  }

  index_iterator<transform_view> begin() const { return {this, 0}; }
  index_iterator<transform_view> end() const {
    return {this, static_cast<std::ptrdiff_t>(size())};
  }

private:
  H base_;
  mutable F fn_;
};

namespace views {

template <typename R, typename F> auto transform(R &&r, F fn) {
  auto h = detail::hold(std::forward<R>(r));
  return transform_view<decltype(h), F>(std::move(h), std::move(fn));
}

template <typename F> struct transform_closure {
  F fn;
  template <typename R>
  friend auto operator|(R &&r, const transform_closure &c) {
    return views::transform(std::forward<R>(r), c.fn);
  }
};

template <typename F> transform_closure<F> transform(F fn) {
  return {std::move(fn)};
}

} // namespace views

} // namespace segrange
