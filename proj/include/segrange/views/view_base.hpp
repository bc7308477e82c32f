// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <memory>
#include <ranges>
#include <type_traits>
#include <utility>

#include <segrange/core/concepts.hpp>

namespace segrange {

/// Base class marking lightweight view types. Views are copied when held by
/// another view; anything else is referenced or, if it is a temporary, moved
/// into shared storage.
struct view_tag {};

template <typename V>
concept segrange_view = std::derived_from<std::remove_cvref_t<V>, view_tag>;

namespace detail {

template <typename R> class ref_holder {
public:
  explicit ref_holder(R &r) noexcept : p_(&r) {}
  R &get() const noexcept { return *p_; }

private:
  R *p_;
};

template <typename R> class value_holder {
public:
  explicit value_holder(R r) : r_(std::move(r)) {}
  const R &get() const noexcept { return r_; }

private:
  R r_;
};

template <typename R> class shared_holder {
public:
  explicit shared_holder(R &&r) : p_(std::make_shared<R>(std::move(r))) {}
  R &get() const noexcept { return *p_; }

private:
  std::shared_ptr<R> p_;
};

template <typename R> auto hold(R &&r) {
  using D = std::remove_cvref_t<R>;
  if constexpr (segrange_view<D>) {
    return value_holder<D>(D(std::forward<R>(r)));
  } else if constexpr (std::is_lvalue_reference_v<R>) {
    return ref_holder<std::remove_reference_t<R>>(r);
  } else {
    return shared_holder<D>(std::move(r));
  }
}

template <typename R> using holder_t = decltype(hold(std::declval<R>()));

template <typename H>
using held_t = std::remove_reference_t<decltype(std::declval<const H &>().get())>;

/// Single-segment stand-in for a plain local contiguous range.
template <typename R>
  requires std::ranges::contiguous_range<R &>
auto local_span(R &r) {
  return std::span(std::ranges::data(r), std::ranges::size(r));
}

} // namespace detail

enum class zip_mode {
  relaxed, ///< non-aligned segmented bases are realigned
  strict   ///< non-aligned segmented bases are rejected
};

namespace detail {
inline std::atomic<zip_mode> global_zip_mode{zip_mode::relaxed};
} // namespace detail

/// Process-wide mode used by zip views constructed from now on.
inline void set_default_zip_mode(zip_mode m) noexcept {
  detail::global_zip_mode.store(m, std::memory_order_relaxed);
}

inline zip_mode default_zip_mode() noexcept {
  return detail::global_zip_mode.load(std::memory_order_relaxed);
}

/// Sets the zip mode for the current scope and restores the previous one.
class scoped_zip_mode {
public:
  explicit scoped_zip_mode(zip_mode m) noexcept : prev_(default_zip_mode()) {
    set_default_zip_mode(m);
  }
  ~scoped_zip_mode() { set_default_zip_mode(prev_); }
  scoped_zip_mode(const scoped_zip_mode &) = delete;
  scoped_zip_mode &operator=(const scoped_zip_mode &) = delete;

private:
  zip_mode prev_;
};

} // namespace segrange
