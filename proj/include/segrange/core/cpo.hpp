// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <span>
#include <tuple>
#include <type_traits>
#include <utility>

#include <segrange/core/locale.hpp>

// Customization point objects. Each one first looks for a member function
// and then falls back to a free function found by argument-dependent lookup,
// so existing types can be adapted without modification.

namespace segrange {

namespace cpo_detail {

template <typename T> void rank(const T &) = delete;
template <typename T> void segments(const T &) = delete;
template <typename T> void local(const T &) = delete;
template <typename T> void slice(const T &, std::size_t, std::size_t) = delete;

template <typename R>
concept has_rank_member = requires(const R &r) {
  { r.rank() } -> std::convertible_to<locale_id>;
};

template <typename R>
concept has_rank_adl = requires(const R &r) {
  { rank(r) } -> std::convertible_to<locale_id>;
};

struct rank_fn {
  template <typename R>
    requires has_rank_member<std::remove_cvref_t<R>> ||
             has_rank_adl<std::remove_cvref_t<R>>
  constexpr locale_id operator()(const R &r) const {
    if constexpr (has_rank_member<std::remove_cvref_t<R>>) {
      return r.rank();
    } else {
      return rank(r);
    }
  }
};

template <typename R>
concept has_segments_member = requires(R &r) { r.segments(); };

template <typename R>
concept has_segments_adl = requires(R &r) { segments(r); };

struct segments_fn {
  template <typename R>
    requires has_segments_member<R> || has_segments_adl<R>
  constexpr auto operator()(R &r) const {
    if constexpr (has_segments_member<R>) {
      return r.segments();
    } else {
      return segments(r);
    }
  }
};

template <typename R>
concept has_local_member = requires(const R &r) { r.local(); };

template <typename R>
concept has_local_adl = requires(const R &r) { local(r); };

struct local_fn {
  template <typename R>
    requires has_local_member<R> || has_local_adl<R>
  constexpr auto operator()(const R &r) const {
    if constexpr (has_local_member<R>) {
      return r.local();
    } else {
      return local(r);
    }
  }
};

template <typename T> struct is_std_span : std::false_type {};
template <typename T, std::size_t E>
struct is_std_span<std::span<T, E>> : std::true_type {};

template <typename R>
concept has_slice_member = requires(const R &r, std::size_t n) {
  { r.slice(n, n) } -> std::same_as<R>;
};

template <typename R>
concept has_slice_adl = requires(const R &r, std::size_t n) {
  { slice(r, n, n) } -> std::same_as<R>;
};

struct slice_fn {
  template <typename R>
    requires has_slice_member<R> || has_slice_adl<R> ||
             is_std_span<R>::value
  constexpr R operator()(const R &r, std::size_t offset,
                         std::size_t length) const {
    if constexpr (has_slice_member<R>) {
      return r.slice(offset, length);
    } else if constexpr (has_slice_adl<R>) {
      return slice(r, offset, length);
    } else {
      return R(r.subspan(offset, length));
    }
  }
};

} // namespace cpo_detail

inline namespace cpo {
/// Locale of a remote range.
inline constexpr cpo_detail::rank_fn rank{};
/// Ordered remote segments whose concatenation is the range.
inline constexpr cpo_detail::segments_fn segments{};
/// Plain local view of a remote range, valid on its own locale.
inline constexpr cpo_detail::local_fn local{};
/// Sub-range [offset, offset + length) of a segment, same type as the input.
inline constexpr cpo_detail::slice_fn slice{};
} // namespace cpo

template <typename T> struct is_tuple : std::false_type {};
template <typename... Ts> struct is_tuple<std::tuple<Ts...>> : std::true_type {};

template <typename T>
concept readable_proxy = requires(const T &t) { t.read(); };

/// Materialize an element as a value: proxies are read, tuples of proxies
/// become tuples of values, references decay to copies.
template <typename X> constexpr auto read_value(X &&x) {
  using D = std::remove_cvref_t<X>;
  if constexpr (readable_proxy<D>) {
    return x.read();
  } else if constexpr (is_tuple<D>::value) {
    return std::apply(
        [](auto &&...e) {
          return std::make_tuple(
              read_value(std::forward<decltype(e)>(e))...);
        },
        std::forward<X>(x));
  } else {
    return D(std::forward<X>(x));
  }
}

/// Invoke fn on an element; tuple elements are spread over the arguments when
/// fn does not accept the tuple itself.
template <typename F, typename E>
constexpr decltype(auto) invoke_element(F &fn, E &&e) {
  if constexpr (std::is_invocable_v<F &, E>) {
    return std::invoke(fn, std::forward<E>(e));
  } else {
    return std::apply(fn, std::forward<E>(e));
  }
}

} // namespace segrange
