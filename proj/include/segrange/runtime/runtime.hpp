// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <type_traits>
#include <typeinfo>
#include <utility>
#include <vector>

#include <segrange/core/cpo.hpp>
#include <segrange/core/errors.hpp>
#include <segrange/core/locale.hpp>
#include <segrange/runtime/storage.hpp>
#include <segrange/runtime/ticket.hpp>

namespace segrange {

enum class worker_binding {
  none,   ///< let the OS schedule workers
  compact ///< pin worker i to hardware thread i mod hardware_concurrency
};

namespace detail {

template <typename X>
concept handle_endpoint = requires(const X &x) {
  x.span();
  x.locale();
};

template <typename X> auto endpoint_span(X &&x) {
  if constexpr (handle_endpoint<std::remove_cvref_t<X>>) {
    return x.span();
  } else if constexpr (requires { segrange::local(x); }) {
    return std::span(segrange::local(x));
  } else {
    return std::span(x);
  }
}

template <typename X> std::optional<locale_id> endpoint_locale(const X &x) {
  if constexpr (handle_endpoint<X>) {
    return x.locale();
  } else if constexpr (requires { segrange::rank(x); }) {
    return segrange::rank(x);
  } else {
    return std::nullopt;
  }
}

// What an asynchronous copy captures: handles by value (so validity can be
// rechecked when the copy runs), everything else as a span.
template <typename X> auto capture_endpoint(X &&x) {
  if constexpr (handle_endpoint<std::remove_cvref_t<X>>) {
    return std::remove_cvref_t<X>(x);
  } else {
    return endpoint_span(std::forward<X>(x));
  }
}

} // namespace detail

/// A single-process runtime simulating P memory locales. Each locale has one
/// compute worker and one copy engine, both draining FIFO queues. Tasks on
/// the same queue run in submission order; distinct queues run concurrently.
class runtime {
public:
  explicit runtime(std::size_t locale_count = default_locale_count(),
                   worker_binding binding = worker_binding::none);
  ~runtime();

  runtime(const runtime &) = delete;
  runtime &operator=(const runtime &) = delete;

  /// SEGRANGE_LOCALES if set, else hardware threads capped at 16.
  static std::size_t default_locale_count();

  std::size_t locale_count() const noexcept { return locale_count_; }

  void check_locale(locale_id l) const {
    if (l.value >= locale_count_) {
      throw invalid_locale(l, locale_count_);
    }
  }

  /// Locale served by the calling thread, if it is a runtime worker.
  static std::optional<locale_id> this_locale() noexcept;

  template <typename T>
  storage_handle<T> allocate(locale_id l, std::size_t length) {
    check_locale(l);
    auto block = std::make_shared<detail::allocation_block>(
        registry_, l, length * sizeof(T), typeid(T));
    return storage_handle<T>(std::move(block), length);
  }

  template <typename T> void deallocate(const storage_handle<T> &h) {
    if (!h.block_) {
      throw use_after_free();
    }
    h.block_->release();
  }

  std::size_t bytes_allocated(locale_id l) const {
    check_locale(l);
    return registry_->bytes(l);
  }

  std::size_t allocation_count(locale_id l) const {
    check_locale(l);
    return registry_->blocks(l);
  }

  /// Runs f on the compute worker of locale l.
  template <typename F> auto submit(locale_id l, F &&f) {
    check_locale(l);
    return enqueue_task(l.value, std::forward<F>(f));
  }

  /// Runs f on the copy engine of locale l. Copy-engine tasks must never wait
  /// on other tasks; compute tasks may wait on them.
  template <typename F> auto submit_transfer(locale_id l, F &&f) {
    check_locale(l);
    return enqueue_task(locale_count_ + l.value, std::forward<F>(f));
  }

  std::size_t tasks_submitted() const noexcept {
    return submitted_.load(std::memory_order_relaxed);
  }

  /// Synchronous copy between spans, segments, or handle slices.
  template <typename Src, typename Dst> void copy(Src &&src, Dst &&dst) {
    auto s = detail::endpoint_span(src);
    auto d = detail::endpoint_span(dst);
    check_copy(s, d);
    std::copy_n(s.data(), s.size(), d.data());
  }

  /// Asynchronous copy on the destination locale's copy engine (or the
  /// source's, if the destination is plain memory). Length mismatches are
  /// reported before anything is queued.
  template <typename Src, typename Dst>
  ticket<void> copy_async(Src &&src, Dst &&dst) {
    check_copy(detail::endpoint_span(src), detail::endpoint_span(dst));
    auto engine = detail::endpoint_locale(dst)
                      .value_or(detail::endpoint_locale(src).value_or(
                          locale_id{0}));
    return submit_transfer(
        engine, [s = detail::capture_endpoint(std::forward<Src>(src)),
                 d = detail::capture_endpoint(std::forward<Dst>(dst))] {
          auto ss = detail::endpoint_span(s);
          auto ds = detail::endpoint_span(d);
          std::copy_n(ss.data(), ss.size(), ds.data());
        });
  }

private:
  template <typename S, typename D> static void check_copy(S s, D d) {
    static_assert(std::is_same_v<std::remove_cv_t<typename S::element_type>,
                                 typename D::element_type>,
                  "copy endpoints must have the same element type");
    if (s.size() != d.size()) {
      throw length_mismatch(s.size(), d.size());
    }
  }

  template <typename F> auto enqueue_task(std::size_t lane, F &&f) {
    using fn_t = std::decay_t<F>;
    using R = std::invoke_result_t<fn_t &>;
    auto state = std::make_shared<detail::ticket_state<R>>();
    state->lane = static_cast<std::ptrdiff_t>(lane);
    enqueue(lane, [state, fn = fn_t(std::forward<F>(f))]() mutable {
      try {
        if constexpr (std::is_void_v<R>) {
          fn();
        } else {
          state->value.emplace(fn());
        }
        state->finish(nullptr);
      } catch (...) {
        state->finish(std::current_exception());
      }
    });
    return ticket<R>(std::move(state));
  }

  void enqueue(std::size_t lane, std::function<void()> job);

  struct lane;

  std::size_t locale_count_;
  std::shared_ptr<detail::arena_registry> registry_;
  std::vector<std::unique_ptr<lane>> lanes_;
  std::atomic<std::size_t> submitted_{0};
};

} // namespace segrange
