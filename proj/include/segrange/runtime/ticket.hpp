// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <segrange/core/errors.hpp>

namespace segrange {

namespace detail {

/// Lane the calling thread serves, or -1 for driver threads.
std::ptrdiff_t current_lane() noexcept;

struct ticket_state_base {
  std::mutex m;
  std::condition_variable cv;
  bool done = false;
  std::exception_ptr error;
  std::ptrdiff_t lane = -1;

  void wait_done() {
    std::unique_lock lock(m);
    if (!done && lane >= 0 && lane == current_lane()) {
      throw std::logic_error(
          "waiting on a task queued behind the current task would deadlock");
    }
    cv.wait(lock, [this] { return done; });
  }

  void finish(std::exception_ptr e) {
    {
      std::lock_guard lock(m);
      error = std::move(e);
      done = true;
    }
    cv.notify_all();
  }
};

template <typename R> struct ticket_state : ticket_state_base {
  std::optional<R> value;
};

template <> struct ticket_state<void> : ticket_state_base {};

inline std::string describe(const std::exception_ptr &e) {
  try {
    std::rethrow_exception(e);
  } catch (const std::exception &ex) {
    return ex.what();
  } catch (...) {
    return "unknown error";
  }
}

} // namespace detail

/// Completion token for a submitted task. wait() may be called any number of
/// times; after the first it returns the cached result (or rethrows the
/// cached error) without blocking.
template <typename R> class ticket {
public:
  using result_type = R;

  ticket() = default;
  explicit ticket(std::shared_ptr<detail::ticket_state<R>> s)
      : state_(std::move(s)) {}

  bool valid() const noexcept { return static_cast<bool>(state_); }

  bool ready() const {
    std::lock_guard lock(state_->m);
    return state_->done;
  }

  /// Blocks until the task finished; rethrows the task's exception.
  std::add_lvalue_reference_t<const R> wait() const
    requires(!std::is_void_v<R>)
  {
    state_->wait_done();
    if (state_->error) {
      std::rethrow_exception(state_->error);
    }
    return *state_->value;
  }

  void wait() const
    requires std::is_void_v<R>
  {
    state_->wait_done();
    if (state_->error) {
      std::rethrow_exception(state_->error);
    }
  }

  /// The stored error after completion, or null.
  std::exception_ptr error() const {
    state_->wait_done();
    return state_->error;
  }

private:
  std::shared_ptr<detail::ticket_state<R>> state_;
};

/// Waits for every ticket, then returns results in ticket order. Failures
/// are aggregated into one task_failure naming each failed index.
template <typename R>
  requires(!std::is_void_v<R>)
std::vector<R> wait_all(const std::vector<ticket<R>> &tickets) {
  std::vector<task_failure::failure> failures;
  for (std::size_t i = 0; i < tickets.size(); ++i) {
    if (auto e = tickets[i].error()) {
      failures.push_back({i, detail::describe(e)});
    }
  }
  if (!failures.empty()) {
    throw task_failure(std::move(failures));
  }
  std::vector<R> out;
  out.reserve(tickets.size());
  for (const auto &t : tickets) {
    out.push_back(t.wait());
  }
  return out;
}

inline void wait_all(const std::vector<ticket<void>> &tickets) {
  std::vector<task_failure::failure> failures;
  for (std::size_t i = 0; i < tickets.size(); ++i) {
    if (auto e = tickets[i].error()) {
      failures.push_back({i, detail::describe(e)});
    }
  }
  if (!failures.empty()) {
    throw task_failure(std::move(failures));
  }
}

} // namespace segrange
