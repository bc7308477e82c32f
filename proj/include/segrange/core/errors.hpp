// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <segrange/core/locale.hpp>

namespace segrange {

/// Raised when a local view is requested from a locale that does not own the
/// segment. Usually means a task was submitted to the wrong locale.
class off_locale_access : public std::logic_error {
public:
  off_locale_access(locale_id owner, locale_id caller)
      : std::logic_error("segment owned by locale " +
                         std::to_string(owner.value) +
                         " accessed locally from locale " +
                         std::to_string(caller.value)),
        owner_(owner), caller_(caller) {}

  locale_id owner() const noexcept { return owner_; }
  locale_id caller() const noexcept { return caller_; }

private:
  locale_id owner_;
  locale_id caller_;
};

class invalid_locale : public std::out_of_range {
public:
  invalid_locale(locale_id l, std::size_t locale_count)
      : std::out_of_range("locale " + std::to_string(l.value) +
                          " out of range for runtime with " +
                          std::to_string(locale_count) + " locales") {}
};

class index_out_of_bounds : public std::out_of_range {
public:
  index_out_of_bounds(std::size_t index, std::size_t size)
      : std::out_of_range("index " + std::to_string(index) +
                          " out of bounds for size " + std::to_string(size)) {
  }
  explicit index_out_of_bounds(const std::string &what)
      : std::out_of_range(what) {}
};

class length_mismatch : public std::invalid_argument {
public:
  length_mismatch(std::size_t expected, std::size_t actual)
      : std::invalid_argument("length mismatch: " + std::to_string(expected) +
                              " vs " + std::to_string(actual)) {}
};

class non_aligned_zip : public std::invalid_argument {
public:
  non_aligned_zip()
      : std::invalid_argument(
            "zip of non-aligned segmented ranges rejected in strict mode") {}
};

class use_after_free : public std::logic_error {
public:
  use_after_free() : std::logic_error("storage handle used after free") {}
};

class double_free : public std::logic_error {
public:
  double_free() : std::logic_error("storage handle freed twice") {}
};

/// Aggregate of every task failure observed by wait_all, in ticket order.
class task_failure : public std::runtime_error {
public:
  struct failure {
    std::size_t index;
    std::string message;
  };

  explicit task_failure(std::vector<failure> failures)
      : std::runtime_error(format(failures)), failures_(std::move(failures)) {}

  const std::vector<failure> &failures() const noexcept { return failures_; }

private:
  static std::string format(const std::vector<failure> &failures) {
    std::string s = std::to_string(failures.size()) + " task(s) failed:";
    for (const auto &f : failures) {
      s += " [" + std::to_string(f.index) + "] " + f.message + ";";
    }
    return s;
  }

  std::vector<failure> failures_;
};

} // namespace segrange
