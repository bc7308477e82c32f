// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <type_traits>

#include <segrange/core/locale.hpp>
#include <segrange/runtime/storage.hpp>

namespace segrange {

/// A contiguous block of elements owned by one locale. This is the segment
/// type of distributed_vector and of every slice taken from it.
template <typename T> class remote_span {
public:
  using element_type = T;
  using value_type = std::remove_cv_t<T>;
  using iterator = T *;

  remote_span() = default;
  remote_span(T *data, std::size_t size, locale_id rank) noexcept
      : data_(data), size_(size), rank_(rank) {}

  locale_id rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  T *data() const noexcept { return data_; }

  T &operator[](std::size_t i) const noexcept { return data_[i]; }

  iterator begin() const noexcept { return data_; }
  iterator end() const noexcept { return data_ + size_; }

  std::span<T> local() const noexcept { return {data_, size_}; }

  remote_span slice(std::size_t offset, std::size_t length) const noexcept {
    return {data_ + offset, length, rank_};
  }

  friend bool operator==(const remote_span &a, const remote_span &b) {
    return a.data_ == b.data_ && a.size_ == b.size_ && a.rank_ == b.rank_;
  }

private:
  T *data_ = nullptr;
  std::size_t size_ = 0;
  locale_id rank_;
};

/// Proxy for one element of locale-owned storage: a (handle, index) pair with
/// explicit read() and write(). Reading after the storage was freed throws.
template <typename T> class remote_ref {
public:
  remote_ref(const storage_handle<T> *handle, std::size_t index) noexcept
      : handle_(handle), index_(index) {}

  T read() const {
    handle_->check();
    return handle_->data()[index_];
  }

  void write(const T &value) const {
    handle_->check();
    handle_->data()[index_] = value;
  }

  locale_id rank() const noexcept { return handle_->locale(); }

private:
  const storage_handle<T> *handle_;
  std::size_t index_;
};

} // namespace segrange
