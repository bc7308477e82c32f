// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <type_traits>
#include <typeinfo>
#include <utility>
#include <vector>

#include <segrange/core/errors.hpp>
#include <segrange/core/locale.hpp>

namespace segrange {

class runtime;

namespace detail {

/// Per-locale allocation accounting, shared by a runtime and its blocks so a
/// block can be released after the runtime is gone.
class arena_registry {
public:
  explicit arena_registry(std::size_t locale_count)
      : bytes_(locale_count, 0), blocks_(locale_count, 0) {}

  void on_allocate(locale_id l, std::size_t bytes) {
    std::lock_guard lock(m_);
    bytes_[l.value] += bytes;
    ++blocks_[l.value];
  }

  void on_release(locale_id l, std::size_t bytes) {
    std::lock_guard lock(m_);
    bytes_[l.value] -= bytes;
    --blocks_[l.value];
  }

  std::size_t bytes(locale_id l) const {
    std::lock_guard lock(m_);
    return bytes_[l.value];
  }

  std::size_t blocks(locale_id l) const {
    std::lock_guard lock(m_);
    return blocks_[l.value];
  }

private:
  mutable std::mutex m_;
  std::vector<std::size_t> bytes_;
  std::vector<std::size_t> blocks_;
};

/// One zero-initialized allocation owned by a single locale.
class allocation_block {
public:
  allocation_block(std::shared_ptr<arena_registry> registry, locale_id owner,
                   std::size_t bytes, const std::type_info &type);
  ~allocation_block();

  allocation_block(const allocation_block &) = delete;
  allocation_block &operator=(const allocation_block &) = delete;

  void *data() const noexcept { return data_; }
  std::size_t bytes() const noexcept { return bytes_; }
  locale_id owner() const noexcept { return owner_; }
  const std::type_info &type() const noexcept { return *type_; }
  bool alive() const noexcept { return alive_.load(std::memory_order_acquire); }

  /// Frees the memory. Throws double_free on a second call.
  void release();

private:
  std::shared_ptr<arena_registry> registry_;
  locale_id owner_;
  std::size_t bytes_;
  const std::type_info *type_;
  void *data_ = nullptr;
  std::atomic<bool> alive_{true};
};

} // namespace detail

template <typename T> struct handle_slice;

/// Non-owning reference to a locale-owned allocation of T. Copies share the
/// same allocation; validity is observable after the allocation is freed.
template <typename T> class storage_handle {
  static_assert(std::is_trivially_copyable_v<T>,
                "distributed storage holds trivially copyable elements");

public:
  using element_type = T;

  storage_handle() = default;

  locale_id locale() const noexcept { return locale_; }
  std::size_t size() const noexcept { return length_; }
  bool valid() const noexcept { return block_ && block_->alive(); }

  /// Raw pointer; unchecked on the hot path.
  T *data() const noexcept { return data_; }

  /// Checked span over the whole allocation.
  std::span<T> span() const {
    check();
    return {data_, length_};
  }

  handle_slice<T> slice(std::size_t offset, std::size_t length) const;

  void check() const {
    if (!valid()) {
      throw use_after_free();
    }
  }

  friend bool operator==(const storage_handle &a, const storage_handle &b) {
    return a.block_ == b.block_;
  }

private:
  friend class runtime;
  template <typename> friend class owned_storage;

  void release() const {
    if (!block_) {
      throw use_after_free();
    }
    block_->release();
  }

  storage_handle(std::shared_ptr<detail::allocation_block> block,
                 std::size_t length)
      : block_(std::move(block)),
        data_(static_cast<T *>(block_->data())), length_(length),
        locale_(block_->owner()) {}

  std::shared_ptr<detail::allocation_block> block_;
  T *data_ = nullptr;
  std::size_t length_ = 0;
  locale_id locale_;
};

/// A sub-range of a storage handle, used as a copy endpoint.
template <typename T> struct handle_slice {
  storage_handle<T> handle;
  std::size_t offset = 0;
  std::size_t length = 0;

  locale_id locale() const noexcept { return handle.locale(); }
  std::size_t size() const noexcept { return length; }

  std::span<T> span() const { return handle.span().subspan(offset, length); }
};

template <typename T>
handle_slice<T> storage_handle<T>::slice(std::size_t offset,
                                         std::size_t length) const {
  if (offset > length_ || length > length_ - offset) {
    throw index_out_of_bounds(offset + length, length_);
  }
  return {*this, offset, length};
}

/// Move-only owner that frees its allocation on destruction.
template <typename T> class owned_storage {
public:
  owned_storage() = default;
  explicit owned_storage(storage_handle<T> h) : handle_(std::move(h)) {}
  ~owned_storage() { reset(); }

  owned_storage(owned_storage &&o) noexcept
      : handle_(std::exchange(o.handle_, {})) {}
  owned_storage &operator=(owned_storage &&o) noexcept {
    if (this != &o) {
      reset();
      handle_ = std::exchange(o.handle_, {});
    }
    return *this;
  }

  const storage_handle<T> &handle() const noexcept { return handle_; }
  const storage_handle<T> *operator->() const noexcept { return &handle_; }

  void reset() noexcept {
    if (handle_.valid()) {
      handle_.release();
    }
    handle_ = {};
  }

private:
  storage_handle<T> handle_;
};

} // namespace segrange
