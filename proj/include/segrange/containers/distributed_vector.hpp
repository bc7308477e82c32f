// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <vector>

#include <segrange/containers/remote_span.hpp>
#include <segrange/core/distribution.hpp>
#include <segrange/core/errors.hpp>
#include <segrange/core/iterators.hpp>
#include <segrange/runtime/runtime.hpp>

namespace segrange {

/// One-dimensional array block-partitioned over the locales of a runtime.
///
/// By default n elements are split into P segments of ceil(n/P) elements
/// (the tail truncated, possibly to zero) with segment i on locale i. A custom
/// distribution may be supplied instead. The runtime must outlive the vector.
template <typename T> class distributed_vector {
public:
  using value_type = T;
  using segment_type = remote_span<T>;
  using iterator = segment_cursor<segment_type>;

  distributed_vector(segrange::runtime &rt, std::size_t n, const T &init = T{})
      : distributed_vector(
            rt,
            distribution::block(n, rt.locale_count(), rt.locale_count()),
            init) {}

  distributed_vector(segrange::runtime &rt, segrange::distribution dist,
                     const T &init = T{})
      : rt_(&rt), dist_(std::move(dist)) {
    storage_.reserve(dist_.segment_count());
    for (const auto &d : dist_.descriptors()) {
      storage_.emplace_back(rt.allocate<T>(d.rank, d.length));
    }
    // Storage starts zeroed; skip the fill pass for an all-zero init.
    const auto *bytes = reinterpret_cast<const unsigned char *>(&init);
    if (std::any_of(bytes, bytes + sizeof(T),
                    [](unsigned char b) { return b != 0; })) {
      fill(init);
    }
  }

  distributed_vector(distributed_vector &&) noexcept = default;
  distributed_vector &operator=(distributed_vector &&) noexcept = default;
  distributed_vector(const distributed_vector &) = delete;
  distributed_vector &operator=(const distributed_vector &) = delete;

  std::size_t size() const noexcept { return dist_.total_length(); }
  bool empty() const noexcept { return size() == 0; }
  const segrange::distribution &distribution() const noexcept {
    return dist_;
  }
  segrange::runtime &runtime() const noexcept { return *rt_; }

  std::vector<segment_type> segments() const {
    std::vector<segment_type> out;
    out.reserve(storage_.size());
    for (const auto &s : storage_) {
      out.emplace_back(s->data(), s->size(), s->locale());
    }
    return out;
  }

  remote_ref<T> operator[](std::size_t i) const {
    auto [seg, off] = dist_.locate(i);
    return {&storage_[seg].handle(), off};
  }

  T get(std::size_t i) const { return (*this)[i].read(); }
  void set(std::size_t i, const T &value) { (*this)[i].write(value); }

  /// Global iteration, segment by segment.
  iterator begin() const {
    return iterator::begin(
        std::make_shared<const std::vector<segment_type>>(segments()));
  }
  iterator end() const {
    return iterator::end(
        std::make_shared<const std::vector<segment_type>>(segments()));
  }

  /// Sets every element to value, one task per non-empty segment.
  void fill(const T &value) {
    std::vector<ticket<void>> tickets;
    for (const auto &seg : segments()) {
      if (!seg.empty()) {
        tickets.push_back(rt_->submit(seg.rank(), [seg, value] {
          std::fill(seg.begin(), seg.end(), value);
        }));
      }
    }
    wait_all(tickets);
  }

private:
  segrange::runtime *rt_;
  segrange::distribution dist_;
  std::vector<owned_storage<T>> storage_;
};

} // namespace segrange
