// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <memory>
#include <type_traits>
#include <utility>
#include <vector>

namespace segrange {

/// Random-access iterator over anything with operator[](size_t). Holds a
/// pointer to the range, so the range must outlive the iterator.
template <typename R> class index_iterator {
public:
  using reference = decltype(std::declval<const R &>()[std::size_t{}]);
  using value_type = std::remove_cvref_t<reference>;
  using difference_type = std::ptrdiff_t;
  using iterator_concept = std::random_access_iterator_tag;
  using iterator_category =
      std::conditional_t<std::is_lvalue_reference_v<reference>,
                         std::random_access_iterator_tag,
                         std::input_iterator_tag>;

  index_iterator() = default;
  index_iterator(const R *r, difference_type i) : r_(r), i_(i) {}

  reference operator*() const { return (*r_)[static_cast<std::size_t>(i_)]; }
  reference operator[](difference_type n) const {
    return (*r_)[static_cast<std::size_t>(i_ + n)];
  }

  index_iterator &operator++() {
    ++i_;
    return *this;
  }
  index_iterator operator++(int) {
    auto t = *this;
    ++i_;
    return t;
  }
  index_iterator &operator--() {
    --i_;
    return *this;
  }
  index_iterator operator--(int) {
    auto t = *this;
    --i_;
    return t;
  }
  index_iterator &operator+=(difference_type n) {
    i_ += n;
    return *this;
  }
  index_iterator &operator-=(difference_type n) {
    i_ -= n;
    return *this;
  }
  friend index_iterator operator+(index_iterator it, difference_type n) {
    return it += n;
  }
  friend index_iterator operator+(difference_type n, index_iterator it) {
    return it += n;
  }
  friend index_iterator operator-(index_iterator it, difference_type n) {
    return it -= n;
  }
  friend difference_type operator-(const index_iterator &a,
                                   const index_iterator &b) {
    return a.i_ - b.i_;
  }
  friend bool operator==(const index_iterator &a, const index_iterator &b) {
    return a.i_ == b.i_;
  }
  friend auto operator<=>(const index_iterator &a, const index_iterator &b) {
    return a.i_ <=> b.i_;
  }

private:
  const R *r_ = nullptr;
  difference_type i_ = 0;
};

/// Forward cursor over a list of segments: (segment index, in-segment index).
/// Skips empty segments. Keeps the segment list alive via shared ownership.
template <typename Seg> class segment_cursor {
public:
  using reference = decltype(std::declval<const Seg &>()[std::size_t{}]);
  using value_type = std::remove_cvref_t<reference>;
  using difference_type = std::ptrdiff_t;
  using iterator_category = std::forward_iterator_tag;

  segment_cursor() = default;

  static segment_cursor begin(std::shared_ptr<const std::vector<Seg>> segs) {
    segment_cursor c(std::move(segs), 0);
    c.skip_empty();
    return c;
  }

  static segment_cursor end(std::shared_ptr<const std::vector<Seg>> segs) {
    const auto n = segs->size();
    return segment_cursor(std::move(segs), n);
  }

  reference operator*() const { return (*segs_)[seg_][off_]; }

  segment_cursor &operator++() {
    ++off_;
    skip_empty();
    return *this;
  }
  segment_cursor operator++(int) {
    auto t = *this;
    ++*this;
    return t;
  }

  std::size_t segment_index() const noexcept { return seg_; }
  std::size_t local_index() const noexcept { return off_; }

  friend bool operator==(const segment_cursor &a, const segment_cursor &b) {
    return a.seg_ == b.seg_ && a.off_ == b.off_;
  }

private:
  segment_cursor(std::shared_ptr<const std::vector<Seg>> segs, std::size_t seg)
      : segs_(std::move(segs)), seg_(seg) {}

  void skip_empty() {
    while (seg_ < segs_->size() &&
           off_ >= static_cast<std::size_t>((*segs_)[seg_].size())) {
      ++seg_;
      off_ = 0;
    }
  }

  std::shared_ptr<const std::vector<Seg>> segs_;
  std::size_t seg_ = 0;
  std::size_t off_ = 0;
};

} // namespace segrange
