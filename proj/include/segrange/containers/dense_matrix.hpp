// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <segrange/containers/remote_span.hpp>
#include <segrange/containers/tiling.hpp>
#include <segrange/core/errors.hpp>
#include <segrange/core/iterators.hpp>
#include <segrange/runtime/runtime.hpp>

namespace segrange {

/// One stored matrix element: global row, global column, value.
template <typename V> struct matrix_entry {
  std::size_t row;
  std::size_t col;
  V value;

  friend bool operator==(const matrix_entry &, const matrix_entry &) = default;
};

/// Locale-independent row-major dense matrix, used for local tile copies.
template <typename T> class dense_matrix {
public:
  dense_matrix() = default;
  dense_matrix(std::size_t rows, std::size_t cols, const T &init = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, init) {}

  static dense_matrix identity(std::size_t n) {
    dense_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = T{1};
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  extents shape() const noexcept { return {rows_, cols_}; }

  T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  T *data() noexcept { return data_.data(); }
  const T *data() const noexcept { return data_.data(); }
  std::span<T> span() noexcept { return data_; }
  std::span<const T> span() const noexcept { return data_; }

  friend bool operator==(const dense_matrix &, const dense_matrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// A rectangular block of a distributed matrix stored on one locale,
/// row-major with a leading dimension. As a remote range it yields
/// matrix_entry values (global coordinates) in row-major order.
template <typename T> class dense_matrix_view {
public:
  dense_matrix_view() = default;
  dense_matrix_view(T *data, extents shape, std::size_t ld, extents origin,
                    locale_id rank) noexcept
      : data_(data), shape_(shape), ld_(ld), origin_(origin), rank_(rank) {}

  locale_id rank() const noexcept { return rank_; }
  extents shape() const noexcept { return shape_; }
  extents origin() const noexcept { return origin_; }
  std::size_t ld() const noexcept { return ld_; }
  std::size_t rows() const noexcept { return shape_[0]; }
  std::size_t cols() const noexcept { return shape_[1]; }
  std::size_t size() const noexcept { return shape_[0] * shape_[1]; }
  T *data() const noexcept { return data_; }

  T &operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * ld_ + c];
  }

  matrix_entry<T &> operator[](std::size_t i) const noexcept {
    const auto r = i / shape_[1];
    const auto c = i % shape_[1];
    return {origin_[0] + r, origin_[1] + c, data_[r * ld_ + c]};
  }

  index_iterator<dense_matrix_view> begin() const { return {this, 0}; }
  index_iterator<dense_matrix_view> end() const {
    return {this, static_cast<std::ptrdiff_t>(size())};
  }

  /// The tile itself; only meaningful on its own locale.
  dense_matrix_view local() const noexcept { return *this; }

private:
  T *data_ = nullptr;
  extents shape_{0, 0};
  std::size_t ld_ = 0;
  extents origin_{0, 0};
  locale_id rank_;
};

/// Dense matrix cut into a tile grid, each tile stored contiguously on the
/// locale chosen by the tiling's processor grid. segments() yields the tiles
/// in row-major tile order.
template <typename T> class distributed_dense_matrix {
public:
  using value_type = T;
  using segment_type = dense_matrix_view<T>;
  using iterator = segment_cursor<segment_type>;

  distributed_dense_matrix(segrange::runtime &rt, extents shape,
                           tiling t = tiling::block_cyclic(),
                           const T &init = T{})
      : rt_(&rt), tiling_(resolve(t, shape, rt.locale_count())) {
    tiles_.reserve(tiling_.tile_count());
    for (std::size_t i = 0; i < tiling_.tile_grid[0]; ++i) {
      for (std::size_t j = 0; j < tiling_.tile_grid[1]; ++j) {
        const auto e = tiling_.tile_extents(i, j);
        tiles_.emplace_back(rt.allocate<T>(tiling_.owner(i, j), e[0] * e[1]));
      }
    }
    std::vector<ticket<void>> tickets;
    for (const auto &tile : segments()) {
      if (tile.size() > 0) {
        tickets.push_back(rt.submit(tile.rank(), [tile, init] {
          std::fill_n(tile.data(), tile.size(), init);
        }));
      }
    }
    wait_all(tickets);
  }

  distributed_dense_matrix(distributed_dense_matrix &&) noexcept = default;
  distributed_dense_matrix &
  operator=(distributed_dense_matrix &&) noexcept = default;

  extents shape() const noexcept { return tiling_.shape; }
  std::size_t size() const noexcept { return shape()[0] * shape()[1]; }
  extents tile_shape() const noexcept { return tiling_.tile_shape; }
  extents grid_shape() const noexcept { return tiling_.tile_grid; }
  extents processor_grid() const noexcept { return tiling_.processor_grid; }
  const resolved_tiling &tiling_info() const noexcept { return tiling_; }
  segrange::runtime &runtime() const noexcept { return *rt_; }

  dense_matrix_view<T> tile(std::size_t i, std::size_t j) const {
    check_tile(i, j);
    const auto e = tiling_.tile_extents(i, j);
    const auto &h = tiles_[i * tiling_.tile_grid[1] + j].handle();
    return {h.data(),
            e,
            e[1],
            {i * tiling_.tile_shape[0], j * tiling_.tile_shape[1]},
            h.locale()};
  }

  /// Copy of tile (i, j) into local memory.
  dense_matrix<T> get_tile(std::size_t i, std::size_t j) const {
    check_tile(i, j);
    const auto e = tiling_.tile_extents(i, j);
    dense_matrix<T> out(e[0], e[1]);
    rt_->copy(tile_handle(i, j).span(), out.span());
    return out;
  }

  /// Asynchronous get_tile, served by the owning locale's copy engine.
  ticket<dense_matrix<T>> get_tile_async(std::size_t i, std::size_t j) const {
    check_tile(i, j);
    const auto e = tiling_.tile_extents(i, j);
    auto h = tile_handle(i, j);
    return rt_->submit_transfer(h.locale(), [h, e] {
      dense_matrix<T> out(e[0], e[1]);
      auto src = h.span();
      std::copy_n(src.data(), src.size(), out.data());
      return out;
    });
  }

  std::vector<segment_type> segments() const {
    std::vector<segment_type> out;
    out.reserve(tiles_.size());
    for (std::size_t i = 0; i < tiling_.tile_grid[0]; ++i) {
      for (std::size_t j = 0; j < tiling_.tile_grid[1]; ++j) {
        out.push_back(tile(i, j));
      }
    }
    return out;
  }

  remote_ref<T> operator()(std::size_t r, std::size_t c) const {
    if (r >= shape()[0] || c >= shape()[1]) {
      throw index_out_of_bounds("element (" + std::to_string(r) + ", " +
                                std::to_string(c) + ") outside " +
                                std::to_string(shape()[0]) + "x" +
                                std::to_string(shape()[1]));
    }
    const auto ti = r / tiling_.tile_shape[0];
    const auto tj = c / tiling_.tile_shape[1];
    const auto e = tiling_.tile_extents(ti, tj);
    const auto lr = r - ti * tiling_.tile_shape[0];
    const auto lc = c - tj * tiling_.tile_shape[1];
    return {&tiles_[ti * tiling_.tile_grid[1] + tj].handle(), lr * e[1] + lc};
  }

  T get(std::size_t r, std::size_t c) const { return (*this)(r, c).read(); }
  void set(std::size_t r, std::size_t c, const T &v) { (*this)(r, c).write(v); }

  iterator begin() const {
    return iterator::begin(
        std::make_shared<const std::vector<segment_type>>(segments()));
  }
  iterator end() const {
    return iterator::end(
        std::make_shared<const std::vector<segment_type>>(segments()));
  }

private:
  void check_tile(std::size_t i, std::size_t j) const {
    if (i >= tiling_.tile_grid[0] || j >= tiling_.tile_grid[1]) {
      throw index_out_of_bounds(
          "tile (" + std::to_string(i) + ", " + std::to_string(j) +
          ") outside tile grid " + std::to_string(tiling_.tile_grid[0]) +
          "x" + std::to_string(tiling_.tile_grid[1]));
    }
  }

  const storage_handle<T> &tile_handle(std::size_t i, std::size_t j) const {
    return tiles_[i * tiling_.tile_grid[1] + j].handle();
  }

  segrange::runtime *rt_;
  resolved_tiling tiling_;
  std::vector<owned_storage<T>> tiles_;
};

} // namespace segrange
