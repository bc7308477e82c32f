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

#include <segrange/containers/dense_matrix.hpp>
#include <segrange/containers/tiling.hpp>
#include <segrange/core/errors.hpp>
#include <segrange/core/iterators.hpp>
#include <segrange/runtime/runtime.hpp>

namespace segrange {

/// One CSR tile of a distributed sparse matrix. Column indices are local to
/// the tile; iteration yields entries with global coordinates in CSR order.
template <typename T> class csr_matrix_view {
public:
  csr_matrix_view() = default;
  csr_matrix_view(extents shape, extents origin, const std::size_t *row_ptr,
                  const std::size_t *col_idx, T *values, std::size_t nnz,
                  locale_id rank) noexcept
      : shape_(shape), origin_(origin), row_ptr_(row_ptr), col_idx_(col_idx),
        values_(values), nnz_(nnz), rank_(rank) {}

  locale_id rank() const noexcept { return rank_; }
  extents shape() const noexcept { return shape_; }
  extents origin() const noexcept { return origin_; }
  std::size_t size() const noexcept { return nnz_; }

  std::span<const std::size_t> row_offsets() const noexcept {
    return {row_ptr_, shape_[0] + 1};
  }
  std::span<const std::size_t> column_indices() const noexcept {
    return {col_idx_, nnz_};
  }
  std::span<T> values() const noexcept { return {values_, nnz_}; }

  matrix_entry<T &> operator[](std::size_t k) const noexcept {
    // Row r owns [row_ptr[r], row_ptr[r+1]); find the last r with
    // row_ptr[r] <= k.
    const auto *it = std::upper_bound(row_ptr_, row_ptr_ + shape_[0] + 1, k);
    const auto r = static_cast<std::size_t>(it - row_ptr_) - 1;
    return {origin_[0] + r, origin_[1] + col_idx_[k], values_[k]};
  }

  index_iterator<csr_matrix_view> begin() const { return {this, 0}; }
  index_iterator<csr_matrix_view> end() const {
    return {this, static_cast<std::ptrdiff_t>(nnz_)};
  }

  csr_matrix_view local() const noexcept { return *this; }

private:
  extents shape_{0, 0};
  extents origin_{0, 0};
  const std::size_t *row_ptr_ = nullptr;
  const std::size_t *col_idx_ = nullptr;
  T *values_ = nullptr;
  std::size_t nnz_ = 0;
  locale_id rank_;
};

/// Block-CSR sparse matrix sharing the dense matrix's tiling rules. Duplicate
/// coordinates are summed at construction. Global iteration order is tile
/// row-major, then CSR order within each tile.
template <typename T> class distributed_sparse_matrix {
public:
  using value_type = T;
  using segment_type = csr_matrix_view<T>;
  using iterator = segment_cursor<segment_type>;

  distributed_sparse_matrix(segrange::runtime &rt, extents shape,
                            std::span<const matrix_entry<T>> entries,
                            tiling t = tiling::block_cyclic())
      : rt_(&rt), tiling_(resolve(t, shape, rt.locale_count())) {
    const auto tile_count = tiling_.tile_count();
    std::vector<std::vector<matrix_entry<T>>> buckets(tile_count);
    for (const auto &e : entries) {
      if (e.row >= shape[0] || e.col >= shape[1]) {
        throw index_out_of_bounds(
            "sparse entry (" + std::to_string(e.row) + ", " +
            std::to_string(e.col) + ") outside " + std::to_string(shape[0]) +
            "x" + std::to_string(shape[1]));
      }
      const auto ti = e.row / tiling_.tile_shape[0];
      const auto tj = e.col / tiling_.tile_shape[1];
      buckets[ti * tiling_.tile_grid[1] + tj].push_back(e);
    }

    tiles_.reserve(tile_count);
    for (std::size_t ti = 0; ti < tiling_.tile_grid[0]; ++ti) {
      for (std::size_t tj = 0; tj < tiling_.tile_grid[1]; ++tj) {
        tiles_.push_back(
            build_tile(ti, tj, buckets[ti * tiling_.tile_grid[1] + tj]));
      }
    }
  }

  distributed_sparse_matrix(distributed_sparse_matrix &&) noexcept = default;
  distributed_sparse_matrix &
  operator=(distributed_sparse_matrix &&) noexcept = default;

  extents shape() const noexcept { return tiling_.shape; }
  extents tile_shape() const noexcept { return tiling_.tile_shape; }
  extents grid_shape() const noexcept { return tiling_.tile_grid; }
  const resolved_tiling &tiling_info() const noexcept { return tiling_; }
  segrange::runtime &runtime() const noexcept { return *rt_; }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (const auto &t : tiles_) {
      n += t.values->size();
    }
    return n;
  }
  std::size_t nnz() const noexcept { return size(); }

  csr_matrix_view<T> tile(std::size_t i, std::size_t j) const {
    if (i >= tiling_.tile_grid[0] || j >= tiling_.tile_grid[1]) {
      throw index_out_of_bounds(
          "tile (" + std::to_string(i) + ", " + std::to_string(j) +
          ") outside tile grid");
    }
    const auto &t = tiles_[i * tiling_.tile_grid[1] + j];
    return {tiling_.tile_extents(i, j),
            {i * tiling_.tile_shape[0], j * tiling_.tile_shape[1]},
            t.row_ptr->data(),
            t.col_idx->data(),
            t.values->data(),
            t.values->size(),
            t.values->locale()};
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

  iterator begin() const {
    return iterator::begin(
        std::make_shared<const std::vector<segment_type>>(segments()));
  }
  iterator end() const {
    return iterator::end(
        std::make_shared<const std::vector<segment_type>>(segments()));
  }

private:
  struct csr_storage {
    owned_storage<std::size_t> row_ptr;
    owned_storage<std::size_t> col_idx;
    owned_storage<T> values;
  };

  csr_storage build_tile(std::size_t ti, std::size_t tj,
                         std::vector<matrix_entry<T>> &bucket) {
    const auto e = tiling_.tile_extents(ti, tj);
    const auto r0 = ti * tiling_.tile_shape[0];
    const auto c0 = tj * tiling_.tile_shape[1];
    const auto owner = tiling_.owner(ti, tj);

    std::sort(bucket.begin(), bucket.end(), [](const auto &a, const auto &b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<matrix_entry<T>> merged;
    merged.reserve(bucket.size());
    for (const auto &x : bucket) {
      if (!merged.empty() && merged.back().row == x.row &&
          merged.back().col == x.col) {
        merged.back().value += x.value;
      } else {
        merged.push_back(x);
      }
    }

    csr_storage s{
        owned_storage<std::size_t>(rt_->allocate<std::size_t>(owner, e[0] + 1)),
        owned_storage<std::size_t>(
            rt_->allocate<std::size_t>(owner, merged.size())),
        owned_storage<T>(rt_->allocate<T>(owner, merged.size()))};
    auto *row_ptr = s.row_ptr->data();
    auto *col_idx = s.col_idx->data();
    auto *values = s.values->data();
    for (std::size_t k = 0; k < merged.size(); ++k) {
      ++row_ptr[merged[k].row - r0 + 1];
      col_idx[k] = merged[k].col - c0;
      values[k] = merged[k].value;
    }
    for (std::size_t r = 0; r < e[0]; ++r) {
      row_ptr[r + 1] += row_ptr[r];
    }
    return s;
  }

  segrange::runtime *rt_;
  resolved_tiling tiling_;
  std::vector<csr_storage> tiles_;
};

} // namespace segrange
