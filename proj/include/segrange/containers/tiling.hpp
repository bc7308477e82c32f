// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>

#include <segrange/core/locale.hpp>

namespace segrange {

using extents = std::array<std::size_t, 2>;

enum class tiling_kind { block_cyclic, block_row, block_column, explicit_grid };

/// How a matrix is cut into tiles and how tiles map onto locales. Zero
/// components are filled in when the tiling is resolved against a shape.
struct tiling {
  tiling_kind kind = tiling_kind::block_cyclic;
  extents tile_shape{0, 0};
  extents processor_grid{0, 0};

  /// Default: squarest processor grid, one tile per processor.
  static tiling block_cyclic() { return {}; }
  static tiling block_cyclic(extents tile_shape, extents processor_grid = {}) {
    return {tiling_kind::block_cyclic, tile_shape, processor_grid};
  }
  /// ceil(m/P) x k row bands on a P x 1 grid.
  static tiling block_row() { return {tiling_kind::block_row, {}, {}}; }
  /// m x ceil(k/P) column bands on a 1 x P grid.
  static tiling block_column() { return {tiling_kind::block_column, {}, {}}; }
  /// Caller supplies both the tile shape and the processor grid.
  static tiling explicit_grid(extents tile_shape, extents processor_grid) {
    return {tiling_kind::explicit_grid, tile_shape, processor_grid};
  }
};

/// A tiling bound to a concrete matrix shape and locale count.
struct resolved_tiling {
  extents shape{0, 0};
  extents tile_shape{1, 1};
  extents processor_grid{1, 1};
  extents tile_grid{0, 0};

  /// 2-D block-cyclic owner rule: (i mod pr) * pc + (j mod pc).
  locale_id owner(std::size_t i, std::size_t j) const noexcept {
    return locale_id{(i % processor_grid[0]) * processor_grid[1] +
                     (j % processor_grid[1])};
  }

  /// Rows and columns of tile (i, j), clipped to the matrix bounds.
  extents tile_extents(std::size_t i, std::size_t j) const noexcept;

  std::size_t tile_count() const noexcept {
    return tile_grid[0] * tile_grid[1];
  }
};

/// Squarest factorization rows x cols of p with rows >= cols.
extents squarest_grid(std::size_t p);

/// Throws std::invalid_argument for an unusable descriptor.
resolved_tiling resolve(const tiling &t, extents shape,
                        std::size_t locale_count);

} // namespace segrange
