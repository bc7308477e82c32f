// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <segrange/containers/tiling.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace segrange {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::string describe(extents e) {
  return std::to_string(e[0]) + "x" + std::to_string(e[1]);
}

} // namespace

extents resolved_tiling::tile_extents(std::size_t i,
                                      std::size_t j) const noexcept {
  const std::size_t r0 = i * tile_shape[0];
  const std::size_t c0 = j * tile_shape[1];
  return {std::min(tile_shape[0], shape[0] - r0),
          std::min(tile_shape[1], shape[1] - c0)};
}

extents squarest_grid(std::size_t p) {
  std::size_t cols = 1;
  for (std::size_t d = 1; d * d <= p; ++d) {
    if (p % d == 0) {
      cols = d;
    }
  }
  return {p / cols, cols};
}

resolved_tiling resolve(const tiling &t, extents shape,
                        std::size_t locale_count) {
  if (locale_count == 0) {
    throw std::invalid_argument("tiling: locale count must be >= 1");
  }
  resolved_tiling r;
  r.shape = shape;
  const auto m = shape[0];
  const auto k = shape[1];

  switch (t.kind) {
  case tiling_kind::block_row:
    r.processor_grid = {locale_count, 1};
    r.tile_shape = {std::max<std::size_t>(1, ceil_div(m, locale_count)),
                    std::max<std::size_t>(1, k)};
    break;
  case tiling_kind::block_column:
    r.processor_grid = {1, locale_count};
    r.tile_shape = {std::max<std::size_t>(1, m),
                    std::max<std::size_t>(1, ceil_div(k, locale_count))};
    break;
  case tiling_kind::block_cyclic:
    r.processor_grid = (t.processor_grid[0] == 0 || t.processor_grid[1] == 0)
                           ? squarest_grid(locale_count)
                           : t.processor_grid;
    r.tile_shape =
        (t.tile_shape[0] == 0 || t.tile_shape[1] == 0)
            ? extents{std::max<std::size_t>(
                          1, ceil_div(m, r.processor_grid[0])),
                      std::max<std::size_t>(
                          1, ceil_div(k, r.processor_grid[1]))}
            : t.tile_shape;
    break;
  case tiling_kind::explicit_grid:
    if (t.tile_shape[0] == 0 || t.tile_shape[1] == 0) {
      throw std::invalid_argument("tiling: explicit tile shape " +
                                  describe(t.tile_shape) + " must be >= 1");
    }
    if (t.processor_grid[0] == 0 || t.processor_grid[1] == 0) {
      throw std::invalid_argument("tiling: explicit processor grid " +
                                  describe(t.processor_grid) +
                                  " must be >= 1");
    }
    r.processor_grid = t.processor_grid;
    r.tile_shape = t.tile_shape;
    break;
  }

  if (r.processor_grid[0] * r.processor_grid[1] > locale_count) {
    throw std::invalid_argument(
        "tiling: processor grid " + describe(r.processor_grid) +
        " needs more than " + std::to_string(locale_count) + " locales");
  }
  r.tile_grid = {ceil_div(m, r.tile_shape[0]), ceil_div(k, r.tile_shape[1])};
  return r;
}

} // namespace segrange
