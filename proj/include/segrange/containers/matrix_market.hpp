// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <segrange/containers/dense_matrix.hpp>
#include <segrange/containers/sparse_matrix.hpp>

namespace segrange {

class matrix_market_error : public std::runtime_error {
public:
  matrix_market_error(std::size_t line, const std::string &what)
      : std::runtime_error("matrix market line " + std::to_string(line) +
                           ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Coordinate-format matrix with 0-based indices.
struct coo_matrix {
  extents shape{0, 0};
  std::vector<matrix_entry<double>> entries;
};

/// Parses `%%MatrixMarket matrix coordinate <real|integer|pattern>
/// <general|symmetric|skew-symmetric>`. Symmetric storage is expanded to
/// both triangles; pattern entries get value 1.
coo_matrix read_matrix_market(std::istream &in);
coo_matrix read_matrix_market(const std::filesystem::path &path);

template <typename T>
distributed_sparse_matrix<T>
load_matrix_market(runtime &rt, const std::filesystem::path &path,
                   tiling t = tiling::block_cyclic()) {
  const auto coo = read_matrix_market(path);
  std::vector<matrix_entry<T>> entries;
  entries.reserve(coo.entries.size());
  for (const auto &e : coo.entries) {
    entries.push_back({e.row, e.col, static_cast<T>(e.value)});
  }
  return distributed_sparse_matrix<T>(rt, coo.shape, entries, t);
}

} // namespace segrange
