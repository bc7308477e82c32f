// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <segrange/views/zip.hpp>

#include <numeric>

namespace segrange {

std::vector<realign_piece>
realign_plan(const std::vector<std::vector<std::size_t>> &lengths) {
  std::vector<realign_piece> out;
  const auto k = lengths.size();
  if (k == 0) {
    return out;
  }

  const auto total0 =
      std::accumulate(lengths[0].begin(), lengths[0].end(), std::size_t{0});
  bool identical = true;
  for (std::size_t b = 1; b < k; ++b) {
    const auto t =
        std::accumulate(lengths[b].begin(), lengths[b].end(), std::size_t{0});
    if (t != total0) {
      throw length_mismatch(total0, t);
    }
    identical = identical && lengths[b] == lengths[0];
  }

  if (identical) {
    for (std::size_t i = 0; i < lengths[0].size(); ++i) {
      out.push_back({std::vector<std::size_t>(k, i),
                     std::vector<std::size_t>(k, 0), lengths[0][i]});
    }
    return out;
  }

  std::vector<std::size_t> seg(k, 0);
  std::vector<std::size_t> off(k, 0);
  for (;;) {
    std::size_t len = static_cast<std::size_t>(-1);
    for (std::size_t b = 0; b < k; ++b) {
      while (seg[b] < lengths[b].size() && off[b] >= lengths[b][seg[b]]) {
        ++seg[b];
        off[b] = 0;
      }
      if (seg[b] == lengths[b].size()) {
        return out;
      }
      len = std::min(len, lengths[b][seg[b]] - off[b]);
    }
    out.push_back({seg, off, len});
    for (std::size_t b = 0; b < k; ++b) {
      off[b] += len;
    }
  }
}

std::vector<std::size_t>
realign_lengths(const std::vector<std::vector<std::size_t>> &lengths) {
  std::vector<std::size_t> out;
  for (const auto &p : realign_plan(lengths)) {
    out.push_back(p.length);
  }
  return out;
}

} // namespace segrange
