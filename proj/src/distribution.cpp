// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <segrange/core/distribution.hpp>

#include <algorithm>
#include <stdexcept>

namespace segrange {

distribution::distribution(std::span<const locale_id> ranks,
                           std::span<const std::size_t> lengths) {
  if (ranks.size() != lengths.size()) {
    throw std::invalid_argument("distribution: ranks and lengths differ");
  }
  descriptors_.reserve(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    descriptors_.push_back({ranks[i], total_length_, lengths[i]});
    total_length_ += lengths[i];
  }
}

distribution distribution::block(std::size_t n, std::size_t p,
                                 std::size_t locale_count) {
  if (p == 0 || locale_count == 0) {
    throw std::invalid_argument("distribution: segment count must be >= 1");
  }
  distribution d;
  if (n == 0) {
    return d;
  }
  const std::size_t s = (n + p - 1) / p;
  d.descriptors_.reserve(p);
  for (std::size_t i = 0; i < p; ++i) {
    const std::size_t start = i * s;
    const std::size_t len = start >= n ? 0 : std::min(s, n - start);
    d.descriptors_.push_back(
        {locale_id{i % locale_count}, std::min(start, n), len});
  }
  d.total_length_ = n;
  return d;
}

std::vector<std::size_t> distribution::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(descriptors_.size());
  for (const auto &d : descriptors_) {
    out.push_back(d.length);
  }
  return out;
}

std::vector<locale_id> distribution::ranks() const {
  std::vector<locale_id> out;
  out.reserve(descriptors_.size());
  for (const auto &d : descriptors_) {
    out.push_back(d.rank);
  }
  return out;
}

std::vector<std::size_t> distribution::boundaries() const {
  std::vector<std::size_t> out;
  for (const auto &d : descriptors_) {
    if (d.global_offset > 0 && d.global_offset < total_length_ &&
        (out.empty() || out.back() != d.global_offset)) {
      out.push_back(d.global_offset);
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> distribution::locate(std::size_t i) const {
  if (i >= total_length_) {
    throw index_out_of_bounds(i, total_length_);
  }
  // Last descriptor starting at or before i that is non-empty.
  auto it = std::upper_bound(
      descriptors_.begin(), descriptors_.end(), i,
      [](std::size_t v, const segment_descriptor &d) {
        return v < d.global_offset;
      });
  --it;
  while (it->length == 0) {
    --it;
  }
  return {static_cast<std::size_t>(it - descriptors_.begin()),
          i - it->global_offset};
}

} // namespace segrange
