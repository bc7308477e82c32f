// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <type_traits>
#include <vector>

#include <segrange/algorithms/copy.hpp>
#include <segrange/algorithms/detail.hpp>
#include <segrange/containers/distributed_vector.hpp>

namespace segrange {

namespace detail {

template <typename Out>
using output_value_t =
    std::remove_cvref_t<decltype(std::declval<const segment_t<Out> &>()[0])>;

/// Scan for in/out with identical segmentation. Returns each segment's fold
/// (the last element of its local scan), empty segments giving nullopt.
template <typename In, typename Out, typename Op>
auto inclusive_scan_aligned(runtime &rt, In &in, Out &out, Op op) {
  using V = output_value_t<Out>;
  const auto is = segment_list(in);
  const auto os = segment_list(out);

  std::vector<ticket<std::optional<V>>> local;
  for (std::size_t k = 0; k < is.size(); ++k) {
    local.push_back(rt.submit(task_locale(os[k]), [i = is[k], o = os[k], op] {
      const auto n = seg_size(o);
      if (n == 0) {
        return std::optional<V>();
      }
      V acc = static_cast<V>(read_value(i[0]));
      o[0] = acc;
      for (std::size_t j = 1; j < n; ++j) {
        acc = static_cast<V>(op(acc, read_value(i[j])));
        o[j] = acc;
      }
      return std::optional<V>(acc);
    }));
  }
  auto partials = wait_all(local);

  std::vector<ticket<void>> offsets;
  std::optional<V> carry;
  for (std::size_t k = 0; k < os.size(); ++k) {
    if (carry && partials[k]) {
      offsets.push_back(rt.submit(task_locale(os[k]), [o = os[k], off = *carry,
                                                       op] {
        const auto n = seg_size(o);
        for (std::size_t j = 0; j < n; ++j) {
          o[j] = static_cast<V>(op(off, o[j]));
        }
      }));
    }
    if (partials[k]) {
      carry = carry ? static_cast<V>(op(*carry, *partials[k])) : *partials[k];
    }
  }
  wait_all(offsets);
  return partials;
}

template <typename In, typename Out, typename T, typename Op>
void exclusive_scan_aligned(runtime &rt, In &in, Out &out, T init, Op op) {
  using V = output_value_t<Out>;
  const auto is = segment_list(in);
  const auto os = segment_list(out);

  std::vector<ticket<std::optional<V>>> folds;
  for (const auto &i : is) {
    folds.push_back(rt.submit(task_locale(i), [i, op] {
      const auto n = seg_size(i);
      if (n == 0) {
        return std::optional<V>();
      }
      V acc = static_cast<V>(read_value(i[0]));
      for (std::size_t j = 1; j < n; ++j) {
        acc = static_cast<V>(op(acc, read_value(i[j])));
      }
      return std::optional<V>(acc);
    }));
  }
  const auto partials = wait_all(folds);

  std::vector<ticket<void>> passes;
  V offset = static_cast<V>(init);
  for (std::size_t k = 0; k < os.size(); ++k) {
    if (seg_size(os[k]) > 0) {
      passes.push_back(rt.submit(task_locale(os[k]), [i = is[k], o = os[k],
                                                      offset, op] {
        const auto n = seg_size(o);
        V acc = offset;
        for (std::size_t j = 0; j < n; ++j) {
          V next = static_cast<V>(op(acc, read_value(i[j])));
          o[j] = acc;
          acc = next;
        }
      }));
    }
    if (partials[k]) {
      offset = static_cast<V>(op(offset, *partials[k]));
    }
  }
  wait_all(passes);
}

template <typename Out>
auto staging_buffer(runtime &rt, Out &out) {
  return distributed_vector<output_value_t<Out>>(rt, distribution_of(out));
}

} // namespace detail

/// out[i] = in[0] op ... op in[i]. When in and out are segmented alike the
/// scan writes out directly; otherwise in is first staged into a buffer
/// laid out like out. In-place use (in and out the same range) is allowed.
template <segmented_range In, segmented_range Out, typename Op = std::plus<>>
void inclusive_scan(runtime &rt, In &&in, Out &&out, Op op = {}) {
  if (in.size() != out.size()) {
    throw length_mismatch(out.size(), in.size());
  }
  if (detail::same_shape(detail::segment_list(in),
                         detail::segment_list(out))) {
    detail::inclusive_scan_aligned(rt, in, out, op);
  } else {
    auto tmp = detail::staging_buffer(rt, out);
    copy(rt, in, tmp);
    detail::inclusive_scan_aligned(rt, tmp, out, op);
  }
}

/// out[0] = init; out[i] = init op in[0] op ... op in[i-1].
template <segmented_range In, segmented_range Out, typename T,
          typename Op = std::plus<>>
void exclusive_scan(runtime &rt, In &&in, Out &&out, T init, Op op = {}) {
  if (in.size() != out.size()) {
    throw length_mismatch(out.size(), in.size());
  }
  if (detail::same_shape(detail::segment_list(in),
                         detail::segment_list(out))) {
    detail::exclusive_scan_aligned(rt, in, out, init, op);
  } else {
    auto tmp = detail::staging_buffer(rt, out);
    copy(rt, in, tmp);
    detail::exclusive_scan_aligned(rt, tmp, out, init, op);
  }
}

} // namespace segrange
