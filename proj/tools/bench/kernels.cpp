// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>

#include <segrange/algorithms/algorithms.hpp>
#include <segrange/containers/dense_matrix.hpp>
#include <segrange/containers/distributed_vector.hpp>
#include <segrange/views/views.hpp>

namespace segrange::bench {

namespace {

using clock_type = std::chrono::steady_clock;

constexpr double scalar_tol = 1e-12;
constexpr double vector_tol = 1e-12;
constexpr double gemm_tol = 1e-10;
constexpr double triad_alpha = 3.0;
constexpr std::size_t gemm_full_check_limit = 512;
constexpr std::size_t gemm_sampled_entries = 256;

class data_source {
public:
  explicit data_source(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [lo, hi) from the top 53 bits of one draw.
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % span);
  }

  std::uint64_t bits() { return gen_(); }

  std::vector<double> doubles(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto &x : v) {
      x = uniform(lo, hi);
    }
    return v;
  }

private:
  std::mt19937_64 gen_;
};

template <typename T> std::vector<T> gather(runtime &rt, const distributed_vector<T> &v) {
  std::vector<T> out(v.size());
  copy(rt, v, out);
  return out;
}

template <typename T>
distributed_vector<T> scatter(runtime &rt, const std::vector<T> &v) {
  distributed_vector<T> out(rt, v.size());
  copy(rt, v, out);
  return out;
}

template <typename T> std::uint64_t checksum_of(std::span<const T> v) {
  fnv1a h;
  h.add_values(v);
  return h.value();
}

double median(std::vector<double> v) {
  if (v.empty()) {
    return 0.0;
  }
  std::sort(v.begin(), v.end());
  const auto m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

/// Times reps calls of kernel; prepare runs untimed before each.
template <typename Prepare, typename Kernel>
std::vector<double> timed(std::size_t reps, Prepare prepare, Kernel kernel) {
  std::vector<double> out;
  for (std::size_t r = 0; r < reps; ++r) {
    prepare();
    const auto t0 = clock_type::now();
    kernel();
    const auto t1 = clock_type::now();
    out.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  return out;
}

void run_dot(const bench_spec &s, runtime &rt, bench_result &res) {
  data_source src(s.seed);
  const auto xs = src.doubles(s.size, 0.0, 1.0);
  const auto ys = src.doubles(s.size, 0.0, 1.0);
  auto x = scatter(rt, xs);
  auto y = scatter(rt, ys);

  double result = 0.0;
  res.seconds = timed(s.reps, [] {}, [&] {
    auto products = views::zip(x, y) | views::transform(std::multiplies<>{});
    result = reduce(rt, products, 0.0);
  });
  res.checksum = checksum_of(std::span<const double>(&result, 1));

  if (s.check) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < s.size; ++i) {
      acc += static_cast<long double>(xs[i]) * ys[i];
    }
    res.verified = close_relative(result, static_cast<double>(acc), scalar_tol);
  }
}

void run_reduce(const bench_spec &s, runtime &rt, bench_result &res) {
  data_source src(s.seed);
  std::vector<std::int64_t> host(s.size);
  for (auto &v : host) {
    v = src.integer(-1'000'000, 1'000'000);
  }
  auto v = scatter(rt, host);

  std::int64_t result = 0;
  res.seconds = timed(s.reps, [] {}, [&] {
    result = reduce(rt, v, std::int64_t{0});
  });
  res.checksum = checksum_of(std::span<const std::int64_t>(&result, 1));

  if (s.check) {
    std::int64_t acc = 0;
    for (auto x : host) {
      acc += x;
    }
    res.verified = result == acc;
  }
}

void run_inclusive_scan(const bench_spec &s, runtime &rt, bench_result &res) {
  data_source src(s.seed);
  std::vector<std::int64_t> host(s.size);
  for (auto &v : host) {
    v = src.integer(-1'000'000, 1'000'000);
  }
  auto in = scatter(rt, host);
  distributed_vector<std::int64_t> out(rt, s.size);

  res.seconds = timed(s.reps, [] {}, [&] { inclusive_scan(rt, in, out); });
  const auto got = gather(rt, out);
  res.checksum = checksum_of(std::span<const std::int64_t>(got));

  if (s.check) {
    std::vector<std::int64_t> expect(s.size);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < s.size; ++i) {
      acc += host[i];
      expect[i] = acc;
    }
    res.verified = got == expect &&
                   (s.size == 0 || got.back() == reduce(rt, in, std::int64_t{0}));
  }
}

void run_black_scholes(const bench_spec &s, runtime &rt, bench_result &res) {
  data_source src(s.seed);
  const auto spot = src.doubles(s.size, 50.0, 150.0);
  const auto strike = src.doubles(s.size, 50.0, 150.0);
  const auto rate = src.doubles(s.size, 0.0, 0.1);
  const auto vol = src.doubles(s.size, 0.05, 0.5);
  const auto expiry = src.doubles(s.size, 0.1, 2.0);
  auto S = scatter(rt, spot);
  auto K = scatter(rt, strike);
  auto R = scatter(rt, rate);
  auto V = scatter(rt, vol);
  auto T = scatter(rt, expiry);
  distributed_vector<double> C(rt, s.size);

  res.seconds = timed(s.reps, [] {}, [&] {
    for_each(rt, views::zip(S, K, R, V, T, C),
             [](double s0, double k, double r, double v, double t, double &c) {
               c = black_scholes_call(s0, k, r, v, t);
             });
  });
  const auto got = gather(rt, C);
  res.checksum = checksum_of(std::span<const double>(got));

  if (s.check) {
    // Normal CDF through erf rather than erfc, written out independently.
    std::vector<double> expect(s.size);
    for (std::size_t i = 0; i < s.size; ++i) {
      const double sq = vol[i] * std::sqrt(expiry[i]);
      const double d1 = (std::log(spot[i] / strike[i]) +
                         (rate[i] + 0.5 * vol[i] * vol[i]) * expiry[i]) /
                        sq;
      const double d2 = d1 - sq;
      const double n1 = 0.5 * (1.0 + std::erf(d1 / std::sqrt(2.0)));
      const double n2 = 0.5 * (1.0 + std::erf(d2 / std::sqrt(2.0)));
      expect[i] = spot[i] * n1 - strike[i] * std::exp(-rate[i] * expiry[i]) * n2;
    }
    res.verified = close_normwise(got, expect, vector_tol);
  }
}

void run_stream(const bench_spec &s, runtime &rt, bench_result &res) {
  data_source src(s.seed);
  const auto bs = src.doubles(s.size, 0.0, 1.0);
  const auto cs = src.doubles(s.size, 0.0, 1.0);
  distributed_vector<double> a(rt, s.size);
  auto b = scatter(rt, bs);
  auto c = scatter(rt, cs);

  res.seconds = timed(s.reps, [] {}, [&] {
    for_each(rt, views::zip(a, b, c), [](double &x, double y, double z) {
      x = y + triad_alpha * z;
    });
  });
  const auto m = median(res.seconds);
  res.bytes_per_second =
      m > 0 ? 3.0 * sizeof(double) * static_cast<double>(s.size) / m : 0.0;
  const auto got = gather(rt, a);
  res.checksum = checksum_of(std::span<const double>(got));

  if (s.check) {
    std::vector<double> expect(s.size);
    for (std::size_t i = 0; i < s.size; ++i) {
      expect[i] = bs[i] + triad_alpha * cs[i];
    }
    res.verified = close_normwise(got, expect, vector_tol);
  }
}

tiling gemm_tiling(std::size_t d, std::size_t p) {
  const auto grid = squarest_grid(p);
  const auto per = std::max(grid[0], grid[1]);
  const auto t = std::max<std::size_t>(
      1, std::min<std::size_t>(128, (d + 2 * per - 1) / (2 * per)));
  return tiling::block_cyclic({t, t}, grid);
}

/// C = A * B, one task per C tile on its owner.
void gemm(runtime &rt, const distributed_dense_matrix<double> &a,
          const distributed_dense_matrix<double> &b,
          distributed_dense_matrix<double> &c) {
  const auto grid = c.grid_shape();
  const auto kt = a.grid_shape()[1];
  std::vector<ticket<void>> tasks;
  for (std::size_t i = 0; i < grid[0]; ++i) {
    for (std::size_t j = 0; j < grid[1]; ++j) {
      const auto out = c.tile(i, j);
      tasks.push_back(rt.submit(out.rank(), [&a, &b, out, i, j, kt] {
        std::vector<ticket<dense_matrix<double>>> as, bs;
        for (std::size_t k = 0; k < kt; ++k) {
          as.push_back(a.get_tile_async(i, k));
          bs.push_back(b.get_tile_async(k, j));
        }
        dense_matrix<double> acc(out.rows(), out.cols());
        for (std::size_t k = 0; k < kt; ++k) {
          const auto &at = as[k].wait();
          const auto &bt = bs[k].wait();
          for (std::size_t r = 0; r < at.rows(); ++r) {
            for (std::size_t q = 0; q < at.cols(); ++q) {
              const double x = at(r, q);
              for (std::size_t col = 0; col < bt.cols(); ++col) {
                acc(r, col) += x * bt(q, col);
              }
            }
          }
        }
        for (std::size_t r = 0; r < out.rows(); ++r) {
          for (std::size_t col = 0; col < out.cols(); ++col) {
            out(r, col) = acc(r, col);
          }
        }
      }));
    }
  }
  wait_all(tasks);
}

dense_matrix<double> gather_matrix(const distributed_dense_matrix<double> &m) {
  dense_matrix<double> out(m.shape()[0], m.shape()[1]);
  for (std::size_t i = 0; i < m.grid_shape()[0]; ++i) {
    for (std::size_t j = 0; j < m.grid_shape()[1]; ++j) {
      const auto t = m.get_tile(i, j);
      const auto r0 = i * m.tile_shape()[0];
      const auto c0 = j * m.tile_shape()[1];
      for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < t.cols(); ++c) {
          out(r0 + r, c0 + c) = t(r, c);
        }
      }
    }
  }
  return out;
}

void run_gemm(const bench_spec &s, runtime &rt, bench_result &res) {
  const auto d = s.size;
  data_source src(s.seed);
  const auto ha = src.doubles(d * d, -1.0, 1.0);
  const auto hb = src.doubles(d * d, -1.0, 1.0);
  const auto t = gemm_tiling(d, rt.locale_count());
  distributed_dense_matrix<double> a(rt, {d, d}, t);
  distributed_dense_matrix<double> b(rt, {d, d}, t);
  distributed_dense_matrix<double> c(rt, {d, d}, t);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a(i, j).write(ha[i * d + j]);
      b(i, j).write(hb[i * d + j]);
    }
  }

  res.seconds = timed(s.reps, [] {}, [&] { gemm(rt, a, b, c); });
  const auto got = gather_matrix(c);
  res.checksum = checksum_of(got.span());

  if (s.check) {
    auto entry = [&](std::size_t i, std::size_t j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        acc += ha[i * d + k] * hb[k * d + j];
      }
      return acc;
    };
    std::vector<double> expect, actual;
    if (d <= gemm_full_check_limit) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          expect.push_back(entry(i, j));
          actual.push_back(got(i, j));
        }
      }
    } else {
      data_source pick(s.seed ^ 0x9e3779b97f4a7c15ull);
      for (std::size_t e = 0; e < gemm_sampled_entries; ++e) {
        const auto i = pick.bits() % d;
        const auto j = pick.bits() % d;
        expect.push_back(entry(i, j));
        actual.push_back(got(i, j));
      }
    }
    res.verified = close_normwise(actual, expect, gemm_tol);
  }
}

void run_sort(const bench_spec &s, runtime &rt, bench_result &res) {
  data_source src(s.seed);
  std::vector<std::uint64_t> host(s.size);
  for (auto &v : host) {
    v = src.bits();
  }
  distributed_vector<std::uint64_t> v(rt, s.size);

  res.seconds = timed(s.reps, [&] { copy(rt, host, v); },
                      [&] { sort(rt, v); });
  const auto got = gather(rt, v);
  res.checksum = checksum_of(std::span<const std::uint64_t>(got));

  if (s.check) {
    auto expect = host;
    std::sort(expect.begin(), expect.end());
    res.verified = got == expect;
  }
}

} // namespace

const std::vector<std::string> &bench_names() {
  static const std::vector<std::string> names = {
      "dot", "reduce", "inclusive_scan", "black_scholes", "stream", "gemm",
      "sort"};
  return names;
}

std::size_t default_size(const std::string &name) {
  return name == "gemm" ? 512 : 10'000'000;
}

bench_result run_bench(const bench_spec &spec) {
  if (spec.reps == 0) {
    throw std::invalid_argument("reps must be >= 1");
  }
  bench_result res;
  res.spec = spec;
  res.checked = spec.check;
  scoped_zip_mode mode(spec.mode);
  runtime rt(spec.locales);

  if (spec.name == "dot") {
    run_dot(spec, rt, res);
  } else if (spec.name == "reduce") {
    run_reduce(spec, rt, res);
  } else if (spec.name == "inclusive_scan") {
    run_inclusive_scan(spec, rt, res);
  } else if (spec.name == "black_scholes") {
    run_black_scholes(spec, rt, res);
  } else if (spec.name == "stream") {
    run_stream(spec, rt, res);
  } else if (spec.name == "gemm") {
    run_gemm(spec, rt, res);
  } else if (spec.name == "sort") {
    run_sort(spec, rt, res);
  } else {
    throw std::invalid_argument("unknown bench '" + spec.name + "'");
  }
  return res;
}

double black_scholes_call(double spot, double strike, double rate,
                          double volatility, double expiry) {
  const double discounted = strike * std::exp(-rate * expiry);
  const double sq = volatility * std::sqrt(expiry);
  if (sq == 0.0) {
    return std::max(spot - discounted, 0.0);
  }
  const double d1 =
      (std::log(spot / strike) + (rate + 0.5 * volatility * volatility) * expiry) /
      sq;
  const double d2 = d1 - sq;
  auto phi = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
  return spot * phi(d1) - discounted * phi(d2);
}

bool close_relative(double a, double b, double tol) {
  if (a == b) {
    return true;
  }
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

bool close_normwise(std::span<const double> a, std::span<const double> b,
                    double tol) {
  if (a.size() != b.size()) {
    return false;
  }
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(b[i]));
  }
  return diff <= tol * scale;
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

} // namespace segrange::bench
