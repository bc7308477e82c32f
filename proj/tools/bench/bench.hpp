// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <cstring>
#include <iosfwd>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <segrange/views/view_base.hpp>

namespace segrange::bench {

struct bench_spec {
  std::string name;
  std::size_t size = 0;
  std::size_t locales = 1;
  std::size_t reps = 3;
  std::uint64_t seed = 1;
  bool check = false;
  zip_mode mode = zip_mode::relaxed;
};

struct bench_result {
  bench_spec spec;
  std::vector<double> seconds;
  std::uint64_t checksum = 0;
  bool checked = false;
  bool verified = false;
  /// Effective bandwidth of the median rep (stream only, else 0).
  double bytes_per_second = 0.0;
};

/// Names accepted by run_bench, in display order.
const std::vector<std::string> &bench_names();

/// Default problem size: 512 for gemm, 10^7 elements otherwise.
std::size_t default_size(const std::string &name);

/// Runs spec.reps timed repetitions of one kernel on a fresh runtime with
/// spec.locales locales. Data generation and verification are not timed.
bench_result run_bench(const bench_spec &spec);

/// CLI entry point; args excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

inline constexpr char csv_header[] =
    "bench,size,locales,rep,seconds,checksum,verified";

void write_csv(std::ostream &os, const std::vector<bench_result> &results);

/// FNV-1a 64 over bytes.
class fnv1a {
public:
  void add(std::span<const unsigned char> bytes) noexcept {
    for (auto b : bytes) {
      h_ ^= b;
      h_ *= 0x100000001b3ull;
    }
  }

  /// Adds the little-endian encoding of a trivially copyable value.
  template <typename T> void add_value(const T &v) noexcept {
    static_assert(std::is_trivially_copyable_v<T>);
    std::uint64_t bits = 0;
    static_assert(sizeof(T) <= sizeof(bits));
    std::memcpy(&bits, &v, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      const auto b = static_cast<unsigned char>(bits >> (8 * i));
      add({&b, 1});
    }
  }

  template <typename T> void add_values(std::span<const T> vs) noexcept {
    for (const auto &v : vs) {
      add_value(v);
    }
  }

  std::uint64_t value() const noexcept { return h_; }

private:
  std::uint64_t h_ = 0xcbf29ce484222325ull;
};

std::string hex64(std::uint64_t v);

/// European call price from the closed form; sigma*sqrt(T) == 0 gives the
/// discounted intrinsic value.
double black_scholes_call(double spot, double strike, double rate,
                          double volatility, double expiry);

/// |a - b| <= tol * max(|a|, |b|), with equal values always passing.
bool close_relative(double a, double b, double tol);

/// max |a_i - b_i| <= tol * max |b_i|.
bool close_normwise(std::span<const double> a, std::span<const double> b,
                    double tol);

} // namespace segrange::bench
