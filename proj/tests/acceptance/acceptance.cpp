// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one [PASS]/[FAIL]/[SKIP] line per criterion. Exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "properties.hpp"

using namespace segrange;
using namespace segrange::testing;

namespace {

// Pinned thresholds.
constexpr double oracle_budget_seconds = 300.0;
constexpr double min_speedup = 1.5;
constexpr unsigned min_cores_for_scaling = 4;
constexpr std::size_t scaling_n = 30'000'000;
constexpr std::size_t scaling_reps = 5;

int failures = 0;

void report(const char *status, const std::string &name,
            const std::string &detail) {
  std::cout << '[' << status << "] " << name;
  if (!detail.empty()) {
    std::cout << ": " << detail;
  }
  std::cout << std::endl;
}

void verdict(const std::string &name, const outcome &o,
             const std::string &extra = {}) {
  auto detail = std::to_string(o.cases) + " cases";
  if (!extra.empty()) {
    detail += ", " + extra;
  }
  if (!o.ok) {
    detail += ", first failure: " + o.detail;
    ++failures;
  }
  report(o.ok ? "PASS" : "FAIL", name, detail);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void oracle_equivalence() {
  const std::vector<std::size_t> ns{0, 1, 2, 3, 5, 8, 17, 1000, 1'000'000};
  const std::vector<std::size_t> ds{0, 1, 4, 32, 128, 512};
  const std::vector<std::size_t> ps{1, 2, 3, 4, 7};
  const auto t0 = std::chrono::steady_clock::now();
  auto algorithms = algorithm_oracle_suite(ns, ps);
  const auto benches = bench_oracle_suite(ns, ds, ps);
  const double elapsed = seconds_since(t0);
  outcome all = algorithms;
  all.cases += benches.cases;
  if (!benches.ok) {
    all.fail(benches.detail);
  }
  if (elapsed >= oracle_budget_seconds) {
    all.fail("took " + std::to_string(elapsed) + " s");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f s of %.0f s budget", elapsed,
                oracle_budget_seconds);
  verdict("oracle equivalence (algorithms and bench kernels)", all, buf);
}

void scaling_sanity() {
  auto median_seconds = [](std::size_t p) {
    bench::bench_spec s;
    s.name = "stream";
    s.size = scaling_n;
    s.locales = p;
    s.reps = scaling_reps;
    s.seed = 1;
    auto times = bench::run_bench(s).seconds;
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
  };
  const double t1 = median_seconds(1);
  const double t4 = median_seconds(4);
  const double speedup = t1 / t4;
  const unsigned cores = std::thread::hardware_concurrency();
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "stream n=%zu median of %zu: P=1 %.4f s, P=4 %.4f s, "
                "speedup %.2fx (need %.1fx), %u hardware threads",
                scaling_n, scaling_reps, t1, t4, speedup, min_speedup, cores);
  if (cores < min_cores_for_scaling) {
    report("SKIP", "scaling sanity",
           std::string(buf) + "; host has fewer than 4 cores");
  } else if (speedup >= min_speedup) {
    report("PASS", "scaling sanity", buf);
  } else {
    ++failures;
    report("FAIL", "scaling sanity", buf);
  }
}

std::vector<std::string> checksum_column(const std::filesystem::path &csv) {
  std::ifstream in(csv);
  std::string line;
  std::vector<std::string> out;
  std::getline(in, line);
  while (std::getline(in, line)) {
    // bench,size,locales,rep,seconds,checksum,verified
    std::size_t pos = 0;
    for (int i = 0; i < 5; ++i) {
      pos = line.find(',', pos) + 1;
    }
    out.push_back(line.substr(pos, line.find(',', pos) - pos));
  }
  return out;
}

void determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  std::vector<std::vector<std::string>> runs;
  outcome o;
  for (int run = 0; run < 2; ++run) {
    const auto csv = dir / ("segrange_determinism_" + std::to_string(run) +
                            ".csv");
    const std::string cmd = std::string("\"") + DRBENCH_PATH +
                            "\" --bench sort --size 100000 --locales 4 "
                            "--seed 9 --check --csv \"" +
                            csv.string() + "\" > /dev/null";
    if (std::system(cmd.c_str()) != 0) {
      o.fail("drbench exited nonzero");
    }
    runs.push_back(checksum_column(csv));
    std::filesystem::remove(csv);
    ++o.cases;
  }
  if (runs[0].empty()) {
    o.fail("no checksum rows");
  } else if (runs[0] != runs[1]) {
    o.fail("checksum columns differ");
  }
  verdict("determinism of drbench sort checksums", o,
          runs[0].empty() ? "" : "checksum " + runs[0][0]);
}

} // namespace

int main() {
  oracle_equivalence();
  verdict("view concatenation law (1000 compositions)",
          view_composition_law(1000, 2024));

  std::size_t aligned = 0;
  const auto realign = realign_property(500, 77, &aligned);
  verdict("zip realignment and strict mode (500 pairs)", realign,
          std::to_string(aligned) + " aligned pairs");

  verdict("scan partial sums white-box (100 instances)",
          scan_partials_property(100, 31));
  verdict("sort on adversarial inputs (n=100000, P in {1,4,7})",
          sort_property(100'000, {1, 4, 7}, 5));
  scaling_sanity();
  determinism();
  return failures == 0 ? 0 : 1;
}
