// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "bench.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include <segrange/runtime/runtime.hpp>

namespace segrange::bench {

void write_csv(std::ostream &os, const std::vector<bench_result> &results) {
  os << csv_header << '\n';
  for (const auto &r : results) {
    for (std::size_t rep = 0; rep < r.seconds.size(); ++rep) {
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.9f", r.seconds[rep]);
      os << r.spec.name << ',' << r.spec.size << ',' << r.spec.locales << ','
         << rep << ',' << secs << ',' << hex64(r.checksum) << ','
         << (r.checked ? (r.verified ? "true" : "false") : "unchecked")
         << '\n';
    }
  }
}

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Segmented-range benchmark and verification harness",
               "drbench"};

  bench_spec spec;
  std::size_t size = 0;
  std::size_t locales = 0;
  std::string csv_path;
  std::string mode = "relaxed";

  app.add_option("--bench", spec.name, "Kernel to run")
      ->required()
      ->check(CLI::IsMember(bench_names()));
  app.add_option("--size", size,
                 "Elements (matrix dimension for gemm); default 1e7 / 512");
  app.add_option("--locales", locales,
                 "Locale count; default SEGRANGE_LOCALES or hardware threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--reps", spec.reps, "Timed repetitions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", spec.seed, "RNG seed")->capture_default_str();
  app.add_flag("--check", spec.check, "Verify against a sequential oracle");
  app.add_option("--mode", mode, "Zip mode")
      ->check(CLI::IsMember({"strict", "relaxed"}))
      ->capture_default_str();
  app.add_option("--csv", csv_path, "Write per-rep rows to this CSV file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "drbench: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    spec.size = app.count("--size") ? size : default_size(spec.name);
    spec.locales = locales ? locales : runtime::default_locale_count();
  } catch (const std::exception &e) {
    err << "drbench: " << e.what() << '\n';
    return 2;
  }
  spec.mode = mode == "strict" ? zip_mode::strict : zip_mode::relaxed;

  bench_result res;
  try {
    res = run_bench(spec);
  } catch (const std::exception &e) {
    err << "drbench: " << spec.name << " failed: " << e.what() << '\n';
    return 1;
  }

  for (std::size_t rep = 0; rep < res.seconds.size(); ++rep) {
    out << spec.name << " size=" << spec.size << " locales=" << spec.locales
        << " rep=" << rep << " seconds=" << res.seconds[rep] << '\n';
  }
  out << spec.name << " checksum=" << hex64(res.checksum);
  if (spec.name == "stream") {
    out << " bandwidth=" << res.bytes_per_second / 1e9 << " GB/s";
  }
  out << " verified="
      << (res.checked ? (res.verified ? "true" : "false") : "unchecked")
      << '\n';

  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) {
      err << "drbench: cannot write " << csv_path << '\n';
      return 2;
    }
    write_csv(f, {res});
  }
  return res.checked && !res.verified ? 1 : 0;
}

} // namespace segrange::bench
