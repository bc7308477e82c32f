// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <segrange/containers/matrix_market.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace segrange {

namespace {

enum class field_kind { real, integer, pattern };
enum class symmetry_kind { general, symmetric, skew_symmetric };

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool blank(const std::string &s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

} // namespace

coo_matrix read_matrix_market(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) {
    throw matrix_market_error(1, "empty input");
  }
  ++lineno;

  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") {
    throw matrix_market_error(lineno, "missing %%MatrixMarket banner");
  }
  if (lower(object) != "matrix" || lower(format) != "coordinate") {
    throw matrix_market_error(lineno,
                              "only 'matrix coordinate' is supported");
  }

  field_kind fk;
  if (const auto f = lower(field); f == "real" || f == "double") {
    fk = field_kind::real;
  } else if (f == "integer") {
    fk = field_kind::integer;
  } else if (f == "pattern") {
    fk = field_kind::pattern;
  } else {
    throw matrix_market_error(lineno, "unsupported field '" + field + "'");
  }

  symmetry_kind sk;
  if (const auto s = lower(symmetry); s == "general") {
    sk = symmetry_kind::general;
  } else if (s == "symmetric") {
    sk = symmetry_kind::symmetric;
  } else if (s == "skew-symmetric") {
    sk = symmetry_kind::skew_symmetric;
  } else {
    throw matrix_market_error(lineno,
                              "unsupported symmetry '" + symmetry + "'");
  }

  // Size line, after any comments.
  coo_matrix out;
  std::size_t nnz = 0;
  for (;;) {
    if (!std::getline(in, line)) {
      throw matrix_market_error(lineno + 1, "missing size line");
    }
    ++lineno;
    if (line.empty() || line[0] == '%' || blank(line)) {
      continue;
    }
    std::istringstream size_line(line);
    if (!(size_line >> out.shape[0] >> out.shape[1] >> nnz)) {
      throw matrix_market_error(lineno, "malformed size line");
    }
    break;
  }

  out.entries.reserve(sk == symmetry_kind::general ? nnz : 2 * nnz);
  std::size_t seen = 0;
  while (seen < nnz && std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '%' || blank(line)) {
      continue;
    }
    std::istringstream entry(line);
    std::size_t r = 0, c = 0;
    double v = 1.0;
    if (!(entry >> r >> c)) {
      throw matrix_market_error(lineno, "malformed entry");
    }
    if (fk != field_kind::pattern && !(entry >> v)) {
      throw matrix_market_error(lineno, "missing value");
    }
    if (r == 0 || c == 0 || r > out.shape[0] || c > out.shape[1]) {
      throw matrix_market_error(lineno, "entry (" + std::to_string(r) + ", " +
                                            std::to_string(c) +
                                            ") out of bounds");
    }
    --r;
    --c;
    out.entries.push_back({r, c, v});
    if (sk != symmetry_kind::general && r != c) {
      out.entries.push_back(
          {c, r, sk == symmetry_kind::skew_symmetric ? -v : v});
    }
    ++seen;
  }
  if (seen != nnz) {
    throw matrix_market_error(lineno, "expected " + std::to_string(nnz) +
                                          " entries, found " +
                                          std::to_string(seen));
  }
  return out;
}

coo_matrix read_matrix_market(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw matrix_market_error(0, "cannot open " + path.string());
  }
  return read_matrix_market(in);
}

} // namespace segrange
