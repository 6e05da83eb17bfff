// Independent brute-force oracles for the test suites. Everything here goes
// through plain Gaussian elimination on explicit matrices, with none of the
// pattern/backtracking machinery from the library under test.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fpzeta/numeric.hpp"

namespace oracle {

using Mat = std::vector<std::vector<std::uint32_t>>;

// Row-reduce a copy; returns the rank.
inline int rank(Mat rows, std::uint32_t p) {
  using fpzeta::modp::inverse;
  using fpzeta::modp::mul;
  using fpzeta::modp::sub;
  if (rows.empty()) return 0;
  const std::size_t m = rows.size(), n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t sel = r;
    while (sel < m && rows[sel][c] == 0) ++sel;
    if (sel == m) continue;
    std::swap(rows[r], rows[sel]);
    std::uint32_t inv = inverse(rows[r][c], p);
    for (auto& x : rows[r]) x = mul(x, inv, p);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint32_t f = rows[i][c];
      for (std::size_t t = 0; t < n; ++t)
        rows[i][t] = sub(rows[i][t], mul(f, rows[r][t], p), p);
    }
    ++r;
  }
  return static_cast<int>(r);
}

// Canonical string of the rowspan (RREF, zero rows dropped).
inline std::string canonical_span(Mat rows, std::uint32_t p) {
  using fpzeta::modp::inverse;
  using fpzeta::modp::mul;
  using fpzeta::modp::sub;
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t sel = r;
    while (sel < m && rows[sel][c] == 0) ++sel;
    if (sel == m) continue;
    std::swap(rows[r], rows[sel]);
    std::uint32_t inv = inverse(rows[r][c], p);
    for (auto& x : rows[r]) x = mul(x, inv, p);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint32_t f = rows[i][c];
      for (std::size_t t = 0; t < n; ++t)
        rows[i][t] = sub(rows[i][t], mul(f, rows[r][t], p), p);
    }
    ++r;
  }
  std::string out;
  for (std::size_t i = 0; i < r; ++i) {
    for (auto x : rows[i]) out += std::to_string(x) + ",";
    out += ";";
  }
  return out;
}

// Every subspace of F_p^n as a canonical string, found by scanning all n x n
// matrices. Only feasible for tiny (n, p).
inline std::set<std::string> all_subspaces(int n, std::uint32_t p) {
  std::set<std::string> spans;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  Mat m(static_cast<std::size_t>(n),
        std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
  while (true) {
    spans.insert(canonical_span(m, p));
    std::size_t t = 0;
    for (; t < cells; ++t) {
      auto& cell = m[t / n][t % n];
      if (++cell == p) {
        cell = 0;
      } else {
        break;
      }
    }
    if (t == cells) break;
  }
  return spans;
}

// Number of k-dimensional subspaces among a canonical set.
inline int count_of_dim(const std::set<std::string>& spans, int k) {
  int count = 0;
  for (const auto& s : spans) {
    int rows = 0;
    for (char c : s)
      if (c == ';') ++rows;
    if (rows == k) ++count;
  }
  return count;
}

}  // namespace oracle
