#pragma once

// Test-only oracles, independent of the library's normal-form code paths.
//
//   - invariant factors via gcds of k x k minors (D_k / D_{k-1}),
//   - rank over Q by fraction-free elimination.
//
// Both are exponential-ish and only meant for the small matrices the
// randomized suites draw.

#include "magic4/int_matrix.hpp"

#include <vector>

namespace magic4::oracle {

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Int minor_det(const IntMatrix& a, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
  IntMatrix m((int)rows.size(), (int)cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) m((int)i, (int)j) = a(rows[i], cols[j]);
  return m.det();
}

inline void subsets(int n, int k, int start, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - (k - (int)cur.size()); ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors; zero when every minor vanishes
inline Int minor_gcd(const IntMatrix& a, int k) {
  std::vector<std::vector<int>> rsets, csets;
  std::vector<int> cur;
  subsets(a.rows(), k, 0, cur, rsets);
  subsets(a.cols(), k, 0, cur, csets);
  Int g = 0;
  for (const auto& r : rsets)
    for (const auto& c : csets) g = gcd_int(g, minor_det(a, r, c));
  return g;
}

// invariant factors as D_k / D_{k-1} over the nonvanishing range
inline std::vector<Int> invariant_factors(const IntMatrix& a) {
  std::vector<Int> out;
  Int prev = 1;
  int kmax = std::min(a.rows(), a.cols());
  for (int k = 1; k <= kmax; ++k) {
    Int dk = minor_gcd(a, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

// rank over the rationals, fraction-free row elimination
inline int rational_rank(IntMatrix a) {
  int rank = 0;
  int rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    for (int i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Int f1 = a(r, c), f2 = a(i, c);
      for (int j = 0; j < cols; ++j) a(i, j) = a(i, j) * f1 - a(r, j) * f2;
    }
    ++rank;
    ++r;
  }
  return rank;
}

}  // namespace magic4::oracle
