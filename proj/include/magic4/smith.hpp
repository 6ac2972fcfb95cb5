#pragma once

// Unimodular normal forms over Z: Smith normal form with both transforms,
// column Hermite form for lattice comparison, saturated kernel bases,
// cokernel invariants, and exact linear solving.
//
// Convention, fixed and tested: left * A * right = diag(invariant factors),
// with factors nonnegative and each dividing the next.

#include "magic4/int_matrix.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace magic4 {

struct SmithForm {
  IntMatrix left;          // rows x rows, |det| = 1
  IntMatrix right;         // cols x cols, |det| = 1
  std::vector<Int> diag;   // invariant factors including 1s, excluding 0s
  int rank() const { return (int)diag.size(); }
};

namespace detail {

inline void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[a] += q * row[b]
inline void add_row(IntMatrix& m, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols(); ++j) m(a, j) += q * m(b, j);
}
inline void add_col(IntMatrix& m, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows(); ++i) m(i, a) += q * m(i, b);
}
inline void negate_row(IntMatrix& m, int a) {
  for (int j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}
inline void negate_col(IntMatrix& m, int a) {
  for (int i = 0; i < m.rows(); ++i) m(i, a) = -m(i, a);
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

// Deterministic pivot rule: smallest |value|, ties broken by position.
inline SmithForm smith_normal_form(const IntMatrix& a) {
  using namespace detail;
  const int m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);

  int t = 0;
  const int tmax = std::min(m, n);
  while (t < tmax) {
    // pick pivot in the trailing submatrix
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (d(i, j) == 0) continue;
        Int v = abs_int(d(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // submatrix zero
    swap_rows(d, t, pi);
    swap_rows(left, t, pi);
    swap_cols(d, t, pj);
    swap_cols(right, t, pj);

    for (;;) {
      bool restart = false;
      // clear the pivot column with row operations
      for (int i = t + 1; i < m && !restart; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);  // truncated division: remainder shrinks
        add_row(d, i, t, -q);
        add_row(left, i, t, -q);
        if (d(i, t) != 0) {
          swap_rows(d, i, t);
          swap_rows(left, i, t);
          restart = true;
        }
      }
      if (restart) continue;
      // clear the pivot row with column operations
      for (int j = t + 1; j < n && !restart; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        add_col(d, j, t, -q);
        add_col(right, j, t, -q);
        if (d(t, j) != 0) {
          swap_cols(d, j, t);
          swap_cols(right, j, t);
          restart = true;
        }
      }
      if (restart) continue;
      // the pivot must divide every remaining entry
      int bi = -1, bj = -1;
      for (int i = t + 1; i < m && bi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      add_row(d, t, bi, Int(1));
      add_row(left, t, bi, Int(1));
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(left, t);
    }
    ++t;
  }

  SmithForm out;
  out.left = std::move(left);
  out.right = std::move(right);
  for (int k = 0; k < t; ++k) out.diag.push_back(d(k, k));
  return out;
}

// Columns form a basis of {x : Ax = 0}.  Taken from the right transform of
// the SNF, so the basis is saturated and the quotient is torsion-free.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  int n = a.cols(), r = s.rank();
  IntMatrix k(n, n - r);
  for (int j = r; j < n; ++j)
    for (int i = 0; i < n; ++i) k(i, j - r) = s.right(i, j);
  return k;
}

struct CokernelInvariants {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
  friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

inline CokernelInvariants cokernel_invariants(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  CokernelInvariants c;
  c.free_rank = a.rows() - s.rank();
  for (const Int& f : s.diag)
    if (f > 1) c.torsion.push_back(f);
  return c;
}

inline int integer_rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

// Canonical column Hermite form: pivots positive, entries left of a pivot
// reduced into [0, pivot), zero columns dropped.  Two generator matrices
// span the same subgroup of Z^m iff their forms coincide.
inline IntMatrix column_hermite_form(const IntMatrix& g) {
  using namespace detail;
  const int m = g.rows(), n = g.cols();
  IntMatrix h = g;
  int c = 0;
  for (int row = 0; row < m && c < n; ++row) {
    int piv = -1;
    for (int j = c; j < n; ++j)
      if (h(row, j) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    swap_cols(h, c, piv);
    // gcd out the rest of this row
    for (int j = c + 1; j < n; ++j) {
      while (h(row, j) != 0) {
        Int q = h(row, c) / h(row, j);
        add_col(h, c, j, -q);
        swap_cols(h, c, j);
      }
    }
    if (h(row, c) < 0) negate_col(h, c);
    for (int j = 0; j < c; ++j) {
      Int q = floor_div(h(row, j), h(row, c));
      add_col(h, j, c, -q);
    }
    ++c;
  }
  IntMatrix out(m, c);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < c; ++j) out(i, j) = h(i, j);
  return out;
}

// A finitely generated subgroup of Z^ambient, identified by its Hermite form.
class Lattice {
 public:
  Lattice(int ambient, const IntMatrix& generators)
      : ambient_(ambient), hnf_(column_hermite_form(generators)) {
    if (generators.rows() != ambient)
      throw std::invalid_argument("Lattice: generator rows != ambient rank");
  }
  int ambient() const { return ambient_; }
  int rank() const { return hnf_.cols(); }
  const IntMatrix& hermite() const { return hnf_; }

  friend bool lattice_equal(const Lattice& a, const Lattice& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("lattice_equal: ambient mismatch");
    return a.hnf_ == b.hnf_;
  }

 private:
  int ambient_;
  IntMatrix hnf_;
};

// One solution of Ax = b over Z, if any.
inline std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                                     const std::vector<Int>& b) {
  SmithForm s = smith_normal_form(a);
  std::vector<Int> c = s.left.apply(b);
  int n = a.cols(), r = s.rank();
  std::vector<Int> y(n);
  for (int k = 0; k < r; ++k) {
    if (c[k] % s.diag[k] != 0) return std::nullopt;
    y[k] = c[k] / s.diag[k];
  }
  for (int k = r; k < a.rows(); ++k)
    if (c[k] != 0) return std::nullopt;
  return s.right.apply(y);
}

}  // namespace magic4
