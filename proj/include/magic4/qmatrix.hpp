#pragma once

// Dense matrices over Q(i, sqrt2).  Small sizes only (up to 16x16 here), so
// plain O(n^3) algorithms with exact field arithmetic are used everywhere.

#include "magic4/field.hpp"

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace magic4 {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  // Row-major integer initializer, handy for the sign-pattern matrices.
  static QMatrix from_ints(int rows, int cols, std::initializer_list<long long> v) {
    QMatrix m(rows, cols);
    assert((int)v.size() == rows * cols);
    int k = 0;
    for (long long x : v) m.e_[k++] = FieldScalar(x);
    return m;
  }

  static QMatrix identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = FieldScalar::one();
    return m;
  }
  static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }
  static QMatrix unit(int n, int i, int j) {
    QMatrix m(n, n);
    m(i, j) = FieldScalar::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldScalar& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const FieldScalar& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    QMatrix c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
    return c;
  }
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    QMatrix c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
    return c;
  }
  friend QMatrix operator-(const QMatrix& a) {
    QMatrix c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = -a.e_[k];
    return c;
  }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    assert(a.cols_ == b.rows_);
    QMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const FieldScalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const FieldScalar& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j) += aik * bkj;
        }
      }
    return c;
  }
  friend QMatrix operator*(const FieldScalar& s, const QMatrix& a) {
    QMatrix c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = s * a.e_[k];
    return c;
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  QMatrix conj() const {
    QMatrix c(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) c.e_[k] = e_[k].conj();
    return c;
  }
  QMatrix adjoint() const { return conj().transpose(); }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_identity() const { return rows_ == cols_ && *this == identity(rows_); }
  bool is_unitary() const {
    if (rows_ != cols_) return false;
    QMatrix ad = adjoint();
    return ((*this) * ad).is_identity() && (ad * (*this)).is_identity();
  }

  FieldScalar trace() const {
    assert(rows_ == cols_);
    FieldScalar t;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  // Determinant by Gaussian elimination with exact division.
  FieldScalar det() const {
    assert(rows_ == cols_);
    QMatrix a = *this;
    FieldScalar d = FieldScalar::one();
    for (int c = 0; c < cols_; ++c) {
      int piv = -1;
      for (int r = c; r < rows_; ++r)
        if (!a(r, c).is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return FieldScalar::zero();
      if (piv != c) {
        for (int j = 0; j < cols_; ++j) std::swap(a(piv, j), a(c, j));
        d = -d;
      }
      d *= a(c, c);
      FieldScalar inv = a(c, c).inverse();
      for (int r = c + 1; r < rows_; ++r) {
        if (a(r, c).is_zero()) continue;
        FieldScalar f = a(r, c) * inv;
        for (int j = c; j < cols_; ++j) a(r, j) -= f * a(c, j);
      }
    }
    return d;
  }

  // Reduced row echelon form; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int piv = -1;
      for (int i = r; i < rows_; ++i)
        if (!(*this)(i, c).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      if (piv != r)
        for (int j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
      FieldScalar inv = (*this)(r, c).inverse();
      for (int j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        FieldScalar f = (*this)(i, c);
        for (int j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    QMatrix a = *this;
    return (int)a.rref().size();
  }

  // Basis of the right null space {x : Ax = 0}, one column per basis vector.
  QMatrix null_space() const {
    QMatrix a = *this;
    std::vector<int> pivots = a.rref();
    std::vector<bool> is_piv(cols_, false);
    for (int c : pivots) is_piv[c] = true;
    int nfree = cols_ - (int)pivots.size();
    QMatrix basis(cols_, nfree);
    int bc = 0;
    for (int fc = 0; fc < cols_; ++fc) {
      if (is_piv[fc]) continue;
      basis(fc, bc) = FieldScalar::one();
      for (size_t pr = 0; pr < pivots.size(); ++pr) basis(pivots[pr], bc) = -a((int)pr, fc);
      ++bc;
    }
    return basis;
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
      out += "[ ";
      for (int j = 0; j < cols_; ++j) {
        out += (*this)(i, j).str();
        out += j + 1 < cols_ ? ", " : " ";
      }
      out += "]\n";
    }
    return out;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<FieldScalar> e_;
};

}  // namespace magic4
