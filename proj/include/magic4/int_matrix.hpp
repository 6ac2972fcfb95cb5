#pragma once

// Integer matrices with arbitrary-precision entries.  Intermediate values in
// normal-form computations outgrow machine words even for modest sizes, so
// cpp_int is mandatory here.

#include "magic4/rationals.hpp"

#include <cassert>
#include <initializer_list>
#include <string>
#include <vector>

namespace magic4 {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static IntMatrix from_ints(int rows, int cols, std::initializer_list<long long> v) {
    IntMatrix m(rows, cols);
    assert((int)v.size() == rows * cols);
    int k = 0;
    for (long long x : v) m.e_[k++] = Int(x);
    return m;
  }
  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    IntMatrix c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
    return c;
  }
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    IntMatrix c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
    return c;
  }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    assert(a.cols_ == b.rows_);
    IntMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Int& aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  std::vector<Int> column(int j) const {
    std::vector<Int> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_column(int j, const std::vector<Int>& c) {
    assert((int)c.size() == rows_);
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  std::vector<Int> apply(const std::vector<Int>& x) const {
    assert((int)x.size() == cols_);
    std::vector<Int> y(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  // Fraction-free determinant (Bareiss).
  Int det() const {
    assert(rows_ == cols_);
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (a(k, k) == 0) {
        int piv = -1;
        for (int r = k + 1; r < n; ++r)
          if (a(r, k) != 0) {
            piv = r;
            break;
          }
        if (piv < 0) return 0;
        for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        out += (*this)(i, j).str();
        out += j + 1 < cols_ ? " " : "";
      }
      out += "\n";
    }
    return out;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

}  // namespace magic4
