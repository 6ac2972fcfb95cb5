#pragma once

// Matrices of sphere polynomials: elements of M_n(C(S^3)) with exact
// polynomial entries.  Constant matrices over Q(i,sqrt2) embed, evaluation
// at an exact point of S^3 lands back in QMatrix, and the * operation is
// entrywise-conjugate transpose, so unitarity and projection identities are
// decided exactly.

#include "magic4/qmatrix.hpp"
#include "magic4/sphere_poly.hpp"

#include <cassert>
#include <string>
#include <vector>

namespace magic4 {

class MatFun {
 public:
  MatFun() = default;
  MatFun(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static MatFun from_constant(const QMatrix& q) {
    MatFun m(q.rows(), q.cols());
    for (int i = 0; i < q.rows(); ++i)
      for (int j = 0; j < q.cols(); ++j) m(i, j) = SpherePoly::constant(q(i, j));
    return m;
  }
  static MatFun identity(int n) { return from_constant(QMatrix::identity(n)); }
  static MatFun zero(int rows, int cols) { return MatFun(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  SpherePoly& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const SpherePoly& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  friend bool operator==(const MatFun& a, const MatFun& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const MatFun& a, const MatFun& b) { return !(a == b); }

  friend MatFun operator+(const MatFun& a, const MatFun& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    MatFun c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
    return c;
  }
  friend MatFun operator-(const MatFun& a, const MatFun& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    MatFun c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
    return c;
  }
  friend MatFun operator*(const MatFun& a, const MatFun& b) {
    assert(a.cols_ == b.rows_);
    MatFun c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const SpherePoly& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const SpherePoly& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j) += aik * bkj;
        }
      }
    return c;
  }
  friend MatFun operator*(const SpherePoly& s, const MatFun& a) {
    MatFun c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = s * a.e_[k];
    return c;
  }
  friend MatFun operator*(const FieldScalar& s, const MatFun& a) {
    MatFun c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = s * a.e_[k];
    return c;
  }

  MatFun transpose() const {
    MatFun t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  MatFun conj() const {
    MatFun c(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) c.e_[k] = e_[k].conj();
    return c;
  }
  MatFun adjoint() const { return conj().transpose(); }

  bool is_zero() const {
    for (const auto& p : e_)
      if (!p.is_zero()) return false;
    return true;
  }
  bool is_identity() const { return *this == identity(rows_); }
  bool is_unitary() const {
    if (rows_ != cols_) return false;
    MatFun ad = adjoint();
    return ((*this) * ad).is_identity() && (ad * (*this)).is_identity();
  }
  bool is_projection() const {
    return rows_ == cols_ && *this == adjoint() && (*this) * (*this) == *this;
  }

  // Entrywise substitution a -> L a for a 4x4 constant matrix L.
  MatFun substitute_linear(const QMatrix& lin) const {
    assert(lin.rows() == 4 && lin.cols() == 4);
    std::array<std::array<FieldScalar, 4>, 4> l;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) l[i][j] = lin(i, j);
    MatFun c(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) c.e_[k] = e_[k].substitute_linear(l);
    return c;
  }

  QMatrix eval(const std::array<FieldScalar, 4>& a) const {
    QMatrix q(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) q(i, j) = (*this)(i, j).eval(a);
    return q;
  }

  void set_block(int r0, int c0, const MatFun& blk) {
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) (*this)(r0 + i, c0 + j) = blk(i, j);
  }
  void set_block(int r0, int c0, const QMatrix& blk) { set_block(r0, c0, from_constant(blk)); }

  static MatFun direct_sum(const MatFun& a, const MatFun& b) {
    MatFun c(a.rows() + b.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), a.cols(), b);
    return c;
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
      out += "[ ";
      for (int j = 0; j < cols_; ++j) {
        out += (*this)(i, j).str();
        out += j + 1 < cols_ ? " | " : " ";
      }
      out += "]\n";
    }
    return out;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SpherePoly> e_;
};

}  // namespace magic4
