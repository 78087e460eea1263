#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sysstruct/error.hpp"
#include "sysstruct/rational.hpp"
#include "sysstruct/rational_function.hpp"

namespace sysstruct {

/// Dense row-major matrix over an exact field (Rational or RationalFunction).
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) raise(errc::dimension_mismatch, "ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix ident(n, n);
    for (std::size_t i = 0; i < n; ++i) ident(i, i) = T(Rational(1));
    return ident;
  }
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

  Matrix operator-() const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "operator+");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "operator-");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      raise(errc::dimension_mismatch, "matrix product " + shape_str(a) + " * " + shape_str(b));
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator*(const T& c, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.data_.size(); ++k) out.data_[k] = c * m.data_[k];
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) raise(errc::dimension_mismatch, "block out of range");
    Matrix out(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
    return out;
  }

  void set_block(std::size_t i0, std::size_t j0, const Matrix& m) {
    if (i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_)
      raise(errc::dimension_mismatch, "set_block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) (*this)(i0 + i, j0 + j) = m(i, j);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (!(v == T())) return false;
    return true;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      raise(errc::dimension_mismatch, std::string(op) + " " + shape_str(a) + " vs " + shape_str(b));
  }
  static std::string shape_str(const Matrix& m) {
    return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using RFMatrix = Matrix<RationalFunction>;

template <typename T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) raise(errc::dimension_mismatch, "hstack row mismatch");
  Matrix<T> out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) raise(errc::dimension_mismatch, "vstack column mismatch");
  Matrix<T> out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

RFMatrix lift(const QMatrix& m);

/// s*I - M over the rational-function field.
RFMatrix s_minus(const QMatrix& m);

/// Reduced row echelon form with the pivot column record.
template <typename T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;
};
Echelon<Rational> rref(QMatrix m);

std::size_t rank(const QMatrix& m);

/// Gauss-Jordan inverse over the rationals; raises singular_matrix.
QMatrix inverse(const QMatrix& m);

/// Canonical null-space basis from the reduced row echelon form: one column
/// per free variable, identity on the free coordinates.
QMatrix null_space(const QMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination after clearing row
/// denominators into Q[s].
RationalFunction determinant(const RFMatrix& m);

/// Exact inverse via fraction-free elimination; raises singular_matrix when
/// the determinant is the zero rational function.
RFMatrix inverse(const RFMatrix& m);

std::string to_string(const QMatrix& m);
std::string to_string(const RFMatrix& m);

}  // namespace sysstruct
