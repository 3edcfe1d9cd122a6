#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcc/exact/field.hpp"

namespace symcc {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(std::size_t c, const std::vector<T>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }
  template <class F>
  auto map(F f) const {
    Matrix<decltype(f(std::declval<const T&>()))> m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = f((*this)(r, c));
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;

  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
};

// A * B with scalar type of A; zero entries of B skipped.
template <class A, class B>
Matrix<A> multiply(const Matrix<A>& a, const Matrix<B>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix<A> r(a.rows(), b.cols());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const B& bkj = b(k, j);
      if (bkj.is_zero()) continue;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        const A& aik = a(i, k);
        if (aik.is_zero()) continue;
        r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

// B * A with the scalar type of A on the right.
template <class A, class B>
Matrix<A> multiply_left(const Matrix<B>& b, const Matrix<A>& a) {
  if (b.cols() != a.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix<A> r(b.rows(), a.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      const B& bik = b(i, k);
      if (bik.is_zero()) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const A& akj = a(k, j);
        if (akj.is_zero()) continue;
        r(i, j) += akj * bik;
      }
    }
  }
  return r;
}

using FieldMatrix = Matrix<FieldElement>;

inline FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) { return multiply(a, b); }
FieldMatrix operator*(const FieldMatrix& a, const FieldElement& s);
FieldMatrix kron(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix inverse(const FieldMatrix& m);
// Indices of the lexicographically first maximal independent column set.
std::vector<std::size_t> pivot_columns(const FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);
bool is_zero(const FieldMatrix& m);
FieldElement trace(const FieldMatrix& m);
FieldMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> format_matrix(const FieldMatrix& m);
std::string to_string(const FieldMatrix& m);

}  // namespace symcc
