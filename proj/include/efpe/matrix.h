// Copyright 2026 The EFPE Solver Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EFPE_MATRIX_H_
#define EFPE_MATRIX_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "efpe/eps_poly.h"
#include "efpe/rational.h"

namespace efpe {

// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T())
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix Identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(int r, int c) { return data_[Index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[Index(r, c)]; }

  Matrix Transposed() const {
    Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  // Copies `block` into this matrix with its top-left corner at (r0, c0).
  void SetBlock(int r0, int c0, const Matrix& block) {
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) {
      throw std::invalid_argument("block does not fit");
    }
    for (int r = 0; r < block.rows_; ++r)
      for (int c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
  }

  Matrix Block(int r0, int c0, int rows, int cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) {
      throw std::invalid_argument("block out of range");
    }
    Matrix out(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (T& v : out.data_) v = -v;
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.CheckSameShape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.CheckSameShape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product dimension mismatch: " +
                                  a.ShapeString() + " * " + b.ShapeString());
    }
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj == T(0)) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string ShapeString() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }
  void CheckSameShape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument("matrix shape mismatch: " + ShapeString() +
                                  " vs " + o.ShapeString());
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<EpsPoly>;

template <typename T>
std::vector<T> MatVec(const Matrix<T>& m, const std::vector<T>& v) {
  if (static_cast<int>(v.size()) != m.cols()) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  std::vector<T> out(static_cast<std::size_t>(m.rows()), T(0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      if (m(r, c) == T(0) || v[c] == T(0)) continue;
      out[r] += m(r, c) * v[c];
    }
  return out;
}

}  // namespace efpe

#endif  // EFPE_MATRIX_H_
