// Copyright 2026 The padic Authors.
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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "padic/error.hpp"
#include "padic/rational.hpp"

namespace padic {

// Dense row-major matrix. Instances in this library are desk-sized, so no
// sparse representation is provided.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorKind::kDimension, "matrix data size mismatch");
    }
  }
  // Row-wise literal; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) {
        throw Error(ErrorKind::kDimension, "ragged matrix literal");
      }
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw Error(ErrorKind::kDimension, "ragged row list");
      }
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols,
                             std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) {
        throw Error(ErrorKind::kDimension, "ragged column list");
      }
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<T> row_vector(std::size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
    }
    return m;
  }
  Matrix select_cols(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
    }
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRat>;

RatMatrix to_rational(const IntMatrix& m);

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
RatVector operator*(const IntMatrix& a, const RatVector& x);
RatVector operator*(const RatMatrix& a, const RatVector& x);

// y^T A for a row-vector y.
RatVector left_multiply(const RatVector& y, const IntMatrix& a);

BigRat dot(const IntVector& a, const RatVector& b);
BigRat dot(const RatVector& a, const RatVector& b);
BigInt dot(const IntVector& a, const IntVector& b);

// Stacks a on top of b (equal column counts).
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix negate(const IntMatrix& a);

// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);
std::size_t rank(const RatMatrix& a);

// Some solution of Mx = rhs over the rationals, or nothing when the system is
// inconsistent.
std::optional<RatVector> solve_rational(const RatMatrix& m, const RatVector& rhs);

// Matrix text format: header "m n" (an optional third token "rows" or "cols"
// records generator orientation), followed by m lines of n integers.
struct MatrixText {
  IntMatrix matrix;
  std::string orientation;  // "", "rows" or "cols"
};

// Reads the matrix text format from a line-oriented stream. `line_no` tracks
// the current line for diagnostics and is advanced past the consumed lines.
MatrixText read_matrix_text(std::istream& in, std::size_t& line_no);
IntMatrix parse_matrix(const std::string& text);
IntVector read_integer_line(std::istream& in, std::size_t& line_no,
                            std::size_t expected, const char* what);

std::string format_matrix(const IntMatrix& m);
std::string format_matrix(const RatMatrix& m);
std::string format_vector(const IntVector& v);
std::string format_vector(const RatVector& v);

}  // namespace padic
