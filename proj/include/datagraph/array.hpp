// Copyright 2026 The DataGraph Authors
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
#include <span>
#include <vector>

namespace datagraph {

/// Row-major dense matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return values_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * cols_, cols_};
  }
  std::vector<double> column(std::size_t j) const;
  Matrix transpose() const;

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// Dense p x q x r array; entry (i,j,k) with k the slowest ("depth") axis
/// when thought of as stacked p x q slices.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t p, std::size_t q, std::size_t r, double fill = 0.0)
      : p_(p), q_(q), r_(r), values_(p * q * r, fill) {}

  std::size_t dim0() const noexcept { return p_; }
  std::size_t dim1() const noexcept { return q_; }
  std::size_t dim2() const noexcept { return r_; }

  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return values_[(k * p_ + i) * q_ + j];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values_[(k * p_ + i) * q_ + j];
  }

  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t p_ = 0;
  std::size_t q_ = 0;
  std::size_t r_ = 0;
  std::vector<double> values_;
};

/// Shape-erased array as it arrives from files or foreign callers. Values are
/// in row-major order of `shape`.
struct NdArray {
  std::vector<std::size_t> shape;
  std::vector<double> values;

  std::size_t ndim() const noexcept { return shape.size(); }
};

}  // namespace datagraph
