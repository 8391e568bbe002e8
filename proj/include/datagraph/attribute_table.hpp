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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "datagraph/array.hpp"

namespace datagraph {

/// Dense numeric table: one row per entity, one column per named attribute.
///
/// Storage is columnar (one contiguous vector per attribute) so that the
/// attribute name is held once no matter how many rows exist, and appending
/// either a row or a column touches only what it must. Unset cells hold
/// kFillValue.
class AttributeTable {
 public:
  static constexpr double kFillValue = 0.0;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return names_.size(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  bool has(std::string_view name) const;
  std::optional<std::size_t> find(std::string_view name) const;

  /// Column index for `name`, throwing UnknownAttribute if absent.
  std::size_t column_index(std::string_view name) const;

  /// Returns the index of `name`, appending a fill-valued column if new.
  std::size_t ensure_column(std::string_view name);

  void append_row();
  void resize_rows(std::size_t rows);

  double get(std::size_t row, std::size_t col) const { return columns_[col][row]; }
  void set(std::size_t row, std::size_t col, double value) { columns_[col][row] = value; }

  std::span<const double> column(std::size_t col) const { return columns_[col]; }
  std::vector<double>& column_mut(std::size_t col) { return columns_[col]; }

  /// Overwrites (or creates) a whole column. `values.size()` must equal rows().
  void set_column(std::string_view name, std::span<const double> values);

  /// Rows x cols copy in attribute order.
  Matrix to_matrix() const;

  /// New table holding `row_indices` (in that order) of this one, same columns.
  AttributeTable select_rows(std::span<const std::size_t> row_indices) const;

  friend bool operator==(const AttributeTable& a, const AttributeTable& b);

 private:
  std::size_t rows_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<double>> columns_;
};

/// Bitwise comparison of two tables (names, order, and every cell's bits);
/// distinguishes -0.0 from 0.0 and compares NaNs by payload.
bool bit_equal(const AttributeTable& a, const AttributeTable& b);

}  // namespace datagraph
