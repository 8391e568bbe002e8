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

#include "datagraph/attribute_table.hpp"

#include <bit>
#include <cstdint>

#include "datagraph/errors.hpp"

namespace datagraph {

bool AttributeTable::has(std::string_view name) const { return find(name).has_value(); }

std::optional<std::size_t> AttributeTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t AttributeTable::column_index(std::string_view name) const {
  if (auto col = find(name)) return *col;
  throw Error(ErrorKind::UnknownAttribute, "no attribute named '" + std::string(name) + "'");
}

std::size_t AttributeTable::ensure_column(std::string_view name) {
  if (auto col = find(name)) return *col;
  if (name.empty()) throw Error(ErrorKind::UnknownAttribute, "attribute names must be nonempty");
  names_.emplace_back(name);
  index_.emplace(std::string(name), names_.size() - 1);
  columns_.emplace_back(rows_, kFillValue);
  return names_.size() - 1;
}

void AttributeTable::append_row() {
  ++rows_;
  for (auto& col : columns_) col.push_back(kFillValue);
}

void AttributeTable::resize_rows(std::size_t rows) {
  rows_ = rows;
  for (auto& col : columns_) col.resize(rows, kFillValue);
}

void AttributeTable::set_column(std::string_view name, std::span<const double> values) {
  if (values.size() != rows_) {
    throw Error(ErrorKind::LengthMismatch, "attribute '" + std::string(name) + "' got " +
                                               std::to_string(values.size()) +
                                               " values for " + std::to_string(rows_) + " rows");
  }
  auto col = ensure_column(name);
  columns_[col].assign(values.begin(), values.end());
}

Matrix AttributeTable::to_matrix() const {
  Matrix m(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) m(i, j) = columns_[j][i];
  return m;
}

AttributeTable AttributeTable::select_rows(std::span<const std::size_t> row_indices) const {
  AttributeTable out;
  out.rows_ = row_indices.size();
  out.names_ = names_;
  out.index_ = index_;
  out.columns_.resize(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    auto& dst = out.columns_[j];
    dst.reserve(row_indices.size());
    for (auto r : row_indices) dst.push_back(columns_[j][r]);
  }
  return out;
}

bool operator==(const AttributeTable& a, const AttributeTable& b) {
  return a.rows_ == b.rows_ && a.names_ == b.names_ && a.columns_ == b.columns_;
}

bool bit_equal(const AttributeTable& a, const AttributeTable& b) {
  if (a.rows() != b.rows() || a.names() != b.names()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto ca = a.column(j);
    auto cb = b.column(j);
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (std::bit_cast<std::uint64_t>(ca[i]) != std::bit_cast<std::uint64_t>(cb[i])) return false;
    }
  }
  return true;
}

}  // namespace datagraph
