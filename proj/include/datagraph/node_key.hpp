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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>

namespace datagraph {

/// Fixed-capacity integer tuple naming a matrix entry (i,j) or tensor entry
/// (i,j,k). Arity is always 2 or 3.
class IndexTuple {
 public:
  IndexTuple(std::int64_t i, std::int64_t j);
  IndexTuple(std::int64_t i, std::int64_t j, std::int64_t k);

  std::size_t size() const noexcept { return size_; }
  std::int64_t operator[](std::size_t pos) const { return values_[pos]; }
  const std::int64_t* begin() const noexcept { return values_.data(); }
  const std::int64_t* end() const noexcept { return values_.data() + size_; }

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::array<std::int64_t, 3> values_{};
  std::size_t size_ = 0;
};

/// User-facing node identifier: an integer, a text string, or an index tuple.
/// Keys of different tags never compare equal.
class NodeKey {
 public:
  enum class Tag : std::uint8_t { Int = 0, Text = 1, Tuple = 2 };

  NodeKey() : value_(std::int64_t{0}) {}
  NodeKey(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design of the API
  NodeKey(int v) : value_(std::int64_t{v}) {}  // NOLINT
  NodeKey(std::string v) : value_(std::move(v)) {}  // NOLINT
  NodeKey(std::string_view v) : value_(std::string(v)) {}  // NOLINT
  NodeKey(const char* v) : value_(std::string(v)) {}  // NOLINT
  NodeKey(IndexTuple v) : value_(v) {}  // NOLINT

  static NodeKey tuple(std::int64_t i, std::int64_t j) { return IndexTuple(i, j); }
  static NodeKey tuple(std::int64_t i, std::int64_t j, std::int64_t k) {
    return IndexTuple(i, j, k);
  }

  Tag tag() const noexcept { return static_cast<Tag>(value_.index()); }
  bool is_int() const noexcept { return tag() == Tag::Int; }
  bool is_text() const noexcept { return tag() == Tag::Text; }
  bool is_tuple() const noexcept { return tag() == Tag::Tuple; }

  std::int64_t as_int() const { return std::get<std::int64_t>(value_); }
  const std::string& as_text() const { return std::get<std::string>(value_); }
  const IndexTuple& as_tuple() const { return std::get<IndexTuple>(value_); }

  /// Display form: `5`, `Ethylene`, `(3,7)`.
  std::string to_string() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const NodeKey&, const NodeKey&) = default;
  friend auto operator<=>(const NodeKey&, const NodeKey&) = default;

 private:
  std::variant<std::int64_t, std::string, IndexTuple> value_;
};

/// Parses the textual key syntax used on the command line and in tables:
/// `int:5`, `str:abc`, `(3,7)` / `(1,2,3)`, a bare integer, or else text.
NodeKey parse_node_key(std::string_view text);

/// Parse rule for key columns in delimited tables: integers become integer
/// keys, everything else is text.
NodeKey parse_table_key(std::string_view text);

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& key) const noexcept { return key.hash(); }
};

}  // namespace datagraph
