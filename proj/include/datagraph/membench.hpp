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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "datagraph/data_graph.hpp"

namespace datagraph {

// Model-based byte accounting. Nothing here asks the allocator; every field
// is a closed-form function of the graph's contents and these constants.
inline constexpr std::size_t kCellBytes = 8;
inline constexpr std::size_t kIndexBytes = 8;
inline constexpr std::size_t kKeyTagBytes = 1;
inline constexpr std::size_t kMapEntryOverhead = 16;
inline constexpr std::size_t kListHeader = 24;

struct SizeReport {
  std::size_t nodes = 0;
  std::size_t node_map = 0;
  std::size_t node_data = 0;
  std::size_t edges = 0;
  std::size_t edge_map = 0;
  std::size_t edge_data = 0;
  std::size_t graph_data = 0;
  std::size_t adjacency = 0;
  /// Attribute name lists plus name -> column maps of all three tables.
  std::size_t attribute_names = 0;
  std::size_t total = 0;

  /// (field name, bytes) in report order.
  std::vector<std::pair<std::string, std::size_t>> fields() const;
  /// Share of total per field, in percent; all zero for an empty total.
  std::vector<std::pair<std::string, double>> percentages() const;
};

/// Bytes of one key: tag plus payload (8 per integer, 8 per tuple entry,
/// byte length for text).
std::size_t key_bytes(const NodeKey& key);

SizeReport size_report(const DataGraph& g);

/// rows x cols mesh with diagonals carrying `weights` uniform [0, 1) node
/// attributes weight1..weightW drawn from a fixed-seed generator.
DataGraph bench_graph(std::size_t rows, std::size_t cols, std::size_t weights,
                      std::uint64_t seed = 1);
/// size_report(bench_graph(...)).
SizeReport bench_mesh(std::size_t rows, std::size_t cols, std::size_t weights,
                      std::uint64_t seed = 1);

/// Table with one line per field (bytes, thousands of bytes, percent) under
/// a header listing the accounting constants.
std::string format_size_report(const SizeReport& report);

}  // namespace datagraph
