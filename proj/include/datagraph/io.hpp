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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "datagraph/array.hpp"
#include "datagraph/data_graph.hpp"

namespace datagraph {

// Delimited input ------------------------------------------------------------
//
// Blank lines are skipped. Fields may be double-quoted ("" escapes a quote).
// Errors name the 1-based line number.

/// Throws Io, Ragged, or Parse. `skip_header` drops the first nonblank line.
Matrix read_delimited_matrix(const std::filesystem::path& path, char delimiter = ',',
                             bool skip_header = false);

/// Reads r stacked blocks of `block_rows` x q rows; block k becomes slice
/// t(., ., k). Throws Ragged if the row count is not a multiple of block_rows.
Tensor3 read_delimited_tensor(const std::filesystem::path& path, std::size_t block_rows,
                              char delimiter = ',');

struct NodeTable {
  std::vector<NodeKey> keys;
  std::vector<std::string> attributes;
  /// |keys| x |attributes|.
  Matrix values;
  /// Duplicate-key notices; the first occurrence of a key wins.
  std::vector<std::string> warnings;
};

struct EdgeTable {
  std::vector<std::pair<NodeKey, NodeKey>> edges;
  std::vector<std::string> attributes;
  Matrix values;
  std::vector<std::string> warnings;
};

/// First column is the key (integer if it parses as one, text otherwise);
/// remaining columns are numeric attributes. Without a header the
/// attributes are named "column2", "column3", ....
NodeTable read_node_table(const std::filesystem::path& path, bool header = true,
                          char delimiter = ',');
/// First two columns are the endpoint keys.
EdgeTable read_edge_table(const std::filesystem::path& path, bool header = true,
                          char delimiter = ',');

/// Nodes from `nodes` (if given) in table order, then edges in table order
/// with endpoints auto-registered; one attribute per table column.
DataGraph graph_from_tables(GraphKind kind, const NodeTable* nodes, const EdgeTable& edges);

// Graph archive --------------------------------------------------------------

inline constexpr int kArchiveVersion = 1;

/// JSON document; keys carry explicit tags ({"int":5}, {"str":"x"},
/// {"tup":[3,7]}), edges are 1-based index pairs, data rows are row-major,
/// and non-finite cells are written as the strings "nan", "inf", "-inf".
std::string archive_to_string(const DataGraph& g);
/// Throws Version on a version other than kArchiveVersion, Corrupt on any
/// malformed or inconsistent document.
DataGraph archive_from_string(std::string_view text);

void write_graph_archive(const DataGraph& g, const std::filesystem::path& path);
DataGraph read_graph_archive(const std::filesystem::path& path);

// DOT and CSV output ---------------------------------------------------------

struct DotOptions {
  /// Emitted per node as `value="..."` when set.
  std::optional<std::string> node_color_attr;
  /// Emitted per edge as `label="..."` when set.
  std::optional<std::string> edge_label_attr;
};

/// Nodes appear as n1..nN in index order, labeled with their keys; tuple keys
/// (i,j) also get a fixed position at column j, row -i.
std::string to_dot(const DataGraph& g, const DotOptions& options = {});
void export_dot(const DataGraph& g, const std::filesystem::path& path,
                const DotOptions& options = {});

/// Shortest decimal form that parses back to the same double; "nan", "inf",
/// "-inf" for non-finite values.
std::string format_double(double value);

/// Quotes a CSV field only when it holds a comma, quote, or line break.
std::string csv_field(std::string_view field);

/// Header line (omitted when empty) then one line per matrix row.
void write_csv_matrix(const Matrix& values, const std::vector<std::string>& header,
                      const std::filesystem::path& path);
std::string csv_matrix_to_string(const Matrix& values, const std::vector<std::string>& header);

std::string csv_rows_to_string(const std::vector<std::string>& header,
                               const std::vector<std::vector<std::string>>& rows);
void write_csv_rows(const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows,
                    const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace datagraph
