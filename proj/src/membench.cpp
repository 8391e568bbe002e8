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

#include "datagraph/membench.hpp"

#include <cstdio>
#include <random>

#include "datagraph/constructors.hpp"
#include "datagraph/errors.hpp"

namespace datagraph {
namespace {

std::size_t table_cells(const AttributeTable& t) { return t.rows() * t.cols() * kCellBytes; }

std::size_t name_bytes(const AttributeTable& t) {
  std::size_t bytes = 0;
  // Once in the ordered name list, once as the map key.
  for (const auto& name : t.names()) bytes += 2 * name.size() + kIndexBytes + kMapEntryOverhead;
  return bytes;
}

std::size_t list_bytes(std::span<const std::size_t> list) {
  return kListHeader + list.size() * kIndexBytes;
}

}  // namespace

std::size_t key_bytes(const NodeKey& key) {
  switch (key.tag()) {
    case NodeKey::Tag::Int:
      return kKeyTagBytes + 8;
    case NodeKey::Tag::Text:
      return kKeyTagBytes + key.as_text().size();
    case NodeKey::Tag::Tuple:
      return kKeyTagBytes + 8 * key.as_tuple().size();
  }
  return kKeyTagBytes;
}

std::vector<std::pair<std::string, std::size_t>> SizeReport::fields() const {
  return {{"nodes", nodes},         {"node_map", node_map},     {"node_data", node_data},
          {"edges", edges},         {"edge_map", edge_map},     {"edge_data", edge_data},
          {"graph_data", graph_data}, {"adjacency", adjacency}, {"attribute_names", attribute_names}};
}

std::vector<std::pair<std::string, double>> SizeReport::percentages() const {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [name, bytes] : fields()) {
    out.emplace_back(name, total == 0 ? 0.0
                                      : 100.0 * static_cast<double>(bytes) /
                                            static_cast<double>(total));
  }
  return out;
}

SizeReport size_report(const DataGraph& g) {
  SizeReport r;
  for (const auto& key : g.nodes()) {
    const auto kb = key_bytes(key);
    r.nodes += kb;
    r.node_map += kb + kIndexBytes + kMapEntryOverhead;
  }
  r.node_data = table_cells(g.node_table());
  r.edges = g.num_edges() * 2 * kIndexBytes;
  r.edge_map = g.num_edges() * (2 * kIndexBytes + kIndexBytes + kMapEntryOverhead);
  r.edge_data = table_cells(g.edge_table());
  r.graph_data = table_cells(g.graph_table());
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    r.adjacency += list_bytes(g.out_adjacency(i));
    if (g.is_directed()) r.adjacency += list_bytes(g.in_adjacency(i));
  }
  r.attribute_names = name_bytes(g.node_table()) + name_bytes(g.edge_table()) +
                      name_bytes(g.graph_table());
  for (const auto& [name, bytes] : r.fields()) r.total += bytes;
  return r;
}

DataGraph bench_graph(std::size_t rows, std::size_t cols, std::size_t weights,
                      std::uint64_t seed) {
  if (rows == 0 || cols == 0 || weights == 0) {
    throw Error(ErrorKind::DimensionError, "bench_mesh needs positive rows, cols, and weights");
  }
  std::mt19937_64 rng(seed);
  Tensor3 t(rows, cols, weights);
  for (std::size_t k = 0; k < weights; ++k)
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        t(i, j, k) = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return matrix_to_graph(t, MeshOptions{true, "weight"});
}

SizeReport bench_mesh(std::size_t rows, std::size_t cols, std::size_t weights,
                      std::uint64_t seed) {
  return size_report(bench_graph(rows, cols, weights, seed));
}

std::string format_size_report(const SizeReport& report) {
  char line[160];
  std::string out;
  std::snprintf(line, sizeof line,
                "# cell=%zu index=%zu key_tag=%zu map_entry_overhead=%zu list_header=%zu\n",
                kCellBytes, kIndexBytes, kKeyTagBytes, kMapEntryOverhead, kListHeader);
  out += line;
  std::snprintf(line, sizeof line, "%-16s %14s %12s %8s\n", "field", "bytes", "kbytes", "percent");
  out += line;
  const auto shares = report.percentages();
  const auto fields = report.fields();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::snprintf(line, sizeof line, "%-16s %14zu %12.3f %8.2f\n", fields[i].first.c_str(),
                  fields[i].second, static_cast<double>(fields[i].second) / 1000.0,
                  shares[i].second);
    out += line;
  }
  std::snprintf(line, sizeof line, "%-16s %14zu %12.3f %8.2f\n", "total", report.total,
                static_cast<double>(report.total) / 1000.0, report.total ? 100.0 : 0.0);
  out += line;
  return out;
}

}  // namespace datagraph
