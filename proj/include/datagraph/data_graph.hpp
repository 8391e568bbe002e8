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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "datagraph/array.hpp"
#include "datagraph/attribute_table.hpp"
#include "datagraph/node_key.hpp"

namespace datagraph {

enum class GraphKind { Undirected, Directed };

std::string_view to_string(GraphKind kind);

/// Pair of 0-based node indices. Undirected edges are stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<std::size_t>{}(e.u * 0x9E3779B97F4A7C15ull ^ e.v);
  }
};

/// Compressed-row boolean adjacency pattern; row i lists column indices j
/// with an edge i -> j (both directions for undirected graphs).
struct AdjacencyPattern {
  std::size_t size = 0;
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> columns;

  bool contains(std::size_t i, std::size_t j) const;
  AdjacencyPattern transpose() const;

  friend bool operator==(const AdjacencyPattern&, const AdjacencyPattern&) = default;
};

/// Attribute-bearing graph: node and edge registries with index maps, sorted
/// adjacency lists, and three columnar attribute stores (node, edge, graph).
///
/// Index arguments and results are 0-based; anything user-facing (files,
/// messages) renders them 1-based. Mutation is single-writer; const members
/// may be called concurrently once mutation has stopped.
class DataGraph {
 public:
  explicit DataGraph(GraphKind kind = GraphKind::Undirected);

  /// Builds a graph from already-indexed parts, validating every invariant.
  /// Throws Error(Corrupt) on duplicate keys, bad endpoints, self-loops,
  /// non-canonical undirected edges, duplicate edges, or table row mismatch.
  static DataGraph from_parts(GraphKind kind, std::vector<NodeKey> nodes,
                              std::vector<Edge> edges, AttributeTable node_data,
                              AttributeTable edge_data, AttributeTable graph_data);

  GraphKind kind() const noexcept { return kind_; }
  bool is_directed() const noexcept { return kind_ == GraphKind::Directed; }

  std::size_t num_nodes() const noexcept { return nodes_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<NodeKey>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const NodeKey& node(std::size_t index) const { return nodes_.at(index); }

  bool has_node(const NodeKey& key) const { return find_node(key).has_value(); }
  std::optional<std::size_t> find_node(const NodeKey& key) const;
  /// Throws UnknownNode.
  std::size_t node_index(const NodeKey& key) const;

  /// Looks up an edge by endpoint indices; undirected lookups canonicalize.
  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;
  bool has_edge(const NodeKey& u, const NodeKey& v) const;
  /// Throws UnknownEdge (or UnknownNode for an absent endpoint).
  std::size_t edge_index(const NodeKey& u, const NodeKey& v) const;

  bool add_node(NodeKey key);
  /// Adds u-v, registering absent endpoints first. Returns false if the edge
  /// already exists. Throws SelfLoop when u == v.
  bool add_edge(const NodeKey& u, const NodeKey& v);
  bool add_edge_by_index(std::size_t u, std::size_t v);

  void add_node_data(const NodeKey& key, double value, std::string_view attr);
  void add_node_dataset(std::span<const double> values, std::string_view attr);
  void add_edge_data(const NodeKey& u, const NodeKey& v, double value, std::string_view attr);
  void add_edge_dataset(std::span<const double> values, std::string_view attr);
  void add_graph_data(double value, std::string_view attr);
  double get_graph_data(std::string_view attr) const;

  std::vector<double> get_node_data(std::string_view attr) const;
  Matrix get_node_data() const;
  std::vector<double> get_edge_data(std::string_view attr) const;
  Matrix get_edge_data() const;

  const AttributeTable& node_table() const noexcept { return node_data_; }
  const AttributeTable& edge_table() const noexcept { return edge_data_; }
  const AttributeTable& graph_table() const noexcept { return graph_data_; }

  /// Edge indices sorted into adjacency order: lexicographic by
  /// (min, max) endpoint for undirected graphs, (source, target) for directed.
  std::vector<std::size_t> ordered_edge_permutation() const;
  std::vector<double> get_ordered_edge_data(std::string_view attr) const;
  Matrix get_ordered_edge_data() const;
  /// Permutes edges, the edge map, and edge data rows into adjacency order.
  void order_edges();

  /// Sorted neighbor keys. For directed graphs this is the out-neighbor list.
  std::vector<NodeKey> neighbors(const NodeKey& key) const;
  std::vector<NodeKey> out_neighbors(const NodeKey& key) const;
  std::vector<NodeKey> in_neighbors(const NodeKey& key) const;

  /// Index-level adjacency; undirected graphs return the same list for both.
  std::span<const std::size_t> out_adjacency(std::size_t index) const {
    return out_adj_[index];
  }
  std::span<const std::size_t> in_adjacency(std::size_t index) const {
    return is_directed() ? std::span<const std::size_t>(in_adj_[index])
                         : std::span<const std::size_t>(out_adj_[index]);
  }

  AdjacencyPattern adjacency_matrix() const;

  /// Copy restricted to `node_indices` (kept in the given order) and the
  /// subset `edge_indices` of edges, whose endpoints must all be kept. Data
  /// rows of survivors are carried over; graph data is copied.
  DataGraph subgraph(std::span<const std::size_t> node_indices,
                     std::span<const std::size_t> edge_indices) const;

  /// Full structural audit; throws Error(Corrupt) describing the first
  /// violated invariant.
  void check_invariants() const;

  /// Node order, edge order, kind, and all tables compared bit-for-bit.
  friend bool bit_equal(const DataGraph& a, const DataGraph& b);

 private:
  Edge canonical(std::size_t u, std::size_t v) const;
  void rebuild_indexes();

  GraphKind kind_;
  std::vector<NodeKey> nodes_;
  std::unordered_map<NodeKey, std::size_t, NodeKeyHash> node_map_;
  std::vector<Edge> edges_;
  std::unordered_map<Edge, std::size_t, EdgeHash> edge_map_;
  std::vector<std::vector<std::size_t>> out_adj_;
  std::vector<std::vector<std::size_t>> in_adj_;
  AttributeTable node_data_;
  AttributeTable edge_data_;
  AttributeTable graph_data_;
};

bool bit_equal(const DataGraph& a, const DataGraph& b);

}  // namespace datagraph
