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

#include "datagraph/data_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "datagraph/errors.hpp"

namespace datagraph {

std::string_view to_string(GraphKind kind) {
  return kind == GraphKind::Directed ? "directed" : "undirected";
}

bool AdjacencyPattern::contains(std::size_t i, std::size_t j) const {
  if (i >= size) return false;
  auto first = columns.begin() + static_cast<std::ptrdiff_t>(offsets[i]);
  auto last = columns.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]);
  return std::binary_search(first, last, j);
}

AdjacencyPattern AdjacencyPattern::transpose() const {
  AdjacencyPattern t;
  t.size = size;
  t.offsets.assign(size + 1, 0);
  for (auto j : columns) ++t.offsets[j + 1];
  std::partial_sum(t.offsets.begin(), t.offsets.end(), t.offsets.begin());
  t.columns.resize(columns.size());
  auto cursor = t.offsets;
  // Rows are visited in ascending order, so each transposed row comes out sorted.
  for (std::size_t i = 0; i < size; ++i)
    for (auto k = offsets[i]; k < offsets[i + 1]; ++k) t.columns[cursor[columns[k]]++] = i;
  return t;
}

namespace {

std::string one_based(std::size_t index) { return std::to_string(index + 1); }

void insert_sorted(std::vector<std::size_t>& list, std::size_t value) {
  list.insert(std::lower_bound(list.begin(), list.end(), value), value);
}

}  // namespace

DataGraph::DataGraph(GraphKind kind) : kind_(kind) { graph_data_.resize_rows(1); }

Edge DataGraph::canonical(std::size_t u, std::size_t v) const {
  if (!is_directed() && v < u) std::swap(u, v);
  return {u, v};
}

std::optional<std::size_t> DataGraph::find_node(const NodeKey& key) const {
  auto it = node_map_.find(key);
  if (it == node_map_.end()) return std::nullopt;
  return it->second;
}

std::size_t DataGraph::node_index(const NodeKey& key) const {
  if (auto i = find_node(key)) return *i;
  throw Error(ErrorKind::UnknownNode, "node " + key.to_string() + " is not in the graph");
}

std::optional<std::size_t> DataGraph::find_edge(std::size_t u, std::size_t v) const {
  auto it = edge_map_.find(canonical(u, v));
  if (it == edge_map_.end()) return std::nullopt;
  return it->second;
}

bool DataGraph::has_edge(const NodeKey& u, const NodeKey& v) const {
  auto iu = find_node(u);
  auto iv = find_node(v);
  return iu && iv && find_edge(*iu, *iv).has_value();
}

std::size_t DataGraph::edge_index(const NodeKey& u, const NodeKey& v) const {
  auto iu = node_index(u);
  auto iv = node_index(v);
  if (auto e = find_edge(iu, iv)) return *e;
  throw Error(ErrorKind::UnknownEdge, "edge (" + u.to_string() + ", " + v.to_string() +
                                          ") is not in the graph");
}

bool DataGraph::add_node(NodeKey key) {
  if (node_map_.contains(key)) return false;
  node_map_.emplace(key, nodes_.size());
  nodes_.push_back(std::move(key));
  out_adj_.emplace_back();
  if (is_directed()) in_adj_.emplace_back();
  node_data_.append_row();
  return true;
}

bool DataGraph::add_edge(const NodeKey& u, const NodeKey& v) {
  if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop on node " + u.to_string());
  add_node(u);
  add_node(v);
  return add_edge_by_index(node_index(u), node_index(v));
}

bool DataGraph::add_edge_by_index(std::size_t u, std::size_t v) {
  if (u >= nodes_.size() || v >= nodes_.size()) {
    throw Error(ErrorKind::UnknownNode, "edge endpoint index out of range: (" + one_based(u) +
                                            ", " + one_based(v) + ")");
  }
  if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop on node " + nodes_[u].to_string());
  auto e = canonical(u, v);
  if (edge_map_.contains(e)) return false;
  edge_map_.emplace(e, edges_.size());
  edges_.push_back(e);
  if (is_directed()) {
    insert_sorted(out_adj_[e.u], e.v);
    insert_sorted(in_adj_[e.v], e.u);
  } else {
    insert_sorted(out_adj_[e.u], e.v);
    insert_sorted(out_adj_[e.v], e.u);
  }
  edge_data_.append_row();
  return true;
}

void DataGraph::add_node_data(const NodeKey& key, double value, std::string_view attr) {
  auto row = node_index(key);
  auto col = node_data_.ensure_column(attr);
  node_data_.set(row, col, value);
}

void DataGraph::add_node_dataset(std::span<const double> values, std::string_view attr) {
  node_data_.set_column(attr, values);
}

void DataGraph::add_edge_data(const NodeKey& u, const NodeKey& v, double value,
                              std::string_view attr) {
  auto row = edge_index(u, v);
  auto col = edge_data_.ensure_column(attr);
  edge_data_.set(row, col, value);
}

void DataGraph::add_edge_dataset(std::span<const double> values, std::string_view attr) {
  edge_data_.set_column(attr, values);
}

void DataGraph::add_graph_data(double value, std::string_view attr) {
  auto col = graph_data_.ensure_column(attr);
  graph_data_.set(0, col, value);
}

double DataGraph::get_graph_data(std::string_view attr) const {
  return graph_data_.get(0, graph_data_.column_index(attr));
}

std::vector<double> DataGraph::get_node_data(std::string_view attr) const {
  auto col = node_data_.column(node_data_.column_index(attr));
  return {col.begin(), col.end()};
}

Matrix DataGraph::get_node_data() const { return node_data_.to_matrix(); }

std::vector<double> DataGraph::get_edge_data(std::string_view attr) const {
  auto col = edge_data_.column(edge_data_.column_index(attr));
  return {col.begin(), col.end()};
}

Matrix DataGraph::get_edge_data() const { return edge_data_.to_matrix(); }

std::vector<std::size_t> DataGraph::ordered_edge_permutation() const {
  std::vector<std::size_t> perm(edges_.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  // Stored undirected edges are already (min, max), so one comparison covers
  // both graph kinds.
  std::sort(perm.begin(), perm.end(),
            [this](std::size_t a, std::size_t b) { return edges_[a] < edges_[b]; });
  return perm;
}

std::vector<double> DataGraph::get_ordered_edge_data(std::string_view attr) const {
  auto col = edge_data_.column(edge_data_.column_index(attr));
  std::vector<double> out;
  out.reserve(col.size());
  for (auto e : ordered_edge_permutation()) out.push_back(col[e]);
  return out;
}

Matrix DataGraph::get_ordered_edge_data() const {
  return edge_data_.select_rows(ordered_edge_permutation()).to_matrix();
}

void DataGraph::order_edges() {
  auto perm = ordered_edge_permutation();
  std::vector<Edge> sorted;
  sorted.reserve(edges_.size());
  for (auto e : perm) sorted.push_back(edges_[e]);
  edges_ = std::move(sorted);
  edge_data_ = edge_data_.select_rows(perm);
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_map_[edges_[i]] = i;
}

std::vector<NodeKey> DataGraph::neighbors(const NodeKey& key) const {
  auto i = node_index(key);
  std::vector<NodeKey> out;
  for (auto j : out_adj_[i]) out.push_back(nodes_[j]);
  return out;
}

std::vector<NodeKey> DataGraph::out_neighbors(const NodeKey& key) const {
  if (!is_directed()) {
    throw Error(ErrorKind::KindMismatch, "out_neighbors requires a directed graph");
  }
  return neighbors(key);
}

std::vector<NodeKey> DataGraph::in_neighbors(const NodeKey& key) const {
  if (!is_directed()) {
    throw Error(ErrorKind::KindMismatch, "in_neighbors requires a directed graph");
  }
  auto i = node_index(key);
  std::vector<NodeKey> out;
  for (auto j : in_adj_[i]) out.push_back(nodes_[j]);
  return out;
}

AdjacencyPattern DataGraph::adjacency_matrix() const {
  AdjacencyPattern a;
  a.size = nodes_.size();
  a.offsets.reserve(a.size + 1);
  a.offsets.push_back(0);
  for (const auto& list : out_adj_) {
    a.columns.insert(a.columns.end(), list.begin(), list.end());
    a.offsets.push_back(a.columns.size());
  }
  return a;
}

DataGraph DataGraph::subgraph(std::span<const std::size_t> node_indices,
                              std::span<const std::size_t> edge_indices) const {
  constexpr auto kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> remap(nodes_.size(), kAbsent);
  DataGraph out(kind_);
  out.nodes_.reserve(node_indices.size());
  for (auto i : node_indices) {
    if (i >= nodes_.size() || remap[i] != kAbsent) {
      throw Error(ErrorKind::UnknownNode, "subgraph node index " + one_based(i) +
                                              " is out of range or repeated");
    }
    remap[i] = out.nodes_.size();
    out.nodes_.push_back(nodes_[i]);
  }
  out.edges_.reserve(edge_indices.size());
  for (auto e : edge_indices) {
    const auto& edge = edges_.at(e);
    if (remap[edge.u] == kAbsent || remap[edge.v] == kAbsent) {
      throw Error(ErrorKind::UnknownNode, "subgraph keeps edge (" + one_based(edge.u) + ", " +
                                              one_based(edge.v) + ") without its endpoints");
    }
    out.edges_.push_back(out.canonical(remap[edge.u], remap[edge.v]));
  }
  out.node_data_ = node_data_.select_rows(node_indices);
  out.edge_data_ = edge_data_.select_rows(edge_indices);
  out.graph_data_ = graph_data_;
  out.rebuild_indexes();
  return out;
}

void DataGraph::rebuild_indexes() {
  node_map_.clear();
  node_map_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) node_map_.emplace(nodes_[i], i);
  edge_map_.clear();
  edge_map_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_map_.emplace(edges_[i], i);
  out_adj_.assign(nodes_.size(), {});
  in_adj_.assign(is_directed() ? nodes_.size() : 0, {});
  for (const auto& e : edges_) {
    out_adj_[e.u].push_back(e.v);
    if (is_directed()) {
      in_adj_[e.v].push_back(e.u);
    } else {
      out_adj_[e.v].push_back(e.u);
    }
  }
  for (auto& list : out_adj_) std::sort(list.begin(), list.end());
  for (auto& list : in_adj_) std::sort(list.begin(), list.end());
}

DataGraph DataGraph::from_parts(GraphKind kind, std::vector<NodeKey> nodes,
                                std::vector<Edge> edges, AttributeTable node_data,
                                AttributeTable edge_data, AttributeTable graph_data) {
  DataGraph g(kind);
  g.nodes_ = std::move(nodes);
  g.edges_ = std::move(edges);
  g.node_data_ = std::move(node_data);
  g.edge_data_ = std::move(edge_data);
  g.graph_data_ = std::move(graph_data);
  for (const auto& e : g.edges_) {
    if (e.u >= g.nodes_.size() || e.v >= g.nodes_.size()) {
      throw Error(ErrorKind::Corrupt, "edge (" + one_based(e.u) + ", " + one_based(e.v) +
                                          ") references a missing node");
    }
  }
  g.rebuild_indexes();
  g.check_invariants();
  return g;
}

void DataGraph::check_invariants() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::Corrupt, what); };
  if (node_map_.size() != nodes_.size()) fail("duplicate node keys");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    auto it = node_map_.find(nodes_[i]);
    if (it == node_map_.end() || it->second != i) fail("node map disagrees at node " + one_based(i));
    if (nodes_[i].is_tuple() && nodes_[i].as_tuple().size() != 2 &&
        nodes_[i].as_tuple().size() != 3) {
      fail("tuple key arity must be 2 or 3");
    }
  }
  if (edge_map_.size() != edges_.size()) fail("duplicate edges");
  std::size_t degree_sum = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u >= nodes_.size() || e.v >= nodes_.size()) fail("edge endpoint out of range");
    if (e.u == e.v) fail("self-loop at node " + one_based(e.u));
    if (!is_directed() && e.u > e.v) fail("undirected edge not canonical");
    auto it = edge_map_.find(e);
    if (it == edge_map_.end() || it->second != i) fail("edge map disagrees at edge " + one_based(i));
  }
  for (std::size_t i = 0; i < out_adj_.size(); ++i) {
    const auto& list = out_adj_[i];
    if (!std::is_sorted(list.begin(), list.end())) fail("adjacency list unsorted");
    for (auto j : list) {
      if (!find_edge(i, j)) fail("adjacency lists an absent edge");
    }
    degree_sum += list.size();
  }
  if (degree_sum != (is_directed() ? 1 : 2) * edges_.size()) fail("adjacency does not mirror edges");
  if (is_directed()) {
    std::size_t in_sum = 0;
    for (std::size_t i = 0; i < in_adj_.size(); ++i) {
      if (!std::is_sorted(in_adj_[i].begin(), in_adj_[i].end())) fail("in-adjacency unsorted");
      for (auto j : in_adj_[i]) {
        if (!find_edge(j, i)) fail("in-adjacency lists an absent edge");
      }
      in_sum += in_adj_[i].size();
    }
    if (in_sum != edges_.size()) fail("in-adjacency does not mirror edges");
  }
  if (node_data_.rows() != nodes_.size()) fail("node data row count differs from node count");
  if (edge_data_.rows() != edges_.size()) fail("edge data row count differs from edge count");
  if (graph_data_.rows() != 1) fail("graph data must have exactly one row");
}

bool bit_equal(const DataGraph& a, const DataGraph& b) {
  return a.kind_ == b.kind_ && a.nodes_ == b.nodes_ && a.edges_ == b.edges_ &&
         bit_equal(a.node_data_, b.node_data_) && bit_equal(a.edge_data_, b.edge_data_) &&
         bit_equal(a.graph_data_, b.graph_data_);
}

}  // namespace datagraph
