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

#include "datagraph/transform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_set>

#include "datagraph/errors.hpp"

namespace datagraph {

Predicate Predicate::lt() { return {"lt", [](double a, double b) { return a < b; }}; }
Predicate Predicate::le() { return {"le", [](double a, double b) { return a <= b; }}; }
Predicate Predicate::gt() { return {"gt", [](double a, double b) { return a > b; }}; }
Predicate Predicate::ge() { return {"ge", [](double a, double b) { return a >= b; }}; }
Predicate Predicate::eq() { return {"eq", [](double a, double b) { return a == b; }}; }
Predicate Predicate::ne() {
  return {"ne", [](double a, double b) { return !std::isnan(a) && a != b; }};
}

Predicate Predicate::custom(std::string name, std::function<bool(double, double)> fn) {
  return {std::move(name), std::move(fn)};
}

Predicate Predicate::from_name(std::string_view name) {
  if (name == "lt") return lt();
  if (name == "le") return le();
  if (name == "gt") return gt();
  if (name == "ge") return ge();
  if (name == "eq") return eq();
  if (name == "ne") return ne();
  throw Error(ErrorKind::Parse, "unknown predicate '" + std::string(name) + "'");
}

Reducer Reducer::mean() {
  return {"mean", [](std::span<const double> v) {
            return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
          }};
}
Reducer Reducer::sum() {
  return {"sum", [](std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }};
}
Reducer Reducer::max() {
  return {"max", [](std::span<const double> v) { return *std::max_element(v.begin(), v.end()); }};
}
Reducer Reducer::min() {
  return {"min", [](std::span<const double> v) { return *std::min_element(v.begin(), v.end()); }};
}

Reducer Reducer::custom(std::string name, std::function<double(std::span<const double>)> fn) {
  return {std::move(name), std::move(fn)};
}

Reducer Reducer::from_name(std::string_view name) {
  if (name == "mean") return mean();
  if (name == "sum") return sum();
  if (name == "max") return max();
  if (name == "min") return min();
  throw Error(ErrorKind::Parse, "unknown reducer '" + std::string(name) + "'");
}

namespace {

std::vector<std::size_t> all_edges_except(const DataGraph& g, std::size_t skip) {
  std::vector<std::size_t> kept;
  kept.reserve(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (e != skip) kept.push_back(e);
  return kept;
}

std::vector<std::size_t> indices_of(const std::vector<bool>& mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> edges_within(const DataGraph& g, const std::vector<bool>& node_mask) {
  std::vector<std::size_t> kept;
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (node_mask[edges[e].u] && node_mask[edges[e].v]) kept.push_back(e);
  return kept;
}

}  // namespace

DataGraph remove_node(const DataGraph& g, const NodeKey& key) {
  std::vector<bool> keep(g.num_nodes(), true);
  keep[g.node_index(key)] = false;
  return g.subgraph(indices_of(keep), edges_within(g, keep));
}

DataGraph remove_edge(const DataGraph& g, const NodeKey& u, const NodeKey& v) {
  auto e = g.edge_index(u, v);
  std::vector<std::size_t> nodes(g.num_nodes());
  std::iota(nodes.begin(), nodes.end(), std::size_t{0});
  return g.subgraph(nodes, all_edges_except(g, e));
}

std::vector<bool> node_filter_mask(const DataGraph& g, double threshold, std::string_view attr,
                                   const Predicate& pred) {
  auto col = g.node_table().column(g.node_table().column_index(attr));
  std::vector<bool> keep(col.size());
  for (std::size_t i = 0; i < col.size(); ++i) keep[i] = pred(col[i], threshold);
  return keep;
}

std::vector<bool> edge_filter_mask(const DataGraph& g, double threshold, std::string_view attr,
                                   const Predicate& pred) {
  auto col = g.edge_table().column(g.edge_table().column_index(attr));
  std::vector<bool> keep(col.size());
  for (std::size_t i = 0; i < col.size(); ++i) keep[i] = pred(col[i], threshold);
  return keep;
}

DataGraph filter_nodes(const DataGraph& g, double threshold, std::string_view attr,
                       const Predicate& pred) {
  auto keep = node_filter_mask(g, threshold, attr, pred);
  return g.subgraph(indices_of(keep), edges_within(g, keep));
}

DataGraph filter_edges(const DataGraph& g, double threshold, std::string_view attr,
                       const Predicate& pred) {
  auto keep = edge_filter_mask(g, threshold, attr, pred);
  std::vector<std::size_t> nodes(g.num_nodes());
  std::iota(nodes.begin(), nodes.end(), std::size_t{0});
  return g.subgraph(nodes, indices_of(keep));
}

DataGraph aggregate(const DataGraph& g, std::span<const NodeKey> members, const NodeKey& new_key,
                    const Reducer& node_reducer, const Reducer& edge_reducer) {
  if (members.empty()) throw Error(ErrorKind::EmptySet, "aggregation set is empty");
  std::vector<bool> in_set(g.num_nodes(), false);
  std::vector<std::size_t> member_rows;
  for (const auto& key : members) {
    auto i = g.node_index(key);
    if (in_set[i]) {
      throw Error(ErrorKind::DuplicateKey, "node " + key.to_string() + " listed twice");
    }
    in_set[i] = true;
    member_rows.push_back(i);
  }
  if (auto existing = g.find_node(new_key); existing && !in_set[*existing]) {
    throw Error(ErrorKind::DuplicateKey,
                "new key " + new_key.to_string() + " already names a node outside the set");
  }

  constexpr auto kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> survivors;
  std::vector<std::size_t> remap(g.num_nodes(), kAbsent);
  std::vector<NodeKey> nodes;
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    if (in_set[i]) continue;
    remap[i] = survivors.size();
    survivors.push_back(i);
    nodes.push_back(g.node(i));
  }
  const auto agg = survivors.size();
  nodes.push_back(new_key);

  // Bundles of original edges that merge into one edge touching the new node,
  // keyed by (outside node, direction). Direction 0: outside -> set (or the
  // only bundle for undirected graphs); 1: set -> outside.
  std::map<std::pair<std::size_t, int>, std::vector<std::size_t>> bundles;
  std::vector<std::size_t> kept_edges;
  std::vector<Edge> edges;
  const auto& original = g.edges();
  for (std::size_t e = 0; e < original.size(); ++e) {
    const auto [u, v] = original[e];
    if (!in_set[u] && !in_set[v]) {
      kept_edges.push_back(e);
      edges.push_back({remap[u], remap[v]});
    } else if (in_set[u] != in_set[v]) {
      const bool outside_is_source = !in_set[u];
      const auto outside = outside_is_source ? u : v;
      const int direction = (g.is_directed() && !outside_is_source) ? 1 : 0;
      bundles[{outside, direction}].push_back(e);
    }
  }

  AttributeTable node_table = g.node_table().select_rows(survivors);
  node_table.append_row();
  std::vector<double> scratch;
  for (std::size_t c = 0; c < node_table.cols(); ++c) {
    auto col = g.node_table().column(c);
    scratch.clear();
    for (auto r : member_rows) scratch.push_back(col[r]);
    node_table.set(agg, c, node_reducer(scratch));
  }

  AttributeTable edge_table = g.edge_table().select_rows(kept_edges);
  for (const auto& [bundle_key, bundle] : bundles) {
    const auto [outside, direction] = bundle_key;
    if (direction == 1) {
      edges.push_back({agg, remap[outside]});
    } else {
      edges.push_back({remap[outside], agg});
    }
    edge_table.append_row();
    const auto row = edge_table.rows() - 1;
    for (std::size_t c = 0; c < edge_table.cols(); ++c) {
      auto col = g.edge_table().column(c);
      scratch.clear();
      for (auto e : bundle) scratch.push_back(col[e]);
      edge_table.set(row, c, edge_reducer(scratch));
    }
  }

  return DataGraph::from_parts(g.kind(), std::move(nodes), std::move(edges), std::move(node_table),
                               std::move(edge_table), g.graph_table());
}

}  // namespace datagraph
