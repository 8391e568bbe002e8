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

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "datagraph/data_graph.hpp"

namespace datagraph {

/// Binary comparison (value, threshold) -> keep?  Built-ins return false
/// whenever the value is NaN.
struct Predicate {
  std::string name;
  std::function<bool(double, double)> apply;

  bool operator()(double value, double threshold) const { return apply(value, threshold); }

  static Predicate lt();
  static Predicate le();
  static Predicate gt();
  static Predicate ge();
  static Predicate eq();
  static Predicate ne();
  static Predicate custom(std::string name, std::function<bool(double, double)> fn);
  /// "lt", "le", "gt", "ge", "eq", "ne"; anything else is a Parse error.
  static Predicate from_name(std::string_view name);
};

/// Permutation-invariant reduction over a nonempty multiset.
struct Reducer {
  std::string name;
  std::function<double(std::span<const double>)> apply;

  double operator()(std::span<const double> values) const { return apply(values); }

  static Reducer mean();
  static Reducer sum();
  static Reducer max();
  static Reducer min();
  static Reducer custom(std::string name, std::function<double(std::span<const double>)> fn);
  static Reducer from_name(std::string_view name);
};

// Every transform returns a fresh graph; the input is never modified.

DataGraph remove_node(const DataGraph& g, const NodeKey& key);
DataGraph remove_edge(const DataGraph& g, const NodeKey& u, const NodeKey& v);

/// Keeps nodes with pred(value, threshold) true and the edges between them.
DataGraph filter_nodes(const DataGraph& g, double threshold, std::string_view attr,
                       const Predicate& pred);
/// Keeps every node and the edges with pred(value, threshold) true.
DataGraph filter_edges(const DataGraph& g, double threshold, std::string_view attr,
                       const Predicate& pred);

/// Per-entity keep masks behind the two filters, exposed so sweeps can test
/// nesting without materializing graphs.
std::vector<bool> node_filter_mask(const DataGraph& g, double threshold, std::string_view attr,
                                   const Predicate& pred);
std::vector<bool> edge_filter_mask(const DataGraph& g, double threshold, std::string_view attr,
                                   const Predicate& pred);

/// Collapses `members` into one node `new_key`, appended after the surviving
/// nodes. Edges inside the set vanish; parallel edges from an outside node
/// into the set merge into one edge (one per direction on directed graphs).
/// New node data is node_reducer over members per attribute; merged edge
/// data is edge_reducer over the originals per attribute.
DataGraph aggregate(const DataGraph& g, std::span<const NodeKey> members, const NodeKey& new_key,
                    const Reducer& node_reducer = Reducer::mean(),
                    const Reducer& edge_reducer = Reducer::mean());

}  // namespace datagraph
