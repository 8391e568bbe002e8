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
#include <span>
#include <string_view>
#include <vector>

#include "datagraph/data_graph.hpp"

namespace datagraph {

/// |N| - |E|.
std::int64_t euler_characteristic(const DataGraph& g);

/// EC evaluated along an ascending threshold grid.
struct EcCurve {
  std::vector<double> thresholds;
  std::vector<double> values;
  bool scaled = false;
  /// |N| + |E| of the unfiltered graph when scaled, otherwise 1.
  std::int64_t denominator = 1;
};

/// values[i] = EC of the node sublevel set {n : w(n) <= thresholds[i]} for
/// attribute `attr`; divided by |N| + |E| when `scale` is set.
///
/// Runs as a single sweep: a node enters at w(n), an edge at the larger of
/// its endpoint weights, so each threshold costs a pointer advance rather
/// than a filtration.
EcCurve run_ec_on_nodes(const DataGraph& g, std::span<const double> thresholds,
                        std::string_view attr, bool scale);

/// Edge sublevel sets {e : w(e) <= t}; all nodes stay, so values are
/// |N| - #edges(t).
EcCurve run_ec_on_edges(const DataGraph& g, std::span<const double> thresholds,
                        std::string_view attr, bool scale);

/// Partition into (weakly) connected components, ordered by smallest member
/// index; members listed in index order.
std::vector<std::vector<NodeKey>> connected_components(const DataGraph& g);
std::vector<std::vector<std::size_t>> connected_component_indices(const DataGraph& g);
std::size_t count_components(const DataGraph& g);

/// |E| - |N| + #components. Undirected only.
std::int64_t cycle_space_dimension(const DataGraph& g);

/// Breadth-first reachability, honoring edge direction on directed graphs.
bool has_path(const DataGraph& g, const NodeKey& from, const NodeKey& to);
/// Minimal-hop path from..to inclusive, empty if unreachable. Among equal
/// length paths the one through smaller node indices wins.
std::vector<NodeKey> shortest_path(const DataGraph& g, const NodeKey& from, const NodeKey& to);

/// Nodes with a directed path into / out of `key`, excluding `key`; in
/// index order. Directed graphs only.
std::vector<NodeKey> upstream_nodes(const DataGraph& g, const NodeKey& key);
std::vector<NodeKey> downstream_nodes(const DataGraph& g, const NodeKey& key);

/// Index-level reachability from `source` (excluding it) following out-edges
/// (`forward`) or in-edges.
std::vector<std::size_t> reachable_indices(const DataGraph& g, std::size_t source, bool forward);

/// Largest shortest-path hop count over all node pairs of a connected
/// undirected graph.
std::int64_t diameter(const DataGraph& g);

/// 2|E|/|N| for undirected graphs; |E|/|N| (mean out-degree) for directed.
double average_degree(const DataGraph& g);

/// All maximal cliques (pivoting Bron-Kerbosch), sorted by size descending,
/// then by member indices ascending. Undirected only.
std::vector<std::vector<NodeKey>> maximal_cliques(const DataGraph& g);
std::vector<std::vector<std::size_t>> maximal_clique_indices(const DataGraph& g);

/// k-clique percolation communities: unions of k-cliques chained through
/// shared (k-1)-subsets. Sorted by member indices. Undirected only, k >= 2.
std::vector<std::vector<NodeKey>> clique_percolation(const DataGraph& g, std::size_t k);
std::vector<std::vector<std::size_t>> clique_percolation_indices(const DataGraph& g,
                                                                 std::size_t k);

}  // namespace datagraph
