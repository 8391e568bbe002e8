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

#include "datagraph/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "datagraph/errors.hpp"

namespace datagraph {
namespace {

constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();

void require_undirected(const DataGraph& g, const char* op) {
  if (g.is_directed()) {
    throw Error(ErrorKind::KindMismatch, std::string(op) + " requires an undirected graph");
  }
}

void require_directed(const DataGraph& g, const char* op) {
  if (!g.is_directed()) {
    throw Error(ErrorKind::KindMismatch, std::string(op) + " requires a directed graph");
  }
}

void require_ascending(std::span<const double> thresholds) {
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (std::isnan(thresholds[i]) || (i > 0 && thresholds[i] < thresholds[i - 1])) {
      throw Error(ErrorKind::UnsortedThresholds,
                  "thresholds must be ascending; violated at position " + std::to_string(i + 1));
    }
  }
}

// Counts of entities whose activation value is <= each threshold. NaN
// activations never enter.
std::vector<std::size_t> sweep_counts(std::vector<double> activations,
                                      std::span<const double> thresholds) {
  std::erase_if(activations, [](double a) { return std::isnan(a); });
  std::sort(activations.begin(), activations.end());
  std::vector<std::size_t> counts(thresholds.size());
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    while (cursor < activations.size() && activations[cursor] <= thresholds[i]) ++cursor;
    counts[i] = cursor;
  }
  return counts;
}

EcCurve finish_curve(const DataGraph& g, std::span<const double> thresholds,
                     const std::vector<std::size_t>& nodes, const std::vector<std::size_t>& edges,
                     bool scale) {
  EcCurve curve;
  curve.thresholds.assign(thresholds.begin(), thresholds.end());
  curve.scaled = scale;
  const auto total = static_cast<std::int64_t>(g.num_nodes() + g.num_edges());
  curve.denominator = scale ? total : 1;
  curve.values.resize(thresholds.size());
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    const auto ec = static_cast<double>(static_cast<std::int64_t>(nodes[i]) -
                                        static_cast<std::int64_t>(edges[i]));
    curve.values[i] = (scale && total > 0) ? ec / static_cast<double>(total) : ec;
  }
  return curve;
}

// Distances from `source` following out-edges (`forward`) or in-edges; a
// weakly connected walk when `both`.
std::vector<std::size_t> bfs(const DataGraph& g, std::size_t source, bool forward,
                             bool both = false) {
  std::vector<std::size_t> dist(g.num_nodes(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  auto visit = [&](std::size_t u, std::span<const std::size_t> list) {
    for (auto w : list) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  };
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    if (both || forward) visit(u, g.out_adjacency(u));
    if (both || !forward) visit(u, g.in_adjacency(u));
  }
  return dist;
}

std::vector<NodeKey> to_keys(const DataGraph& g, std::span<const std::size_t> indices) {
  std::vector<NodeKey> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(g.node(i));
  return out;
}

std::vector<std::vector<NodeKey>> to_key_sets(const DataGraph& g,
                                              const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<std::vector<NodeKey>> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(to_keys(g, s));
  return out;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a,
                                   std::span<const std::size_t> b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// Tomita-style pivoting: branch only on candidates outside the pivot's
// neighborhood, with the pivot chosen to maximize |P ∩ N(u)|.
void bron_kerbosch(const DataGraph& g, std::vector<std::size_t>& clique,
                   std::vector<std::size_t> candidates, std::vector<std::size_t> excluded,
                   std::vector<std::vector<std::size_t>>& out) {
  if (candidates.empty()) {
    if (excluded.empty()) {
      auto c = clique;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return;
  }
  std::size_t pivot = candidates.front();
  std::size_t best = 0;
  bool first = true;
  for (const auto* pool : {&candidates, &excluded}) {
    for (auto u : *pool) {
      auto score = intersection_size(candidates, g.out_adjacency(u));
      if (first || score > best) {
        best = score;
        pivot = u;
        first = false;
      }
    }
  }
  std::vector<std::size_t> branch;
  std::set_difference(candidates.begin(), candidates.end(), g.out_adjacency(pivot).begin(),
                      g.out_adjacency(pivot).end(), std::back_inserter(branch));
  for (auto v : branch) {
    auto nbrs = g.out_adjacency(v);
    clique.push_back(v);
    bron_kerbosch(g, clique, intersect(candidates, nbrs), intersect(excluded, nbrs), out);
    clique.pop_back();
    candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
    excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
  }
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::int64_t euler_characteristic(const DataGraph& g) {
  return static_cast<std::int64_t>(g.num_nodes()) - static_cast<std::int64_t>(g.num_edges());
}

EcCurve run_ec_on_nodes(const DataGraph& g, std::span<const double> thresholds,
                        std::string_view attr, bool scale) {
  const auto weights = g.node_table().column(g.node_table().column_index(attr));
  require_ascending(thresholds);
  std::vector<double> node_entry(weights.begin(), weights.end());
  std::vector<double> edge_entry;
  edge_entry.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    const double a = weights[e.u], b = weights[e.v];
    edge_entry.push_back((std::isnan(a) || std::isnan(b)) ? std::nan("") : std::max(a, b));
  }
  return finish_curve(g, thresholds, sweep_counts(std::move(node_entry), thresholds),
                      sweep_counts(std::move(edge_entry), thresholds), scale);
}

EcCurve run_ec_on_edges(const DataGraph& g, std::span<const double> thresholds,
                        std::string_view attr, bool scale) {
  const auto weights = g.edge_table().column(g.edge_table().column_index(attr));
  require_ascending(thresholds);
  std::vector<std::size_t> nodes(thresholds.size(), g.num_nodes());
  return finish_curve(g, thresholds, nodes,
                      sweep_counts({weights.begin(), weights.end()}, thresholds), scale);
}

std::vector<std::vector<std::size_t>> connected_component_indices(const DataGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(g.num_nodes(), false);
  for (std::size_t s = 0; s < g.num_nodes(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> members{s};
    seen[s] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      auto u = members[head];
      for (auto list : {g.out_adjacency(u), g.in_adjacency(u)}) {
        for (auto w : list) {
          if (!seen[w]) {
            seen[w] = true;
            members.push_back(w);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<std::vector<NodeKey>> connected_components(const DataGraph& g) {
  return to_key_sets(g, connected_component_indices(g));
}

std::size_t count_components(const DataGraph& g) {
  DisjointSets sets(g.num_nodes());
  for (const auto& e : g.edges()) sets.unite(e.u, e.v);
  std::size_t n = 0;
  for (std::size_t i = 0; i < g.num_nodes(); ++i) n += sets.find(i) == i;
  return n;
}

std::int64_t cycle_space_dimension(const DataGraph& g) {
  require_undirected(g, "cycle_space_dimension");
  return static_cast<std::int64_t>(g.num_edges()) - static_cast<std::int64_t>(g.num_nodes()) +
         static_cast<std::int64_t>(count_components(g));
}

bool has_path(const DataGraph& g, const NodeKey& from, const NodeKey& to) {
  const auto s = g.node_index(from);
  const auto t = g.node_index(to);
  return bfs(g, s, true)[t] != kUnreached;
}

std::vector<NodeKey> shortest_path(const DataGraph& g, const NodeKey& from, const NodeKey& to) {
  const auto s = g.node_index(from);
  const auto t = g.node_index(to);
  // Distances to the target, then a greedy walk from the source that always
  // steps to the smallest-index neighbor one hop closer.
  const auto to_target = bfs(g, t, false);
  if (to_target[s] == kUnreached) return {};
  std::vector<std::size_t> path{s};
  auto u = s;
  while (u != t) {
    for (auto w : g.out_adjacency(u)) {
      if (to_target[w] + 1 == to_target[u]) {
        u = w;
        break;
      }
    }
    path.push_back(u);
  }
  return to_keys(g, path);
}

std::vector<std::size_t> reachable_indices(const DataGraph& g, std::size_t source, bool forward) {
  const auto dist = bfs(g, source, forward);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (i != source && dist[i] != kUnreached) out.push_back(i);
  return out;
}

std::vector<NodeKey> upstream_nodes(const DataGraph& g, const NodeKey& key) {
  require_directed(g, "upstream_nodes");
  return to_keys(g, reachable_indices(g, g.node_index(key), false));
}

std::vector<NodeKey> downstream_nodes(const DataGraph& g, const NodeKey& key) {
  require_directed(g, "downstream_nodes");
  return to_keys(g, reachable_indices(g, g.node_index(key), true));
}

std::int64_t diameter(const DataGraph& g) {
  require_undirected(g, "diameter");
  if (g.num_nodes() == 0) throw Error(ErrorKind::EmptyGraph, "diameter of an empty graph");
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.num_nodes(); ++s) {
    for (auto d : bfs(g, s, true)) {
      if (d == kUnreached) throw Error(ErrorKind::Disconnected, "diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return static_cast<std::int64_t>(best);
}

double average_degree(const DataGraph& g) {
  if (g.num_nodes() == 0) throw Error(ErrorKind::EmptyGraph, "average degree of an empty graph");
  const double factor = g.is_directed() ? 1.0 : 2.0;
  return factor * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_nodes());
}

std::vector<std::vector<std::size_t>> maximal_clique_indices(const DataGraph& g) {
  require_undirected(g, "maximal_cliques");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> all(g.num_nodes());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::size_t> clique;
  if (!all.empty()) bron_kerbosch(g, clique, std::move(all), {}, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<NodeKey>> maximal_cliques(const DataGraph& g) {
  return to_key_sets(g, maximal_clique_indices(g));
}

std::vector<std::vector<std::size_t>> clique_percolation_indices(const DataGraph& g,
                                                                 std::size_t k) {
  require_undirected(g, "clique_percolation");
  if (k < 2) throw Error(ErrorKind::BadK, "clique percolation needs k >= 2, got " + std::to_string(k));
  // Every k-clique lies in some maximal clique of size >= k, and two such
  // maximal cliques hold adjacent k-cliques exactly when they share >= k-1
  // nodes, so percolating over maximal cliques gives the same communities.
  std::vector<std::vector<std::size_t>> cliques;
  for (auto& c : maximal_clique_indices(g))
    if (c.size() >= k) cliques.push_back(std::move(c));
  DisjointSets sets(cliques.size());
  for (std::size_t a = 0; a < cliques.size(); ++a)
    for (std::size_t b = a + 1; b < cliques.size(); ++b)
      if (intersection_size(cliques[a], cliques[b]) + 1 >= k) sets.unite(a, b);
  std::vector<std::vector<std::size_t>> grouped(cliques.size());
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    auto& dst = grouped[sets.find(a)];
    dst.insert(dst.end(), cliques[a].begin(), cliques[a].end());
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& members : grouped) {
    if (members.empty()) continue;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<NodeKey>> clique_percolation(const DataGraph& g, std::size_t k) {
  return to_key_sets(g, clique_percolation_indices(g, k));
}

}  // namespace datagraph
