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

#include "datagraph/pipelines.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "datagraph/constructors.hpp"
#include "datagraph/errors.hpp"
#include "datagraph/topology.hpp"
#include "datagraph/transform.hpp"

namespace datagraph {
namespace {

// Runs fn(i) for i in [0, n) on up to `threads` workers. The first exception
// thrown by any worker is rethrown on the caller's thread.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn&& fn) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (auto i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

class ComponentCounter {
 public:
  explicit ComponentCounter(std::size_t n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[std::max(a, b)] = std::min(a, b);
    --components_;
  }
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t components_;
};

Matrix rows_block(const Matrix& data, std::size_t start, std::size_t count) {
  Matrix block(count, data.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < data.cols(); ++j) block(i, j) = data(start + i, j);
  return block;
}

CorrelationWindow window_correlation(const Matrix& data, std::size_t start, std::size_t window) {
  CorrelationWindow out;
  out.start = start;
  const auto full = pearson_correlation(rows_block(data, start, window));
  for (std::size_t j = 0; j < full.rows(); ++j)
    if (!std::isnan(full(j, 0))) out.kept.push_back(j);
  out.correlation = Matrix(out.kept.size(), out.kept.size());
  for (std::size_t a = 0; a < out.kept.size(); ++a)
    for (std::size_t b = 0; b < out.kept.size(); ++b)
      out.correlation(a, b) = full(out.kept[a], out.kept[b]);
  return out;
}

void require_window(const Matrix& data, std::size_t window) {
  if (window < 2 || window > data.rows()) {
    throw Error(ErrorKind::BadWindow, "window " + std::to_string(window) +
                                          " needs 2 <= window <= " +
                                          std::to_string(data.rows()) + " rows");
  }
}

}  // namespace

EcFeatureMatrix ec_feature_matrix(std::span<const Tensor3> samples,
                                  std::span<const double> thresholds, bool diagonal, bool scale,
                                  std::size_t threads) {
  EcFeatureMatrix out;
  out.thresholds.assign(thresholds.begin(), thresholds.end());
  if (samples.empty()) return out;
  const auto& first = samples.front();
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto& t = samples[s];
    if (t.dim0() != first.dim0() || t.dim1() != first.dim1() || t.dim2() != first.dim2()) {
      throw Error(ErrorKind::ShapeMismatch,
                  "sample " + std::to_string(s + 1) + " is " + std::to_string(t.dim0()) + "x" +
                      std::to_string(t.dim1()) + "x" + std::to_string(t.dim2()) +
                      ", expected " + std::to_string(first.dim0()) + "x" +
                      std::to_string(first.dim1()) + "x" + std::to_string(first.dim2()));
    }
  }
  const auto channels = first.dim2();
  for (std::size_t c = 1; c <= channels; ++c) out.channel_names.push_back("weight" + std::to_string(c));
  const auto steps = thresholds.size();
  out.features = Matrix(channels * steps, samples.size());
  parallel_for(samples.size(), threads, [&](std::size_t s) {
    const auto g = matrix_to_graph(samples[s], MeshOptions{diagonal, "weight"});
    for (std::size_t c = 0; c < channels; ++c) {
      const auto curve = run_ec_on_nodes(g, thresholds, out.channel_names[c], scale);
      for (std::size_t i = 0; i < steps; ++i) out.features(c * steps + i, s) = curve.values[i];
    }
  });
  return out;
}

Matrix pearson_correlation(const Matrix& block) {
  const auto n = block.rows();
  const auto s = block.cols();
  std::vector<double> mean(s, 0.0), sd(s, 0.0);
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t i = 0; i < n; ++i) mean[j] += block(i, j);
    mean[j] /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double d = block(i, j) - mean[j];
      sd[j] += d * d;
    }
    sd[j] = std::sqrt(sd[j]);
  }
  Matrix r(s, s, 1.0);
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = a + 1; b < s; ++b) {
      double cov = 0.0;
      for (std::size_t i = 0; i < n; ++i) cov += (block(i, a) - mean[a]) * (block(i, b) - mean[b]);
      double v = cov / (sd[a] * sd[b]);
      if (!std::isnan(v)) v = std::clamp(v, -1.0, 1.0);
      if (sd[a] == 0.0 || sd[b] == 0.0) v = std::nan("");
      r(a, b) = r(b, a) = v;
    }
  }
  return r;
}

std::vector<CorrelationWindow> sliding_correlation(const Matrix& data, std::size_t window) {
  require_window(data, window);
  std::vector<CorrelationWindow> out;
  out.reserve(data.rows() - window + 1);
  for (std::size_t start = 0; start + window <= data.rows(); ++start)
    out.push_back(window_correlation(data, start, window));
  return out;
}

WindowMetrics characteristic_threshold_metrics(const Matrix& s, std::size_t k,
                                               std::size_t target_components) {
  WindowMetrics out;
  out.n_series = s.rows();
  if (s.rows() <= 2 && s.rows() == s.cols()) return out;
  const auto g = symmetric_matrix_to_graph(s, "weight");
  const auto weights = g.get_edge_data("weight");
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
  std::vector<double> levels(weights.begin(), weights.end());
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  ComponentCounter counter(g.num_nodes());
  std::size_t cursor = 0;
  for (double level : levels) {
    while (cursor < order.size() && weights[order[cursor]] > level) {
      const auto& e = g.edges()[order[cursor]];
      counter.unite(e.u, e.v);
      ++cursor;
    }
    if (counter.components() != target_components) continue;
    const auto filtered = filter_edges(g, level, "weight", Predicate::gt());
    out.valid = true;
    out.threshold = level;
    out.ec = static_cast<double>(euler_characteristic(filtered));
    out.n_maximal_cliques = maximal_clique_indices(filtered).size();
    out.n_communities = clique_percolation_indices(filtered, k).size();
    return out;
  }
  return out;
}

std::vector<WindowMetrics> surveillance_series(const Matrix& data, std::size_t window,
                                               std::size_t k, std::size_t target_components,
                                               std::size_t threads) {
  require_window(data, window);
  std::vector<WindowMetrics> out(data.rows() - window + 1);
  parallel_for(out.size(), threads, [&](std::size_t start) {
    const auto w = window_correlation(data, start, window);
    auto metrics = characteristic_threshold_metrics(w.correlation, k, target_components);
    metrics.window_index = start + 1;
    double total = 0.0;
    for (std::size_t i = start; i < start + window; ++i)
      for (std::size_t j = 0; j < data.cols(); ++j) total += data(i, j);
    metrics.mean_cases = total / static_cast<double>(window);
    out[start] = metrics;
  });
  return out;
}

ConnectivityReport compute_connectivity(const DataGraph& g, std::string_view source_attr,
                                        std::string_view sink_attr) {
  if (!g.is_directed()) {
    throw Error(ErrorKind::KindMismatch, "connectivity report requires a directed graph");
  }
  const auto source_flag = g.get_node_data(source_attr);
  const auto sink_flag = g.get_node_data(sink_attr);
  std::vector<std::size_t> sources, sinks;
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    if (source_flag[i] == 1.0) sources.push_back(i);
    if (sink_flag[i] == 1.0) sinks.push_back(i);
  }
  auto count_flagged = [](const std::vector<std::size_t>& reach, const std::vector<double>& flag) {
    return static_cast<std::size_t>(
        std::count_if(reach.begin(), reach.end(), [&](std::size_t i) { return flag[i] == 1.0; }));
  };
  ConnectivityReport report;
  for (auto s : sources) {
    const auto reach = reachable_indices(g, s, true);
    report.sources.push_back({g.node(s), count_flagged(reach, sink_flag), reach.size()});
  }
  for (auto t : sinks) {
    const auto reach = reachable_indices(g, t, false);
    report.sinks.push_back({g.node(t), count_flagged(reach, source_flag), reach.size()});
  }
  return report;
}

ConnectivityReport connectivity_report(DataGraph& g, std::string_view source_attr,
                                       std::string_view sink_attr, const ReportNames& names) {
  auto report = compute_connectivity(g, source_attr, sink_attr);
  std::vector<double> connected_sinks(g.num_nodes(), 0.0), downstream(g.num_nodes(), 0.0);
  std::vector<double> connected_sources(g.num_nodes(), 0.0), upstream(g.num_nodes(), 0.0);
  for (const auto& row : report.sources) {
    const auto i = g.node_index(row.key);
    connected_sinks[i] = static_cast<double>(row.connected_sinks);
    downstream[i] = static_cast<double>(row.downstream);
  }
  for (const auto& row : report.sinks) {
    const auto i = g.node_index(row.key);
    connected_sources[i] = static_cast<double>(row.connected_sources);
    upstream[i] = static_cast<double>(row.upstream);
  }
  g.add_node_dataset(connected_sinks, names.connected_sinks);
  g.add_node_dataset(downstream, names.downstream);
  g.add_node_dataset(connected_sources, names.connected_sources);
  g.add_node_dataset(upstream, names.upstream);
  return report;
}

}  // namespace datagraph
