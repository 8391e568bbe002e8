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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "datagraph/array.hpp"
#include "datagraph/data_graph.hpp"

namespace datagraph {

// Image features -------------------------------------------------------------

struct EcFeatureMatrix {
  /// (channels * |thresholds|) x samples; each column is that sample's
  /// per-channel EC curves concatenated channel-major.
  Matrix features;
  std::vector<double> thresholds;
  std::vector<std::string> channel_names;
};

/// Builds a mesh per sample and stacks its node EC curves. All samples must
/// share one p x q x r shape (ShapeMismatch otherwise). Columns are
/// independent, so `threads` > 1 fans samples out without changing output.
EcFeatureMatrix ec_feature_matrix(std::span<const Tensor3> samples,
                                  std::span<const double> thresholds, bool diagonal, bool scale,
                                  std::size_t threads = 1);

// Correlation surveillance ---------------------------------------------------

struct CorrelationWindow {
  /// 0-based first row of the window.
  std::size_t start = 0;
  /// Pearson correlations among the kept columns; exactly symmetric.
  Matrix correlation;
  /// 0-based indices of the kept columns, ascending.
  std::vector<std::size_t> kept;
};

/// Pearson correlation over every `window` consecutive rows of a T x S
/// series. A column is kept only if its correlation with column 1 is
/// defined, so a constant first column leaves just itself. Throws BadWindow
/// unless 2 <= window <= T.
std::vector<CorrelationWindow> sliding_correlation(const Matrix& data, std::size_t window);

/// Pearson correlation matrix of all columns of `block`. Diagonal is 1; any
/// pair involving a zero-variance column is NaN; values clamped to [-1, 1].
Matrix pearson_correlation(const Matrix& block);

struct WindowMetrics {
  /// 1-based first row of the window (0 when computed outside a series).
  std::size_t window_index = 0;
  double ec = 0.0;
  std::size_t n_maximal_cliques = 0;
  std::size_t n_communities = 0;
  /// False when at most two series survived or no candidate threshold
  /// reached the target component count.
  bool valid = false;
  /// Stopping level; edges strictly heavier than it were kept.
  double threshold = 0.0;
  std::size_t n_series = 0;
  /// Mean over the window's rows of the per-row total.
  double mean_cases = 0.0;
};

/// Walks the distinct edge weights of the complete graph of `s` from the
/// largest down, keeping edges with weight strictly above each level, and
/// stops at the first level whose filtered graph has `target_components`
/// components. Metrics are EC, maximal clique count, and k-clique
/// percolation community count of that filtered graph.
WindowMetrics characteristic_threshold_metrics(const Matrix& s, std::size_t k = 25,
                                               std::size_t target_components = 1);

/// sliding_correlation followed by characteristic_threshold_metrics for
/// every window, reported in window order.
std::vector<WindowMetrics> surveillance_series(const Matrix& data, std::size_t window,
                                               std::size_t k = 25,
                                               std::size_t target_components = 1,
                                               std::size_t threads = 1);

// Pathway connectivity -------------------------------------------------------

struct SourceRow {
  NodeKey key;
  std::size_t connected_sinks = 0;
  std::size_t downstream = 0;
};

struct SinkRow {
  NodeKey key;
  std::size_t connected_sources = 0;
  std::size_t upstream = 0;
};

struct ConnectivityReport {
  std::vector<SourceRow> sources;
  std::vector<SinkRow> sinks;
};

/// Node attributes the report writes back.
struct ReportNames {
  std::string connected_sinks = "Connected Products";
  std::string downstream = "Number Downstream";
  std::string connected_sources = "Connected Raw";
  std::string upstream = "Number Upstream";
};

/// Sources are nodes with source_attr == 1, sinks those with sink_attr == 1,
/// both in index order. A node never counts itself as a connected partner.
/// Directed graphs only.
ConnectivityReport compute_connectivity(const DataGraph& g, std::string_view source_attr,
                                        std::string_view sink_attr);

/// compute_connectivity plus write-back of the four counts as node data.
ConnectivityReport connectivity_report(DataGraph& g, std::string_view source_attr,
                                       std::string_view sink_attr, const ReportNames& names = {});

}  // namespace datagraph
