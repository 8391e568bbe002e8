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

#include "datagraph/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "datagraph/constructors.hpp"
#include "datagraph/errors.hpp"
#include "datagraph/io.hpp"
#include "datagraph/membench.hpp"
#include "datagraph/pipelines.hpp"
#include "datagraph/topology.hpp"
#include "datagraph/transform.hpp"

namespace datagraph {
namespace {

struct Summary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::string extra;

  void from(const DataGraph& g) {
    nodes = g.num_nodes();
    edges = g.num_edges();
  }
};

struct Globals {
  std::string delimiter = ",";
  bool verbose = false;
  std::size_t threads = 0;
};

char delimiter_of(const Globals& globals) {
  if (globals.delimiter.size() != 1) {
    throw CLI::ValidationError("--delimiter", "must be a single character");
  }
  return globals.delimiter.front();
}

std::size_t resolve_threads(std::size_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("DATAGRAPH_THREADS")) {
    char* end = nullptr;
    const auto value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return 1;
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (path) {
    write_text_file(*path, text);
  } else {
    out << text;
  }
}

void report_warnings(const std::vector<std::string>& warnings, const Globals& globals,
                     std::ostream& err) {
  if (warnings.empty()) return;
  if (globals.verbose) {
    for (const auto& w : warnings) err << "warning: " << w << "\n";
  } else {
    err << "warning: " << warnings.size() << " duplicate row(s) ignored (use --verbose)\n";
  }
}

std::vector<NodeKey> parse_keys(const std::vector<std::string>& texts) {
  std::vector<NodeKey> keys;
  keys.reserve(texts.size());
  for (const auto& t : texts) keys.push_back(parse_node_key(t));
  return keys;
}

}  // namespace

std::vector<double> threshold_grid(double a, double b, std::size_t n) {
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = n == 1 ? a : a + static_cast<double>(i) * (b - a) / static_cast<double>(n - 1);
  }
  return grid;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Attribute-bearing graph modeling and topological analysis", "datagraph"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--delimiter", globals.delimiter, "Field delimiter for delimited input");
  app.add_flag("-v,--verbose", globals.verbose, "Print every table warning");
  app.add_option("--threads", globals.threads,
                 "Worker threads for ec-curve and percolate (fallback: DATAGRAPH_THREADS, then 1)");

  Summary summary;
  std::function<void()> action;

  // convert ------------------------------------------------------------------
  auto* convert = app.add_subcommand("convert", "Array file to graph archive");
  convert->require_subcommand(1);
  convert->fallthrough();
  std::string in_path, out_path;
  bool diagonal = false;
  std::string attr_base = "weight";
  std::size_t block_rows = 0;
  bool mesh = false;
  double tol = 1e-9;
  {
    auto* matrix = convert->add_subcommand("matrix", "p x q matrix to a mesh graph");
    matrix->add_option("--in", in_path, "Delimited matrix file")->required();
    matrix->add_option("--out", out_path, "Archive path")->required();
    matrix->add_flag("--diagonal", diagonal, "Add diagonal mesh edges");
    matrix->add_option("--attr-base", attr_base, "Node attribute name");
    matrix->callback([&] {
      action = [&] {
        const auto m = read_delimited_matrix(in_path, delimiter_of(globals));
        const auto g = matrix_to_graph(m, MeshOptions{diagonal, attr_base});
        write_graph_archive(g, out_path);
        summary.from(g);
      };
    });

    auto* tensor = convert->add_subcommand("tensor", "Stacked p x q blocks to a graph");
    tensor->add_option("--in", in_path, "Delimited file of r stacked p x q blocks")->required();
    tensor->add_option("--out", out_path, "Archive path")->required();
    tensor->add_option("--block-rows", block_rows, "Rows per block (p)")->required()
        ->check(CLI::PositiveNumber);
    tensor->add_flag("--mesh", mesh,
                     "p x q mesh with one attribute per block instead of one node per entry");
    tensor->add_flag("--diagonal", diagonal, "Add diagonal mesh edges (with --mesh)");
    tensor->add_option("--attr-base", attr_base, "Attribute base name (with --mesh)");
    tensor->callback([&] {
      action = [&] {
        const auto t = read_delimited_tensor(in_path, block_rows, delimiter_of(globals));
        const auto g = mesh ? matrix_to_graph(t, MeshOptions{diagonal, attr_base})
                            : tensor_to_graph(t);
        write_graph_archive(g, out_path);
        summary.from(g);
      };
    });

    auto* symmetric = convert->add_subcommand("symmetric", "Symmetric matrix to a complete graph");
    symmetric->add_option("--in", in_path, "Delimited square matrix file")->required();
    symmetric->add_option("--out", out_path, "Archive path")->required();
    symmetric->add_option("--attr", attr_base, "Edge attribute name");
    symmetric->add_option("--tol", tol, "Absolute symmetry tolerance");
    symmetric->callback([&] {
      action = [&] {
        const auto m = read_delimited_matrix(in_path, delimiter_of(globals));
        const auto g = symmetric_matrix_to_graph(m, attr_base, tol);
        write_graph_archive(g, out_path);
        summary.from(g);
      };
    });
  }

  std::optional<std::string> csv_out;

  // ec-curve -----------------------------------------------------------------
  std::string on = "nodes";
  std::vector<std::string> ec_attrs;
  double grid_min = 0.0, grid_max = 1.0;
  std::size_t steps = 201;
  bool scale = false;
  {
    auto* ec = app.add_subcommand("ec-curve", "EC curve(s) of an archive as CSV");
    ec->add_option("--in", in_path, "Archive path")->required();
    ec->add_option("--out", csv_out, "CSV path (default stdout)");
    ec->add_option("--on", on, "Filter nodes or edges")
        ->check(CLI::IsMember({"nodes", "edges"}));
    ec->add_option("--attr", ec_attrs, "Attribute(s); one CSV column each")->required();
    ec->add_option("--min", grid_min, "First threshold");
    ec->add_option("--max", grid_max, "Last threshold");
    ec->add_option("--steps", steps, "Number of thresholds")->check(CLI::PositiveNumber);
    ec->add_flag("--scale", scale, "Divide by |N| + |E| of the unfiltered graph");
    ec->callback([&] {
      action = [&] {
        const auto g = read_graph_archive(in_path);
        const auto grid = threshold_grid(grid_min, grid_max, steps);
        std::vector<EcCurve> curves(ec_attrs.size());
        const auto threads = std::min(resolve_threads(globals.threads), ec_attrs.size());
        auto work = [&](std::size_t a) {
          curves[a] = on == "nodes" ? run_ec_on_nodes(g, grid, ec_attrs[a], scale)
                                    : run_ec_on_edges(g, grid, ec_attrs[a], scale);
        };
        if (threads <= 1) {
          for (std::size_t a = 0; a < curves.size(); ++a) work(a);
        } else {
          // Attributes are validated up front so workers never throw.
          for (const auto& a : ec_attrs) {
            (on == "nodes" ? g.node_table() : g.edge_table()).column_index(a);
          }
          std::vector<std::thread> pool;
          for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
              for (std::size_t a = t; a < curves.size(); a += threads) work(a);
            });
          }
          for (auto& th : pool) th.join();
        }
        std::vector<std::string> header{"threshold"};
        header.insert(header.end(), ec_attrs.begin(), ec_attrs.end());
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          std::vector<std::string> row{format_double(grid[i])};
          for (const auto& c : curves) row.push_back(format_double(c.values[i]));
          rows.push_back(std::move(row));
        }
        emit(csv_out, csv_rows_to_string(header, rows), out);
        summary.from(g);
      };
    });
  }

  // filter -------------------------------------------------------------------
  std::string op = "lt";
  double threshold = 0.0;
  std::string attr = "weight";
  {
    auto* filter = app.add_subcommand("filter", "Node or edge filtration of an archive");
    filter->require_subcommand(1);
    filter->fallthrough();
    for (const char* which : {"nodes", "edges"}) {
      auto* sub = filter->add_subcommand(which, std::string("Keep ") + which +
                                                    " where op(value, threshold) holds");
      sub->add_option("--in", in_path, "Archive path")->required();
      sub->add_option("--out", out_path, "Archive path")->required();
      sub->add_option("--op", op, "lt, le, gt, ge, eq, or ne")
          ->check(CLI::IsMember({"lt", "le", "gt", "ge", "eq", "ne"}));
      sub->add_option("--threshold", threshold, "Comparison threshold")->required();
      sub->add_option("--attr", attr, "Attribute name");
      const bool nodes = std::string(which) == "nodes";
      sub->callback([&, nodes] {
        action = [&, nodes] {
          const auto g = read_graph_archive(in_path);
          const auto pred = Predicate::from_name(op);
          const auto f = nodes ? filter_nodes(g, threshold, attr, pred)
                               : filter_edges(g, threshold, attr, pred);
          write_graph_archive(f, out_path);
          summary.from(f);
        };
      });
    }
  }

  // aggregate ----------------------------------------------------------------
  std::vector<std::string> member_texts;
  std::string new_key;
  std::string node_reducer = "mean", edge_reducer = "mean";
  {
    auto* agg = app.add_subcommand("aggregate", "Collapse a node set into one node");
    agg->add_option("--in", in_path, "Archive path")->required();
    agg->add_option("--out", out_path, "Archive path")->required();
    agg->add_option("--nodes", member_texts, "Member keys separated by ';'")
        ->required()
        ->delimiter(';');
    agg->add_option("--new-key", new_key, "Key of the aggregated node")->required();
    agg->add_option("--node-reducer", node_reducer, "mean, sum, max, or min")
        ->check(CLI::IsMember({"mean", "sum", "max", "min"}));
    agg->add_option("--edge-reducer", edge_reducer, "mean, sum, max, or min")
        ->check(CLI::IsMember({"mean", "sum", "max", "min"}));
    agg->callback([&] {
      action = [&] {
        const auto g = read_graph_archive(in_path);
        const auto members = parse_keys(member_texts);
        const auto a = aggregate(g, members, parse_node_key(new_key),
                                 Reducer::from_name(node_reducer), Reducer::from_name(edge_reducer));
        write_graph_archive(a, out_path);
        summary.from(a);
      };
    });
  }

  // percolate ----------------------------------------------------------------
  std::size_t window = 7, k = 25, target = 1;
  bool header = false;
  {
    auto* perc = app.add_subcommand("percolate", "Windowed correlation percolation metrics");
    perc->add_option("--in", in_path, "Delimited T x S time series")->required();
    perc->add_option("--out", csv_out, "CSV path (default stdout)");
    perc->add_flag("--header", header, "Skip the first line of the input");
    perc->add_option("--window", window, "Rows per window");
    perc->add_option("--k", k, "Clique size for percolation");
    perc->add_option("--target-components", target, "Component count that stops the sweep")
        ->check(CLI::PositiveNumber);
    perc->callback([&] {
      action = [&] {
        const auto data = read_delimited_matrix(in_path, delimiter_of(globals), header);
        const auto series =
            surveillance_series(data, window, k, target, resolve_threads(globals.threads));
        std::vector<std::vector<std::string>> rows;
        for (const auto& m : series) {
          rows.push_back({std::to_string(m.window_index), m.valid ? "1" : "0",
                          format_double(m.threshold), format_double(m.ec),
                          std::to_string(m.n_maximal_cliques), std::to_string(m.n_communities),
                          std::to_string(m.n_series), format_double(m.mean_cases)});
        }
        emit(csv_out,
             csv_rows_to_string({"window_index", "valid", "threshold", "ec", "n_maximal_cliques",
                                 "n_communities", "n_series", "mean_cases"},
                                rows),
             out);
        summary.nodes = data.cols();
        summary.edges = data.cols() * (data.cols() > 0 ? data.cols() - 1 : 0) / 2;
        summary.extra = " windows=" + std::to_string(series.size());
      };
    });
  }

  // report -------------------------------------------------------------------
  std::optional<std::string> node_table_path, edge_table_path, archive_in, archive_out;
  std::string source_attr = "raw", sink_attr = "product";
  std::vector<std::string> remove_texts;
  {
    auto* rep = app.add_subcommand("report", "Source/sink connectivity report of a directed graph");
    auto* from_archive = rep->add_option("--in", archive_in, "Directed archive");
    auto* from_edges = rep->add_option("--edges", edge_table_path, "Edge table (source,target,...)");
    rep->add_option("--nodes", node_table_path, "Node table (key,...) with the flag columns")
        ->needs(from_edges);
    from_archive->excludes(from_edges);
    rep->add_option("--out", csv_out, "CSV path (default stdout)");
    rep->add_option("--source-attr", source_attr, "Node attribute flagging sources with 1");
    rep->add_option("--sink-attr", sink_attr, "Node attribute flagging sinks with 1");
    rep->add_option("--remove", remove_texts, "Node to remove before reporting (repeatable)");
    rep->add_option("--archive-out", archive_out, "Write the annotated graph here");
    rep->callback([&] {
      if (!archive_in && !edge_table_path) {
        throw CLI::RequiredError("report needs --in or --edges");
      }
      action = [&] {
        DataGraph g;
        if (archive_in) {
          g = read_graph_archive(*archive_in);
        } else {
          std::optional<NodeTable> nodes;
          if (node_table_path) {
            nodes = read_node_table(*node_table_path, true, delimiter_of(globals));
            report_warnings(nodes->warnings, globals, err);
          }
          const auto edges = read_edge_table(*edge_table_path, true, delimiter_of(globals));
          report_warnings(edges.warnings, globals, err);
          g = graph_from_tables(GraphKind::Directed, nodes ? &*nodes : nullptr, edges);
        }
        for (const auto& key : parse_keys(remove_texts)) g = remove_node(g, key);
        const auto report = connectivity_report(g, source_attr, sink_attr);
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : report.sources) {
          rows.push_back({"source", r.key.to_string(), std::to_string(r.connected_sinks),
                          std::to_string(r.downstream)});
        }
        for (const auto& r : report.sinks) {
          rows.push_back({"sink", r.key.to_string(), std::to_string(r.connected_sources),
                          std::to_string(r.upstream)});
        }
        emit(csv_out, csv_rows_to_string({"role", "key", "connected", "reachable"}, rows), out);
        if (archive_out) write_graph_archive(g, *archive_out);
        summary.from(g);
      };
    });
  }

  // export-dot ---------------------------------------------------------------
  std::optional<std::string> color_attr, label_attr;
  {
    auto* dot = app.add_subcommand("export-dot", "Graphviz DOT rendering of an archive");
    dot->add_option("--in", in_path, "Archive path")->required();
    dot->add_option("--out", csv_out, "DOT path (default stdout)");
    dot->add_option("--color-attr", color_attr, "Node attribute emitted as value=");
    dot->add_option("--label-attr", label_attr, "Edge attribute emitted as label=");
    dot->callback([&] {
      action = [&] {
        const auto g = read_graph_archive(in_path);
        emit(csv_out, to_dot(g, DotOptions{color_attr, label_attr}), out);
        summary.from(g);
      };
    });
  }

  // bench --------------------------------------------------------------------
  std::size_t bench_rows = 100, bench_cols = 100, bench_weights = 1;
  std::uint64_t seed = 1;
  {
    auto* bench = app.add_subcommand("bench", "Per-field memory accounting of a mesh graph");
    bench->add_option("--rows", bench_rows, "Mesh rows")->check(CLI::PositiveNumber);
    bench->add_option("--cols", bench_cols, "Mesh columns")->check(CLI::PositiveNumber);
    bench->add_option("--weights", bench_weights, "Node attributes")->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed, "Generator seed");
    bench->add_option("--csv", csv_out, "Also write field,bytes,percent CSV here");
    bench->callback([&] {
      action = [&] {
        const auto g = bench_graph(bench_rows, bench_cols, bench_weights, seed);
        const auto report = size_report(g);
        out << format_size_report(report);
        if (csv_out) {
          std::vector<std::vector<std::string>> rows;
          const auto shares = report.percentages();
          const auto fields = report.fields();
          for (std::size_t i = 0; i < fields.size(); ++i) {
            rows.push_back({fields[i].first, std::to_string(fields[i].second),
                            format_double(shares[i].second)});
          }
          rows.push_back({"total", std::to_string(report.total), "100"});
          write_csv_rows({"field", "bytes", "percent"}, rows, *csv_out);
        }
        summary.from(g);
      };
    });
  }

  // edge-order ---------------------------------------------------------------
  {
    auto* order = app.add_subcommand("edge-order", "Edge data in adjacency order as CSV");
    order->add_option("--in", in_path, "Archive path")->required();
    order->add_option("--out", csv_out, "CSV path (default stdout)");
    order->add_option("--archive-out", archive_out, "Also write the reordered archive here");
    order->callback([&] {
      action = [&] {
        auto g = read_graph_archive(in_path);
        g.order_edges();
        std::vector<std::string> head{"source", "target"};
        const auto& names = g.edge_table().names();
        head.insert(head.end(), names.begin(), names.end());
        std::vector<std::vector<std::string>> rows;
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
          const auto& edge = g.edges()[e];
          std::vector<std::string> row{g.node(edge.u).to_string(), g.node(edge.v).to_string()};
          for (std::size_t c = 0; c < g.edge_table().cols(); ++c)
            row.push_back(format_double(g.edge_table().get(e, c)));
          rows.push_back(std::move(row));
        }
        emit(csv_out, csv_rows_to_string(head, rows), out);
        if (archive_out) write_graph_archive(g, *archive_out);
        summary.from(g);
      };
    });
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (action) action();
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  char line[160];
  std::snprintf(line, sizeof line, "nodes=%zu edges=%zu%s elapsed=%.3fs\n", summary.nodes,
                summary.edges, summary.extra.c_str(), elapsed.count());
  err << line;
  return kExitOk;
}

}  // namespace datagraph
