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

#include "datagraph/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "datagraph/errors.hpp"

namespace datagraph {
namespace {

using Json = nlohmann::ordered_json;

struct Line {
  std::size_t number = 0;
  std::vector<std::string> fields;
};

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "read failed for " + path.string());
  return buffer.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string location(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

std::vector<std::string> split_fields(std::string_view text, char delimiter,
                                      const std::filesystem::path& path, std::size_t number) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        current.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current.push_back(c);
      }
    } else if (c == '"' && trim(current).empty()) {
      current.clear();
      quoted = was_quoted = true;
    } else if (c == delimiter) {
      fields.push_back(was_quoted ? current : std::string(trim(current)));
      current.clear();
      was_quoted = false;
    } else {
      current.push_back(c);
    }
  }
  if (quoted) throw Error(ErrorKind::Parse, location(path, number) + ": unterminated quote");
  fields.push_back(was_quoted ? current : std::string(trim(current)));
  return fields;
}

std::vector<Line> read_lines(const std::filesystem::path& path, char delimiter) {
  const auto text = read_text_file(path);
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view raw(text.data() + pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    if (!trim(raw).empty()) lines.push_back({number, split_fields(raw, delimiter, path, number)});
    pos = end + 1;
  }
  return lines;
}

double parse_number(std::string_view field, const std::filesystem::path& path, std::size_t line,
                    std::size_t column) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto* begin = field.data();
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::Parse, location(path, line) + ": column " + std::to_string(column) +
                                      ": '" + std::string(field) + "' is not a number");
  }
  return value;
}

std::vector<std::vector<double>> numeric_rows(const std::filesystem::path& path, char delimiter,
                                              bool skip_header = false) {
  std::vector<std::vector<double>> rows;
  std::size_t width = 0;
  auto lines = read_lines(path, delimiter);
  if (skip_header && !lines.empty()) lines.erase(lines.begin());
  for (const auto& line : lines) {
    if (rows.empty()) {
      width = line.fields.size();
    } else if (line.fields.size() != width) {
      throw Error(ErrorKind::Ragged, location(path, line.number) + ": " +
                                         std::to_string(line.fields.size()) +
                                         " fields, expected " + std::to_string(width));
    }
    std::vector<double> row;
    row.reserve(width);
    for (std::size_t c = 0; c < line.fields.size(); ++c)
      row.push_back(parse_number(line.fields[c], path, line.number, c + 1));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct KeyedRows {
  std::vector<std::string> attributes;
  std::vector<Line> body;
};

KeyedRows keyed_rows(const std::filesystem::path& path, bool header, char delimiter,
                     std::size_t key_columns) {
  KeyedRows out;
  auto lines = read_lines(path, delimiter);
  if (lines.empty()) return out;
  const auto width = lines.front().fields.size();
  if (width < key_columns) {
    throw Error(ErrorKind::Parse, location(path, lines.front().number) + ": expected at least " +
                                      std::to_string(key_columns) + " key column(s)");
  }
  std::size_t first = 0;
  if (header) {
    out.attributes.assign(lines.front().fields.begin() + static_cast<std::ptrdiff_t>(key_columns),
                          lines.front().fields.end());
    first = 1;
  } else {
    for (std::size_t c = key_columns; c < width; ++c)
      out.attributes.push_back("column" + std::to_string(c + 1));
  }
  for (std::size_t i = first; i < lines.size(); ++i) {
    if (lines[i].fields.size() != width) {
      throw Error(ErrorKind::Ragged, location(path, lines[i].number) + ": " +
                                         std::to_string(lines[i].fields.size()) +
                                         " fields, expected " + std::to_string(width));
    }
    out.body.push_back(std::move(lines[i]));
  }
  return out;
}

Json key_to_json(const NodeKey& key) {
  switch (key.tag()) {
    case NodeKey::Tag::Int:
      return Json{{"int", key.as_int()}};
    case NodeKey::Tag::Text:
      return Json{{"str", key.as_text()}};
    case NodeKey::Tag::Tuple: {
      Json arr = Json::array();
      for (auto v : key.as_tuple()) arr.push_back(v);
      return Json{{"tup", arr}};
    }
  }
  return {};
}

[[noreturn]] void corrupt(const std::string& what) {
  throw Error(ErrorKind::Corrupt, "archive: " + what);
}

NodeKey key_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) corrupt("node key must be a one-field object");
  const auto& [tag, value] = *j.items().begin();
  if (tag == "int" && value.is_number_integer()) return NodeKey(value.get<std::int64_t>());
  if (tag == "str" && value.is_string()) return NodeKey(value.get<std::string>());
  if (tag == "tup" && value.is_array()) {
    for (const auto& v : value)
      if (!v.is_number_integer()) corrupt("tuple key entries must be integers");
    if (value.size() == 2) return NodeKey::tuple(value[0].get<std::int64_t>(), value[1].get<std::int64_t>());
    if (value.size() == 3) {
      return NodeKey::tuple(value[0].get<std::int64_t>(), value[1].get<std::int64_t>(),
                            value[2].get<std::int64_t>());
    }
    corrupt("tuple key must have 2 or 3 entries");
  }
  corrupt("unknown node key tag '" + tag + "'");
}

Json number_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  corrupt("data cell is not a number");
}

Json table_to_json(const AttributeTable& t) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < t.cols(); ++c) row.push_back(number_to_json(t.get(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

AttributeTable table_from_json(const Json& names, const Json& rows, std::size_t expected_rows,
                               const char* what) {
  if (!names.is_array() || !rows.is_array()) corrupt(std::string(what) + " must be arrays");
  AttributeTable t;
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!n.is_string()) corrupt(std::string(what) + " attribute names must be strings");
    if (!seen.insert(n.get<std::string>()).second) corrupt("duplicate attribute name");
    t.ensure_column(n.get<std::string>());
  }
  if (rows.size() != expected_rows) {
    corrupt(std::string(what) + " has " + std::to_string(rows.size()) + " rows, expected " +
            std::to_string(expected_rows));
  }
  t.resize_rows(expected_rows);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != t.cols()) {
      corrupt(std::string(what) + " row " + std::to_string(r + 1) + " has the wrong width");
    }
    for (std::size_t c = 0; c < t.cols(); ++c) t.set(r, c, number_from_json(rows[r][c]));
  }
  return t;
}

const Json& field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) corrupt(std::string("missing field '") + name + "'");
  return *it;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

Matrix read_delimited_matrix(const std::filesystem::path& path, char delimiter,
                             bool skip_header) {
  return Matrix::from_rows(numeric_rows(path, delimiter, skip_header));
}

Tensor3 read_delimited_tensor(const std::filesystem::path& path, std::size_t block_rows,
                              char delimiter) {
  const auto rows = numeric_rows(path, delimiter);
  if (block_rows == 0 || rows.empty() || rows.size() % block_rows != 0) {
    throw Error(ErrorKind::Ragged, path.string() + ": " + std::to_string(rows.size()) +
                                       " rows do not split into blocks of " +
                                       std::to_string(block_rows));
  }
  const auto q = rows.front().size();
  const auto r = rows.size() / block_rows;
  Tensor3 t(block_rows, q, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < block_rows; ++i)
      for (std::size_t j = 0; j < q; ++j) t(i, j, k) = rows[k * block_rows + i][j];
  return t;
}

NodeTable read_node_table(const std::filesystem::path& path, bool header, char delimiter) {
  auto rows = keyed_rows(path, header, delimiter, 1);
  NodeTable out;
  out.attributes = std::move(rows.attributes);
  std::unordered_set<NodeKey, NodeKeyHash> seen;
  std::vector<std::vector<double>> values;
  for (const auto& line : rows.body) {
    auto key = parse_table_key(line.fields[0]);
    if (!seen.insert(key).second) {
      out.warnings.push_back(location(path, line.number) + ": duplicate key " + key.to_string() +
                             " ignored");
      continue;
    }
    std::vector<double> row;
    for (std::size_t c = 1; c < line.fields.size(); ++c)
      row.push_back(parse_number(line.fields[c], path, line.number, c + 1));
    out.keys.push_back(std::move(key));
    values.push_back(std::move(row));
  }
  out.values = Matrix(values.size(), out.attributes.size());
  for (std::size_t r = 0; r < values.size(); ++r)
    for (std::size_t c = 0; c < values[r].size(); ++c) out.values(r, c) = values[r][c];
  return out;
}

EdgeTable read_edge_table(const std::filesystem::path& path, bool header, char delimiter) {
  auto rows = keyed_rows(path, header, delimiter, 2);
  EdgeTable out;
  out.attributes = std::move(rows.attributes);
  std::vector<std::vector<double>> values;
  std::unordered_set<Edge, EdgeHash> seen;
  std::unordered_map<NodeKey, std::size_t, NodeKeyHash> ids;
  auto id = [&](const NodeKey& k) { return ids.emplace(k, ids.size()).first->second; };
  for (const auto& line : rows.body) {
    auto u = parse_table_key(line.fields[0]);
    auto v = parse_table_key(line.fields[1]);
    if (!seen.insert(Edge{id(u), id(v)}).second) {
      out.warnings.push_back(location(path, line.number) + ": duplicate edge " + u.to_string() +
                             " -> " + v.to_string() + " ignored");
      continue;
    }
    std::vector<double> row;
    for (std::size_t c = 2; c < line.fields.size(); ++c)
      row.push_back(parse_number(line.fields[c], path, line.number, c + 1));
    out.edges.emplace_back(std::move(u), std::move(v));
    values.push_back(std::move(row));
  }
  out.values = Matrix(values.size(), out.attributes.size());
  for (std::size_t r = 0; r < values.size(); ++r)
    for (std::size_t c = 0; c < values[r].size(); ++c) out.values(r, c) = values[r][c];
  return out;
}

DataGraph graph_from_tables(GraphKind kind, const NodeTable* nodes, const EdgeTable& edges) {
  DataGraph g(kind);
  if (nodes) {
    for (const auto& k : nodes->keys) g.add_node(k);
    for (std::size_t r = 0; r < nodes->keys.size(); ++r)
      for (std::size_t c = 0; c < nodes->attributes.size(); ++c)
        g.add_node_data(nodes->keys[r], nodes->values(r, c), nodes->attributes[c]);
  }
  for (std::size_t r = 0; r < edges.edges.size(); ++r) {
    const auto& [u, v] = edges.edges[r];
    g.add_edge(u, v);
    for (std::size_t c = 0; c < edges.attributes.size(); ++c)
      g.add_edge_data(u, v, edges.values(r, c), edges.attributes[c]);
  }
  return g;
}

std::string archive_to_string(const DataGraph& g) {
  Json doc;
  doc["version"] = kArchiveVersion;
  doc["kind"] = std::string(to_string(g.kind()));
  Json nodes = Json::array();
  for (const auto& k : g.nodes()) nodes.push_back(key_to_json(k));
  doc["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u + 1, e.v + 1}));
  doc["edges"] = std::move(edges);
  doc["node_attributes"] = g.node_table().names();
  doc["node_data"] = table_to_json(g.node_table());
  doc["edge_attributes"] = g.edge_table().names();
  doc["edge_data"] = table_to_json(g.edge_table());
  Json graph_data = Json::object();
  for (std::size_t c = 0; c < g.graph_table().cols(); ++c)
    graph_data[g.graph_table().names()[c]] = number_to_json(g.graph_table().get(0, c));
  doc["graph_data"] = std::move(graph_data);
  return doc.dump(1) + "\n";
}

DataGraph archive_from_string(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    corrupt(std::string("not a valid document (") + e.what() + ")");
  }
  if (!doc.is_object()) corrupt("top level must be an object");
  const auto& version = field(doc, "version");
  if (!version.is_number_integer()) corrupt("version must be an integer");
  if (version.get<std::int64_t>() != kArchiveVersion) {
    throw Error(ErrorKind::Version, "archive version " + std::to_string(version.get<std::int64_t>()) +
                                        " is not supported; this build reads version " +
                                        std::to_string(kArchiveVersion));
  }
  const auto& kind_field = field(doc, "kind");
  GraphKind kind;
  if (kind_field == "undirected") {
    kind = GraphKind::Undirected;
  } else if (kind_field == "directed") {
    kind = GraphKind::Directed;
  } else {
    corrupt("kind must be \"undirected\" or \"directed\"");
  }
  const auto& node_list = field(doc, "nodes");
  if (!node_list.is_array()) corrupt("nodes must be an array");
  std::vector<NodeKey> nodes;
  nodes.reserve(node_list.size());
  for (const auto& k : node_list) nodes.push_back(key_from_json(k));
  const auto& edge_list = field(doc, "edges");
  if (!edge_list.is_array()) corrupt("edges must be an array");
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& e : edge_list) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      corrupt("edge entries must be pairs of positive integers");
    }
    const auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
    if (u == 0 || v == 0) corrupt("edge endpoints are 1-based");
    edges.push_back({u - 1, v - 1});
  }
  auto node_data = table_from_json(field(doc, "node_attributes"), field(doc, "node_data"),
                                   nodes.size(), "node_data");
  auto edge_data = table_from_json(field(doc, "edge_attributes"), field(doc, "edge_data"),
                                   edges.size(), "edge_data");
  const auto& graph_field = field(doc, "graph_data");
  if (!graph_field.is_object()) corrupt("graph_data must be an object");
  AttributeTable graph_data;
  graph_data.resize_rows(1);
  for (const auto& [name, value] : graph_field.items()) {
    graph_data.set(0, graph_data.ensure_column(name), number_from_json(value));
  }
  return DataGraph::from_parts(kind, std::move(nodes), std::move(edges), std::move(node_data),
                               std::move(edge_data), std::move(graph_data));
}

void write_graph_archive(const DataGraph& g, const std::filesystem::path& path) {
  write_text_file(path, archive_to_string(g));
}

DataGraph read_graph_archive(const std::filesystem::path& path) {
  return archive_from_string(read_text_file(path));
}

std::string to_dot(const DataGraph& g, const DotOptions& options) {
  std::optional<std::vector<double>> color, label;
  if (options.node_color_attr) color = g.get_node_data(*options.node_color_attr);
  if (options.edge_label_attr) label = g.get_edge_data(*options.edge_label_attr);
  const bool directed = g.is_directed();
  std::string out = directed ? "digraph G {\n" : "graph G {\n";
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    const auto& key = g.node(i);
    out += "  n" + std::to_string(i + 1) + " [label=" + dot_quote(key.to_string());
    if (key.is_tuple() && key.as_tuple().size() == 2) {
      out += ", pos=\"" + std::to_string(key.as_tuple()[1]) + "," +
             std::to_string(-key.as_tuple()[0]) + "!\"";
    }
    if (color) out += ", value=\"" + format_double((*color)[i]) + "\"";
    out += "];\n";
  }
  const char* arrow = directed ? " -> " : " -- ";
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edges()[e];
    out += "  n" + std::to_string(edge.u + 1) + arrow + "n" + std::to_string(edge.v + 1);
    if (label) out += " [label=\"" + format_double((*label)[e]) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

void export_dot(const DataGraph& g, const std::filesystem::path& path, const DotOptions& options) {
  write_text_file(path, to_dot(g, options));
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string csv_matrix_to_string(const Matrix& values, const std::vector<std::string>& header) {
  std::string out;
  for (std::size_t c = 0; c < header.size(); ++c) out += (c ? "," : "") + csv_field(header[c]);
  if (!header.empty()) out += "\n";
  for (std::size_t r = 0; r < values.rows(); ++r) {
    for (std::size_t c = 0; c < values.cols(); ++c) out += (c ? "," : "") + format_double(values(r, c));
    out += "\n";
  }
  return out;
}

void write_csv_matrix(const Matrix& values, const std::vector<std::string>& header,
                      const std::filesystem::path& path) {
  write_text_file(path, csv_matrix_to_string(values, header));
}

std::string csv_rows_to_string(const std::vector<std::string>& header,
                               const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto append = [&out](const std::vector<std::string>& fields) {
    for (std::size_t c = 0; c < fields.size(); ++c) out += (c ? "," : "") + csv_field(fields[c]);
    out += "\n";
  };
  if (!header.empty()) append(header);
  for (const auto& row : rows) append(row);
  return out;
}

void write_csv_rows(const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows,
                    const std::filesystem::path& path) {
  write_text_file(path, csv_rows_to_string(header, rows));
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace datagraph
