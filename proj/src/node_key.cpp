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

#include "datagraph/node_key.hpp"

#include <charconv>
#include <functional>
#include <optional>
#include <vector>

#include "datagraph/errors.hpp"

namespace datagraph {

IndexTuple::IndexTuple(std::int64_t i, std::int64_t j) : values_{i, j, 0}, size_(2) {}

IndexTuple::IndexTuple(std::int64_t i, std::int64_t j, std::int64_t k)
    : values_{i, j, k}, size_(3) {}

std::string NodeKey::to_string() const {
  switch (tag()) {
    case Tag::Int:
      return std::to_string(as_int());
    case Tag::Text:
      return as_text();
    case Tag::Tuple: {
      std::string out = "(";
      const auto& t = as_tuple();
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t[i]);
      }
      return out + ")";
    }
  }
  return {};
}

std::size_t NodeKey::hash() const noexcept {
  std::size_t seed = static_cast<std::size_t>(tag()) * 0x9E3779B97F4A7C15ull;
  auto mix = [&seed](std::size_t h) { seed ^= h + 0x9E3779B97F4A7C15ull + (seed << 6) + (seed >> 2); };
  switch (tag()) {
    case Tag::Int:
      mix(std::hash<std::int64_t>{}(as_int()));
      break;
    case Tag::Text:
      mix(std::hash<std::string>{}(as_text()));
      break;
    case Tag::Tuple:
      for (auto v : as_tuple()) mix(std::hash<std::int64_t>{}(v));
      break;
  }
  return seed;
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t value = 0;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

NodeKey parse_table_key(std::string_view text) {
  if (auto v = parse_int(trim(text))) return NodeKey(*v);
  return NodeKey(text);
}

NodeKey parse_node_key(std::string_view text) {
  if (text.starts_with("int:")) {
    auto v = parse_int(trim(text.substr(4)));
    if (!v) throw Error(ErrorKind::Parse, "bad integer key '" + std::string(text) + "'");
    return NodeKey(*v);
  }
  if (text.starts_with("str:")) return NodeKey(text.substr(4));
  auto t = trim(text);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
    std::vector<std::int64_t> parts;
    auto body = t.substr(1, t.size() - 2);
    bool ok = true;
    while (ok) {
      auto comma = body.find(',');
      auto v = parse_int(trim(body.substr(0, comma)));
      if (!v) {
        ok = false;
        break;
      }
      parts.push_back(*v);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    if (ok && parts.size() == 2) return NodeKey::tuple(parts[0], parts[1]);
    if (ok && parts.size() == 3) return NodeKey::tuple(parts[0], parts[1], parts[2]);
  }
  if (auto v = parse_int(t)) return NodeKey(*v);
  return NodeKey(text);
}

}  // namespace datagraph
