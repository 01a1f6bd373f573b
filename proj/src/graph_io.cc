// Copyright 2026 The oddcore Authors.
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

#include "oddcore/graph_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace oddcore {

std::optional<GraphFormat> ParseGraphFormat(std::string_view name) {
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "dimacs") return GraphFormat::kDimacs;
  if (name == "json") return GraphFormat::kJson;
  return std::nullopt;
}

std::string_view GraphFormatName(GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList:
      return "edgelist";
    case GraphFormat::kDimacs:
      return "dimacs";
    case GraphFormat::kJson:
      return "json";
  }
  return "unknown";
}

namespace {

[[noreturn]] void Fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int64_t ToInt(std::string_view token, int line) {
  int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    Fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

Vertex ToVertexCount(int64_t value, int line) {
  if (value < 0 || value > (int64_t{1} << 30)) {
    Fail(line, "vertex count out of range");
  }
  return static_cast<Vertex>(value);
}

template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    fn(text.substr(pos, end - pos), number);
    pos = end + 1;
  }
}

Graph BuildOrFail(Vertex n, const std::vector<Edge>& edges) {
  try {
    return Graph::Build(n, edges);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

Graph ParseEdgeList(std::string_view text) {
  std::optional<Vertex> declared;
  std::vector<Edge> edges;
  int64_t max_id = -1;
  ForEachLine(text, [&](std::string_view line, int number) {
    const size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = Tokens(line);
    if (tokens.empty()) return;
    if (tokens[0] == "n") {
      if (tokens.size() != 2) Fail(number, "expected 'n <count>'");
      if (declared) Fail(number, "vertex count declared twice");
      if (!edges.empty()) Fail(number, "'n' header must precede edges");
      declared = ToVertexCount(ToInt(tokens[1], number), number);
      return;
    }
    if (tokens.size() != 2) Fail(number, "expected 'u v'");
    const int64_t u = ToInt(tokens[0], number);
    const int64_t v = ToInt(tokens[1], number);
    if (u < 0 || v < 0) Fail(number, "negative vertex id");
    if (declared && (u >= *declared || v >= *declared)) {
      Fail(number, "vertex id exceeds declared count");
    }
    if (u > (int64_t{1} << 30) || v > (int64_t{1} << 30)) {
      Fail(number, "vertex id out of range");
    }
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  });
  const Vertex n = declared ? *declared : static_cast<Vertex>(max_id + 1);
  return BuildOrFail(n, edges);
}

Graph ParseDimacs(std::string_view text) {
  std::optional<Vertex> n;
  int64_t declared_edges = 0;
  std::vector<Edge> edges;
  ForEachLine(text, [&](std::string_view line, int number) {
    auto tokens = Tokens(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        Fail(number, "expected 'p edge <n> <m>'");
      }
      if (n) Fail(number, "duplicate problem line");
      n = ToVertexCount(ToInt(tokens[2], number), number);
      declared_edges = ToInt(tokens[3], number);
      return;
    }
    if (tokens[0] == "e") {
      if (!n) Fail(number, "edge before problem line");
      if (tokens.size() != 3) Fail(number, "expected 'e <u> <v>'");
      const int64_t u = ToInt(tokens[1], number);
      const int64_t v = ToInt(tokens[2], number);
      if (u < 1 || v < 1 || u > *n || v > *n) {
        Fail(number, "vertex id out of range 1.." + std::to_string(*n));
      }
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      return;
    }
    Fail(number, "unknown line type '" + std::string(tokens[0]) + "'");
  });
  if (!n) throw ParseError("missing problem line");
  if (declared_edges != static_cast<int64_t>(edges.size())) {
    throw ParseError("problem line declares " + std::to_string(declared_edges) +
                     " edges, found " + std::to_string(edges.size()));
  }
  return BuildOrFail(*n, edges);
}

Graph ParseJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw ParseError("expected an object with 'n' and 'edges'");
  }
  const auto& n_field = doc["n"];
  if (!n_field.is_number_integer()) throw ParseError("'n' must be an integer");
  const Vertex n = ToVertexCount(n_field.get<int64_t>(), 1);
  const auto& list = doc["edges"];
  if (!list.is_array()) throw ParseError("'edges' must be an array");
  std::vector<Edge> edges;
  edges.reserve(list.size());
  for (const auto& pair : list) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw ParseError("each edge must be a pair of integers");
    }
    const int64_t u = pair[0].get<int64_t>();
    const int64_t v = pair[1].get<int64_t>();
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge endpoint out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return BuildOrFail(n, edges);
}

}  // namespace

Graph ParseGraph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList:
      return ParseEdgeList(text);
    case GraphFormat::kDimacs:
      return ParseDimacs(text);
    case GraphFormat::kJson:
      return ParseJson(text);
  }
  throw ParseError("unknown format");
}

Graph ReadGraphFile(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGraph(buffer.str(), format);
}

std::string SerializeGraph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::kEdgeList:
      out << "n " << g.num_vertices() << '\n';
      for (auto [u, v] : g.Edges()) out << u << ' ' << v << '\n';
      break;
    case GraphFormat::kDimacs:
      out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
      for (auto [u, v] : g.Edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
      break;
    case GraphFormat::kJson:
      out << "{\"n\":" << g.num_vertices() << ",\"edges\":[";
      for (size_t i = 0; i < g.Edges().size(); ++i) {
        if (i > 0) out << ',';
        out << '[' << g.Edges()[i].first << ',' << g.Edges()[i].second << ']';
      }
      out << "]}\n";
      break;
  }
  return out.str();
}

}  // namespace oddcore
