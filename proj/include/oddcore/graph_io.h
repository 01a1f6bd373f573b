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

// Text formats for graphs.
//
//   edgelist  "u v" per line, 0-based, '#' starts a comment, an optional
//             "n <count>" line declares the vertex count (needed for
//             isolated vertices).
//   dimacs    "p edge <n> <m>" followed by "e <u> <v>" lines, 1-based;
//             "c" lines are comments.
//   json      {"n":<n>,"edges":[[u,v],...]} with u < v and edges sorted.
//             Serialization is byte-exact.

#ifndef ODDCORE_GRAPH_IO_H_
#define ODDCORE_GRAPH_IO_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "oddcore/graph.h"

namespace oddcore {

enum class GraphFormat { kEdgeList, kDimacs, kJson };

std::optional<GraphFormat> ParseGraphFormat(std::string_view name);
std::string_view GraphFormatName(GraphFormat format);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ParseError for syntax errors and for structural errors (self-loops,
// duplicates, out-of-range ids), with the line number when known.
Graph ParseGraph(std::string_view text, GraphFormat format);
Graph ReadGraphFile(const std::string& path, GraphFormat format);

std::string SerializeGraph(const Graph& g, GraphFormat format);

}  // namespace oddcore

#endif  // ODDCORE_GRAPH_IO_H_
