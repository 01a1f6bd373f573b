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

#ifndef ODDCORE_GRAPH_H_
#define ODDCORE_GRAPH_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace oddcore {

using Vertex = int32_t;
inline constexpr Vertex kNoVertex = -1;

using Edge = std::pair<Vertex, Vertex>;

// Raised for malformed graph input: self-loops, duplicate edges, ids out of
// range. The message names the offending pair.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sorted list of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);

  // Sorts and deduplicates.
  static VertexSet FromUnsorted(std::vector<Vertex> ids);
  // Caller guarantees strictly increasing order.
  static VertexSet FromSorted(std::vector<Vertex> ids);
  // {v : mask[v]}.
  static VertexSet FromMask(const std::vector<bool>& mask);
  static VertexSet Range(Vertex n);

  bool Contains(Vertex v) const;
  bool empty() const { return ids_.empty(); }
  size_t size() const { return ids_.size(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex operator[](size_t i) const { return ids_[i]; }
  const std::vector<Vertex>& ids() const { return ids_; }

  std::vector<bool> ToMask(Vertex n) const;

  VertexSet Union(const VertexSet& other) const;
  VertexSet Intersection(const VertexSet& other) const;
  VertexSet Difference(const VertexSet& other) const;

  // Maps each id through `mapping` (new id -> old id), re-sorting the result.
  VertexSet Lift(std::span<const Vertex> mapping) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return a.ids_ < b.ids_;
  }

 private:
  std::vector<Vertex> ids_;
};

std::string ToString(const VertexSet& set);

// A simple cycle c_0, ..., c_{k-1}, k >= 3.
struct Cycle {
  std::vector<Vertex> vertices;

  size_t length() const { return vertices.size(); }
  bool is_odd() const { return vertices.size() % 2 == 1; }
  VertexSet vertex_set() const { return VertexSet::FromUnsorted(vertices); }

  // Rotates to start at the minimum id and orients toward the smaller of
  // its two cycle neighbors.
  Cycle Canonical() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  // Throws GraphError on a self-loop, duplicate edge or out-of-range
  // endpoint.
  static Graph Build(Vertex n, std::span<const Edge> edges);
  static Graph Build(Vertex n, std::initializer_list<Edge> edges) {
    return Build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  Vertex num_vertices() const { return static_cast<Vertex>(adjacency_.size()); }
  int64_t num_edges() const { return static_cast<int64_t>(edges_.size()); }

  // Neighbors in ascending order.
  std::span<const Vertex> Neighbors(Vertex v) const { return adjacency_[v]; }
  int Degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool HasEdge(Vertex u, Vertex v) const;
  bool IsValid(Vertex v) const { return v >= 0 && v < num_vertices(); }

  // Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& Edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// A graph derived from a parent together with the map from its vertex ids to
// the parent's ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  VertexSet Lift(const VertexSet& set) const { return set.Lift(to_parent); }
};

// G - v. Remaining vertices keep their relative order.
Subgraph DeleteVertex(const Graph& g, Vertex v);

// G - X.
Subgraph DeleteVertices(const Graph& g, const VertexSet& removed);

// G[X].
Subgraph InducedSubgraph(const Graph& g, const VertexSet& keep);

// N(S); may intersect S.
VertexSet Neighborhood(const Graph& g, const VertexSet& set);

bool IsIndependent(const Graph& g, const VertexSet& set);

// Components sorted by minimum element.
std::vector<VertexSet> ConnectedComponents(const Graph& g);
bool IsConnected(const Graph& g);

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

// Either a proper 2-coloring (colour classes; the minimum vertex of every
// component is on the left) or an odd cycle found by breadth-first layering.
using BipartitionOrOddCycle = std::variant<Bipartition, Cycle>;
BipartitionOrOddCycle FindBipartitionOrOddCycle(const Graph& g);
bool IsBipartite(const Graph& g);

// Vertex v maps to v and v + n; each edge uv yields (u, v + n) and (v, u + n).
Graph BipartiteDoubleCover(const Graph& g);

// Frequently used small graphs.
Graph CycleGraph(Vertex k);
Graph PathGraph(Vertex k);
Graph CompleteGraph(Vertex k);
Graph EmptyGraph(Vertex k);
// Disjoint union; vertices of `b` are shifted by a.num_vertices().
Graph DisjointUnion(const Graph& a, const Graph& b);
// Relabels vertex v to permutation[v].
Graph Relabel(const Graph& g, std::span<const Vertex> permutation);

}  // namespace oddcore

#endif  // ODDCORE_GRAPH_H_
