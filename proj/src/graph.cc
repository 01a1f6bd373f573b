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

#include "oddcore/graph.h"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace oddcore {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(FromUnsorted(std::vector<Vertex>(ids))) {}

VertexSet VertexSet::FromUnsorted(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return FromSorted(std::move(ids));
}

VertexSet VertexSet::FromSorted(std::vector<Vertex> ids) {
  assert(std::adjacent_find(ids.begin(), ids.end(),
                            std::greater_equal<Vertex>()) == ids.end());
  VertexSet set;
  set.ids_ = std::move(ids);
  return set;
}

VertexSet VertexSet::FromMask(const std::vector<bool>& mask) {
  std::vector<Vertex> ids;
  for (size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) ids.push_back(static_cast<Vertex>(v));
  }
  return FromSorted(std::move(ids));
}

VertexSet VertexSet::Range(Vertex n) {
  std::vector<Vertex> ids(n);
  for (Vertex v = 0; v < n; ++v) ids[v] = v;
  return FromSorted(std::move(ids));
}

bool VertexSet::Contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::vector<bool> VertexSet::ToMask(Vertex n) const {
  std::vector<bool> mask(n, false);
  for (Vertex v : ids_) mask[v] = true;
  return mask;
}

VertexSet VertexSet::Union(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

VertexSet VertexSet::Intersection(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

VertexSet VertexSet::Difference(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

VertexSet VertexSet::Lift(std::span<const Vertex> mapping) const {
  std::vector<Vertex> out;
  out.reserve(ids_.size());
  for (Vertex v : ids_) out.push_back(mapping[v]);
  return FromUnsorted(std::move(out));
}

std::string ToString(const VertexSet& set) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out << ',';
    out << set[i];
  }
  out << '}';
  return out.str();
}

Cycle Cycle::Canonical() const {
  const size_t k = vertices.size();
  if (k == 0) return *this;
  const size_t start = static_cast<size_t>(
      std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  const Vertex next = vertices[(start + 1) % k];
  const Vertex prev = vertices[(start + k - 1) % k];
  Cycle out;
  out.vertices.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    out.vertices.push_back(next < prev ? vertices[(start + i) % k]
                                       : vertices[(start + k - i) % k]);
  }
  return out;
}

namespace {

std::string PairString(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::Build(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("endpoint out of range in edge " + PairString(u, v));
    }
    if (u == v) throw GraphError("self-loop " + PairString(u, v));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw GraphError("duplicate edge " + PairString(dup->first, dup->second));
  }
  g.adjacency_.assign(n, {});
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  if (!IsValid(u) || !IsValid(v)) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

Subgraph InducedSubgraph(const Graph& g, const VertexSet& keep) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> to_child(n, kNoVertex);
  Subgraph sub;
  sub.to_parent.reserve(keep.size());
  for (Vertex v : keep) {
    if (!g.IsValid(v)) {
      throw GraphError("invalid vertex id " + std::to_string(v));
    }
    to_child[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.Edges()) {
    if (to_child[u] != kNoVertex && to_child[v] != kNoVertex) {
      edges.emplace_back(to_child[u], to_child[v]);
    }
  }
  sub.graph = Graph::Build(static_cast<Vertex>(sub.to_parent.size()), edges);
  return sub;
}

Subgraph DeleteVertices(const Graph& g, const VertexSet& removed) {
  for (Vertex v : removed) {
    if (!g.IsValid(v)) {
      throw GraphError("invalid vertex id " + std::to_string(v));
    }
  }
  return InducedSubgraph(g, VertexSet::Range(g.num_vertices()).Difference(removed));
}

Subgraph DeleteVertex(const Graph& g, Vertex v) {
  if (!g.IsValid(v)) throw GraphError("invalid vertex id " + std::to_string(v));
  return DeleteVertices(g, VertexSet{v});
}

VertexSet Neighborhood(const Graph& g, const VertexSet& set) {
  std::vector<Vertex> out;
  for (Vertex v : set) {
    if (!g.IsValid(v)) {
      throw GraphError("invalid vertex id " + std::to_string(v));
    }
    auto nbrs = g.Neighbors(v);
    out.insert(out.end(), nbrs.begin(), nbrs.end());
  }
  return VertexSet::FromUnsorted(std::move(out));
}

bool IsIndependent(const Graph& g, const VertexSet& set) {
  for (Vertex v : set) {
    for (Vertex w : g.Neighbors(v)) {
      if (set.Contains(w)) return false;
    }
  }
  return true;
}

std::vector<VertexSet> ConnectedComponents(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> components;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> members;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.Neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    components.push_back(VertexSet::FromUnsorted(std::move(members)));
  }
  return components;
}

bool IsConnected(const Graph& g) { return ConnectedComponents(g).size() <= 1; }

BipartitionOrOddCycle FindBipartitionOrOddCycle(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<int> depth(n, -1);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    queue.clear();
    queue.push_back(root);
    for (size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.Neighbors(u)) {
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (depth[w] == depth[u]) {
          // Same layer: climb both endpoints to their common ancestor.
          std::vector<Vertex> left_path{u};
          std::vector<Vertex> right_path{w};
          Vertex a = u;
          Vertex b = w;
          while (parent[a] != parent[b]) {
            a = parent[a];
            b = parent[b];
            left_path.push_back(a);
            right_path.push_back(b);
          }
          left_path.push_back(parent[a]);
          Cycle cycle;
          cycle.vertices = std::move(left_path);
          cycle.vertices.insert(cycle.vertices.end(), right_path.rbegin(),
                                right_path.rend());
          return cycle.Canonical();
        }
      }
    }
  }
  std::vector<bool> left_mask(n);
  for (Vertex v = 0; v < n; ++v) left_mask[v] = depth[v] % 2 == 0;
  Bipartition parts;
  parts.left = VertexSet::FromMask(left_mask);
  parts.right = VertexSet::Range(n).Difference(parts.left);
  return parts;
}

bool IsBipartite(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<int8_t> color(n, -1);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.Neighbors(v)) {
        if (color[w] < 0) {
          color[w] = static_cast<int8_t>(1 - color[v]);
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph BipartiteDoubleCover(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<Edge> edges;
  edges.reserve(2 * g.Edges().size());
  for (auto [u, v] : g.Edges()) {
    edges.emplace_back(u, v + n);
    edges.emplace_back(v, u + n);
  }
  return Graph::Build(2 * n, edges);
}

Graph CycleGraph(Vertex k) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph::Build(k, edges);
}

Graph PathGraph(Vertex k) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::Build(k, edges);
}

Graph CompleteGraph(Vertex k) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  }
  return Graph::Build(k, edges);
}

Graph EmptyGraph(Vertex k) { return Graph::Build(k, std::span<const Edge>()); }

Graph DisjointUnion(const Graph& a, const Graph& b) {
  const Vertex shift = a.num_vertices();
  std::vector<Edge> edges = a.Edges();
  for (auto [u, v] : b.Edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::Build(shift + b.num_vertices(), edges);
}

Graph Relabel(const Graph& g, std::span<const Vertex> permutation) {
  std::vector<Edge> edges;
  edges.reserve(g.Edges().size());
  for (auto [u, v] : g.Edges()) {
    edges.emplace_back(permutation[u], permutation[v]);
  }
  return Graph::Build(g.num_vertices(), edges);
}

}  // namespace oddcore
