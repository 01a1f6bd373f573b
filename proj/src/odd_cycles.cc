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

#include "oddcore/odd_cycles.h"

#include <algorithm>
#include <stdexcept>

namespace oddcore {

std::string_view OddCycleKindName(OddCycleKind kind) {
  switch (kind) {
    case OddCycleKind::kBipartite:
      return "Bipartite";
    case OddCycleKind::kOneOddCycle:
      return "OneOddCycle";
    case OddCycleKind::kTwoSharingPath:
      return "TwoSharingPath";
    case OddCycleKind::kTwoSharingVertex:
      return "TwoSharingVertex";
    case OddCycleKind::kTwoDisjoint:
      return "TwoDisjoint";
    case OddCycleKind::kOutOfClass:
      return "OutOfClass";
  }
  return "Unknown";
}

BlockTree BlockDecomposition(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<size_t> cursor(n, 0);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<Edge> edge_stack;
  std::vector<Vertex> call;
  BlockTree tree;
  int counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = counter++;
    call.push_back(root);
    while (!call.empty()) {
      const Vertex v = call.back();
      const auto nbrs = g.Neighbors(v);
      if (cursor[v] < nbrs.size()) {
        const Vertex w = nbrs[cursor[v]++];
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = counter++;
          edge_stack.emplace_back(v, w);
          call.push_back(w);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      call.pop_back();
      const Vertex p = parent[v];
      if (p == kNoVertex) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<Vertex> members;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          members.push_back(e.first);
          members.push_back(e.second);
          if (e == Edge(p, v)) break;
        }
        tree.blocks.push_back(VertexSet::FromUnsorted(std::move(members)));
      }
    }
  }

  std::vector<int> membership(n, 0);
  for (const VertexSet& block : tree.blocks) {
    for (Vertex v : block) ++membership[v];
  }
  std::vector<Vertex> cuts;
  for (Vertex v = 0; v < n; ++v) {
    if (membership[v] >= 2) cuts.push_back(v);
  }
  tree.cut_vertices = VertexSet::FromSorted(std::move(cuts));
  return tree;
}

VertexSet AllOddCycleIntersection(const Graph& g) {
  const auto found = FindBipartitionOrOddCycle(g);
  const Cycle* cycle = std::get_if<Cycle>(&found);
  if (cycle == nullptr) {
    throw GraphError("graph is bipartite; it has no odd cycle");
  }
  std::vector<Vertex> out;
  for (Vertex v : cycle->vertices) {
    if (IsBipartite(DeleteVertex(g, v).graph)) out.push_back(v);
  }
  return VertexSet::FromUnsorted(std::move(out));
}

namespace {

// Walks from `start` through `first` along degree-2 vertices of `h` until a
// vertex with degree != 2, or `start` itself, is reached.
std::vector<Vertex> WalkPath(const Graph& h, Vertex start, Vertex first) {
  std::vector<Vertex> path{start, first};
  Vertex prev = start;
  Vertex cur = first;
  while (cur != start && h.Degree(cur) == 2) {
    const auto nbrs = h.Neighbors(cur);
    const Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  return path;
}

Cycle JoinPaths(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  // Both run from the same start to the same end.
  Cycle cycle;
  cycle.vertices = a;
  for (size_t i = b.size() - 1; i-- > 1;) cycle.vertices.push_back(b[i]);
  return cycle;
}

Cycle Lift(const Cycle& c, const std::vector<Vertex>& to_parent) {
  Cycle out;
  out.vertices.reserve(c.vertices.size());
  for (Vertex v : c.vertices) out.vertices.push_back(to_parent[v]);
  return out.Canonical();
}

struct BlockCycles {
  std::vector<Cycle> odd;  // empty for bipartite blocks
  bool is_theta = false;
  bool too_many = false;
};

BlockCycles AnalyzeBlock(const Graph& g, const VertexSet& block) {
  BlockCycles result;
  if (block.size() < 3) return result;
  const Subgraph sub = InducedSubgraph(g, block);
  const Graph& h = sub.graph;
  if (IsBipartite(h)) return result;

  std::vector<Vertex> branch;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    const int degree = h.Degree(v);
    if (degree == 3) {
      branch.push_back(v);
    } else if (degree != 2) {
      result.too_many = true;
      return result;
    }
  }
  if (branch.empty()) {
    const auto nbrs = h.Neighbors(0);
    std::vector<Vertex> walk = WalkPath(h, 0, nbrs[0]);
    walk.pop_back();  // back at vertex 0
    result.odd.push_back(Lift(Cycle{walk}, sub.to_parent));
    return result;
  }
  if (branch.size() != 2) {
    result.too_many = true;
    return result;
  }
  std::vector<std::vector<Vertex>> paths;
  for (Vertex first : h.Neighbors(branch[0])) {
    paths.push_back(WalkPath(h, branch[0], first));
  }
  for (const auto& path : paths) {
    if (path.back() != branch[1]) {
      throw std::logic_error("theta path does not end at second branch vertex");
    }
  }
  result.is_theta = true;
  for (size_t i = 0; i < paths.size(); ++i) {
    for (size_t j = i + 1; j < paths.size(); ++j) {
      if ((paths[i].size() + paths[j].size()) % 2 == 1) {
        // |cycle| = (|Pi| - 1) + (|Pj| - 1) edges, odd iff sizes differ in parity.
        result.odd.push_back(Lift(JoinPaths(paths[i], paths[j]), sub.to_parent));
      }
    }
  }
  return result;
}

}  // namespace

OddCycleProfile Census(const Graph& g) {
  OddCycleProfile profile;
  profile.connected = IsConnected(g);
  const BlockTree tree = BlockDecomposition(g);

  std::vector<BlockCycles> odd_blocks;
  std::vector<VertexSet> odd_block_sets;
  size_t total = 0;
  for (const VertexSet& block : tree.blocks) {
    BlockCycles cycles = AnalyzeBlock(g, block);
    if (cycles.too_many) {
      profile.kind = OddCycleKind::kOutOfClass;
      return profile;
    }
    if (cycles.odd.empty()) continue;
    total += cycles.odd.size();
    if (total > 2) {
      profile.kind = OddCycleKind::kOutOfClass;
      return profile;
    }
    odd_block_sets.push_back(block);
    odd_blocks.push_back(std::move(cycles));
  }

  for (auto& block : odd_blocks) {
    for (auto& cycle : block.odd) profile.witnesses.push_back(std::move(cycle));
  }
  std::sort(profile.witnesses.begin(), profile.witnesses.end(),
            [](const Cycle& a, const Cycle& b) { return a.vertices < b.vertices; });

  if (total == 0) {
    profile.kind = OddCycleKind::kBipartite;
    return profile;
  }
  if (total == 1) {
    profile.kind = OddCycleKind::kOneOddCycle;
  } else if (odd_blocks.size() == 1) {
    profile.kind = OddCycleKind::kTwoSharingPath;
  } else {
    const VertexSet shared = odd_block_sets[0].Intersection(odd_block_sets[1]);
    if (shared.empty()) {
      profile.kind = OddCycleKind::kTwoDisjoint;
    } else {
      profile.kind = OddCycleKind::kTwoSharingVertex;
      profile.cut_vertex = shared[0];
    }
  }

  profile.intersection = AllOddCycleIntersection(g);

  VertexSet expected = profile.witnesses[0].vertex_set();
  for (const Cycle& c : profile.witnesses) {
    expected = expected.Intersection(c.vertex_set());
  }
  if (expected != profile.intersection) {
    throw std::logic_error("odd-cycle intersection " +
                           ToString(profile.intersection) +
                           " disagrees with witnesses " + ToString(expected));
  }
  return profile;
}

bool IsInClass(const Graph& g) {
  return Census(g).kind != OddCycleKind::kOutOfClass;
}

}  // namespace oddcore
