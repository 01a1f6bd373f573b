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

#include "oddcore/matching.h"

#include <algorithm>

namespace oddcore {

std::vector<Edge> Matching::Edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v) {
    if (mate[v] != kNoVertex && v < mate[v]) out.emplace_back(v, mate[v]);
  }
  return out;
}

bool IsValidMatching(const Graph& g, const Matching& m) {
  const Vertex n = g.num_vertices();
  if (static_cast<Vertex>(m.mate.size()) != n) return false;
  int matched = 0;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex w = m.mate[v];
    if (w == kNoVertex) continue;
    if (w == v || !g.IsValid(w) || m.mate[w] != v || !g.HasEdge(v, w)) {
      return false;
    }
    ++matched;
  }
  return matched == 2 * m.size;
}

namespace {

// Edmonds' blossom search in the breadth-first formulation with base
// tracking. Scratch state is reset only for the vertices a search touches,
// and vertices of a failed (Hungarian) tree are retired: no augmenting path
// can ever pass through them again.
class BlossomMatcher {
 public:
  BlossomMatcher(const Graph& g, std::vector<Vertex> mate)
      : g_(g),
        n_(g.num_vertices()),
        mate_(std::move(mate)),
        parent_(n_, kNoVertex),
        base_(n_),
        in_tree_(n_, false),
        in_blossom_(n_, false),
        lca_mark_(n_, 0),
        retired_(n_, false) {
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;
  }

  // Augments from every exposed vertex in ascending order. Returns the
  // number of augmentations performed.
  int AugmentAll() {
    int augmented = 0;
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != kNoVertex || retired_[root]) continue;
      const Vertex end = FindPath(root);
      if (end == kNoVertex) {
        for (Vertex v : touched_) retired_[v] = true;
      } else {
        Flip(end);
        ++augmented;
      }
      Reset();
    }
    return augmented;
  }

  const std::vector<Vertex>& mate() const { return mate_; }

 private:
  void Touch(Vertex v) {
    if (!in_tree_[v] && parent_[v] == kNoVertex) touched_.push_back(v);
  }

  void Enqueue(Vertex v) {
    Touch(v);
    in_tree_[v] = true;
    queue_.push_back(v);
  }

  void Reset() {
    for (Vertex v : touched_) {
      parent_[v] = kNoVertex;
      base_[v] = v;
      in_tree_[v] = false;
    }
    touched_.clear();
    queue_.clear();
  }

  Vertex LowestCommonBase(Vertex a, Vertex b) {
    ++lca_stamp_;
    while (true) {
      a = base_[a];
      lca_mark_[a] = lca_stamp_;
      if (mate_[a] == kNoVertex) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b] == lca_stamp_) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkPath(Vertex v, Vertex blossom_base, Vertex child) {
    while (base_[v] != blossom_base) {
      MarkBlossom(base_[v]);
      MarkBlossom(base_[mate_[v]]);
      Touch(v);
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void MarkBlossom(Vertex b) {
    if (!in_blossom_[b]) {
      in_blossom_[b] = true;
      blossom_marked_.push_back(b);
    }
  }

  Vertex FindPath(Vertex root) {
    Enqueue(root);
    for (size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      for (Vertex to : g_.Neighbors(v)) {
        if (retired_[to] || base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root ||
            (mate_[to] != kNoVertex && parent_[mate_[to]] != kNoVertex)) {
          const Vertex blossom_base = LowestCommonBase(v, to);
          MarkPath(v, blossom_base, to);
          MarkPath(to, blossom_base, v);
          // Only tree vertices can carry a base inside the blossom.
          const size_t count = touched_.size();
          for (size_t i = 0; i < count; ++i) {
            const Vertex u = touched_[i];
            if (in_blossom_[base_[u]]) {
              base_[u] = blossom_base;
              if (!in_tree_[u]) Enqueue(u);
            }
          }
          for (Vertex b : blossom_marked_) in_blossom_[b] = false;
          blossom_marked_.clear();
        } else if (parent_[to] == kNoVertex) {
          Touch(to);
          parent_[to] = v;
          if (mate_[to] == kNoVertex) return to;
          Enqueue(mate_[to]);
        }
      }
    }
    return kNoVertex;
  }

  void Flip(Vertex v) {
    while (v != kNoVertex) {
      const Vertex pv = parent_[v];
      const Vertex next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  const Vertex n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> in_tree_;
  std::vector<bool> in_blossom_;
  std::vector<uint32_t> lca_mark_;
  uint32_t lca_stamp_ = 0;
  std::vector<bool> retired_;
  std::vector<Vertex> touched_;
  std::vector<Vertex> queue_;
  std::vector<Vertex> blossom_marked_;
};

// Karp-Sipser style start: match pendant vertices first, otherwise the
// smallest free vertex with its smallest free neighbor.
std::vector<Vertex> GreedyMatching(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> mate(n, kNoVertex);
  std::vector<int> free_degree(n);
  std::vector<Vertex> pendant;
  for (Vertex v = n; v-- > 0;) {
    free_degree[v] = g.Degree(v);
    if (free_degree[v] == 1) pendant.push_back(v);
  }
  auto match = [&](Vertex a, Vertex b) {
    mate[a] = b;
    mate[b] = a;
    for (Vertex endpoint : {a, b}) {
      for (Vertex w : g.Neighbors(endpoint)) {
        if (mate[w] == kNoVertex && --free_degree[w] == 1) pendant.push_back(w);
      }
    }
  };
  Vertex scan = 0;
  while (true) {
    while (!pendant.empty()) {
      const Vertex v = pendant.back();
      pendant.pop_back();
      if (mate[v] != kNoVertex || free_degree[v] != 1) continue;
      for (Vertex w : g.Neighbors(v)) {
        if (mate[w] == kNoVertex) {
          match(v, w);
          break;
        }
      }
    }
    while (scan < n && (mate[scan] != kNoVertex || free_degree[scan] == 0)) {
      ++scan;
    }
    if (scan == n) break;
    for (Vertex w : g.Neighbors(scan)) {
      if (mate[w] == kNoVertex) {
        match(scan, w);
        break;
      }
    }
  }
  return mate;
}

int CountPairs(const std::vector<Vertex>& mate) {
  int matched = 0;
  for (Vertex w : mate) matched += w != kNoVertex;
  return matched / 2;
}

void CheckBipartition(const Graph& g, const VertexSet& left,
                      const VertexSet& right) {
  const Vertex n = g.num_vertices();
  if (left.size() + right.size() != static_cast<size_t>(n) ||
      !left.Intersection(right).empty()) {
    throw GraphError("sides do not partition the vertex set");
  }
  for (Vertex v : left) {
    if (!g.IsValid(v)) throw GraphError("invalid vertex id " + std::to_string(v));
  }
  for (Vertex v : right) {
    if (!g.IsValid(v)) throw GraphError("invalid vertex id " + std::to_string(v));
  }
  const std::vector<bool> is_left = left.ToMask(n);
  for (auto [u, v] : g.Edges()) {
    if (is_left[u] == is_left[v]) {
      throw GraphError("monochromatic edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ")");
    }
  }
}

// Hopcroft-Karp restricted to from-into edges, indices local to each side.
struct SideMatching {
  BipartiteMates mates;
  std::vector<std::vector<Vertex>> adjacency;  // left index -> right indices
};

SideMatching MatchSides(const Graph& g, const VertexSet& left,
                        const VertexSet& right) {
  std::vector<Vertex> right_index(g.num_vertices(), kNoVertex);
  for (size_t i = 0; i < right.size(); ++i) {
    right_index[right[i]] = static_cast<Vertex>(i);
  }
  SideMatching out;
  out.adjacency.resize(left.size());
  for (size_t i = 0; i < left.size(); ++i) {
    for (Vertex w : g.Neighbors(left[i])) {
      if (right_index[w] != kNoVertex) out.adjacency[i].push_back(right_index[w]);
    }
  }
  out.mates = HopcroftKarp(
      static_cast<Vertex>(left.size()), static_cast<Vertex>(right.size()),
      [&](Vertex i) -> const std::vector<Vertex>& { return out.adjacency[i]; });
  return out;
}

// Left/right indices reachable from exposed left vertices along alternating
// paths.
void AlternatingReach(const SideMatching& sm, std::vector<bool>& left_seen,
                      std::vector<bool>& right_seen) {
  const size_t num_left = sm.adjacency.size();
  left_seen.assign(num_left, false);
  right_seen.assign(sm.mates.right_mate.size(), false);
  std::vector<Vertex> stack;
  for (size_t i = 0; i < num_left; ++i) {
    if (sm.mates.left_mate[i] == kNoVertex) {
      left_seen[i] = true;
      stack.push_back(static_cast<Vertex>(i));
    }
  }
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex r : sm.adjacency[u]) {
      if (right_seen[r]) continue;
      right_seen[r] = true;
      const Vertex w = sm.mates.right_mate[r];
      if (w != kNoVertex && !left_seen[w]) {
        left_seen[w] = true;
        stack.push_back(w);
      }
    }
  }
}

}  // namespace

Matching MaximumMatching(const Graph& g) {
  BlossomMatcher matcher(g, GreedyMatching(g));
  matcher.AugmentAll();
  Matching m;
  m.mate = matcher.mate();
  m.size = CountPairs(m.mate);
  return m;
}

bool IsMaximumMatching(const Graph& g, const Matching& m) {
  if (!IsValidMatching(g, m)) return false;
  BlossomMatcher matcher(g, m.mate);
  return matcher.AugmentAll() == 0;
}

Matching MaximumMatchingBipartite(const Graph& g, const VertexSet& left,
                                  const VertexSet& right) {
  CheckBipartition(g, left, right);
  const SideMatching sm = MatchSides(g, left, right);
  Matching m;
  m.mate.assign(g.num_vertices(), kNoVertex);
  for (size_t i = 0; i < left.size(); ++i) {
    const Vertex r = sm.mates.left_mate[i];
    if (r == kNoVertex) continue;
    m.mate[left[i]] = right[r];
    m.mate[right[r]] = left[i];
  }
  m.size = sm.mates.size;
  return m;
}

VertexSet MinVertexCoverBipartite(const Graph& g, const VertexSet& left,
                                  const VertexSet& right, const Matching& m) {
  CheckBipartition(g, left, right);
  if (!IsValidMatching(g, m)) throw std::logic_error("invalid matching");
  const Vertex n = g.num_vertices();
  const std::vector<bool> is_left = left.ToMask(n);
  // Alternating search from exposed left vertices; the cover is the
  // unreached left side plus the reached right side.
  std::vector<bool> reached(n, false);
  std::vector<Vertex> stack;
  for (Vertex v : left) {
    if (m.mate[v] == kNoVertex) {
      reached[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex r : g.Neighbors(u)) {
      if (reached[r] || m.mate[u] == r) continue;
      reached[r] = true;
      const Vertex w = m.mate[r];
      if (w != kNoVertex && !reached[w]) {
        reached[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<Vertex> cover;
  for (Vertex v = 0; v < n; ++v) {
    if (is_left[v] != reached[v]) cover.push_back(v);
  }
  if (static_cast<int>(cover.size()) != m.size) {
    throw std::logic_error("matching is not maximum: cover has " +
                           std::to_string(cover.size()) + " vertices, matching " +
                           std::to_string(m.size) + " edges");
  }
  return VertexSet::FromSorted(std::move(cover));
}

std::variant<Matching, HallViolation> MatchingFromInto(const Graph& g,
                                                        const VertexSet& from,
                                                        const VertexSet& into) {
  for (const VertexSet* set : {&from, &into}) {
    for (Vertex v : *set) {
      if (!g.IsValid(v)) {
        throw GraphError("invalid vertex id " + std::to_string(v));
      }
    }
  }
  if (!from.Intersection(into).empty()) {
    throw GraphError("source and target sets overlap");
  }
  const SideMatching sm = MatchSides(g, from, into);
  if (sm.mates.size == static_cast<int>(from.size())) {
    Matching m;
    m.mate.assign(g.num_vertices(), kNoVertex);
    for (size_t i = 0; i < from.size(); ++i) {
      const Vertex r = sm.mates.left_mate[i];
      m.mate[from[i]] = into[r];
      m.mate[into[r]] = from[i];
    }
    m.size = sm.mates.size;
    return m;
  }
  std::vector<bool> left_seen, right_seen;
  AlternatingReach(sm, left_seen, right_seen);
  std::vector<Vertex> witness, neighbors;
  for (size_t i = 0; i < from.size(); ++i) {
    if (left_seen[i]) witness.push_back(from[i]);
  }
  for (size_t i = 0; i < into.size(); ++i) {
    if (right_seen[i]) neighbors.push_back(into[i]);
  }
  return HallViolation{VertexSet::FromUnsorted(std::move(witness)),
                       VertexSet::FromUnsorted(std::move(neighbors))};
}

}  // namespace oddcore
