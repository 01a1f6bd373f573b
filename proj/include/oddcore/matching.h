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

// Maximum cardinality matching in general graphs (Edmonds' blossom
// algorithm) and bipartite graphs (Hopcroft-Karp), König covers and Hall
// certificates.
//
// All searches scan vertices and neighbors in ascending id order, so outputs
// are reproducible for a fixed input.

#ifndef ODDCORE_MATCHING_H_
#define ODDCORE_MATCHING_H_

#include <stdexcept>
#include <variant>
#include <vector>

#include "oddcore/graph.h"

namespace oddcore {

// A matching viewed as an involution: mate[v] is v's partner, or kNoVertex.
struct Matching {
  std::vector<Vertex> mate;
  int size = 0;

  bool IsMatched(Vertex v) const { return mate[v] != kNoVertex; }
  std::vector<Edge> Edges() const;
};

// mate is symmetric, irreflexive, uses only edges of g, and size agrees.
bool IsValidMatching(const Graph& g, const Matching& m);

// Re-runs the augmenting-path search from every exposed vertex; true when
// none exists (Berge).
bool IsMaximumMatching(const Graph& g, const Matching& m);

Matching MaximumMatching(const Graph& g);

// Throws GraphError unless (left, right) partitions V with no edge inside a
// side.
Matching MaximumMatchingBipartite(const Graph& g, const VertexSet& left,
                                  const VertexSet& right);

// König: the minimum vertex cover derived from a maximum matching. Throws
// std::logic_error if `m` is not maximum (the cover would not match its size).
VertexSet MinVertexCoverBipartite(const Graph& g, const VertexSet& left,
                                  const VertexSet& right, const Matching& m);

// A ⊆ A' with |N(A') ∩ B| < |A'|.
struct HallViolation {
  VertexSet witness;
  VertexSet witness_neighbors;
};

// A matching that saturates `from` using only from-into edges, or a Hall
// violation. Throws GraphError if the sets overlap.
std::variant<Matching, HallViolation> MatchingFromInto(const Graph& g,
                                                        const VertexSet& from,
                                                        const VertexSet& into);

// Hopcroft-Karp over an implicit bipartite graph. `left_neighbors(i)` returns
// an iterable of right-side indices in [0, num_right).
struct BipartiteMates {
  std::vector<Vertex> left_mate;
  std::vector<Vertex> right_mate;
  int size = 0;
};

template <typename LeftNeighbors>
BipartiteMates HopcroftKarp(Vertex num_left, Vertex num_right,
                            const LeftNeighbors& left_neighbors);

// ---------------------------------------------------------------------------

template <typename LeftNeighbors>
BipartiteMates HopcroftKarp(Vertex num_left, Vertex num_right,
                            const LeftNeighbors& left_neighbors) {
  BipartiteMates out;
  out.left_mate.assign(num_left, kNoVertex);
  out.right_mate.assign(num_right, kNoVertex);
  for (Vertex u = 0; u < num_left; ++u) {
    for (Vertex r : left_neighbors(u)) {
      if (out.right_mate[r] == kNoVertex) {
        out.left_mate[u] = r;
        out.right_mate[r] = u;
        ++out.size;
        break;
      }
    }
  }

  constexpr int kInf = 1 << 30;
  std::vector<int> dist(num_left);
  std::vector<Vertex> queue;
  queue.reserve(num_left);
  // Iterative DFS state: the stack holds left vertices, `cursor` the next
  // neighbor index to try.
  std::vector<Vertex> stack;
  std::vector<size_t> cursor(num_left);

  while (true) {
    queue.clear();
    for (Vertex u = 0; u < num_left; ++u) {
      if (out.left_mate[u] == kNoVertex) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool found = false;
    for (size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex r : left_neighbors(u)) {
        const Vertex w = out.right_mate[r];
        if (w == kNoVertex) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    if (!found) break;

    std::fill(cursor.begin(), cursor.end(), 0);
    for (Vertex root = 0; root < num_left; ++root) {
      if (out.left_mate[root] != kNoVertex) continue;
      stack.assign(1, root);
      while (!stack.empty()) {
        const Vertex u = stack.back();
        const auto& nbrs = left_neighbors(u);
        const size_t degree = static_cast<size_t>(std::size(nbrs));
        bool advanced = false;
        while (cursor[u] < degree) {
          const Vertex r = *(std::begin(nbrs) + cursor[u]);
          const Vertex w = out.right_mate[r];
          if (w == kNoVertex) {
            // Augment along the stack.
            Vertex right = r;
            for (size_t i = stack.size(); i-- > 0;) {
              const Vertex left = stack[i];
              const Vertex previous = out.left_mate[left];
              out.left_mate[left] = right;
              out.right_mate[right] = left;
              right = previous;
            }
            ++out.size;
            stack.clear();
            advanced = true;
            break;
          }
          if (dist[w] == dist[u] + 1) {
            ++cursor[u];
            stack.push_back(w);
            advanced = true;
            break;
          }
          ++cursor[u];
        }
        if (!advanced) {
          dist[u] = kInf;
          stack.pop_back();
        }
      }
    }
  }
  return out;
}

}  // namespace oddcore

#endif  // ODDCORE_MATCHING_H_
