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

#include "doctest.h"
#include "oddcore/oracle.h"
#include "test_util.h"

namespace oddcore {
namespace {

Graph Petersen() {
  return Graph::Build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                           {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

TEST_CASE("small graphs") {
  CHECK(MaximumMatching(CycleGraph(5)).size == 2);
  CHECK(MaximumMatching(CompleteGraph(3)).size == 1);
  CHECK(MaximumMatching(Petersen()).size == 5);
  CHECK(MaximumMatching(Graph()).size == 0);
  CHECK(MaximumMatching(EmptyGraph(4)).size == 0);
  CHECK(MaximumMatching(CycleGraph(1001)).size == 500);
  CHECK(MaximumMatching(PathGraph(1000)).size == 500);

  // A greedy start pairs 1-2 and 3-4; the augmenting path 0-1-2-3-4-5 runs
  // through the blossom 1-2-3.
  const Graph blossom = Graph::Build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}});
  CHECK(MaximumMatching(blossom).size == 3);
}

TEST_CASE("blossom against exhaustive matching number") {
  Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const Vertex n = static_cast<Vertex>(rng.Uniform(0, 12));
    const Graph g = testing::RandomGraph(rng, n, 0.1 + 0.5 * rng.Unit());
    const Matching m = MaximumMatching(g);
    CHECK(IsValidMatching(g, m));
    CHECK(IsMaximumMatching(g, m));
    CHECK(m.size == BruteMatchingNumber(g));
  }
}

TEST_CASE("validity checks reject bad matchings") {
  const Graph p4 = PathGraph(4);
  Matching m;
  m.mate = {1, 0, kNoVertex, kNoVertex};
  m.size = 1;
  CHECK(IsValidMatching(p4, m));
  CHECK_FALSE(IsMaximumMatching(p4, m));
  m.mate = {2, kNoVertex, 0, kNoVertex};
  CHECK_FALSE(IsValidMatching(p4, m));
  m.mate = {1, 0, kNoVertex, kNoVertex};
  m.size = 2;
  CHECK_FALSE(IsValidMatching(p4, m));
  CHECK(m.Edges().size() == 1);
}

TEST_CASE("bipartite matching and Konig cover") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = static_cast<Vertex>(rng.Uniform(1, 16));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if ((u + v) % 2 == 1 && rng.Bernoulli(0.3)) edges.emplace_back(u, v);
      }
    }
    const Graph g = Graph::Build(n, edges);
    const auto found = FindBipartitionOrOddCycle(g);
    const Bipartition& bip = std::get<Bipartition>(found);
    const Matching m = MaximumMatchingBipartite(g, bip.left, bip.right);
    CHECK(IsValidMatching(g, m));
    CHECK(m.size == MaximumMatching(g).size);
    const VertexSet cover = MinVertexCoverBipartite(g, bip.left, bip.right, m);
    CHECK(cover.size() == static_cast<size_t>(m.size));
    for (auto [u, v] : g.Edges()) CHECK((cover.Contains(u) || cover.Contains(v)));
  }
  CHECK_THROWS_AS(MaximumMatchingBipartite(CompleteGraph(3), {0, 1}, {2}), GraphError);
  CHECK_THROWS_AS(MaximumMatchingBipartite(PathGraph(3), {0}, {1}), GraphError);
}

TEST_CASE("Konig cover rejects a non-maximum matching") {
  const Graph p4 = PathGraph(4);
  Matching m;
  m.mate = {kNoVertex, 2, 1, kNoVertex};
  m.size = 1;
  CHECK_THROWS_AS(MinVertexCoverBipartite(p4, {0, 2}, {1, 3}, m), std::logic_error);
}

TEST_CASE("matching from one set into another") {
  // Star K1,3: the three leaves cannot all be matched into the center.
  const Graph star = Graph::Build(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto fail = MatchingFromInto(star, {1, 2, 3}, {0});
  REQUIRE(std::holds_alternative<HallViolation>(fail));
  const HallViolation& h = std::get<HallViolation>(fail);
  CHECK(h.witness_neighbors.size() < h.witness.size());
  CHECK(h.witness_neighbors == Neighborhood(star, h.witness).Intersection({0}));

  const auto ok = MatchingFromInto(star, {0}, {1, 2, 3});
  REQUIRE(std::holds_alternative<Matching>(ok));
  CHECK(std::get<Matching>(ok).size == 1);

  CHECK_THROWS_AS(MatchingFromInto(star, {0, 1}, {1, 2}), GraphError);

  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = static_cast<Vertex>(rng.Uniform(2, 12));
    const Graph g = testing::RandomGraph(rng, n, 0.3);
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < n; ++v) (rng.Bernoulli(0.4) ? a : b).push_back(v);
    const VertexSet from = VertexSet::FromSorted(a);
    const VertexSet into = VertexSet::FromSorted(b);
    const auto result = MatchingFromInto(g, from, into);
    if (const auto* m = std::get_if<Matching>(&result)) {
      CHECK(m->size == static_cast<int>(from.size()));
      for (Vertex v : from) CHECK(into.Contains(m->mate[v]));
    } else {
      const auto& h = std::get<HallViolation>(result);
      CHECK(h.witness.Difference(from).empty());
      CHECK(Neighborhood(g, h.witness).Intersection(into) == h.witness_neighbors);
      CHECK(h.witness_neighbors.size() < h.witness.size());
    }
  }
}

}  // namespace
}  // namespace oddcore
