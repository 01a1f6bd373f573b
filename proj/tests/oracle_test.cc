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

#include "oddcore/oracle.h"

#include <set>

#include "doctest.h"
#include "oddcore/graph_io.h"
#include "oddcore/odd_cycles.h"
#include "test_util.h"

namespace oddcore {
namespace {

const Graph kP3 = PathGraph(3);
const Graph kDiamond = Graph::Build(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
const Graph kBowtie = Graph::Build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
const Graph kTheta = Graph::Build(5, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}});

TEST_CASE("maximum independent sets") {
  const MisEnumeration c5 = BruteAllMis(CycleGraph(5), 100);
  CHECK(c5.alpha == 2);
  CHECK(c5.sets.size() == 5);
  CHECK_FALSE(c5.truncated);
  CHECK(BruteAllMis(CompleteGraph(3), 100).sets.size() == 3);
  const MisEnumeration diamond = BruteAllMis(kDiamond, 100);
  REQUIRE(diamond.sets.size() == 1);
  CHECK(diamond.sets[0] == VertexSet{0, 3});
  CHECK(BruteAllMis(CycleGraph(5), 2).truncated);
  CHECK(BruteAllMis(Graph(), 10).sets.size() == 1);
}

TEST_CASE("core and corona by enumeration") {
  CHECK(BruteCoreCorona(kP3).core == VertexSet{0, 2});
  CHECK(BruteCoreCorona(kP3).corona == VertexSet{0, 2});
  CHECK(BruteCoreCorona(CycleGraph(5)).core.empty());
  CHECK(BruteCoreCorona(CycleGraph(5)).corona == VertexSet::Range(5));
  CHECK(BruteCoreCorona(kBowtie).corona == VertexSet{1, 2, 3, 4});
  CHECK(BruteCoreCorona(kBowtie).mis_count == 4);
  CHECK(BruteCoreCorona(kTheta).mis_count == 4);
}

TEST_CASE("critical sets by enumeration") {
  const BruteCriticalResult p3 = BruteCritical(kP3);
  CHECK(p3.d == 1);
  CHECK(p3.max_critical == VertexSet{0, 2});
  CHECK(BruteCritical(CycleGraph(5)).d == 0);
  CHECK(BruteCritical(CycleGraph(5)).max_critical.empty());
  CHECK(BruteCritical(EmptyGraph(3)).max_critical == VertexSet::Range(3));
  CHECK(Brute2Bicritical(CycleGraph(5)));
  CHECK_FALSE(Brute2Bicritical(kDiamond));
}

TEST_CASE("cycle enumeration") {
  CHECK(CountOddCyclesExact(CompleteGraph(4)).odd_count >= 3);
  CHECK(CountOddCyclesExact(CompleteGraph(4), 100).odd_count == 4);
  CHECK(CountOddCyclesExact(CompleteGraph(4), 100).cycles.size() == 7);
  const CycleEnumeration theta = CountOddCyclesExact(kTheta);
  CHECK(theta.odd_count == 2);
  std::multiset<size_t> lengths;
  for (const Cycle& c : theta.cycles) lengths.insert(c.length());
  CHECK(lengths == std::multiset<size_t>{3, 4, 5});
  CHECK(CountOddCyclesExact(CycleGraph(6)).odd_count == 0);
  CHECK(CountOddCyclesExact(CompleteGraph(6), 1000, 50).budget_exceeded);
  CHECK(OracleKind(kBowtie) == OddCycleKind::kTwoSharingVertex);
  CHECK(OracleKind(kTheta) == OddCycleKind::kTwoSharingPath);
  CHECK(OracleKind(CompleteGraph(4)) == OddCycleKind::kOutOfClass);
}

TEST_CASE("cycle count of complete graphs") {
  // K_n has sum over k >= 3 of C(n, k) (k-1)!/2 cycles.
  const int expected[] = {0, 0, 0, 1, 7, 37, 197};
  for (Vertex n = 3; n <= 6; ++n) {
    CHECK(CountOddCyclesExact(CompleteGraph(n), 1 << 20).cycles.size() ==
          static_cast<size_t>(expected[n]));
  }
}

TEST_CASE("oracle agrees with naive subset search") {
  Rng rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::RandomGraph(rng, static_cast<Vertex>(rng.Uniform(0, 14)), 0.3);
    CHECK(BruteAlpha(g) == testing::NaiveAlpha(g));
    const BruteCoreCoronaResult cc = BruteCoreCorona(g);
    // Core by deletion: v is in every maximum set iff removing it lowers α.
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const bool drops = testing::NaiveAlpha(DeleteVertex(g, v).graph) < cc.alpha;
      CHECK(cc.core.Contains(v) == drops);
    }
    CHECK(IsIndependent(g, cc.core));
  }
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(BruteAlpha(EmptyGraph(26)), OracleLimitError);
  CHECK_THROWS_AS(BruteAlpha(EmptyGraph(10), 9), OracleLimitError);
  CHECK(BruteAlpha(CycleGraph(25)) == 12);
  CHECK_THROWS_AS(RunOracle(CycleGraph(26)), OracleLimitError);
}

TEST_CASE("rng") {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) CHECK(a.Next() == b.Next());
  CHECK(a.Next() != c.Next());
  Rng r(1);
  int counts[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4000; ++i) {
    const int64_t x = r.Uniform(0, 3);
    REQUIRE(x >= 0);
    REQUIRE(x <= 3);
    ++counts[x];
  }
  for (int k : counts) CHECK(k > 800);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.Unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(r.Uniform(5, 5) == 5);
}

TEST_CASE("generator examples") {
  const Graph bowtie = Generate(GenPattern::kShareVertex, {5, 0.1}, 1);
  CHECK(bowtie.num_vertices() == 5);
  CHECK(Census(bowtie).kind == OddCycleKind::kTwoSharingVertex);
  CHECK(OracleKind(bowtie) == OddCycleKind::kTwoSharingVertex);

  const Graph one = Generate(GenPattern::kOneOdd, {9, 0.1}, 7);
  CHECK(CountOddCyclesExact(one, 100).odd_count == 1);

  const Graph bip = Generate(GenPattern::kBipartite, {8, 0.3}, 3);
  CHECK(CountOddCyclesExact(bip, 100).odd_count == 0);
  CHECK(IsBipartite(bip));
}

TEST_CASE("generator names and bounds") {
  for (GenPattern p : kAllGenPatterns) CHECK(ParseGenPattern(GenPatternName(p)) == p);
  CHECK_THROWS_AS(ParseGenPattern("triangle"), std::invalid_argument);
  CHECK_THROWS_AS(Generate(GenPattern::kShareVertex, {4, 0.1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Generate(GenPattern::kOneOdd, {9, 1.5}, 1), std::invalid_argument);
}

TEST_CASE("generator is deterministic and sound") {
  for (GenPattern pattern : kAllGenPatterns) {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
      const Vertex n = std::max<Vertex>(MinVertices(pattern), static_cast<Vertex>(6 + seed % 10));
      const GenParams params{n, 0.25};
      const Graph g = Generate(pattern, params, seed);
      CHECK(g.num_vertices() == n);
      CHECK(SerializeGraph(g, GraphFormat::kJson) ==
            SerializeGraph(Generate(pattern, params, seed), GraphFormat::kJson));
      const std::optional<OddCycleKind> kind = OracleKind(g);
      REQUIRE(kind.has_value());
      CHECK(*kind != OddCycleKind::kOutOfClass);
      switch (pattern) {
        case GenPattern::kBipartite:
          CHECK(*kind == OddCycleKind::kBipartite);
          break;
        case GenPattern::kOneOdd:
          CHECK(*kind == OddCycleKind::kOneOddCycle);
          break;
        case GenPattern::kSharePath:
          CHECK(*kind == OddCycleKind::kTwoSharingPath);
          break;
        case GenPattern::kShareVertex:
          CHECK(*kind == OddCycleKind::kTwoSharingVertex);
          break;
        case GenPattern::kDisjointConnected:
          CHECK(*kind == OddCycleKind::kTwoDisjoint);
          CHECK(IsConnected(g));
          break;
        case GenPattern::kDisjointDisconnected:
          CHECK(*kind == OddCycleKind::kTwoDisjoint);
          CHECK_FALSE(IsConnected(g));
          break;
        case GenPattern::kKe:
          CHECK(BruteAlpha(g) + BruteMatchingNumber(g) == n);
          break;
        case GenPattern::kRandomFiltered:
          break;
      }
    }
  }
}

TEST_CASE("full oracle record") {
  const OracleResult r = RunOracle(kBowtie);
  CHECK(r.alpha == 2);
  CHECK(r.mis_count == 4);
  CHECK(r.core.empty());
  CHECK(r.d == 0);
  CHECK(r.kind == OddCycleKind::kTwoSharingVertex);
  CHECK(r.odd_cycle_count == 2);
  CHECK_FALSE(r.odd_cycles_at_cap);
}

}  // namespace
}  // namespace oddcore
