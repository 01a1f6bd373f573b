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

#include "oddcore/core_corona.h"

#include <algorithm>
#include <string>
#include <vector>

#include "oddcore/matching.h"

namespace oddcore {
namespace {

// α via the decomposition. Each component of G[Lc] must have at most two odd
// cycles for |C| - 1 - μ(C) to be exact; callers check that.
int AlphaFromSplit(const Graph& g, const LarsonSplit& split) {
  const Graph gl = InducedSubgraph(g, split.l).graph;
  int alpha = static_cast<int>(split.l.size()) - MaximumMatching(gl).size;
  if (split.lc.empty()) return alpha;
  const Graph glc = InducedSubgraph(g, split.lc).graph;
  for (const VertexSet& comp : ConnectedComponents(glc)) {
    const Graph c = InducedSubgraph(glc, comp).graph;
    alpha += static_cast<int>(comp.size()) - 1 - MaximumMatching(c).size;
  }
  return alpha;
}

int AlphaUnchecked(const Graph& g) {
  return AlphaFromSplit(g, ComputeLarsonSplit(g));
}

OddCycleProfile LiftProfile(OddCycleProfile p, const Subgraph& sub) {
  for (Cycle& c : p.witnesses) {
    for (Vertex& v : c.vertices) v = sub.to_parent[v];
    c = c.Canonical();
  }
  std::sort(p.witnesses.begin(), p.witnesses.end(),
            [](const Cycle& a, const Cycle& b) { return a.vertices < b.vertices; });
  p.intersection = sub.Lift(p.intersection);
  if (p.cut_vertex) p.cut_vertex = sub.to_parent[*p.cut_vertex];
  return p;
}

void RequireInClass(const Graph& g) {
  if (!IsInClass(g)) {
    throw OutOfClassError("graph has more than two odd cycles");
  }
}

// Shared state of one analysis.
struct Analysis {
  LarsonDecomposition dec;
  OddCycleProfile profile;  // of G[Lc], ids of G
  int alpha = 0;
  VertexSet core;
  VertexSet corona;
};

OddCycleProfile LcProfile(const Graph& g, const VertexSet& lc) {
  const Subgraph sub = InducedSubgraph(g, lc);
  return LiftProfile(Census(sub.graph), sub);
}

VertexSet ComputeCore(const Graph& g, int alpha) {
  std::vector<Vertex> core;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int without = AlphaUnchecked(DeleteVertex(g, v).graph);
    const int gap = alpha - without;
    if (gap != 0 && gap != 1) {
      throw ContractViolation("alpha(G) - alpha(G - " + std::to_string(v) +
                              ") = " + std::to_string(gap));
    }
    if (gap == 1) core.push_back(v);
  }
  return VertexSet::FromSorted(std::move(core));
}

VertexSet ComputeCorona(const Graph& g, const VertexSet& core,
                        const OddCycleProfile& profile, int alpha) {
  VertexSet excluded = Neighborhood(g, core);
  if (profile.kind == OddCycleKind::kTwoSharingVertex) {
    const Vertex x = *profile.cut_vertex;
    const Graph rest = DeleteVertex(g, x).graph;
    if (!IsBipartite(rest)) {
      throw ContractViolation("G - " + std::to_string(x) + " is not bipartite");
    }
    if (AlphaUnchecked(rest) != alpha) {
      throw ContractViolation("alpha(G - " + std::to_string(x) +
                              ") differs from alpha(G)");
    }
    excluded = excluded.Union(VertexSet{x});
  }
  return VertexSet::Range(g.num_vertices()).Difference(excluded);
}

Analysis Run(const Graph& g, bool promise_in_class) {
  if (!promise_in_class) RequireInClass(g);
  Analysis a;
  a.dec = ComputeLarsonDecomposition(g);
  a.profile = LcProfile(g, a.dec.lc);
  if (a.profile.kind == OddCycleKind::kOutOfClass) {
    throw OutOfClassError("G[Lc] has more than two odd cycles");
  }
  a.alpha = AlphaFromSplit(
      g, LarsonSplit{a.dec.l, a.dec.lc, a.dec.critical_difference});
  a.core = ComputeCore(g, a.alpha);
  a.corona = ComputeCorona(g, a.core, a.profile, a.alpha);
  return a;
}

SumPrediction Predict(const VertexSet& lc, const OddCycleProfile& profile) {
  if (lc.empty()) return {0, false};
  switch (profile.kind) {
    case OddCycleKind::kOneOddCycle:
    case OddCycleKind::kTwoSharingPath:
      return {1, false};
    case OddCycleKind::kTwoSharingVertex:
      return {0, false};
    case OddCycleKind::kTwoDisjoint:
      return profile.connected ? SumPrediction{0, true} : SumPrediction{2, false};
    case OddCycleKind::kBipartite:
      throw ContractViolation("nonempty 2-bicritical part is bipartite");
    case OddCycleKind::kOutOfClass:
      break;
  }
  throw OutOfClassError("G[Lc] has more than two odd cycles");
}

PartitionResult Partition(const Graph& g, const Analysis& a) {
  PartitionResult r;
  const VertexSet n_core = Neighborhood(g, a.core);
  r.uncovered =
      VertexSet::Range(g.num_vertices()).Difference(a.corona.Union(n_core));
  r.overlap = a.corona.Intersection(n_core);
  r.holds = r.uncovered.empty() && r.overlap.empty();
  r.agrees_with_census =
      r.holds == (a.profile.kind != OddCycleKind::kTwoSharingVertex);
  return r;
}

}  // namespace

int IndependenceNumber(const Graph& g, bool promise_in_class) {
  if (!promise_in_class) RequireInClass(g);
  return AlphaUnchecked(g);
}

int IndependenceNumberExtended(const Graph& g) {
  const LarsonSplit split = ComputeLarsonSplit(g);
  if (LcProfile(g, split.lc).kind == OddCycleKind::kOutOfClass) {
    throw OutOfClassError("G[Lc] has more than two odd cycles");
  }
  return AlphaFromSplit(g, split);
}

VertexSet Core(const Graph& g) { return Run(g, false).core; }

VertexSet Corona(const Graph& g) { return Run(g, false).corona; }

SumPrediction ClassifySum(const Graph& g) {
  RequireInClass(g);
  const LarsonSplit split = ComputeLarsonSplit(g);
  return Predict(split.lc, LcProfile(g, split.lc));
}

PartitionResult CheckPartition(const Graph& g) {
  return Partition(g, Run(g, false));
}

CoreCoronaReport Analyze(const Graph& g, bool promise_in_class) {
  Analysis a = Run(g, promise_in_class);
  CoreCoronaReport r;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.alpha = a.alpha;
  r.mu = MaximumMatching(g).size;
  r.k_observed = static_cast<int>(a.core.size() + a.corona.size()) - 2 * a.alpha;
  r.k_predicted = Predict(a.dec.lc, a.profile);
  r.partition = Partition(g, a);
  r.core = std::move(a.core);
  r.corona = std::move(a.corona);
  r.decomposition = std::move(a.dec);
  r.profile = std::move(a.profile);
  return r;
}

}  // namespace oddcore
