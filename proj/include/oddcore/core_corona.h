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

// Independence number, core and corona of graphs with at most two odd
// cycles.
//
//   α(G)       = (|L| - μ(G[L])) + Σ_i (|C_i| - 1 - μ(C_i))
//                over the connected components C_i of G[Lc].
//   core(G)    = {v : α(G - v) ≠ α(G)}.
//   corona(G)  = V \ N(core(G)), except when the two odd cycles of G[Lc]
//                share exactly one vertex x; then x is in no maximum
//                independent set, G - x is bipartite with the same α, and
//                corona(G) = V \ ({x} ∪ N(core(G))).
//
// The sum |core| + |corona| - 2α is predicted from the odd-cycle structure
// of G[Lc].

#ifndef ODDCORE_CORE_CORONA_H_
#define ODDCORE_CORE_CORONA_H_

#include <optional>
#include <stdexcept>

#include "oddcore/graph.h"
#include "oddcore/larson.h"
#include "oddcore/odd_cycles.h"

namespace oddcore {

// The input has three or more odd cycles (or G[Lc] does, for the extended
// variant) and no promise was given.
class OutOfClassError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural identity the algorithms rely on failed at run time. Never
// expected for in-class input; surfaced rather than ignored.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

int IndependenceNumber(const Graph& g, bool promise_in_class = false);

// Only G[Lc] needs to be in class.
int IndependenceNumberExtended(const Graph& g);

VertexSet Core(const Graph& g);
VertexSet Corona(const Graph& g);

struct SumPrediction {
  int k = 0;
  // Set for two vertex-disjoint odd cycles in a connected G[Lc], where the
  // stated value 0 is not reliable.
  bool unresolved = false;
};

SumPrediction ClassifySum(const Graph& g);

struct PartitionResult {
  bool holds = false;
  VertexSet uncovered;  // V \ (corona ∪ N(core))
  VertexSet overlap;    // corona ∩ N(core)
  // holds == (G[Lc] has no two odd cycles sharing exactly one vertex).
  bool agrees_with_census = false;
};

PartitionResult CheckPartition(const Graph& g);

struct CoreCoronaReport {
  Vertex n = 0;
  int64_t m = 0;
  int alpha = 0;
  int mu = 0;
  VertexSet core;
  VertexSet corona;
  int k_observed = 0;
  SumPrediction k_predicted;
  PartitionResult partition;
  LarsonDecomposition decomposition;
  // Odd-cycle structure of G[Lc], in the vertex ids of G.
  OddCycleProfile profile;
};

CoreCoronaReport Analyze(const Graph& g, bool promise_in_class = false);

}  // namespace oddcore

#endif  // ODDCORE_CORE_CORONA_H_
