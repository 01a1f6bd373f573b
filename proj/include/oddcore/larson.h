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

// Critical independent sets and Larson's independence decomposition.
//
// For an independent set I let diff(I) = |I| - |N(I)|. The critical
// difference d(G) is the maximum of diff over all independent sets (the
// empty set included, so d >= 0); I is critical when diff(I) = d(G), and a
// maximum critical independent set is a critical set of largest cardinality.
//
// Larson's decomposition splits V into L = J ∪ N(J), for any maximum
// critical independent set J, and Lc = V \ L. G[L] is König-Egerváry, G[Lc]
// is 2-bicritical and α(G) = α(G[L]) + α(G[Lc]).
//
// Everything here reduces to one maximum matching of the bipartite double
// cover B(G): d(G) = n - μ(B(G)), and the strongly connected components of
// the residual network of that matching identify Lc as the vertices whose
// two copies share a component.

#ifndef ODDCORE_LARSON_H_
#define ODDCORE_LARSON_H_

#include <functional>
#include <string>

#include "oddcore/graph.h"

namespace oddcore {

int CriticalDifference(const Graph& g);

// Maximum of diff(I) over independent sets I containing v, computed as
// 1 - |N(v)| + d(G - N[v]).
int CriticalDifferenceWith(const Graph& g, Vertex v);

// Every nonempty independent set S has |N(S)| > |S|. Vacuously true for the
// empty graph.
bool Is2Bicritical(const Graph& g);

// The lexicographically least maximum critical independent set.
VertexSet MaxCriticalIndependentSet(const Graph& g);

struct LarsonSplit {
  VertexSet l;
  VertexSet lc;
  int critical_difference = 0;
};

struct LarsonDecomposition {
  VertexSet l;
  VertexSet lc;
  VertexSet j;
  int critical_difference = 0;
};

// L and Lc only; one bipartite matching plus linear work.
LarsonSplit ComputeLarsonSplit(const Graph& g);

LarsonDecomposition ComputeLarsonDecomposition(const Graph& g);

struct CheckItem {
  bool pass = false;
  std::string detail;
};

struct DecompositionCheck {
  CheckItem alpha_additive;     // α(G) = α(G[L]) + α(G[Lc])
  CheckItem l_is_ke;            // α(G[L]) + μ(G[L]) = |L|
  CheckItem l_is_closed_nbhd;   // L = J ∪ N(J), J independent, diff(J) = d
  CheckItem lc_is_2bicritical;  // vacuous when Lc is empty

  bool ok() const {
    return alpha_additive.pass && l_is_ke.pass && l_is_closed_nbhd.pass &&
           lc_is_2bicritical.pass;
  }
};

using AlphaFunction = std::function<int(const Graph&)>;

// Recomputes each property of the decomposition independently. `alpha`
// supplies independence numbers (typically the exhaustive oracle).
DecompositionCheck VerifyDecomposition(const Graph& g,
                                       const LarsonDecomposition& dec,
                                       const AlphaFunction& alpha);

}  // namespace oddcore

#endif  // ODDCORE_LARSON_H_
