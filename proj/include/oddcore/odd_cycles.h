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

// Recognition of graphs with at most two odd cycles and classification of
// how those cycles meet.
//
// Every cycle lives inside one block. A non-bipartite block contributes
// exactly one odd cycle when it is itself a cycle, exactly two when it is a
// theta graph (two branch vertices joined by three internally disjoint
// paths), and at least three otherwise. Cycles are counted by edge set.

#ifndef ODDCORE_ODD_CYCLES_H_
#define ODDCORE_ODD_CYCLES_H_

#include <optional>
#include <string_view>
#include <vector>

#include "oddcore/graph.h"

namespace oddcore {

struct BlockTree {
  // Vertex sets of the blocks (2-connected pieces and bridges), in discovery
  // order of a depth-first search from ascending roots.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
};

BlockTree BlockDecomposition(const Graph& g);

// Vertices lying on every odd cycle: {v ∈ V(C) : G - v is bipartite} for
// one odd cycle C. Throws GraphError if g is bipartite.
VertexSet AllOddCycleIntersection(const Graph& g);

enum class OddCycleKind {
  kBipartite,
  kOneOddCycle,
  kTwoSharingPath,
  kTwoSharingVertex,
  kTwoDisjoint,
  kOutOfClass,
};

std::string_view OddCycleKindName(OddCycleKind kind);

struct OddCycleProfile {
  OddCycleKind kind = OddCycleKind::kBipartite;
  std::vector<Cycle> witnesses;  // canonical, sorted
  VertexSet intersection;        // vertices common to all odd cycles
  std::optional<Vertex> cut_vertex;
  bool connected = true;
};

OddCycleProfile Census(const Graph& g);

bool IsInClass(const Graph& g);

}  // namespace oddcore

#endif  // ODDCORE_ODD_CYCLES_H_
