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

// Exponential-time reference computations over vertex bitmasks, and seeded
// generators of graphs with a prescribed odd-cycle pattern.
//
// Nothing here shares code with the polynomial algorithms beyond the Graph
// type; it exists to check them.

#ifndef ODDCORE_ORACLE_H_
#define ODDCORE_ORACLE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "oddcore/graph.h"
#include "oddcore/odd_cycles.h"

namespace oddcore {

inline constexpr Vertex kOracleHardCap = 25;

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MisEnumeration {
  int alpha = 0;
  std::vector<VertexSet> sets;  // in discovery order
  bool truncated = false;       // more than `limit` maximum sets exist
};

// α by branch and bound, then every maximum independent set up to `limit`.
MisEnumeration BruteAllMis(const Graph& g, size_t limit,
                           Vertex cap = kOracleHardCap);

int BruteAlpha(const Graph& g, Vertex cap = kOracleHardCap);

struct BruteCoreCoronaResult {
  int alpha = 0;
  uint64_t mis_count = 0;
  VertexSet core;    // intersection of all maximum independent sets
  VertexSet corona;  // their union
};

BruteCoreCoronaResult BruteCoreCorona(const Graph& g,
                                      Vertex cap = kOracleHardCap);

struct BruteCriticalResult {
  int d = 0;
  std::vector<VertexSet> critical;  // all maximizers of |I| - |N(I)|, sorted
  bool critical_truncated = false;
  VertexSet max_critical;           // largest, then lexicographically least
};

BruteCriticalResult BruteCritical(const Graph& g, Vertex cap = kOracleHardCap,
                                  size_t keep_limit = 1 << 16);

// |N(S)| > |S| for every nonempty independent S, by enumeration.
bool Brute2Bicritical(const Graph& g, Vertex cap = kOracleHardCap);

// Maximum matching size by dynamic programming over vertex subsets.
int BruteMatchingNumber(const Graph& g, Vertex cap = kOracleHardCap);

struct CycleEnumeration {
  int odd_count = 0;
  bool at_cap = false;           // stopped after `cap` odd cycles
  bool budget_exceeded = false;  // result unreliable
  std::vector<Cycle> cycles;     // every cycle met (odd and even), canonical
  std::vector<Cycle> odd_cycles;
};

// Backtracking over simple cycles rooted at their minimum vertex. One cycle
// per edge set.
CycleEnumeration CountOddCyclesExact(const Graph& g, int cap = 3,
                                     uint64_t work_budget = 20'000'000);

// Odd-cycle kind derived from the enumeration; nullopt if the budget ran out.
std::optional<OddCycleKind> OracleKind(const Graph& g,
                                       uint64_t work_budget = 20'000'000);

struct OracleResult {
  int alpha = 0;
  uint64_t mis_count = 0;
  VertexSet core;
  VertexSet corona;
  int d = 0;
  VertexSet max_critical;
  std::optional<OddCycleKind> kind;
  int odd_cycle_count = 0;  // meaningful when !odd_cycles_at_cap
  bool odd_cycles_at_cap = false;
  std::vector<Cycle> odd_cycles;
};

OracleResult RunOracle(const Graph& g, Vertex cap = kOracleHardCap);

// Deterministic 64-bit generator. Draws are built from raw engine output so
// sequences do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t Next() { return engine_(); }
  // Uniform in [lo, hi].
  int64_t Uniform(int64_t lo, int64_t hi);
  // Uniform in [0, 1).
  double Unit();
  bool Bernoulli(double p) { return Unit() < p; }
  // Independent stream derived from this one.
  Rng Split();

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[static_cast<size_t>(Uniform(0, i - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class GenPattern {
  kBipartite,
  kKe,
  kOneOdd,
  kSharePath,
  kShareVertex,
  kDisjointConnected,
  kDisjointDisconnected,
  kRandomFiltered,
};

inline constexpr GenPattern kAllGenPatterns[] = {
    GenPattern::kBipartite,         GenPattern::kKe,
    GenPattern::kOneOdd,            GenPattern::kSharePath,
    GenPattern::kShareVertex,       GenPattern::kDisjointConnected,
    GenPattern::kDisjointDisconnected, GenPattern::kRandomFiltered,
};

std::string_view GenPatternName(GenPattern pattern);
// Throws std::invalid_argument for unknown names.
GenPattern ParseGenPattern(std::string_view name);

// Smallest n the pattern can realize.
Vertex MinVertices(GenPattern pattern);

struct GenParams {
  Vertex n = 10;
  // Probability of each admissible extra edge (within a tree hanging off the
  // odd-cycle gadget, joining opposite depth parities). For random-filtered,
  // the G(n, p) edge probability.
  double p = 0.1;
};

// Throws std::invalid_argument on inconsistent parameters.
Graph Generate(GenPattern pattern, const GenParams& params, uint64_t seed);

}  // namespace oddcore

#endif  // ODDCORE_ORACLE_H_
