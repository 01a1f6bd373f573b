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

#include "oddcore/larson.h"

#include <algorithm>

#include "oddcore/matching.h"

namespace oddcore {
namespace {

// Residual network of a maximum matching of B(G), viewed as the flow network
// s -> left copies -> right copies -> t. Node ids: left copy of v is v,
// right copy is n + v, then s and t.
//
// Closed node sets that contain s and avoid t are exactly the minimum cuts,
// i.e. the minimum vertex covers of B(G). A cover C induces the half-integral
// optimum x_v = 1 - ([v ∈ C] + [v' ∈ C]) / 2 of the fractional independent
// set relaxation; its 1-vertices form a critical independent set I and its
// 0-vertices are N(I). A vertex therefore lies in some I ∪ N(I) iff some
// closed set separates its two copies, i.e. iff the copies sit in different
// strongly connected components.
class ResidualNetwork {
 public:
  explicit ResidualNetwork(const Graph& g) : n_(g.num_vertices()) {
    const BipartiteMates mates = HopcroftKarp(
        n_, n_, [&](Vertex u) { return g.Neighbors(u); });
    matching_size_ = mates.size;

    const int nodes = 2 * n_ + 2;
    const int s = source();
    const int t = sink();
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<size_t>(2 * g.num_edges() + 2 * n_));
    for (Vertex u = 0; u < n_; ++u) {
      if (mates.left_mate[u] == kNoVertex) {
        arcs.emplace_back(s, u);
      } else {
        arcs.emplace_back(u, s);
      }
      for (Vertex v : g.Neighbors(u)) arcs.emplace_back(u, n_ + v);
    }
    for (Vertex v = 0; v < n_; ++v) {
      const Vertex u = mates.right_mate[v];
      if (u == kNoVertex) {
        arcs.emplace_back(n_ + v, t);
      } else {
        arcs.emplace_back(n_ + v, u);
        arcs.emplace_back(t, n_ + v);
      }
    }
    BuildCsr(nodes, arcs, out_offset_, out_arcs_, false);
    BuildCsr(nodes, arcs, in_offset_, in_arcs_, true);
    ComputeComponents();
  }

  int matching_size() const { return matching_size_; }
  int source() const { return 2 * n_; }
  int sink() const { return 2 * n_ + 1; }
  int component(int node) const { return component_[node]; }

  std::span<const int> Out(int node) const {
    return {out_arcs_.data() + out_offset_[node],
            out_arcs_.data() + out_offset_[node + 1]};
  }
  std::span<const int> In(int node) const {
    return {in_arcs_.data() + in_offset_[node],
            in_arcs_.data() + in_offset_[node + 1]};
  }

 private:
  static void BuildCsr(int nodes, const std::vector<std::pair<int, int>>& arcs,
                       std::vector<int>& offset, std::vector<int>& targets,
                       bool reversed) {
    offset.assign(nodes + 1, 0);
    for (auto [a, b] : arcs) ++offset[(reversed ? b : a) + 1];
    for (int i = 0; i < nodes; ++i) offset[i + 1] += offset[i];
    targets.resize(arcs.size());
    std::vector<int> fill(offset.begin(), offset.end() - 1);
    for (auto [a, b] : arcs) {
      if (reversed) {
        targets[fill[b]++] = a;
      } else {
        targets[fill[a]++] = b;
      }
    }
  }

  // Iterative Tarjan.
  void ComputeComponents() {
    const int nodes = static_cast<int>(out_offset_.size()) - 1;
    component_.assign(nodes, -1);
    std::vector<int> index(nodes, -1), low(nodes, 0), cursor(nodes, 0);
    std::vector<int> stack, call;
    std::vector<bool> on_stack(nodes, false);
    int counter = 0;
    int components = 0;
    for (int root = 0; root < nodes; ++root) {
      if (index[root] >= 0) continue;
      call.push_back(root);
      while (!call.empty()) {
        const int v = call.back();
        if (index[v] < 0) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
        }
        const auto out = Out(v);
        bool descended = false;
        while (cursor[v] < static_cast<int>(out.size())) {
          const int w = out[cursor[v]++];
          if (index[w] < 0) {
            call.push_back(w);
            descended = true;
            break;
          }
          if (on_stack[w]) low[v] = std::min(low[v], index[w]);
        }
        if (descended) continue;
        call.pop_back();
        if (!call.empty()) {
          const int parent = call.back();
          low[parent] = std::min(low[parent], low[v]);
        }
        if (low[v] == index[v]) {
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component_[w] = components;
            if (w == v) break;
          }
          ++components;
        }
      }
    }
  }

  Vertex n_;
  int matching_size_ = 0;
  std::vector<int> out_offset_, out_arcs_, in_offset_, in_arcs_;
  std::vector<int> component_;
};

LarsonSplit SplitFrom(const Graph& g, const ResidualNetwork& net) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> l, lc;
  for (Vertex v = 0; v < n; ++v) {
    if (net.component(v) == net.component(n + v)) {
      lc.push_back(v);
    } else {
      l.push_back(v);
    }
  }
  LarsonSplit split;
  split.l = VertexSet::FromSorted(std::move(l));
  split.lc = VertexSet::FromSorted(std::move(lc));
  split.critical_difference = n - net.matching_size();
  return split;
}

// Greedy in ascending id: v joins J when some closed node set can still put
// v's left copy inside and its right copy outside, alongside all earlier
// choices. `inside` and `outside` hold the forced memberships.
VertexSet GreedyMaxCritical(const Graph& g, const ResidualNetwork& net) {
  const Vertex n = g.num_vertices();
  const int nodes = 2 * n + 2;
  enum Mark : int8_t { kFree = 0, kInside = 1, kOutside = 2 };
  std::vector<int8_t> mark(nodes, kFree);

  auto close = [&](int start, int8_t label, bool forward,
                   std::vector<int>& added) -> bool {
    // Marks everything reachable from `start` (forward or backward) with
    // `label`; fails on meeting the opposite label. Tentative marks are
    // recorded in `added` for rollback.
    const int8_t opposite = label == kInside ? kOutside : kInside;
    if (mark[start] == label) return true;
    if (mark[start] == opposite) return false;
    mark[start] = label;
    added.push_back(start);
    for (size_t head = added.size() - 1; head < added.size(); ++head) {
      const int x = added[head];
      for (int y : forward ? net.Out(x) : net.In(x)) {
        if (mark[y] == label) continue;
        if (mark[y] == opposite) return false;
        mark[y] = label;
        added.push_back(y);
      }
    }
    return true;
  };

  std::vector<int> added;
  bool ok = close(net.source(), kInside, true, added);
  ok = ok && close(net.sink(), kOutside, false, added);
  if (!ok) throw std::logic_error("residual network admits no minimum cut");

  std::vector<Vertex> j;
  std::vector<int> tentative;
  for (Vertex v = 0; v < n; ++v) {
    if (net.component(v) == net.component(n + v)) continue;
    tentative.clear();
    const bool feasible = close(v, kInside, true, tentative) &&
                          close(n + v, kOutside, false, tentative);
    if (feasible) {
      j.push_back(v);
    } else {
      for (int x : tentative) mark[x] = kFree;
    }
  }
  return VertexSet::FromSorted(std::move(j));
}

}  // namespace

int CriticalDifference(const Graph& g) {
  const BipartiteMates mates =
      HopcroftKarp(g.num_vertices(), g.num_vertices(),
                   [&](Vertex u) { return g.Neighbors(u); });
  return g.num_vertices() - mates.size;
}

int CriticalDifferenceWith(const Graph& g, Vertex v) {
  if (!g.IsValid(v)) throw GraphError("invalid vertex id " + std::to_string(v));
  const VertexSet closed = VertexSet::FromUnsorted(
      [&] {
        std::vector<Vertex> ids(g.Neighbors(v).begin(), g.Neighbors(v).end());
        ids.push_back(v);
        return ids;
      }());
  const Subgraph rest = DeleteVertices(g, closed);
  return 1 - g.Degree(v) + CriticalDifference(rest.graph);
}

bool Is2Bicritical(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (CriticalDifferenceWith(g, v) > -1) return false;
  }
  return true;
}

VertexSet MaxCriticalIndependentSet(const Graph& g) {
  const ResidualNetwork net(g);
  return GreedyMaxCritical(g, net);
}

LarsonSplit ComputeLarsonSplit(const Graph& g) {
  const ResidualNetwork net(g);
  return SplitFrom(g, net);
}

LarsonDecomposition ComputeLarsonDecomposition(const Graph& g) {
  const ResidualNetwork net(g);
  LarsonSplit split = SplitFrom(g, net);
  LarsonDecomposition dec;
  dec.j = GreedyMaxCritical(g, net);
  dec.l = std::move(split.l);
  dec.lc = std::move(split.lc);
  dec.critical_difference = split.critical_difference;
  return dec;
}

DecompositionCheck VerifyDecomposition(const Graph& g,
                                       const LarsonDecomposition& dec,
                                       const AlphaFunction& alpha) {
  DecompositionCheck check;
  const Vertex n = g.num_vertices();
  const Graph gl = InducedSubgraph(g, dec.l).graph;
  const Graph glc = InducedSubgraph(g, dec.lc).graph;

  const bool partition = dec.l.Intersection(dec.lc).empty() &&
                         dec.l.size() + dec.lc.size() == static_cast<size_t>(n);

  const int alpha_g = alpha(g);
  const int alpha_l = alpha(gl);
  const int alpha_lc = alpha(glc);
  check.alpha_additive.pass = partition && alpha_g == alpha_l + alpha_lc;
  check.alpha_additive.detail = "alpha(G)=" + std::to_string(alpha_g) +
                                " alpha(G[L])=" + std::to_string(alpha_l) +
                                " alpha(G[Lc])=" + std::to_string(alpha_lc);
  if (!partition) check.alpha_additive.detail += " (L, Lc do not partition V)";

  const int mu_l = MaximumMatching(gl).size;
  check.l_is_ke.pass = alpha_l + mu_l == static_cast<int>(dec.l.size());
  check.l_is_ke.detail = "alpha+mu=" + std::to_string(alpha_l + mu_l) +
                         " |L|=" + std::to_string(dec.l.size());

  const VertexSet nj = Neighborhood(g, dec.j);
  const bool independent = IsIndependent(g, dec.j);
  const int diff = static_cast<int>(dec.j.size()) - static_cast<int>(nj.size());
  const VertexSet closure = dec.j.Union(nj);
  check.l_is_closed_nbhd.pass = independent && diff == dec.critical_difference &&
                                closure == dec.l;
  check.l_is_closed_nbhd.detail = "J=" + ToString(dec.j) + " N(J)=" +
                                  ToString(nj) + " diff=" + std::to_string(diff) +
                                  " d=" + std::to_string(dec.critical_difference);
  if (!independent) check.l_is_closed_nbhd.detail += " (J not independent)";

  check.lc_is_2bicritical.pass = Is2Bicritical(glc);
  check.lc_is_2bicritical.detail =
      dec.lc.empty() ? "vacuous (Lc empty)" : "Lc=" + ToString(dec.lc);
  return check;
}

}  // namespace oddcore
