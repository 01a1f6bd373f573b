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

#include "oddcore/verify.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"
#include "oddcore/larson.h"
#include "oddcore/matching.h"
#include "oddcore/odd_cycles.h"
#include "oddcore/oracle.h"

namespace oddcore {
namespace {

using Json = nlohmann::ordered_json;

std::string Str(const VertexSet& s) { return ToString(s); }
std::string Str(int v) { return std::to_string(v); }

Comparison Compare(std::string field, std::string computed, std::string oracle,
                   bool fatal = true) {
  Comparison c;
  c.match = computed == oracle;
  c.field = std::move(field);
  c.computed = std::move(computed);
  c.oracle = std::move(oracle);
  c.fatal = fatal;
  return c;
}

TheoremCheck Check(std::string id, std::string statement, bool pass,
                   std::string detail) {
  return {std::move(id), std::move(statement),
          pass ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail)};
}

TheoremCheck NotApplicable(std::string id, std::string statement,
                           std::string detail) {
  return {std::move(id), std::move(statement), CheckStatus::kNotApplicable,
          std::move(detail)};
}

std::string_view StatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kNotApplicable:
      return "n/a";
  }
  return "?";
}

VertexSet ClosedNeighborhood(const Graph& g, const VertexSet& s) {
  return s.Union(Neighborhood(g, s));
}

}  // namespace

bool VerifyResult::ok() const {
  for (const Comparison& c : comparisons) {
    if (c.fatal && !c.match) return false;
  }
  for (const TheoremCheck& t : theorems) {
    if (t.status == CheckStatus::kFail) return false;
  }
  return true;
}

std::vector<TheoremCheck> TheoremChecks(const Graph& g,
                                        const CoreCoronaReport& report,
                                        Vertex limit) {
  std::vector<TheoremCheck> out;
  const Vertex n = g.num_vertices();
  const LarsonDecomposition& dec = report.decomposition;
  const Subgraph sub_l = InducedSubgraph(g, dec.l);
  const Subgraph sub_lc = InducedSubgraph(g, dec.lc);
  const auto brute_alpha = [&](const Graph& h) { return BruteAlpha(h, limit); };

  const DecompositionCheck larson = VerifyDecomposition(g, dec, brute_alpha);
  out.push_back(Check("larson-additive", "alpha(G) = alpha(G[L]) + alpha(G[Lc])",
                      larson.alpha_additive.pass, larson.alpha_additive.detail));
  out.push_back(Check("larson-ke", "G[L] is Konig-Egervary", larson.l_is_ke.pass,
                      larson.l_is_ke.detail));
  out.push_back(Check("larson-closure",
                      "L = J + N(J) for a maximum critical independent set J",
                      larson.l_is_closed_nbhd.pass, larson.l_is_closed_nbhd.detail));
  const bool brute_bicritical = Brute2Bicritical(sub_lc.graph, limit);
  out.push_back(Check("larson-bicritical", "G[Lc] is 2-bicritical",
                      larson.lc_is_2bicritical.pass && brute_bicritical,
                      larson.lc_is_2bicritical.detail +
                          (brute_bicritical ? "" : " (oracle disagrees)")));

  const BruteCoreCoronaResult whole = BruteCoreCorona(g, limit);
  const BruteCoreCoronaResult on_lc = BruteCoreCorona(sub_lc.graph, limit);
  const int mu_lc = BruteMatchingNumber(sub_lc.graph, limit);

  if (dec.lc.empty()) {
    out.push_back(NotApplicable("lc-matching", "alpha + mu = |Lc| - components on G[Lc]",
                                "Lc empty"));
  } else {
    const int comps = static_cast<int>(ConnectedComponents(sub_lc.graph).size());
    const int lhs = on_lc.alpha + mu_lc;
    const int rhs = static_cast<int>(dec.lc.size()) - comps;
    out.push_back(Check("lc-matching", "alpha + mu = |Lc| - components on G[Lc]",
                        lhs == rhs && comps <= 2,
                        "alpha+mu=" + Str(lhs) + " |Lc|-c=" + Str(rhs) +
                            " components=" + Str(comps)));
  }

  const int sum = static_cast<int>(whole.core.size() + whole.corona.size());
  const int alpha_l = BruteAlpha(sub_l.graph, limit);
  const int predicted_sum =
      2 * alpha_l + static_cast<int>(on_lc.core.size() + on_lc.corona.size());
  out.push_back(Check("sum-decomposition",
                      "|core|+|corona| = 2 alpha(G[L]) + |core(G[Lc])| + |corona(G[Lc])|",
                      sum == predicted_sum,
                      "lhs=" + Str(sum) + " rhs=" + Str(predicted_sum)));
  out.push_back(Check("sum-bounds", "2 alpha <= |core|+|corona| <= 2 alpha + 2",
                      2 * whole.alpha <= sum && sum <= 2 * whole.alpha + 2,
                      "|core|+|corona|=" + Str(sum) + " alpha=" + Str(whole.alpha)));

  if (dec.lc.empty()) {
    out.push_back(NotApplicable("reduction", "core(G) and corona(G) restrict to those of G[Lc]",
                                "Lc empty"));
  } else {
    const VertexSet core_lc = sub_lc.Lift(on_lc.core);
    const VertexSet corona_lc = sub_lc.Lift(on_lc.corona);
    const bool pass = whole.core.Intersection(dec.lc) == core_lc &&
                      whole.corona.Intersection(dec.lc) == corona_lc;
    out.push_back(Check("reduction", "core(G) and corona(G) restrict to those of G[Lc]",
                        pass,
                        "core(G[Lc])=" + Str(core_lc) + " corona(G[Lc])=" +
                            Str(corona_lc)));
  }

  {
    const VertexSet n_core = Neighborhood(g, whole.core);
    const VertexSet all = VertexSet::Range(n);
    const bool holds = whole.corona.Union(n_core) == all &&
                       whole.corona.Intersection(n_core).empty();
    const bool sharing = report.profile.kind == OddCycleKind::kTwoSharingVertex;
    out.push_back(Check("partition-criterion",
                        "corona + N(core) partitions V iff the odd cycles of G[Lc] "
                        "do not share exactly one vertex",
                        holds == !sharing,
                        std::string("oracle partition ") + (holds ? "holds" : "fails") +
                            ", G[Lc] kind " +
                            std::string(OddCycleKindName(report.profile.kind))));
  }

  {
    bool pass = true;
    std::vector<Vertex> deletion_core;
    for (Vertex v = 0; v < n; ++v) {
      const int gap = whole.alpha - BruteAlpha(DeleteVertex(g, v).graph, limit);
      if (gap != 0 && gap != 1) pass = false;
      if (gap == 1) deletion_core.push_back(v);
    }
    const VertexSet by_deletion = VertexSet::FromSorted(std::move(deletion_core));
    pass = pass && by_deletion == whole.core;
    out.push_back(Check("core-by-deletion",
                        "core = {v : alpha(G - v) < alpha(G)}, gaps in {0, 1}", pass,
                        "by deletion " + Str(by_deletion)));
  }

  const int mu = BruteMatchingNumber(g, limit);
  const bool ke = whole.alpha + mu == n;
  if (!ke) {
    const std::string why = "not Konig-Egervary";
    out.push_back(NotApplicable("ke-corona", "on KE graphs N(core) = V - corona", why));
    out.push_back(NotApplicable("ke-matching",
                                "on KE graphs V - corona matches into core", why));
    out.push_back(NotApplicable("ke-mis-critical",
                                "on KE graphs every maximum independent set is critical",
                                why));
  } else {
    const VertexSet rest = VertexSet::Range(n).Difference(whole.corona);
    out.push_back(Check("ke-corona", "on KE graphs N(core) = V - corona",
                        Neighborhood(g, whole.core) == rest,
                        "N(core)=" + Str(Neighborhood(g, whole.core))));
    const auto matched = MatchingFromInto(g, rest, whole.core);
    out.push_back(Check("ke-matching", "on KE graphs V - corona matches into core",
                        std::holds_alternative<Matching>(matched),
                        "V-corona=" + Str(rest) + " core=" + Str(whole.core)));
    const MisEnumeration all = BruteAllMis(g, 4096, limit);
    bool every = true;
    for (const VertexSet& s : all.sets) {
      const int diff =
          static_cast<int>(s.size()) - static_cast<int>(Neighborhood(g, s).size());
      if (diff != dec.critical_difference) every = false;
    }
    out.push_back(Check("ke-mis-critical",
                        "on KE graphs every maximum independent set is critical", every,
                        Str(static_cast<int>(all.sets.size())) + " sets checked" +
                            (all.truncated ? " (truncated)" : "")));
  }

  {
    const VertexSet closed = ClosedNeighborhood(g, dec.j);
    const int extended = static_cast<int>(dec.j.size()) +
                         BruteAlpha(DeleteVertices(g, closed).graph, limit);
    out.push_back(Check("critical-extension",
                        "J lies in some maximum independent set",
                        extended == whole.alpha,
                        "|J| + alpha(G - N[J]) = " + Str(extended)));
  }

  {
    const int k_oracle = sum - 2 * whole.alpha;
    const std::string detail = "predicted " + Str(report.k_predicted.k) + ", oracle " +
                               Str(k_oracle);
    const std::string statement = "k = |core|+|corona| - 2 alpha matches the prediction";
    if (report.k_predicted.unresolved) {
      out.push_back(NotApplicable("k-prediction", statement, detail + " (unresolved)"));
    } else {
      out.push_back(Check("k-prediction", statement, k_oracle == report.k_predicted.k,
                          detail));
    }
  }
  return out;
}

VerifyResult Verify(const Graph& g, const VerifyOptions& options) {
  const Vertex limit = std::min(options.oracle_limit, kOracleHardCap);
  if (g.num_vertices() > limit) {
    throw OracleLimitError("n=" + std::to_string(g.num_vertices()) +
                           " exceeds oracle limit " + std::to_string(limit));
  }
  VerifyResult result;
  result.n = g.num_vertices();
  result.m = g.num_edges();

  const OddCycleKind census = Census(g).kind;
  const std::optional<OddCycleKind> exact = OracleKind(g);
  const std::string census_name(OddCycleKindName(census));
  if (exact) {
    result.comparisons.push_back(
        Compare("census", census_name, std::string(OddCycleKindName(*exact))));
  } else {
    Comparison c = Compare("census", census_name, "enumeration budget exceeded", false);
    result.comparisons.push_back(std::move(c));
  }
  if (census == OddCycleKind::kOutOfClass) {
    if (!exact || *exact == OddCycleKind::kOutOfClass) {
      throw OutOfClassError("graph has more than two odd cycles");
    }
    return result;
  }
  if (exact == OddCycleKind::kOutOfClass) return result;

  result.report = Analyze(g);
  CoreCoronaReport& r = result.report;
  if (options.corrupt_core && g.num_vertices() > 0) {
    r.core = r.core.Contains(0) ? r.core.Difference(VertexSet{0})
                                : r.core.Union(VertexSet{0});
  }

  const OracleResult o = RunOracle(g, limit);
  result.comparisons.push_back(Compare("alpha", Str(r.alpha), Str(o.alpha)));
  result.comparisons.push_back(
      Compare("mu", Str(r.mu), Str(BruteMatchingNumber(g, limit))));
  result.comparisons.push_back(Compare("core", Str(r.core), Str(o.core)));
  result.comparisons.push_back(Compare("corona", Str(r.corona), Str(o.corona)));
  result.comparisons.push_back(
      Compare("d", Str(r.decomposition.critical_difference), Str(o.d)));
  result.comparisons.push_back(
      Compare("J", Str(r.decomposition.j), Str(o.max_critical)));

  const int k_oracle =
      static_cast<int>(o.core.size() + o.corona.size()) - 2 * o.alpha;
  result.comparisons.push_back(Compare("k_observed", Str(r.k_observed), Str(k_oracle)));
  result.comparisons.push_back(Compare("k_predicted", Str(r.k_predicted.k),
                                       Str(k_oracle), !r.k_predicted.unresolved));

  const VertexSet n_core = Neighborhood(g, o.core);
  const bool oracle_partition =
      o.corona.Union(n_core) == VertexSet::Range(g.num_vertices()) &&
      o.corona.Intersection(n_core).empty();
  result.comparisons.push_back(Compare("partition_holds",
                                       r.partition.holds ? "true" : "false",
                                       oracle_partition ? "true" : "false"));

  result.theorems = TheoremChecks(g, r, limit);
  return result;
}

std::string RenderVerify(const VerifyResult& result, OutputMode mode) {
  if (mode == OutputMode::kText) {
    std::ostringstream os;
    os << "n " << result.n << "  m " << result.m << "  "
       << (result.ok() ? "all checks pass" : "MISMATCH") << "\n";
    for (const Comparison& c : result.comparisons) {
      os << (c.match ? "  ok   " : (c.fatal ? "  FAIL " : "  note ")) << c.field
         << ": computed " << c.computed << ", oracle " << c.oracle << "\n";
    }
    for (const TheoremCheck& t : result.theorems) {
      os << "  " << StatusName(t.status) << "  [" << t.id << "] " << t.statement << "  ("
         << t.detail << ")\n";
    }
    return os.str();
  }
  Json out;
  out["n"] = result.n;
  out["m"] = result.m;
  out["ok"] = result.ok();
  Json comparisons = Json::array();
  for (const Comparison& c : result.comparisons) {
    Json row;
    row["field"] = c.field;
    row["computed"] = c.computed;
    row["oracle"] = c.oracle;
    row["match"] = c.match;
    row["fatal"] = c.fatal;
    comparisons.push_back(std::move(row));
  }
  out["comparisons"] = std::move(comparisons);
  Json theorems = Json::array();
  for (const TheoremCheck& t : result.theorems) {
    Json row;
    row["id"] = t.id;
    row["statement"] = t.statement;
    row["status"] = std::string(StatusName(t.status));
    row["detail"] = t.detail;
    theorems.push_back(std::move(row));
  }
  out["theorems"] = std::move(theorems);
  return out.dump() + "\n";
}

std::vector<NamedGraph> NamedSuite() {
  std::vector<NamedGraph> suite;
  suite.push_back({"C5", CycleGraph(5)});
  suite.push_back({"K3", CompleteGraph(3)});
  suite.push_back({"P3", PathGraph(3)});
  suite.push_back({"P4", PathGraph(4)});
  suite.push_back({"C4", CycleGraph(4)});
  suite.push_back({"diamond", Graph::Build(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})});
  suite.push_back({"star K1,3", Graph::Build(4, {{0, 1}, {0, 2}, {0, 3}})});
  suite.push_back(
      {"bowtie", Graph::Build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}})});
  suite.push_back({"theta(1,2,3)",
                   Graph::Build(5, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}})});
  const Graph triangle = CompleteGraph(3);
  const Graph two_triangles = DisjointUnion(triangle, triangle);
  suite.push_back({"two disjoint triangles", two_triangles});
  suite.push_back({"bridged triangles",
                   Graph::Build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}})});
  suite.push_back({"path-2-joined triangles",
                   Graph::Build(7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6},
                                    {4, 6}})});
  suite.push_back({"C5 + K2", DisjointUnion(CycleGraph(5), CompleteGraph(2))});
  suite.push_back({"empty", Graph()});
  return suite;
}

bool SelftestResult::ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const SelftestRow& r) { return r.result.ok(); });
}

SelftestResult RunSelftest() {
  SelftestResult out;
  for (NamedGraph& named : NamedSuite()) {
    const auto start = std::chrono::steady_clock::now();
    SelftestRow row;
    row.name = named.name;
    row.result = Verify(named.graph, {kOracleHardCap, false});
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    out.rows.push_back(std::move(row));
  }
  return out;
}

namespace {

struct Tally {
  std::string statement;
  int pass = 0, fail = 0, not_applicable = 0;
};

std::vector<std::pair<std::string, Tally>> Traceability(const SelftestResult& result) {
  std::vector<std::pair<std::string, Tally>> table;
  for (const SelftestRow& row : result.rows) {
    for (const TheoremCheck& t : row.result.theorems) {
      auto it = std::find_if(table.begin(), table.end(),
                             [&](const auto& e) { return e.first == t.id; });
      if (it == table.end()) {
        table.push_back({t.id, Tally{t.statement}});
        it = table.end() - 1;
      }
      switch (t.status) {
        case CheckStatus::kPass:
          ++it->second.pass;
          break;
        case CheckStatus::kFail:
          ++it->second.fail;
          break;
        case CheckStatus::kNotApplicable:
          ++it->second.not_applicable;
          break;
      }
    }
  }
  return table;
}

bool KUnresolved(const VerifyResult& r) { return r.report.k_predicted.unresolved; }

}  // namespace

std::string RenderSelftest(const SelftestResult& result, OutputMode mode) {
  const auto table = Traceability(result);
  if (mode == OutputMode::kText) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-26s %3s %6s %6s  %s\n", "graph", "n", "alpha",
                  "k", "result");
    os << line;
    for (const SelftestRow& row : result.rows) {
      const auto& r = row.result;
      std::string status = r.ok() ? "pass" : "FAIL";
      if (KUnresolved(r)) status += " (k unresolved)";
      std::snprintf(line, sizeof line, "%-26s %3d %6d %6d  %s  %.3fs\n", row.name.c_str(),
                    r.n, r.report.alpha, r.report.k_observed, status.c_str(), row.seconds);
      os << line;
    }
    os << "\n";
    for (const auto& [id, t] : table) {
      std::snprintf(line, sizeof line, "%-20s %s  pass %d  fail %d  n/a %d\n", id.c_str(),
                    t.fail == 0 ? "ok  " : "FAIL", t.pass, t.fail, t.not_applicable);
      os << line << "    " << t.statement << "\n";
    }
    os << (result.ok() ? "selftest passed\n" : "selftest FAILED\n");
    return os.str();
  }
  Json out;
  out["ok"] = result.ok();
  Json rows = Json::array();
  for (const SelftestRow& row : result.rows) {
    Json j;
    j["name"] = row.name;
    j["n"] = row.result.n;
    j["ok"] = row.result.ok();
    j["k_unresolved"] = KUnresolved(row.result);
    j["seconds"] = row.seconds;
    rows.push_back(std::move(j));
  }
  out["rows"] = std::move(rows);
  Json theorems = Json::array();
  for (const auto& [id, t] : table) {
    Json j;
    j["id"] = id;
    j["statement"] = t.statement;
    j["pass"] = t.pass;
    j["fail"] = t.fail;
    j["not_applicable"] = t.not_applicable;
    theorems.push_back(std::move(j));
  }
  out["theorems"] = std::move(theorems);
  return out.dump() + "\n";
}

}  // namespace oddcore
