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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   acceptance CLI_PATH GOLDEN_DIR [--write-golden]

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oddcore/core_corona.h"
#include "oddcore/graph_io.h"
#include "oddcore/larson.h"
#include "oddcore/matching.h"
#include "oddcore/odd_cycles.h"
#include "oddcore/oracle.h"
#include "oddcore/report.h"
#include "oddcore/verify.h"

namespace oddcore {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void Fail(std::string what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(what));
  }
};

int failed_criteria = 0;

void Report(int id, const std::string& title, const Outcome& o) {
  std::printf("criterion %2d %s: %s (%s)\n", id, o.pass ? "PASS" : "FAIL", title.c_str(),
              o.detail.c_str());
  for (const std::string& f : o.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failed_criteria;
}

std::string Fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

const Graph* FindSuite(const std::vector<NamedGraph>& suite, const std::string& name) {
  for (const NamedGraph& ng : suite) {
    if (ng.name == name) return &ng.graph;
  }
  return nullptr;
}

// 1. Named suite, exact values.
void NamedSuiteExact() {
  struct Expected {
    std::string name;
    int alpha;
    VertexSet core;
    size_t corona_size;
  };
  const std::vector<Expected> expected = {
      {"C5", 2, {}, 5},
      {"P3", 2, {0, 2}, 2},
      {"diamond", 2, {0, 3}, 2},
      {"bowtie", 2, {}, 4},
      {"theta(1,2,3)", 2, {}, 5},
      {"two disjoint triangles", 2, {}, 6},
      {"path-2-joined triangles", 3, {3}, 5},
  };
  const std::vector<NamedGraph> suite = NamedSuite();
  Outcome o;
  double worst = 0;
  for (const NamedGraph& ng : suite) {
    const auto start = Clock::now();
    const CoreCoronaReport r = Analyze(ng.graph);
    const double t = Seconds(start);
    worst = std::max(worst, t);
    const BruteCoreCoronaResult brute = BruteCoreCorona(ng.graph);
    if (r.alpha != brute.alpha || r.core != brute.core || r.corona != brute.corona) {
      o.Fail(ng.name + ": computed (" + std::to_string(r.alpha) + ", " + ToString(r.core) +
             ", " + ToString(r.corona) + ") oracle (" + std::to_string(brute.alpha) + ", " +
             ToString(brute.core) + ", " + ToString(brute.corona) + ")");
    }
    if (t >= 1.0) o.Fail(ng.name + ": " + Fmt(t) + " s");
  }
  for (const Expected& e : expected) {
    const Graph* g = FindSuite(suite, e.name);
    if (g == nullptr) {
      o.Fail("missing suite graph " + e.name);
      continue;
    }
    const CoreCoronaReport r = Analyze(*g);
    if (r.alpha != e.alpha || r.core != e.core || r.corona.size() != e.corona_size) {
      o.Fail(e.name + ": unexpected (" + std::to_string(r.alpha) + ", " + ToString(r.core) +
             ", " + std::to_string(r.corona.size()) + " vertices)");
    }
  }
  o.detail = std::to_string(suite.size()) + " graphs, slowest " + Fmt(worst) + " s";
  Report(1, "named suite exactness", o);
}

struct Instance {
  GenPattern pattern;
  uint64_t seed;
  Graph g;
  CoreCoronaReport report;
  OracleResult oracle;
};

// 2. Seeded in-class instances against the oracle.
std::vector<Instance> RandomizedEquivalence() {
  constexpr int kPerPattern = 125;
  std::vector<Instance> out;
  Outcome o;
  const auto start = Clock::now();
  Rng rng(20260101);
  for (GenPattern pattern : kAllGenPatterns) {
    for (int i = 0; i < kPerPattern; ++i) {
      const Vertex lo = std::max<Vertex>(MinVertices(pattern), 4);
      const Vertex n = static_cast<Vertex>(rng.Uniform(lo, 18));
      const double p = pattern == GenPattern::kRandomFiltered ? 0.1 + 0.1 * rng.Unit()
                                                              : 0.05 + 0.35 * rng.Unit();
      const uint64_t seed = rng.Next();
      Instance inst{pattern, seed, Generate(pattern, {n, p}, seed), {}, {}};
      const std::string tag = std::string(GenPatternName(pattern)) + " n=" +
                              std::to_string(n) + " seed=" + std::to_string(seed);
      inst.report = Analyze(inst.g);
      inst.oracle = RunOracle(inst.g);
      const CoreCoronaReport& r = inst.report;
      const OracleResult& b = inst.oracle;
      if (r.alpha != b.alpha) o.Fail(tag + ": alpha");
      if (r.core != b.core) o.Fail(tag + ": core");
      if (r.corona != b.corona) o.Fail(tag + ": corona");
      if (r.decomposition.critical_difference != b.d) o.Fail(tag + ": d");
      if (!b.kind || Census(inst.g).kind != *b.kind) o.Fail(tag + ": census kind");
      out.push_back(std::move(inst));
    }
  }
  const double t = Seconds(start);
  if (t >= 300) o.Fail("took " + Fmt(t) + " s");
  o.detail = std::to_string(out.size()) + " instances, " + Fmt(t) + " s";
  Report(2, "randomized oracle equivalence", o);
  return out;
}

Graph RandomGraph(Rng& rng, Vertex n, double p) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph::Build(n, edges);
}

// 3. d = n - μ(B(G)) against max |I| - |N(I)|.
void CriticalDifferenceIdentity() {
  Outcome o;
  Rng rng(33);
  constexpr int kGraphs = 500;
  for (int i = 0; i < kGraphs; ++i) {
    const Vertex n = static_cast<Vertex>(rng.Uniform(1, 14));
    const Graph g = RandomGraph(rng, n, 0.05 + 0.45 * rng.Unit());
    const int via_cover = n - MaximumMatching(BipartiteDoubleCover(g)).size;
    const int brute = BruteCritical(g).d;
    if (via_cover != brute || CriticalDifference(g) != brute) {
      o.Fail("graph " + std::to_string(i) + ": " + std::to_string(via_cover) + " vs " +
             std::to_string(brute));
    }
  }
  o.detail = std::to_string(kGraphs) + " graphs, n <= 14";
  Report(3, "critical-difference identity", o);
}

// 4. Decomposition properties and order invariance of L.
void LarsonProperties(const std::vector<Instance>& instances) {
  Outcome o;
  Rng rng(44);
  auto alpha = [](const Graph& h) { return BruteAlpha(h); };
  for (const Instance& inst : instances) {
    const DecompositionCheck c = VerifyDecomposition(inst.g, inst.report.decomposition, alpha);
    if (!c.ok()) {
      o.Fail(std::string(GenPatternName(inst.pattern)) + " seed " + std::to_string(inst.seed) +
             ": " + c.alpha_additive.detail + " " + c.l_is_ke.detail + " " +
             c.l_is_closed_nbhd.detail + " " + c.lc_is_2bicritical.detail);
    }
    const Vertex n = inst.g.num_vertices();
    for (int k = 0; k < 20; ++k) {
      std::vector<Vertex> perm(n);
      for (Vertex v = 0; v < n; ++v) perm[v] = v;
      rng.Shuffle(perm);
      std::vector<Vertex> mapped;
      for (Vertex v : inst.report.decomposition.l) mapped.push_back(perm[v]);
      if (ComputeLarsonSplit(Relabel(inst.g, perm)).l != VertexSet::FromUnsorted(mapped)) {
        o.Fail("L changed under relabeling, seed " + std::to_string(inst.seed));
        break;
      }
    }
  }
  o.detail = std::to_string(instances.size()) + " instances, 20 permutations each";
  Report(4, "decomposition properties", o);
}

// 5. α + μ on 2-bicritical in-class graphs, taken as G[Lc] of generated
// instances and its components.
void MatchingIdentity() {
  Outcome o;
  std::set<std::string> seen;
  int connected = 0;
  int disconnected = 0;
  Rng rng(55);
  auto check = [&](const Graph& h) {
    if (h.num_vertices() == 0 || h.num_vertices() > 22) return;
    if (!seen.insert(SerializeGraph(h, GraphFormat::kEdgeList)).second) return;
    if (!Brute2Bicritical(h) || Census(h).kind == OddCycleKind::kOutOfClass) {
      o.Fail("non 2-bicritical G[Lc]: " + SerializeGraph(h, GraphFormat::kJson));
      return;
    }
    const int sum = BruteAlpha(h) + MaximumMatching(h).size;
    const bool is_connected = IsConnected(h);
    const int expected = h.num_vertices() - (is_connected ? 1 : 2);
    if (ConnectedComponents(h).size() > 2) return;
    (is_connected ? connected : disconnected)++;
    if (sum != expected) {
      o.Fail("alpha + mu = " + std::to_string(sum) + ", expected " + std::to_string(expected) +
             ": " + SerializeGraph(h, GraphFormat::kJson));
    }
  };
  const GenPattern odd[] = {GenPattern::kOneOdd, GenPattern::kSharePath, GenPattern::kShareVertex,
                            GenPattern::kDisjointConnected, GenPattern::kDisjointDisconnected,
                            GenPattern::kRandomFiltered};
  for (int attempt = 0; attempt < 40000 && (connected < 300 || disconnected < 100); ++attempt) {
    const GenPattern pattern = odd[attempt % std::size(odd)];
    const Vertex n = static_cast<Vertex>(rng.Uniform(std::max<Vertex>(MinVertices(pattern), 4), 22));
    const double p = pattern == GenPattern::kRandomFiltered ? 0.12 : 0.4 * rng.Unit();
    const Graph g = Generate(pattern, {n, p}, rng.Next());
    const Graph lc = InducedSubgraph(g, ComputeLarsonSplit(g).lc).graph;
    check(lc);
    for (const VertexSet& comp : ConnectedComponents(lc)) check(InducedSubgraph(lc, comp).graph);
  }
  if (connected < 300) o.Fail("only " + std::to_string(connected) + " connected instances");
  if (disconnected < 1) o.Fail("no disconnected instances");
  o.detail = std::to_string(connected) + " connected, " + std::to_string(disconnected) +
             " disconnected";
  Report(5, "matching identity on 2-bicritical graphs", o);
}

// 6. Sum decomposition, bounds and the partition criterion, all from oracle
// values.
void SumAndBounds(const std::vector<Instance>& instances) {
  Outcome o;
  int literal_exceptions = 0;
  int sharing_vertex = 0;
  for (const Instance& inst : instances) {
    const Graph& g = inst.g;
    const OracleResult& b = inst.oracle;
    const std::string tag =
        std::string(GenPatternName(inst.pattern)) + " seed " + std::to_string(inst.seed);
    const int total = static_cast<int>(b.core.size() + b.corona.size());
    const LarsonDecomposition& dec = inst.report.decomposition;
    const int alpha_l = BruteAlpha(InducedSubgraph(g, dec.l).graph);
    const BruteCoreCoronaResult lc = BruteCoreCorona(InducedSubgraph(g, dec.lc).graph);
    const int rhs = 2 * alpha_l + static_cast<int>(lc.core.size() + lc.corona.size());
    if (total != rhs) o.Fail(tag + ": sum " + std::to_string(total) + " vs " + std::to_string(rhs));
    if (total < 2 * b.alpha || total > 2 * b.alpha + 2) o.Fail(tag + ": outside bounds");

    const VertexSet n_core = Neighborhood(g, b.core);
    const bool holds = b.corona.Intersection(n_core).empty() &&
                       b.corona.Union(n_core) == VertexSet::Range(g.num_vertices());
    const bool lc_shares_vertex = inst.report.profile.kind == OddCycleKind::kTwoSharingVertex;
    sharing_vertex += lc_shares_vertex ? 1 : 0;
    if (holds == lc_shares_vertex) o.Fail(tag + ": partition " + std::to_string(holds));
    if (inst.report.partition.holds != holds) o.Fail(tag + ": reported partition differs");
    const bool g_shares_vertex = Census(g).kind == OddCycleKind::kTwoSharingVertex;
    if (holds == g_shares_vertex) ++literal_exceptions;
  }
  o.detail = std::to_string(instances.size()) + " instances, " + std::to_string(sharing_vertex) +
             " with G[Lc] sharing one vertex; " + std::to_string(literal_exceptions) +
             " where G shares one vertex but G[Lc] does not";
  Report(6, "sum and bound theorems", o);
}

// 7. k prediction.
void KPrediction(const std::vector<Instance>& instances) {
  Outcome o;
  int resolved = 0;
  int unresolved = 0;
  for (const Instance& inst : instances) {
    const OracleResult& b = inst.oracle;
    const int k = static_cast<int>(b.core.size() + b.corona.size()) - 2 * b.alpha;
    if (inst.report.k_predicted.unresolved) {
      ++unresolved;
      if (inst.report.k_observed != k) o.Fail("unresolved row reports a wrong observed k");
      continue;
    }
    ++resolved;
    if (inst.report.k_predicted.k != k) {
      o.Fail(std::string(GenPatternName(inst.pattern)) + " seed " + std::to_string(inst.seed) +
             ": predicted " + std::to_string(inst.report.k_predicted.k) + ", oracle " +
             std::to_string(k));
    }
  }
  const std::vector<NamedGraph> suite = NamedSuite();
  const std::pair<std::string, int> named[] = {{"bridged triangles", 2},
                                               {"path-2-joined triangles", 0}};
  for (const auto& [name, want] : named) {
    const Graph* g = FindSuite(suite, name);
    if (g == nullptr) {
      o.Fail("missing " + name);
      continue;
    }
    const BruteCoreCoronaResult b = BruteCoreCorona(*g);
    const int k = static_cast<int>(b.core.size() + b.corona.size()) - 2 * b.alpha;
    const std::string json = RenderReport(Analyze(*g), OutputMode::kJson);
    const std::string observed = "\"k_observed\":" + std::to_string(k);
    if (k != want || json.find("\"k_unresolved\":true") == std::string::npos ||
        json.find(observed) == std::string::npos || json.find("\"k_predicted\":") == std::string::npos) {
      o.Fail(name + ": oracle k " + std::to_string(k) + ", report " + json);
    }
  }
  o.detail = std::to_string(resolved) + " resolved, " + std::to_string(unresolved) +
             " unresolved; bridged k=2, path-2 k=0 reported";
  Report(7, "k prediction", o);
}

// 8. Blossom against exhaustive matching.
void BlossomCorrectness() {
  Outcome o;
  Rng rng(88);
  constexpr int kGraphs = 500;
  for (int i = 0; i < kGraphs; ++i) {
    const Vertex n = static_cast<Vertex>(rng.Uniform(1, 12));
    const Graph g = RandomGraph(rng, n, 0.1 + 0.6 * rng.Unit());
    const Matching m = MaximumMatching(g);
    if (!IsValidMatching(g, m) || m.size != BruteMatchingNumber(g)) {
      o.Fail("graph " + std::to_string(i) + ": " + SerializeGraph(g, GraphFormat::kJson));
    }
  }
  o.detail = std::to_string(kGraphs) + " graphs, n <= 12";
  Report(8, "blossom correctness", o);
}

// 9. Runtime growth at n = 500, 1000, 2000 with m about 1.5 n.
void Scaling() {
  Outcome o;
  std::vector<double> times;
  std::string detail;
  for (Vertex n : {500, 1000, 2000}) {
    const Graph g = Generate(GenPattern::kDisjointConnected, {n, 3.0 / n}, 9);
    const auto start = Clock::now();
    const std::string out = RenderReport(Analyze(g), OutputMode::kJson);
    const double t = Seconds(start);
    times.push_back(t);
    detail += "n=" + std::to_string(n) + " m=" + std::to_string(g.num_edges()) + " " + Fmt(t) +
              " s; ";
    if (out.empty()) o.Fail("empty report");
  }
  if (times[2] >= 10.0) o.Fail("n=2000 took " + Fmt(times[2]) + " s");
  for (size_t i = 1; i < times.size(); ++i) {
    const double ratio = times[i] / std::max(times[i - 1], 1e-3);
    detail += "x" + Fmt(ratio) + " ";
    if (ratio > 8.0) o.Fail("doubling ratio " + Fmt(ratio));
  }
  o.detail = detail;
  Report(9, "scaling", o);
}

struct Run {
  int exit_code = -1;
  std::string out;
};

Run RunCli(const std::string& cli, const std::string& args) {
  Run r;
  const std::string cmd = "\"" + cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string FileName(const std::string& name) {
  std::string out;
  for (char c : name) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

// 10. CLI byte stability, golden outputs and exit codes.
void CliContract(const std::string& cli, const std::filesystem::path& golden, bool write) {
  namespace fs = std::filesystem;
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("oddcore_acceptance_" + std::to_string(getpid()));
  fs::create_directories(dir);
  int compared = 0;
  for (const NamedGraph& ng : NamedSuite()) {
    const fs::path input = dir / (FileName(ng.name) + ".txt");
    WriteFile(input, SerializeGraph(ng.graph, GraphFormat::kEdgeList));
    const Run a = RunCli(cli, "analyze \"" + input.string() + "\"");
    const Run b = RunCli(cli, "analyze \"" + input.string() + "\"");
    if (a.exit_code != 0 || b.exit_code != 0) o.Fail(ng.name + ": exit " + std::to_string(a.exit_code));
    if (a.out != b.out) o.Fail(ng.name + ": output differs between runs");
    const fs::path gold = golden / (FileName(ng.name) + ".json");
    if (write) WriteFile(gold, a.out);
    if (ReadFile(gold) != a.out) o.Fail(ng.name + ": differs from " + gold.string());
    ++compared;
  }

  const fs::path c5 = dir / "c5.txt";
  WriteFile(c5, "0 1\n1 2\n2 3\n3 4\n4 0\n");
  const Run ok = RunCli(cli, "analyze \"" + c5.string() + "\"");
  if (ok.exit_code != 0 || ok.out.find("\"alpha\":2") == std::string::npos ||
      ok.out.find("\"k_observed\":1") == std::string::npos) {
    o.Fail("C5: exit " + std::to_string(ok.exit_code));
  }
  const fs::path k4 = dir / "k4.txt";
  WriteFile(k4, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  const Run out_of_class = RunCli(cli, "analyze \"" + k4.string() + "\"");
  if (out_of_class.exit_code != 1 ||
      out_of_class.out.find("\"error\":\"out_of_class\"") == std::string::npos) {
    o.Fail("K4: exit " + std::to_string(out_of_class.exit_code) + " " + out_of_class.out);
  }
  const fs::path bad = dir / "bad.txt";
  WriteFile(bad, "0 1\n1 two\n");
  const Run malformed = RunCli(cli, "analyze \"" + bad.string() + "\"");
  if (malformed.exit_code != 2) o.Fail("malformed: exit " + std::to_string(malformed.exit_code));
  const fs::path bowtie = dir / "bowtie.txt";
  WriteFile(bowtie, "0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n");
  const Run good = RunCli(cli, "verify \"" + bowtie.string() + "\"");
  const Run corrupt = RunCli(cli, "verify --inject-core-fault \"" + bowtie.string() + "\"");
  if (good.exit_code != 0) o.Fail("verify bowtie: exit " + std::to_string(good.exit_code));
  if (corrupt.exit_code != 3) o.Fail("corrupted core: exit " + std::to_string(corrupt.exit_code));
  fs::remove_all(dir);
  o.detail = std::to_string(compared) + " golden outputs; exits 0/1/2/3 as specified";
  Report(10, "CLI contract", o);
}

}  // namespace
}  // namespace oddcore

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s CLI_PATH GOLDEN_DIR [--write-golden]\n", argv[0]);
    return 2;
  }
  const bool write = argc > 3 && std::string(argv[3]) == "--write-golden";
  using namespace oddcore;
  NamedSuiteExact();
  const std::vector<Instance> instances = RandomizedEquivalence();
  CriticalDifferenceIdentity();
  LarsonProperties(instances);
  MatchingIdentity();
  SumAndBounds(instances);
  KPrediction(instances);
  BlossomCorrectness();
  Scaling();
  CliContract(argv[1], argv[2], write);
  std::printf("%s: %d of 10 criteria failed\n", failed_criteria == 0 ? "PASS" : "FAIL",
              failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
