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

#include "oddcore/report.h"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace oddcore {
namespace {

using Json = nlohmann::ordered_json;

Json SetJson(const VertexSet& set) { return Json(set.ids()); }

Json ProfileJson(const OddCycleProfile& p) {
  Json cycles = Json::array();
  for (const Cycle& c : p.witnesses) cycles.push_back(c.vertices);
  Json out;
  out["kind"] = std::string(OddCycleKindName(p.kind));
  out["cycles"] = std::move(cycles);
  out["intersection"] = SetJson(p.intersection);
  out["cut_vertex"] = p.cut_vertex ? Json(*p.cut_vertex) : Json(nullptr);
  return out;
}

std::string Join(const VertexSet& set) {
  std::string out = "{";
  for (size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(set[i]);
  }
  return out + "}";
}

std::string RenderText(const CoreCoronaReport& r) {
  std::ostringstream os;
  os << "n " << r.n << "  m " << r.m << "\n";
  os << "alpha " << r.alpha << "  mu " << r.mu << "\n";
  os << "core   (" << r.core.size() << ") " << Join(r.core) << "\n";
  os << "corona (" << r.corona.size() << ") " << Join(r.corona) << "\n";
  os << "k observed " << r.k_observed << ", predicted " << r.k_predicted.k;
  if (r.k_predicted.unresolved) os << " (unresolved)";
  os << "\n";
  os << "partition " << (r.partition.holds ? "holds" : "fails");
  if (!r.partition.uncovered.empty()) os << ", uncovered " << Join(r.partition.uncovered);
  if (!r.partition.overlap.empty()) os << ", overlap " << Join(r.partition.overlap);
  os << "\n";
  os << "L  " << Join(r.decomposition.l) << "\n";
  os << "Lc " << Join(r.decomposition.lc) << "\n";
  os << "J  " << Join(r.decomposition.j) << "  d " << r.decomposition.critical_difference
     << "\n";
  os << "Lc odd cycles: " << OddCycleKindName(r.profile.kind);
  if (r.profile.cut_vertex) os << ", cut vertex " << *r.profile.cut_vertex;
  os << "\n";
  for (const Cycle& c : r.profile.witnesses) {
    os << "  cycle";
    for (Vertex v : c.vertices) os << ' ' << v;
    os << "\n";
  }
  if (!r.profile.witnesses.empty()) {
    os << "  on every odd cycle: " << Join(r.profile.intersection) << "\n";
  }
  return os.str();
}

}  // namespace

OutputMode ParseOutputMode(std::string_view name) {
  if (name == "json") return OutputMode::kJson;
  if (name == "text") return OutputMode::kText;
  throw std::invalid_argument("unknown output mode '" + std::string(name) + "'");
}

std::string RenderReport(const CoreCoronaReport& r, OutputMode mode) {
  if (mode == OutputMode::kText) return RenderText(r);
  Json out;
  out["n"] = r.n;
  out["m"] = r.m;
  out["alpha"] = r.alpha;
  out["mu"] = r.mu;
  out["core"] = SetJson(r.core);
  out["corona"] = SetJson(r.corona);
  out["k_observed"] = r.k_observed;
  out["k_predicted"] = r.k_predicted.k;
  out["k_unresolved"] = r.k_predicted.unresolved;
  out["partition_holds"] = r.partition.holds;
  out["L"] = SetJson(r.decomposition.l);
  out["Lc"] = SetJson(r.decomposition.lc);
  out["J"] = SetJson(r.decomposition.j);
  out["d"] = r.decomposition.critical_difference;
  out["profile"] = ProfileJson(r.profile);
  return out.dump() + "\n";
}

std::string RenderError(std::string_view kind, std::string_view message) {
  Json out;
  out["error"] = std::string(kind);
  out["message"] = std::string(message);
  return out.dump() + "\n";
}

}  // namespace oddcore
