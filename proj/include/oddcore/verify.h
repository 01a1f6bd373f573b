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

// Cross-checks of the polynomial algorithms against the exhaustive oracle,
// and the fixed self-test suite.

#ifndef ODDCORE_VERIFY_H_
#define ODDCORE_VERIFY_H_

#include <string>
#include <vector>

#include "oddcore/core_corona.h"
#include "oddcore/graph.h"
#include "oddcore/report.h"

namespace oddcore {

struct Comparison {
  std::string field;
  std::string computed;
  std::string oracle;
  bool match = false;
  // A mismatch of a non-fatal row is reported but does not fail the run.
  bool fatal = true;
};

enum class CheckStatus { kPass, kFail, kNotApplicable };

struct TheoremCheck {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::kNotApplicable;
  std::string detail;
};

struct VerifyOptions {
  Vertex oracle_limit = 20;
  // Test hook: flip one vertex of the computed core before comparing.
  bool corrupt_core = false;
};

struct VerifyResult {
  Vertex n = 0;
  int64_t m = 0;
  CoreCoronaReport report;
  std::vector<Comparison> comparisons;
  std::vector<TheoremCheck> theorems;

  bool ok() const;
};

// Throws OracleLimitError when n exceeds the limit and OutOfClassError when
// both the census and the oracle place g out of class.
VerifyResult Verify(const Graph& g, const VerifyOptions& options = {});

// The structural statements the algorithms rely on, each evaluated on g with
// oracle values. Used by Verify; exposed for the test suites.
std::vector<TheoremCheck> TheoremChecks(const Graph& g,
                                        const CoreCoronaReport& report,
                                        Vertex oracle_limit);

std::string RenderVerify(const VerifyResult& result, OutputMode mode);

struct NamedGraph {
  std::string name;
  Graph graph;
};

// C5, K3, P3, P4, C4, diamond, K1,3, bowtie, theta(1,2,3), two disjoint
// triangles, bridged triangles, triangles joined by a 2-path, C5 + K2, and
// the empty graph.
std::vector<NamedGraph> NamedSuite();

struct SelftestRow {
  std::string name;
  VerifyResult result;
  double seconds = 0;
};

struct SelftestResult {
  std::vector<SelftestRow> rows;
  bool ok() const;
};

SelftestResult RunSelftest();

std::string RenderSelftest(const SelftestResult& result, OutputMode mode);

}  // namespace oddcore

#endif  // ODDCORE_VERIFY_H_
