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

#include "oddcore/oddcore.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oddcore/core_corona.h"
#include "oddcore/graph.h"
#include "oddcore/graph_io.h"
#include "oddcore/oracle.h"
#include "oddcore/report.h"
#include "oddcore/verify.h"

struct oddcore_graph {
  oddcore::Graph graph;
};

namespace {

thread_local std::string last_error;

oddcore_status Fail(oddcore_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

oddcore::GraphFormat ToFormat(oddcore_format f) {
  switch (f) {
    case ODDCORE_FORMAT_EDGELIST:
      return oddcore::GraphFormat::kEdgeList;
    case ODDCORE_FORMAT_DIMACS:
      return oddcore::GraphFormat::kDimacs;
    case ODDCORE_FORMAT_JSON:
      return oddcore::GraphFormat::kJson;
  }
  throw std::invalid_argument("unknown graph format");
}

oddcore::OutputMode ToMode(oddcore_output o) {
  if (o == ODDCORE_OUTPUT_JSON) return oddcore::OutputMode::kJson;
  if (o == ODDCORE_OUTPUT_TEXT) return oddcore::OutputMode::kText;
  throw std::invalid_argument("unknown output mode");
}

// Runs `body`, translating exceptions into status codes. Order matters:
// derived classes before their bases.
template <typename Body>
oddcore_status Guard(Body&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const oddcore::OutOfClassError& e) {
    return Fail(ODDCORE_OUT_OF_CLASS, e.what());
  } catch (const oddcore::ParseError& e) {
    return Fail(ODDCORE_PARSE_ERROR, e.what());
  } catch (const oddcore::OracleLimitError& e) {
    return Fail(ODDCORE_TOO_LARGE, e.what());
  } catch (const std::invalid_argument& e) {  // includes GraphError
    return Fail(ODDCORE_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(ODDCORE_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(ODDCORE_INTERNAL, e.what());
  } catch (...) {
    return Fail(ODDCORE_INTERNAL, "unknown exception");
  }
}

oddcore_status Emit(const std::string& text, char** out) {
  *out = Copy(text);
  if (*out == nullptr) return Fail(ODDCORE_INTERNAL, "out of memory");
  return ODDCORE_OK;
}

}  // namespace

extern "C" {

const char* oddcore_version(void) { return "1.0.0"; }

const char* oddcore_status_name(oddcore_status status) {
  switch (status) {
    case ODDCORE_OK:
      return "ok";
    case ODDCORE_OUT_OF_CLASS:
      return "out_of_class";
    case ODDCORE_PARSE_ERROR:
      return "parse_error";
    case ODDCORE_MISMATCH:
      return "mismatch";
    case ODDCORE_INVALID_ARGUMENT:
      return "invalid_argument";
    case ODDCORE_TOO_LARGE:
      return "too_large";
    case ODDCORE_IO_ERROR:
      return "io_error";
    case ODDCORE_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* oddcore_last_error(void) { return last_error.c_str(); }

void oddcore_string_free(char* s) { std::free(s); }

oddcore_status oddcore_graph_create(int32_t n, const int32_t* edges,
                                    int64_t num_edges, oddcore_graph** out) {
  return Guard([&] {
    if (out == nullptr) return Fail(ODDCORE_INVALID_ARGUMENT, "out is null");
    *out = nullptr;
    if (n < 0 || num_edges < 0 || (num_edges > 0 && edges == nullptr)) {
      return Fail(ODDCORE_INVALID_ARGUMENT, "bad vertex or edge count");
    }
    std::vector<oddcore::Edge> list;
    list.reserve(static_cast<size_t>(num_edges));
    for (int64_t i = 0; i < num_edges; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new oddcore_graph{oddcore::Graph::Build(n, list)};
    return ODDCORE_OK;
  });
}

oddcore_status oddcore_graph_parse(const char* text, size_t length,
                                   oddcore_format format, oddcore_graph** out) {
  return Guard([&] {
    if (out == nullptr || (text == nullptr && length > 0)) {
      return Fail(ODDCORE_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    const std::string_view view(text == nullptr ? "" : text, length);
    *out = new oddcore_graph{oddcore::ParseGraph(view, ToFormat(format))};
    return ODDCORE_OK;
  });
}

oddcore_status oddcore_graph_read_file(const char* path, oddcore_format format,
                                       oddcore_graph** out) {
  return Guard([&] {
    if (out == nullptr || path == nullptr) {
      return Fail(ODDCORE_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    std::ifstream in(path, std::ios::binary);
    if (!in) return Fail(ODDCORE_IO_ERROR, std::string("cannot open ") + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    *out = new oddcore_graph{oddcore::ParseGraph(buffer.str(), ToFormat(format))};
    return ODDCORE_OK;
  });
}

void oddcore_graph_free(oddcore_graph* graph) { delete graph; }

int32_t oddcore_graph_num_vertices(const oddcore_graph* graph) {
  return graph == nullptr ? -1 : graph->graph.num_vertices();
}

int64_t oddcore_graph_num_edges(const oddcore_graph* graph) {
  return graph == nullptr ? -1 : graph->graph.num_edges();
}

oddcore_status oddcore_graph_serialize(const oddcore_graph* graph,
                                       oddcore_format format, char** out) {
  return Guard([&] {
    if (graph == nullptr || out == nullptr) {
      return Fail(ODDCORE_INVALID_ARGUMENT, "null argument");
    }
    return Emit(oddcore::SerializeGraph(graph->graph, ToFormat(format)), out);
  });
}

oddcore_status oddcore_independence_number(const oddcore_graph* graph,
                                           int promise_in_class, int32_t* alpha) {
  return Guard([&] {
    if (graph == nullptr || alpha == nullptr) {
      return Fail(ODDCORE_INVALID_ARGUMENT, "null argument");
    }
    *alpha = oddcore::IndependenceNumber(graph->graph, promise_in_class != 0);
    return ODDCORE_OK;
  });
}

oddcore_status oddcore_analyze(const oddcore_graph* graph, int promise_in_class,
                               oddcore_output output, char** out) {
  return Guard([&] {
    if (graph == nullptr || out == nullptr) {
      return Fail(ODDCORE_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    const oddcore::OutputMode mode = ToMode(output);
    const auto report = oddcore::Analyze(graph->graph, promise_in_class != 0);
    return Emit(oddcore::RenderReport(report, mode), out);
  });
}

oddcore_status oddcore_verify(const oddcore_graph* graph, int32_t oracle_limit,
                              uint32_t flags, oddcore_output output, char** out) {
  return Guard([&] {
    if (graph == nullptr || out == nullptr) {
      return Fail(ODDCORE_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    if (oracle_limit < 0 || oracle_limit > oddcore::kOracleHardCap) {
      return Fail(ODDCORE_INVALID_ARGUMENT,
                  "oracle limit must lie in [0, " +
                      std::to_string(oddcore::kOracleHardCap) + "]");
    }
    const oddcore::OutputMode mode = ToMode(output);
    oddcore::VerifyOptions options;
    options.oracle_limit = oracle_limit;
    options.corrupt_core = (flags & ODDCORE_VERIFY_CORRUPT_CORE) != 0;
    const oddcore::VerifyResult result = oddcore::Verify(graph->graph, options);
    const oddcore_status emitted = Emit(oddcore::RenderVerify(result, mode), out);
    if (emitted != ODDCORE_OK) return emitted;
    if (!result.ok()) return Fail(ODDCORE_MISMATCH, "oracle comparison failed");
    return ODDCORE_OK;
  });
}

oddcore_status oddcore_generate(const char* pattern, int32_t n, double p,
                                uint64_t seed, oddcore_graph** out) {
  return Guard([&] {
    if (pattern == nullptr || out == nullptr) {
      return Fail(ODDCORE_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    const oddcore::GenPattern parsed = oddcore::ParseGenPattern(pattern);
    *out = new oddcore_graph{oddcore::Generate(parsed, {n, p}, seed)};
    return ODDCORE_OK;
  });
}

oddcore_status oddcore_selftest(oddcore_output output, char** out) {
  return Guard([&] {
    if (out == nullptr) return Fail(ODDCORE_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    const oddcore::OutputMode mode = ToMode(output);
    const oddcore::SelftestResult result = oddcore::RunSelftest();
    const oddcore_status emitted = Emit(oddcore::RenderSelftest(result, mode), out);
    if (emitted != ODDCORE_OK) return emitted;
    if (!result.ok()) return Fail(ODDCORE_MISMATCH, "selftest failed");
    return ODDCORE_OK;
  });
}

}  // extern "C"
