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

// oddcore command-line tool.
//
//   oddcore analyze FILE  [--format F] [--out json|text] [--promise-in-class]
//   oddcore verify FILE   [--format F] [--out json|text] [--oracle-limit N]
//   oddcore gen           --pattern P [--n N] [--p P] [--seed S] [--format F]
//   oddcore selftest      [--out json|text]
//
// Exit codes: 0 success, 1 out-of-class input, 2 unreadable or malformed
// input (or bad arguments), 3 oracle mismatch or internal check failure.

#include <cstdio>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "oddcore/oddcore.h"

namespace {

const std::map<std::string, oddcore_format> kFormats = {
    {"edgelist", ODDCORE_FORMAT_EDGELIST},
    {"dimacs", ODDCORE_FORMAT_DIMACS},
    {"json", ODDCORE_FORMAT_JSON},
};

const std::map<std::string, oddcore_output> kOutputs = {
    {"json", ODDCORE_OUTPUT_JSON},
    {"text", ODDCORE_OUTPUT_TEXT},
};

int ExitCode(oddcore_status status) {
  switch (status) {
    case ODDCORE_OK:
      return 0;
    case ODDCORE_OUT_OF_CLASS:
      return 1;
    case ODDCORE_PARSE_ERROR:
    case ODDCORE_INVALID_ARGUMENT:
    case ODDCORE_TOO_LARGE:
    case ODDCORE_IO_ERROR:
      return 2;
    case ODDCORE_MISMATCH:
    case ODDCORE_INTERNAL:
      return 3;
  }
  return 3;
}

std::string JsonEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Error payload on stdout, one diagnostic line on stderr.
int ReportFailure(oddcore_status status) {
  const std::string message = oddcore_last_error();
  std::printf("{\"error\":\"%s\",\"message\":\"%s\"}\n", oddcore_status_name(status),
              JsonEscape(message).c_str());
  std::fprintf(stderr, "oddcore: %s: %s\n", oddcore_status_name(status),
               message.c_str());
  return ExitCode(status);
}

// Prints `text` (if any) and frees it. Verify prints its comparison even on
// a mismatch; every other failure prints only the error payload.
int Finish(oddcore_status status, char* text, bool print_on_mismatch = false) {
  if (text != nullptr && (status == ODDCORE_OK ||
                          (print_on_mismatch && status == ODDCORE_MISMATCH))) {
    std::fputs(text, stdout);
  }
  oddcore_string_free(text);
  if (status == ODDCORE_OK) return 0;
  if (status == ODDCORE_MISMATCH) {
    std::fprintf(stderr, "oddcore: mismatch: %s\n", oddcore_last_error());
    return ExitCode(status);
  }
  return ReportFailure(status);
}

struct Options {
  std::string input;
  oddcore_format format = ODDCORE_FORMAT_EDGELIST;
  oddcore_output output = ODDCORE_OUTPUT_JSON;
  bool promise_in_class = false;
  int oracle_limit = 20;
  bool corrupt_core = false;
  std::string pattern;
  int n = 10;
  double p = 0.1;
  uint64_t seed = 1;
};

int RunAnalyze(const Options& o) {
  oddcore_graph* g = nullptr;
  oddcore_status s = oddcore_graph_read_file(o.input.c_str(), o.format, &g);
  if (s != ODDCORE_OK) return ReportFailure(s);
  char* text = nullptr;
  s = oddcore_analyze(g, o.promise_in_class ? 1 : 0, o.output, &text);
  oddcore_graph_free(g);
  return Finish(s, text);
}

int RunVerify(const Options& o) {
  oddcore_graph* g = nullptr;
  oddcore_status s = oddcore_graph_read_file(o.input.c_str(), o.format, &g);
  if (s != ODDCORE_OK) return ReportFailure(s);
  char* text = nullptr;
  const uint32_t flags = o.corrupt_core ? ODDCORE_VERIFY_CORRUPT_CORE : 0u;
  s = oddcore_verify(g, o.oracle_limit, flags, o.output, &text);
  oddcore_graph_free(g);
  return Finish(s, text, true);
}

int RunGenerate(const Options& o) {
  oddcore_graph* g = nullptr;
  oddcore_status s = oddcore_generate(o.pattern.c_str(), o.n, o.p, o.seed, &g);
  if (s != ODDCORE_OK) return ReportFailure(s);
  char* text = nullptr;
  s = oddcore_graph_serialize(g, o.format, &text);
  oddcore_graph_free(g);
  return Finish(s, text);
}

int RunSelftest(const Options& o) {
  char* text = nullptr;
  const oddcore_status s = oddcore_selftest(o.output, &text);
  return Finish(s, text, true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independence number, core and corona of graphs with at most two odd cycles"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(oddcore_version()));
  Options o;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Graph format: edgelist, dimacs, json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.output, "Report format: json or text")
        ->transform(CLI::CheckedTransformer(kOutputs, CLI::ignore_case));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Compute alpha, core, corona and the k report");
  analyze->add_option("input", o.input, "Graph file")->required();
  add_format(analyze);
  add_output(analyze);
  analyze->add_flag("--promise-in-class", o.promise_in_class,
                    "Skip the odd-cycle check (results are unreliable if the promise is false)");

  CLI::App* verify = app.add_subcommand("verify", "Compare against the exhaustive oracle");
  verify->add_option("input", o.input, "Graph file")->required();
  add_format(verify);
  add_output(verify);
  verify->add_option("--oracle-limit", o.oracle_limit, "Largest n handed to the oracle")
      ->check(CLI::Range(0, 25));
  verify->add_flag("--inject-core-fault", o.corrupt_core)->group("");

  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--pattern", o.pattern,
                  "bipartite, ke, one-odd, share-path, share-vertex, disjoint-connected, "
                  "disjoint-disconnected, random-filtered")
      ->required();
  gen->add_option("--n", o.n, "Vertex count");
  gen->add_option("--p", o.p, "Extra-edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", o.seed, "Random seed");
  add_format(gen);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the fixed suite through verify");
  add_output(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*analyze) return RunAnalyze(o);
  if (*verify) return RunVerify(o);
  if (*gen) return RunGenerate(o);
  return RunSelftest(o);
}
