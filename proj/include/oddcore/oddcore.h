/* Copyright 2026 The oddcore Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of liboddcore.
 *
 * Graphs are opaque handles. Every call returns an oddcore_status; on failure
 * oddcore_last_error() describes the problem (per thread, valid until the
 * next call on that thread). Strings returned through char** are allocated by
 * the library and released with oddcore_string_free().
 */

#ifndef ODDCORE_ODDCORE_H_
#define ODDCORE_ODDCORE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ODDCORE_BUILDING_LIBRARY)
#define ODDCORE_API __declspec(dllexport)
#else
#define ODDCORE_API __declspec(dllimport)
#endif
#else
#define ODDCORE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct oddcore_graph oddcore_graph;

typedef enum oddcore_status {
  ODDCORE_OK = 0,
  ODDCORE_OUT_OF_CLASS = 1,     /* more than two odd cycles, no promise */
  ODDCORE_PARSE_ERROR = 2,      /* malformed graph text */
  ODDCORE_MISMATCH = 3,         /* verify or selftest found a disagreement */
  ODDCORE_INVALID_ARGUMENT = 4, /* bad parameter, null pointer, bad graph */
  ODDCORE_TOO_LARGE = 5,        /* graph exceeds the oracle limit */
  ODDCORE_IO_ERROR = 6,         /* file could not be read */
  ODDCORE_INTERNAL = 7          /* internal consistency check failed */
} oddcore_status;

typedef enum oddcore_format {
  ODDCORE_FORMAT_EDGELIST = 0,
  ODDCORE_FORMAT_DIMACS = 1,
  ODDCORE_FORMAT_JSON = 2
} oddcore_format;

typedef enum oddcore_output {
  ODDCORE_OUTPUT_JSON = 0,
  ODDCORE_OUTPUT_TEXT = 1
} oddcore_output;

/* oddcore_verify flag: flip one vertex of the computed core before comparing
 * (exercises the mismatch path). */
#define ODDCORE_VERIFY_CORRUPT_CORE 0x1u

ODDCORE_API const char* oddcore_version(void);
ODDCORE_API const char* oddcore_status_name(oddcore_status status);
ODDCORE_API const char* oddcore_last_error(void);
ODDCORE_API void oddcore_string_free(char* s);

/* `edges` holds 2 * num_edges vertex ids. */
ODDCORE_API oddcore_status oddcore_graph_create(int32_t n, const int32_t* edges,
                                                int64_t num_edges,
                                                oddcore_graph** out);
ODDCORE_API oddcore_status oddcore_graph_parse(const char* text, size_t length,
                                               oddcore_format format,
                                               oddcore_graph** out);
ODDCORE_API oddcore_status oddcore_graph_read_file(const char* path,
                                                   oddcore_format format,
                                                   oddcore_graph** out);
ODDCORE_API void oddcore_graph_free(oddcore_graph* graph);
ODDCORE_API int32_t oddcore_graph_num_vertices(const oddcore_graph* graph);
ODDCORE_API int64_t oddcore_graph_num_edges(const oddcore_graph* graph);
ODDCORE_API oddcore_status oddcore_graph_serialize(const oddcore_graph* graph,
                                                   oddcore_format format,
                                                   char** out);

ODDCORE_API oddcore_status oddcore_independence_number(const oddcore_graph* graph,
                                                       int promise_in_class,
                                                       int32_t* alpha);

/* Full report (alpha, mu, core, corona, k, partition, L, Lc, J, d, profile). */
ODDCORE_API oddcore_status oddcore_analyze(const oddcore_graph* graph,
                                           int promise_in_class,
                                           oddcore_output output, char** out);

/* Compares against the exhaustive oracle. Returns ODDCORE_MISMATCH, with the
 * comparison in *out, when any hard check fails. */
ODDCORE_API oddcore_status oddcore_verify(const oddcore_graph* graph,
                                          int32_t oracle_limit, uint32_t flags,
                                          oddcore_output output, char** out);

/* pattern: bipartite, ke, one-odd, share-path, share-vertex,
 * disjoint-connected, disjoint-disconnected, random-filtered. */
ODDCORE_API oddcore_status oddcore_generate(const char* pattern, int32_t n,
                                            double p, uint64_t seed,
                                            oddcore_graph** out);

/* Runs the named suite; ODDCORE_MISMATCH if any row fails. */
ODDCORE_API oddcore_status oddcore_selftest(oddcore_output output, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ODDCORE_ODDCORE_H_ */
