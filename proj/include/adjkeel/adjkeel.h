//
// Copyright 2026 The adjkeel Authors
//
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
//


#ifndef ADJKEEL_ADJKEEL_H_
#define ADJKEEL_ADJKEEL_H_

/* C interface to the adjkeel library. All strings returned through `char**`
 * out-parameters are heap allocated and must be released with
 * adjkeel_string_free. Handles are immutable once created and may be shared
 * between threads. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ADJKEEL_BUILDING)
#    define ADJKEEL_API __declspec(dllexport)
#  else
#    define ADJKEEL_API __declspec(dllimport)
#  endif
#else
#  define ADJKEEL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adjkeel_status {
  ADJKEEL_OK = 0,
  ADJKEEL_INVALID_INPUT = 1,
  ADJKEEL_DEGENERATE_INPUT = 2,
  ADJKEEL_UNBOUNDED = 3,
  ADJKEEL_NON_LATTICE_VERTICES = 4,
  ADJKEEL_MODEL_MISMATCH = 5,
  ADJKEEL_UNSUPPORTED_RANK = 6,
  ADJKEEL_UNDECIDED = 7,
  ADJKEEL_NOT_CONTRACTIBLE = 8,
  ADJKEEL_NOT_NEF = 9,
  ADJKEEL_NOT_BIG = 10,
  ADJKEEL_NOT_EFFECTIVE = 11,
  ADJKEEL_NON_TERMINATING = 12,
  ADJKEEL_UNKNOWN_ENDPOINT = 13,
  ADJKEEL_BAD_N = 14,
  ADJKEEL_INVARIANT_VIOLATION = 15,
  /* The report was produced but an oracle or invariant check failed. */
  ADJKEEL_CHECK_FAILED = 100,
  ADJKEEL_INTERNAL_ERROR = 101
} adjkeel_status;

typedef struct adjkeel_polygon adjkeel_polygon;
typedef struct adjkeel_surface adjkeel_surface;

ADJKEEL_API const char* adjkeel_version(void);
ADJKEEL_API const char* adjkeel_status_name(adjkeel_status status);

/* Message of the last failure on the calling thread ("" if none). */
ADJKEEL_API const char* adjkeel_last_error(void);

ADJKEEL_API void adjkeel_string_free(char* s);

/* {"vertices": [[x, y], ...]} */
ADJKEEL_API adjkeel_status adjkeel_polygon_from_json(const char* json, adjkeel_polygon** out);
/* xy holds n interleaved coordinate pairs. */
ADJKEEL_API adjkeel_status adjkeel_polygon_from_points(const int64_t* xy, size_t n, adjkeel_polygon** out);
ADJKEEL_API void adjkeel_polygon_free(adjkeel_polygon* p);
ADJKEEL_API adjkeel_status adjkeel_polygon_level_keel(const adjkeel_polygon* p, char** level, char** keel);

/* Surface model plus divisor class, e.g. {"model": "quadric", "D": [2, 5]}. */
ADJKEEL_API adjkeel_status adjkeel_surface_from_json(const char* json, adjkeel_surface** out);
ADJKEEL_API void adjkeel_surface_free(adjkeel_surface* s);
ADJKEEL_API adjkeel_status adjkeel_surface_level_keel(const adjkeel_surface* s, char** level, char** keel);

/* command: "level" | "keel" | "chain" | "bounds"; format: "json" | "text" |
 * "svg" (svg for polygons only). With oracle != 0 the brute-force validators
 * run as well and ADJKEEL_CHECK_FAILED is returned, together with the
 * report, when one of them disagrees. */
ADJKEEL_API adjkeel_status adjkeel_polygon_report(const adjkeel_polygon* p, const char* command,
                                                  const char* format, int oracle, uint64_t seed, char** out);
ADJKEEL_API adjkeel_status adjkeel_surface_report(const adjkeel_surface* s, const char* command,
                                                  const char* format, int oracle, uint64_t seed, char** out);

ADJKEEL_API adjkeel_status adjkeel_example_high(int n, const char* format, char** out);

/* Runs every built-in example and invariant suite. */
ADJKEEL_API adjkeel_status adjkeel_self_check(uint64_t seed, const char* format, char** out);

ADJKEEL_API uint64_t adjkeel_default_seed(void);

#ifdef __cplusplus
}
#endif

#endif  /* ADJKEEL_ADJKEEL_H_ */
