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


#include <adjkeel/adjkeel.h>

#include <adjkeel/error.hpp>
#include <adjkeel/oracles.hpp>
#include <adjkeel/report.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct adjkeel_polygon {
  adjkeel::LatticePolygon value;
};

struct adjkeel_surface {
  adjkeel::DivisorClass value;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
adjkeel_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const adjkeel::Error& e) {
    last_error = e.what();
    return static_cast<adjkeel_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    last_error = e.what();
    return ADJKEEL_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown failure";
    return ADJKEEL_INTERNAL_ERROR;
  }
}

adjkeel_status null_argument(const char* name) {
  last_error = std::string(name) + ": null argument";
  return ADJKEEL_INVALID_INPUT;
}

adjkeel_status finish(const adjkeel::Report& r, char** out) {
  *out = dup(r.body);
  if (!r.checks_passed) {
    last_error = "one or more checks failed";
    return ADJKEEL_CHECK_FAILED;
  }
  return ADJKEEL_OK;
}

}  // namespace

extern "C" {

const char* adjkeel_version(void) { return "1.0.0"; }

const char* adjkeel_status_name(adjkeel_status status) {
  switch (status) {
    case ADJKEEL_OK: return "Ok";
    case ADJKEEL_CHECK_FAILED: return "CheckFailed";
    case ADJKEEL_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  const int code = static_cast<int>(status);
  if (code >= 1 && code <= 15) return adjkeel::error_code_name(static_cast<adjkeel::ErrorCode>(code));
  return "Unknown";
}

const char* adjkeel_last_error(void) { return last_error.c_str(); }

void adjkeel_string_free(char* s) { std::free(s); }

uint64_t adjkeel_default_seed(void) { return adjkeel::kDefaultSeed; }

adjkeel_status adjkeel_polygon_from_json(const char* json, adjkeel_polygon** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new adjkeel_polygon{adjkeel::parse_polygon(json)};
    return ADJKEEL_OK;
  });
}

adjkeel_status adjkeel_polygon_from_points(const int64_t* xy, size_t n, adjkeel_polygon** out) {
  if (!xy && n > 0) return null_argument("xy");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::vector<adjkeel::IntPoint> pts;
    for (size_t i = 0; i < n; ++i) pts.push_back({xy[2 * i], xy[2 * i + 1]});
    *out = new adjkeel_polygon{adjkeel::LatticePolygon::normalize(pts)};
    return ADJKEEL_OK;
  });
}

void adjkeel_polygon_free(adjkeel_polygon* p) { delete p; }

adjkeel_status adjkeel_polygon_level_keel(const adjkeel_polygon* p, char** level, char** keel) {
  if (!p) return null_argument("polygon");
  if (!level || !keel) return null_argument("out");
  return guarded([&] {
    const auto inv = adjkeel::level_keel(p->value);
    *level = dup(adjkeel::to_string(inv.level));
    *keel = dup(adjkeel::to_string(inv.keel));
    return ADJKEEL_OK;
  });
}

adjkeel_status adjkeel_surface_from_json(const char* json, adjkeel_surface** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new adjkeel_surface{adjkeel::parse_surface(json)};
    return ADJKEEL_OK;
  });
}

void adjkeel_surface_free(adjkeel_surface* s) { delete s; }

adjkeel_status adjkeel_surface_level_keel(const adjkeel_surface* s, char** level, char** keel) {
  if (!s) return null_argument("surface");
  if (!level || !keel) return null_argument("out");
  return guarded([&] {
    const auto lk = adjkeel::level_keel_divisor(s->value);
    *level = dup(adjkeel::to_string(lk.level));
    *keel = dup(adjkeel::to_string(lk.keel));
    return ADJKEEL_OK;
  });
}

adjkeel_status adjkeel_polygon_report(const adjkeel_polygon* p, const char* command, const char* format,
                                      int oracle, uint64_t seed, char** out) {
  if (!p) return null_argument("polygon");
  if (!command || !format) return null_argument("command");
  if (!out) return null_argument("out");
  return guarded([&] {
    return finish(adjkeel::polygon_command(p->value, command, adjkeel::parse_format(format), oracle != 0, seed), out);
  });
}

adjkeel_status adjkeel_surface_report(const adjkeel_surface* s, const char* command, const char* format,
                                      int oracle, uint64_t seed, char** out) {
  if (!s) return null_argument("surface");
  if (!command || !format) return null_argument("command");
  if (!out) return null_argument("out");
  return guarded([&] {
    return finish(adjkeel::surface_command(s->value, command, adjkeel::parse_format(format), oracle != 0, seed), out);
  });
}

adjkeel_status adjkeel_example_high(int n, const char* format, char** out) {
  if (!format) return null_argument("format");
  if (!out) return null_argument("out");
  return guarded([&] { return finish(adjkeel::example_high_command(n, adjkeel::parse_format(format)), out); });
}

adjkeel_status adjkeel_self_check(uint64_t seed, const char* format, char** out) {
  if (!format) return null_argument("format");
  if (!out) return null_argument("out");
  return guarded([&] { return finish(adjkeel::self_check_command(seed, adjkeel::parse_format(format)), out); });
}

}  // extern "C"
