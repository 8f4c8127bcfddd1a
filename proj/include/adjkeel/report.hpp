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


#pragma once

// JSON input parsing and report rendering shared by the C API and the CLI.

#include <adjkeel/adjoint.hpp>
#include <adjkeel/picard.hpp>
#include <adjkeel/polygon.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace adjkeel {

enum class Format { Json, Text, Svg };

// "json" | "text" | "svg"; InvalidInput otherwise.
Format parse_format(std::string_view name);

// {"vertices": [[x, y], ...]}. Errors name the offending field.
LatticePolygon parse_polygon(std::string_view json);

// {"model": "plane_blowup", "r": 6, "D": [...]}, {"model": "hirzebruch",
// "n": 2, "D": [...]}, "quadric", "quadric_deg2_blowup", "plane_deg4_blowup",
// or a custom lattice {"gram", "K", "effective_generators", "contractibles",
// "D"}.
DivisorClass parse_surface(std::string_view json);

struct Report {
  std::string body;
  // False when an oracle comparison or invariant check failed.
  bool checks_passed = true;
};

// command: level | keel | chain | bounds.
Report polygon_command(const LatticePolygon& polygon, std::string_view command, Format format,
                       bool oracle, std::uint64_t seed);
Report surface_command(const DivisorClass& d, std::string_view command, Format format, bool oracle,
                       std::uint64_t seed);
Report example_high_command(int n, Format format);

// Every built-in example and invariant suite.
std::vector<InvariantCheck> self_check(std::uint64_t seed);
Report self_check_command(std::uint64_t seed, Format format);

// 32 px per lattice unit, lattice points as dots, chain members nested by
// stroke shade.
std::string render_chain_svg(const LatticePolygon& polygon, const PolygonChain& chain);

}  // namespace adjkeel
