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

// Adjoint chains D_0, D_1 = D_0 + K_0, ... on Picard lattices, with
// minimalization between steps, and the level / keel / degree bounds read off
// the chain's end.

#include <adjkeel/picard.hpp>
#include <adjkeel/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace adjkeel {

enum class EndpointCase {
  ZeroClass,      // D_a = 0
  FiberMultiple,  // D_a = kP, P^2 = 0, PK = -2
  Third,          // 3 D_a + K = 0
  TwoThirds,      // 3 D_a + 2K = 0
  Half,           // 2 D_a + K = 0
  HalfFiber,      // 2 D_a + K = kP
};

const char* endpoint_case_name(EndpointCase e) noexcept;

// Minimal surfaces a chain can end on.
enum class EndpointSurface {
  Plane,                // K^2 = 9
  Quadric,              // K^2 = 8, K divisible by 2
  DelPezzo5,            // rank 1, K^2 = 5
  DelPezzo6,            // rank 1, K^2 = 6
  RuledHirzebruch,      // conic bundle, K^2 = 8
  ConicQuadricDeg2,     // conic bundle, K^2 = 6
  ConicPlaneDeg4,       // conic bundle, K^2 = 5
};

const char* endpoint_surface_name(EndpointSurface e) noexcept;

struct ChainStep {
  // D_i on its minimal model.
  DivisorClass divisor;
  // Contractions from the previous step's surface (or the input surface).
  std::vector<Contraction> contractions;
};

struct InvariantCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct AdjointChainResult {
  std::vector<ChainStep> steps;
  int a = 0;
  EndpointCase endpoint = EndpointCase::ZeroClass;
  Rational level;
  Rational keel;
  // FiberMultiple / HalfFiber: the multiple of the primitive fiber class.
  std::int64_t fiber_multiple = 0;
  std::optional<DivisorClass> fiber;
  std::vector<InvariantCheck> checks;

  const DivisorClass& terminal() const { return steps.back().divisor; }
  bool all_passed() const;
};

// Throws NotNef, NotBig, NotEffective on bad input, NonTerminating when the
// chain exceeds D^2 + 8 steps, UnknownEndpoint when the end matches no case.
AdjointChainResult adjoint_chain(const DivisorClass& d, TieBreak tie = TieBreak::Lexicographic);

struct LevelKeel {
  Rational level;
  Rational keel;
};

LevelKeel level_keel_divisor(const DivisorClass& d);

// `terminal` lives on the chain's last surface; `fiber` is the primitive P for
// the fiber cases. Throws UnknownEndpoint.
EndpointSurface classify_endpoint(const DivisorClass& terminal, EndpointCase endpoint,
                                  const std::optional<DivisorClass>& fiber);

struct PdegBounds {
  Rational level;
  Rational keel;
  Rational lower;
  BigInt lower_int;
  Rational upper;
  std::optional<std::int64_t> constructive_upper;
  EndpointSurface endpoint_surface = EndpointSurface::Plane;
  // Parametrizing class on the end surface of the (scaled) chain.
  std::optional<DivisorClass> parametrizing_class;
  // 1, 2 or 3: the multiple of D whose chain ends at an integral level.
  int scale = 1;
  std::vector<InvariantCheck> checks;

  bool all_passed() const;
};

PdegBounds pdeg_bounds(const DivisorClass& d);

struct MultiplicityClass {
  std::int64_t multiplicity;
  std::int64_t count;
};

struct ExampleHighReport {
  int n = 0;
  Rational level;
  Rational keel;
  Rational lower;
  Rational upper;
  std::int64_t param_degree = 0;
  bool sandwich = false;
  // Base points of the degree n^2+1 parametrizing system.
  std::vector<MultiplicityClass> profile;
  // p/q is feasible exactly when 2p <= feasibility_slope * q.
  std::int64_t feasibility_slope = 0;
  std::vector<InvariantCheck> checks;

  bool all_passed() const;
};

// n odd, n >= 5; otherwise BadN.
ExampleHighReport example_high_report(int n);

}  // namespace adjkeel
