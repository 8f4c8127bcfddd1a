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

// Brute-force validators, independent of the LP and the adjoint chain:
// lattice enumeration for polygons and interpolation matrices for plane
// curves with assigned multiplicities.

#include <adjkeel/picard.hpp>
#include <adjkeel/polygon.hpp>
#include <adjkeel/rational.hpp>

#include <cstdint>
#include <vector>

namespace adjkeel {

inline constexpr std::uint64_t kDefaultSeed = 20260417;

struct FatPointProblem {
  int degree = 0;
  std::vector<RatPoint> points;
  std::vector<int> multiplicities;

  // Pseudo-random points, pairwise distinct, reproducible from `seed`.
  static FatPointProblem general(int degree, std::vector<int> multiplicities, std::uint64_t seed);
};

// Projective dimension of degree-d forms with the given vanishing orders;
// -1 for the empty system.
int fatpoint_dim(const FatPointProblem& problem);

// binom(d+2, 2) - 1 - sum binom(m+1, 2).
int fatpoint_virtual_dim(int degree, const std::vector<int>& multiplicities);

// max over q <= max_q of (max p >= 0 with offset_scale(polygon, q, p)
// nonempty) / q.
Rational polygon_level_oracle(const LatticePolygon& polygon, int max_q);

// Moving-component count of the figure at the level, normalized: max over
// k <= max_k of (lattice points - 1) / q_k on the face at q_k = k * den(level).
Rational polygon_keel_oracle(const LatticePolygon& polygon, int max_k);

// Requires plane_blowup(r) with r <= 5. Negative multiplicities are
// dropped (their exceptional curves are fixed parts).
bool effectivity_oracle(const DivisorClass& d, std::uint64_t seed = kDefaultSeed);

// max over q <= max_q of (max p with qD + pK effective) / q, by is_effective.
Rational divisor_level_oracle(const DivisorClass& d, int max_q);

}  // namespace adjkeel
