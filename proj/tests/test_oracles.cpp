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


#include <adjkeel/oracles.hpp>

#include <doctest.h>

using namespace adjkeel;

namespace {

LatticePolygon poly(std::vector<IntPoint> pts) { return LatticePolygon::normalize(pts); }

}  // namespace

TEST_CASE("fatpoint_dim") {
  CHECK(fatpoint_dim(FatPointProblem::general(1, {1}, kDefaultSeed)) == 1);
  CHECK(fatpoint_dim(FatPointProblem::general(2, {1, 1, 1, 1, 1}, kDefaultSeed)) == 0);
  CHECK(fatpoint_dim(FatPointProblem::general(1, {1, 1, 1}, kDefaultSeed)) == -1);
  CHECK(fatpoint_dim(FatPointProblem::general(3, {}, kDefaultSeed)) == 9);
  CHECK(fatpoint_dim(FatPointProblem::general(3, {2}, kDefaultSeed)) == 6);
  CHECK(fatpoint_dim(FatPointProblem::general(-1, {}, kDefaultSeed)) == -1);
  // Superabundant: the double line through two double points.
  CHECK(fatpoint_dim(FatPointProblem::general(2, {2, 2}, kDefaultSeed)) == 0);
  CHECK(fatpoint_virtual_dim(2, {2, 2}) == -1);
}

TEST_CASE("general points are distinct and reproducible") {
  const auto a = FatPointProblem::general(4, {1, 2, 3, 1, 1, 2}, 7);
  const auto b = FatPointProblem::general(4, {1, 2, 3, 1, 1, 2}, 7);
  CHECK(a.points == b.points);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    for (std::size_t j = i + 1; j < a.points.size(); ++j) CHECK_FALSE(a.points[i] == a.points[j]);
  }
}

TEST_CASE("fatpoint_dim is monotone and seed independent") {
  for (int d = 0; d <= 6; ++d) {
    for (int m1 = 0; m1 <= 3; ++m1) {
      for (int m2 = 0; m2 <= 3; ++m2) {
        const int base = fatpoint_dim(FatPointProblem::general(d, {m1, m2, 1, 1}, 1));
        CHECK(fatpoint_dim(FatPointProblem::general(d, {m1 + 1, m2, 1, 1}, 1)) <= base);
        CHECK(fatpoint_dim(FatPointProblem::general(d, {m1, m2, 1, 1}, 99)) == base);
      }
    }
  }
}

TEST_CASE("effectivity_oracle") {
  CHECK(effectivity_oracle(DivisorClass(SurfaceModel::plane_blowup(2), {1, 1, 1})));
  CHECK(effectivity_oracle(DivisorClass(SurfaceModel::plane_blowup(5), {2, 1, 1, 1, 1, 1})));
  CHECK_FALSE(effectivity_oracle(DivisorClass(SurfaceModel::plane_blowup(3), {1, 1, 1, 1})));
  CHECK(effectivity_oracle(DivisorClass(SurfaceModel::plane_blowup(2), {0, -1, 0})));
  CHECK_FALSE(effectivity_oracle(DivisorClass(SurfaceModel::plane_blowup(1), {-1, 0})));
}

TEST_CASE("polygon_level_oracle") {
  CHECK(polygon_level_oracle(poly({{0, 0}, {6, 0}, {0, 6}}), 12) == 2);
  CHECK(polygon_level_oracle(poly({{0, 0}, {5, 0}, {5, 3}, {0, 3}}), 12) == make_rational(3, 2));
  CHECK(polygon_level_oracle(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 12) == make_rational(1, 2));
  CHECK(polygon_keel_oracle(poly({{0, 0}, {5, 0}, {5, 3}, {0, 3}}), 4) == 2);
}

TEST_CASE("divisor_level_oracle") {
  CHECK(divisor_level_oracle(DivisorClass(SurfaceModel::plane_blowup(0), {4}), 6) == make_rational(4, 3));
  CHECK(divisor_level_oracle(DivisorClass(SurfaceModel::quadric(), {3, 7}), 6) == make_rational(3, 2));
}
