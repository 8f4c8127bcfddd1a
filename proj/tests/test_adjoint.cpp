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


#include <adjkeel/adjoint.hpp>
#include <adjkeel/error.hpp>
#include <adjkeel/oracles.hpp>

#include <doctest.h>

#include <functional>

using namespace adjkeel;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvariantViolation;
}

const SurfacePtr& p2() {
  static const SurfacePtr s = SurfaceModel::plane_blowup(0);
  return s;
}

const SurfacePtr& quadric() {
  static const SurfacePtr s = SurfaceModel::quadric();
  return s;
}

}  // namespace

TEST_CASE("chain of 6L") {
  const auto r = adjoint_chain(DivisorClass(p2(), {6}));
  CHECK(r.a == 2);
  CHECK(r.terminal().is_zero());
  CHECK(r.endpoint == EndpointCase::ZeroClass);
  CHECK(r.level == 2);
  CHECK(r.keel == 0);
  CHECK(r.all_passed());
}

TEST_CASE("chain of 2F1 + 5F2 on the quadric") {
  const auto r = adjoint_chain(DivisorClass(quadric(), {2, 5}));
  CHECK(r.endpoint == EndpointCase::FiberMultiple);
  CHECK(r.a == 1);
  CHECK(r.terminal().coeffs() == IntVector{0, 3});
  CHECK(r.fiber_multiple == 3);
  REQUIRE(r.fiber);
  CHECK(r.fiber->coeffs() == IntVector{0, 1});
  CHECK(r.level == 1);
  CHECK(r.keel == 3);
  CHECK(r.all_passed());
}

TEST_CASE("chain of F1 + F2 ends in the Half case") {
  const auto r = adjoint_chain(DivisorClass(quadric(), {1, 1}));
  CHECK(r.a == 0);
  CHECK(r.endpoint == EndpointCase::Half);
  CHECK(r.level == q(1, 2));
  CHECK(r.keel == 0);
}

TEST_CASE("chain of -K on the cubic surface") {
  const auto r = adjoint_chain(DivisorClass(SurfaceModel::plane_blowup(6), {3, 1, 1, 1, 1, 1, 1}));
  CHECK(r.a == 1);
  CHECK(r.terminal().model().tag() == "plane_blowup(0)");
  CHECK(r.steps[1].contractions.size() == 6);
  CHECK(r.level == 1);
  CHECK(r.keel == 0);
  CHECK(r.all_passed());
}

TEST_CASE("endpoint cases of fractional level") {
  CHECK(adjoint_chain(DivisorClass(p2(), {4})).endpoint == EndpointCase::Third);
  CHECK(adjoint_chain(DivisorClass(p2(), {5})).endpoint == EndpointCase::TwoThirds);
  const auto r = adjoint_chain(DivisorClass(quadric(), {1, 2}));
  CHECK(r.endpoint == EndpointCase::HalfFiber);
  CHECK(r.fiber_multiple == 2);
  CHECK(r.keel == 1);
}

TEST_CASE("level_keel_divisor") {
  const auto a = level_keel_divisor(DivisorClass(quadric(), {1, 2}));
  CHECK(a.level == q(1, 2));
  CHECK(a.keel == 1);
  const auto b = level_keel_divisor(DivisorClass(p2(), {3}));
  CHECK(b.level == 1);
  CHECK(b.keel == 0);
  const DivisorClass d(SurfaceModel::hirzebruch(2), {2, 5});
  const auto c = level_keel_divisor(d);
  CHECK(c.level == divisor_level_oracle(d, 12));
  CHECK(c.level == 1);
  CHECK(c.keel == 1);
}

TEST_CASE("input validation") {
  CHECK(code_of([] { adjoint_chain(DivisorClass(SurfaceModel::plane_blowup(1), {0, -1})); }) == ErrorCode::NotNef);
  CHECK(code_of([] { adjoint_chain(DivisorClass(quadric(), {0, 3})); }) == ErrorCode::NotBig);
  CHECK(code_of([] { adjoint_chain(DivisorClass::zero(p2())); }) == ErrorCode::NotBig);
  CHECK(code_of([] { adjoint_chain(DivisorClass(SurfaceModel::plane_blowup(9), {3, 1, 1, 1, 1, 1, 1, 1, 1, 1})); }) ==
        ErrorCode::UnsupportedRank);
}

TEST_CASE("classify_endpoint") {
  CHECK(classify_endpoint(DivisorClass::zero(p2()), EndpointCase::ZeroClass, std::nullopt) == EndpointSurface::Plane);
  CHECK(classify_endpoint(DivisorClass::zero(quadric()), EndpointCase::ZeroClass, std::nullopt) ==
        EndpointSurface::Quadric);
  const auto q2 = SurfaceModel::quadric_deg2_blowup();
  CHECK(classify_endpoint(DivisorClass(q2, {2, 0}), EndpointCase::FiberMultiple, DivisorClass(q2, {1, 0})) ==
        EndpointSurface::ConicQuadricDeg2);
  const auto p4 = SurfaceModel::plane_deg4_blowup();
  CHECK(classify_endpoint(DivisorClass(p4, {2, -1}), EndpointCase::FiberMultiple, DivisorClass(p4, {2, -1})) ==
        EndpointSurface::ConicPlaneDeg4);
  const auto h3 = SurfaceModel::hirzebruch(3);
  CHECK(classify_endpoint(DivisorClass(h3, {0, 1}), EndpointCase::FiberMultiple, DivisorClass(h3, {0, 1})) ==
        EndpointSurface::RuledHirzebruch);
  const auto dp5 = SurfaceModel::custom(IntMatrix(1, 1, 5), {-1}, {{1}}, {});
  CHECK(classify_endpoint(DivisorClass::zero(dp5), EndpointCase::ZeroClass, std::nullopt) ==
        EndpointSurface::DelPezzo5);
  const auto dp6 = SurfaceModel::custom(IntMatrix(1, 1, 6), {-1}, {{1}}, {});
  CHECK(classify_endpoint(DivisorClass::zero(dp6), EndpointCase::ZeroClass, std::nullopt) ==
        EndpointSurface::DelPezzo6);
  CHECK(code_of([] {
          classify_endpoint(DivisorClass::zero(SurfaceModel::plane_blowup(2)), EndpointCase::ZeroClass, std::nullopt);
        }) == ErrorCode::UnknownEndpoint);
}

TEST_CASE("pdeg bounds of the worked examples") {
  SUBCASE("cubic surface") {
    const auto b = pdeg_bounds(DivisorClass(SurfaceModel::plane_blowup(6), {3, 1, 1, 1, 1, 1, 1}));
    CHECK(b.lower == 3);
    CHECK(b.upper == 6);
    CHECK(b.constructive_upper == 3);
    CHECK(b.endpoint_surface == EndpointSurface::Plane);
    CHECK(b.all_passed());
  }
  SUBCASE("quadric 2F1 + 5F2") {
    const auto b = pdeg_bounds(DivisorClass(quadric(), {2, 5}));
    CHECK(b.lower == 6);
    CHECK(b.upper == 12);
    CHECK(b.constructive_upper == 7);
    CHECK(b.endpoint_surface == EndpointSurface::RuledHirzebruch);
    CHECK(b.all_passed());
  }
  SUBCASE("3L") {
    const auto b = pdeg_bounds(DivisorClass(p2(), {3}));
    CHECK(b.lower == 3);
    CHECK(b.upper == 6);
    CHECK(b.constructive_upper == 3);
  }
  SUBCASE("fractional level is scaled before the construction") {
    const auto b = pdeg_bounds(DivisorClass(p2(), {4}));
    CHECK(b.scale == 3);
    CHECK(b.lower == 4);
    CHECK(b.lower_int == 4);
    CHECK(b.constructive_upper == 4);
    const auto h = pdeg_bounds(DivisorClass(quadric(), {1, 2}));
    CHECK(h.scale == 2);
    CHECK(h.lower == q(5, 2));
    CHECK(h.lower_int == 3);
    CHECK(h.constructive_upper == 3);
    CHECK(h.all_passed());
  }
  SUBCASE("arithmetic conic bundles") {
    const auto a = pdeg_bounds(DivisorClass(SurfaceModel::quadric_deg2_blowup(), {3, 1}));
    CHECK(a.endpoint_surface == EndpointSurface::ConicQuadricDeg2);
    CHECK(a.constructive_upper == 6);
    CHECK(a.all_passed());
    const auto b = pdeg_bounds(DivisorClass(SurfaceModel::plane_deg4_blowup(), {6, -2}));
    CHECK(b.all_passed());
  }
  SUBCASE("Hirzebruch surfaces") {
    const auto b = pdeg_bounds(DivisorClass(SurfaceModel::hirzebruch(3), {2, 9}));
    CHECK(b.level == 1);
    CHECK(b.keel == 4);
    CHECK(b.constructive_upper == 9);
    CHECK(b.all_passed());
  }
}

TEST_CASE("example with high level") {
  const auto r5 = example_high_report(5);
  CHECK(r5.level == q(11, 2));
  CHECK(r5.keel == 5);
  CHECK(r5.lower == q(43, 2));
  CHECK(r5.param_degree == 26);
  CHECK(r5.sandwich);
  CHECK(r5.all_passed());
  CHECK(r5.profile.size() == 4);
  CHECK(r5.feasibility_slope == 11);

  const auto r7 = example_high_report(7);
  CHECK(r7.level == q(15, 2));
  CHECK(r7.keel == q(29, 2));
  CHECK(r7.lower == 37);
  CHECK(r7.param_degree == 50);
  CHECK(r7.all_passed());

  for (int n : {3, 4, 6, 1, -5}) CHECK(code_of([n] { example_high_report(n); }) == ErrorCode::BadN);
}
