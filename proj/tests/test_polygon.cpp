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


#include <adjkeel/error.hpp>
#include <adjkeel/polygon.hpp>

#include <doctest.h>

#include <numeric>
#include <vector>

using namespace adjkeel;

namespace {

LatticePolygon poly(std::vector<IntPoint> pts) { return LatticePolygon::normalize(pts); }

LatticePolygon triangle(std::int64_t n) { return poly({{0, 0}, {n, 0}, {0, n}}); }

// m high, n wide.
LatticePolygon rectangle(std::int64_t m, std::int64_t n) { return poly({{0, 0}, {n, 0}, {n, m}, {0, m}}); }

Rational q(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

RatPoint rp(std::int64_t x, std::int64_t y) { return {q(x), q(y)}; }

}  // namespace

TEST_CASE("normalize") {
  const auto t = poly({{0, 0}, {3, 0}, {0, 3}, {1, 1}});
  CHECK(t.vertices() == std::vector<IntPoint>{{0, 0}, {3, 0}, {0, 3}});

  const auto sq = poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  REQUIRE(sq.edges().size() == 4);
  CHECK(sq.edges()[0] == Edge{{1, 0}, 0});
  CHECK(sq.edges()[1] == Edge{{0, 1}, 0});
  CHECK(sq.edges()[2] == Edge{{-1, 0}, -1});
  CHECK(sq.edges()[3] == Edge{{0, -1}, -1});
  CHECK(sq.corner_rays().empty());

  CHECK_THROWS_AS(poly({{0, 0}, {2, 0}}), Error);
  CHECK_THROWS_AS(poly({{1, 1}}), Error);
  CHECK_THROWS_AS(poly({}), Error);
  try {
    poly({{0, 0}, {2, 0}, {5, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateInput);
  }
}

TEST_CASE("normalize is idempotent and drops collinear points") {
  const auto p = poly({{0, 0}, {2, 0}, {4, 0}, {4, 2}, {2, 4}, {0, 4}, {0, 2}});
  CHECK(p.vertices().size() == 5);
  CHECK(poly(p.vertices()) == p);
  CHECK(p.twice_area() == 28);
}

TEST_CASE("edge normals are primitive and supports match the vertices") {
  const auto p = poly({{0, 0}, {4, 2}, {1, 5}});
  for (const auto& e : p.edges()) {
    CHECK(std::gcd(e.normal.x, e.normal.y) == 1);
    int on = 0;
    for (const auto& v : p.vertices()) {
      const auto val = e.normal.x * v.x + e.normal.y * v.y;
      CHECK(val >= e.support);
      on += val == e.support;
    }
    CHECK(on == 2);
  }
}

TEST_CASE("corner rays at a singular vertex") {
  // Cone at (0,0) between normals (-1,4) and (0,1)... the vertex (4,1) has a
  // non-unimodular normal cone.
  const auto p = poly({{0, 0}, {4, 1}, {0, 1}});
  CHECK_FALSE(p.corner_rays().empty());
  for (const auto& r : p.corner_rays()) {
    bool touches = false;
    for (const auto& v : p.vertices()) touches = touches || r.normal.x * v.x + r.normal.y * v.y == r.support;
    CHECK(touches);
  }
  // Corner rays do not change the point set.
  CHECK(offset_scale(p, 1, 0).same_set(RationalPolygon::from_lattice(p)));
}

TEST_CASE("offset_scale") {
  const auto sq = rectangle(1, 1);
  const auto f = offset_scale(sq, 2, 1);
  CHECK(f.shape() == Shape::Point);
  CHECK(f.vertices() == std::vector<RatPoint>{rp(1, 1)});

  const auto g = offset_scale(triangle(3), 1, 1);
  CHECK(g.shape() == Shape::Point);
  CHECK(g.vertices() == std::vector<RatPoint>{rp(1, 1)});

  CHECK(offset_scale(sq, 1, 1).empty());

  for (const auto& p : {triangle(5), rectangle(2, 7), poly({{0, 0}, {5, 1}, {2, 6}})}) {
    CHECK(offset_scale(p, 1, 0).same_set(RationalPolygon::from_lattice(p)));
  }
}

TEST_CASE("interior_hull") {
  const auto a = interior_hull(rectangle(3, 3));
  CHECK(a.shape() == Shape::TwoDimensional);
  CHECK(a.vertices() == std::vector<RatPoint>{rp(1, 1), rp(2, 1), rp(2, 2), rp(1, 2)});
  const auto b = interior_hull(triangle(3));
  CHECK(b.shape() == Shape::Point);
  CHECK(b.vertices() == std::vector<RatPoint>{rp(1, 1)});
  CHECK(interior_hull(rectangle(1, 1)).empty());
}

TEST_CASE("lattice_points") {
  const std::vector<IntPoint> seg{{0, 0}, {3, 0}};
  CHECK(lattice_points(RationalPolygon::hull_of(seg)) == std::vector<IntPoint>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  const std::vector<IntPoint> one{{1, 1}};
  CHECK(lattice_points(RationalPolygon::hull_of(one)) == one);
  CHECK(lattice_points(RationalPolygon::from_lattice(rectangle(2, 2))).size() == 9);
}

TEST_CASE("from_halfplanes rejects unbounded systems") {
  std::vector<HalfPlane> hs{{{1, 0}, q(0)}, {{0, 1}, q(0)}};
  try {
    RationalPolygon::from_halfplanes(hs);
    FAIL("expected Unbounded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unbounded);
  }
  hs.push_back({{-1, -1}, q(-2)});
  CHECK(RationalPolygon::from_halfplanes(hs).shape() == Shape::TwoDimensional);
  hs.push_back({{-1, -1}, q(1)});
  CHECK(RationalPolygon::from_halfplanes(hs).empty());
}

TEST_CASE("level and keel of the worked examples") {
  SUBCASE("triangle side 6") {
    const auto r = level_keel(triangle(6));
    CHECK(r.level == 2);
    CHECK(r.keel == 0);
    CHECK(r.optimal_face.shape() == Shape::Point);
    CHECK(r.denominator == 1);
  }
  SUBCASE("rectangle 3 by 5") {
    const auto r = level_keel(rectangle(3, 5));
    CHECK(r.level == q(3, 2));
    CHECK(r.keel == 2);
    CHECK(r.optimal_face.shape() == Shape::Segment);
    CHECK(r.denominator == 2);
  }
  SUBCASE("rectangle 5 by 6") {
    const auto r = level_keel(rectangle(5, 6));
    CHECK(r.level == q(5, 2));
    CHECK(r.keel == 1);
  }
  SUBCASE("triangle side 7") {
    const auto r = level_keel(triangle(7));
    CHECK(r.level == q(7, 3));
    CHECK(r.keel == 0);
  }
  SUBCASE("singular vertex") {
    const auto r = level_keel(poly({{0, 0}, {4, 1}, {0, 1}}));
    CHECK(r.level == q(1, 2));
  }
}

TEST_CASE("triangles and rectangles") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    const auto r = level_keel(triangle(n));
    CHECK(r.level == q(n, 3));
    CHECK(r.keel == 0);
  }
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t n = m; n <= 12; ++n) {
      const auto r = level_keel(rectangle(m, n));
      CHECK(r.level == q(m, 2));
      CHECK(r.keel == n - m);
    }
  }
}

TEST_CASE("nmc_polygon") {
  const std::vector<IntPoint> pt{{2, 3}};
  CHECK(nmc_polygon(RationalPolygon::hull_of(pt)) == 0);
  const std::vector<IntPoint> seg{{0, 0}, {4, 2}};
  CHECK(nmc_polygon(RationalPolygon::hull_of(seg)) == 2);
  CHECK(nmc_polygon(RationalPolygon::from_lattice(rectangle(1, 1))) == 1);
  CHECK(nmc_polygon(offset_scale(rectangle(1, 1), 1, 1)) == 0);
  try {
    nmc_polygon(offset_scale(rectangle(2, 3), 2, 1));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonLatticeVertices);
  }
}

TEST_CASE("lattice_length") {
  CHECK(lattice_length(rp(0, 0), rp(4, 2)) == 2);
  CHECK(lattice_length(rp(1, 1), rp(1, 1)) == 0);
  CHECK(lattice_length({q(1, 2), q(0)}, {q(3), q(0)}) == q(5, 2));
  CHECK(lattice_length({q(0), q(0)}, {q(3, 2), q(1, 2)}) == q(1, 2));
}

TEST_CASE("interior hull chains") {
  SUBCASE("square [0,4]^2") {
    const auto c = polygon_adjoint_chain(rectangle(4, 4));
    REQUIRE(c.members.size() == 3);
    CHECK(c.members[1].vertices() == std::vector<RatPoint>{rp(1, 1), rp(3, 1), rp(3, 3), rp(1, 3)});
    CHECK(c.members[2].vertices() == std::vector<RatPoint>{rp(2, 2)});
    CHECK(c.endpoint == PolygonEndpoint::Point);
    CHECK(c.level == 2);
  }
  SUBCASE("triangle side 3") {
    const auto c = polygon_adjoint_chain(triangle(3));
    REQUIRE(c.members.size() == 2);
    CHECK(c.members[1].vertices() == std::vector<RatPoint>{rp(1, 1)});
  }
  SUBCASE("hexagon") {
    const auto c = polygon_adjoint_chain(poly({{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 2}}));
    REQUIRE(c.members.size() == 2);
    CHECK(c.members[1].vertices() == std::vector<RatPoint>{rp(1, 1)});
    CHECK(c.level == 1);
    CHECK(c.keel == 0);
  }
  SUBCASE("endpoint subcases") {
    CHECK(polygon_adjoint_chain(triangle(1)).endpoint == PolygonEndpoint::ScaleThreeOnePoint);
    CHECK(polygon_adjoint_chain(triangle(2)).endpoint == PolygonEndpoint::ScaleThreeHull);
    CHECK(polygon_adjoint_chain(rectangle(1, 1)).endpoint == PolygonEndpoint::ScaleTwoOnePoint);
    const auto c = polygon_adjoint_chain(rectangle(1, 3));
    CHECK(c.endpoint == PolygonEndpoint::ScaleTwoCollinear);
    CHECK(c.keel == 2);
    const auto s = polygon_adjoint_chain(rectangle(2, 5));
    CHECK(s.endpoint == PolygonEndpoint::Segment);
    CHECK(s.level == 1);
    CHECK(s.keel == 3);
  }
}
