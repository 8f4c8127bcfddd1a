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


// Randomized and battery-wide invariants of both backends.

#include <adjkeel/adjoint.hpp>
#include <adjkeel/error.hpp>
#include <adjkeel/oracles.hpp>
#include <adjkeel/polygon.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace adjkeel;

namespace {

std::vector<IntPoint> random_points(std::mt19937_64& rng, int count, int box) {
  std::uniform_int_distribution<int> c(0, box);
  std::vector<IntPoint> pts;
  for (int i = 0; i < count; ++i) pts.push_back({c(rng), c(rng)});
  return pts;
}

std::vector<LatticePolygon> random_polygons(std::uint64_t seed, int count, int box) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n(3, 7);
  std::vector<LatticePolygon> out;
  while (static_cast<int>(out.size()) < count) {
    try {
      out.push_back(LatticePolygon::normalize(random_points(rng, n(rng), box)));
    } catch (const Error&) {
    }
  }
  return out;
}

LatticePolygon transform(const LatticePolygon& p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                         IntPoint t) {
  std::vector<IntPoint> pts;
  for (const auto& v : p.vertices()) pts.push_back({a * v.x + b * v.y + t.x, c * v.x + d * v.y + t.y});
  return LatticePolygon::normalize(pts);
}

LatticePolygon scaled(const LatticePolygon& p, std::int64_t s) { return transform(p, s, 0, 0, s, {0, 0}); }

// Nef, big classes on plane blowups and Hirzebruch surfaces.
std::vector<DivisorClass> divisor_battery() {
  std::vector<DivisorClass> out;
  for (int r = 0; r <= 6; ++r) {
    const auto s = SurfaceModel::plane_blowup(r);
    IntVector v(static_cast<std::size_t>(r) + 1, 0);
    std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(r));
    std::uniform_int_distribution<int> m(0, 3);
    for (int d = 1; d <= 7; ++d) {
      for (int trial = 0; trial < 6; ++trial) {
        v[0] = d;
        for (std::size_t i = 1; i < v.size(); ++i) v[i] = m(rng);
        std::sort(v.begin() + 1, v.end(), std::greater<>());
        const DivisorClass c(s, v);
        if (is_nef(c) && intersect(c, c) > 0 &&
            std::find(out.begin(), out.end(), c) == out.end()) {
          out.push_back(c);
        }
      }
    }
  }
  for (int n = 0; n <= 3; ++n) {
    const auto s = SurfaceModel::hirzebruch(n);
    for (std::int64_t a = 1; a <= 4; ++a) {
      for (std::int64_t b = n * a; b <= n * a + 5; ++b) {
        const DivisorClass c(s, {a, b});
        if (is_nef(c) && intersect(c, c) > 0) out.push_back(c);
      }
    }
  }
  for (std::int64_t m = 1; m <= 4; ++m) {
    for (std::int64_t n = m; n <= 6; ++n) out.emplace_back(SurfaceModel::quadric(), IntVector{m, n});
  }
  return out;
}

}  // namespace

TEST_CASE("unimodular invariance") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> k(-3, 3), pick(0, 3);
  for (const auto& p : random_polygons(11, 60, 9)) {
    // Random product of elementary matrices.
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    for (int step = 0; step < 3; ++step) {
      const int t = k(rng);
      switch (pick(rng)) {
        case 0: b += t * a, d += t * c; break;            // column op
        case 1: a += t * c, b += t * d; break;            // row op
        case 2: std::swap(a, b), std::swap(c, d); break;  // det -1
        default: a = -a, c = -c; break;
      }
    }
    REQUIRE(std::llabs(a * d - b * c) == 1);
    const auto q = transform(p, a, b, c, d, {k(rng), k(rng)});
    const auto x = level_keel(p), y = level_keel(q);
    CHECK(x.level == y.level);
    CHECK(x.keel == y.keel);
  }
}

TEST_CASE("scaling multiplies level and keel") {
  for (const auto& p : random_polygons(12, 40, 8)) {
    const auto base = level_keel(p);
    for (std::int64_t s = 1; s <= 3; ++s) {
      const auto r = level_keel(scaled(p, s));
      CHECK(r.level == s * base.level);
      CHECK(r.keel == s * base.keel);
    }
  }
}

TEST_CASE("LP level agrees with enumeration and with interior hull chains") {
  for (const auto& p : random_polygons(13, 120, 12)) {
    const auto inv = level_keel(p);
    CHECK(inv.level >= 0);
    CHECK(inv.keel >= 0);
    CHECK((inv.optimal_face.shape() == Shape::Point || inv.optimal_face.shape() == Shape::Segment));
    if (inv.denominator <= 24) CHECK(polygon_level_oracle(p, 24) == inv.level);
    const auto chain = polygon_adjoint_chain(p);
    REQUIRE(chain.endpoint != PolygonEndpoint::Unclassified);
    CHECK(chain.level == inv.level);
    CHECK(chain.keel == inv.keel);
  }
}

TEST_CASE("keel equals the stabilized lattice count") {
  for (const auto& p : random_polygons(14, 120, 10)) {
    const auto inv = level_keel(p);
    if (inv.optimal_face.shape() != Shape::Segment) continue;
    const std::int64_t q = to_int64(inv.denominator);
    const std::int64_t num = to_int64(BigInt(inv.level.get_num()));
    CAPTURE(to_string(inv.level));
    CAPTURE(to_string(inv.keel));
    for (std::int64_t k = 1; k <= 5; ++k) {
      const auto face = offset_scale(p, q * k, num * k);
      const auto count = static_cast<std::int64_t>(lattice_points(face).size()) - 1;
      CHECK(Rational(count) == inv.keel * q * k);
    }
    CHECK(polygon_keel_oracle(p, 12) == inv.keel);
  }
}

TEST_CASE("nmc of interior figures by shape") {
  for (const auto& p : random_polygons(15, 40, 10)) {
    const auto h = interior_hull(p);
    const auto n = nmc_polygon(h);
    switch (h.shape()) {
      case Shape::Empty:
      case Shape::Point: CHECK(n == 0); break;
      case Shape::Segment: CHECK(n == static_cast<std::int64_t>(lattice_points(h).size()) - 1); break;
      case Shape::TwoDimensional: CHECK(n == 1); break;
    }
  }
}

TEST_CASE("chain invariants, corollary and sandwich over the battery") {
  const auto battery = divisor_battery();
  REQUIRE(battery.size() >= 100);
  for (const auto& d : battery) {
    CAPTURE(d.model().tag());
    CAPTURE(to_string(d.coeffs()));
    const auto r = adjoint_chain(d);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
    CHECK(6 % r.level.get_den() == 0);
    // Restarting from step i lowers the level by i and keeps the keel.
    for (int i = 1; i <= r.a; ++i) {
      const auto& di = r.steps[static_cast<std::size_t>(i)].divisor;
      if (intersect(di, di) <= 0) continue;
      const auto again = adjoint_chain(di);
      CHECK(again.level == r.level - i);
      CHECK(again.keel == r.keel);
    }
    const auto b = pdeg_bounds(d);
    for (const auto& c : b.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    REQUIRE(b.constructive_upper);
    CHECK(b.lower <= Rational(*b.constructive_upper));
    CHECK(Rational(*b.constructive_upper) <= b.upper);
  }
}

TEST_CASE("level scales with the divisor") {
  for (const auto& d : divisor_battery()) {
    const auto base = level_keel_divisor(d);
    for (std::int64_t s = 2; s <= 3; ++s) {
      const auto r = level_keel_divisor(d * s);
      CHECK(r.level == s * base.level);
      CHECK(r.keel == s * base.keel);
    }
  }
}

TEST_CASE("chain level agrees with the small-q search") {
  const auto battery = divisor_battery();
  for (std::size_t i = 0; i < battery.size(); i += 3) {
    const auto& d = battery[i];
    CAPTURE(to_string(d.coeffs()));
    CHECK(level_keel_divisor(d).level == divisor_level_oracle(d, 6));
  }
}

TEST_CASE("minimalization does not depend on the contraction order") {
  for (const auto& d : divisor_battery()) {
    const auto a = minimalize(d, TieBreak::Lexicographic);
    const auto b = minimalize(d, TieBreak::ReverseLexicographic);
    CHECK(a.divisor.model().rank() == b.divisor.model().rank());
    CHECK(intersect(a.divisor, a.divisor) == intersect(b.divisor, b.divisor));
    const auto ka = DivisorClass::canonical(a.divisor.surface());
    const auto kb = DivisorClass::canonical(b.divisor.surface());
    CHECK(intersect(a.divisor, ka) == intersect(b.divisor, kb));
    const auto ra = adjoint_chain(d, TieBreak::Lexicographic);
    const auto rb = adjoint_chain(d, TieBreak::ReverseLexicographic);
    CHECK(ra.level == rb.level);
    CHECK(ra.keel == rb.keel);
    CHECK(ra.a == rb.a);
  }
}

TEST_CASE("toric surfaces agree across backends") {
  auto poly = [](std::vector<IntPoint> pts) { return LatticePolygon::normalize(pts); };
  SUBCASE("hexagon and the degree 6 del Pezzo surface") {
    const auto a = level_keel(poly({{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}}));
    const auto b = level_keel_divisor(DivisorClass(SurfaceModel::plane_blowup(3), {3, 1, 1, 1}));
    CHECK(a.level == b.level);
    CHECK(a.keel == b.keel);
  }
  SUBCASE("triangles and the plane") {
    for (std::int64_t n = 1; n <= 12; ++n) {
      const auto a = level_keel(poly({{0, 0}, {n, 0}, {0, n}}));
      const auto b = level_keel_divisor(DivisorClass(SurfaceModel::plane_blowup(0), {n}));
      CHECK(a.level == b.level);
      CHECK(a.keel == b.keel);
    }
  }
  SUBCASE("rectangles and the quadric") {
    for (std::int64_t m = 1; m <= 6; ++m) {
      for (std::int64_t n = 1; n <= 6; ++n) {
        const auto a = level_keel(poly({{0, 0}, {n, 0}, {n, m}, {0, m}}));
        const auto b = level_keel_divisor(DivisorClass(SurfaceModel::quadric(), {m, n}));
        CHECK(a.level == b.level);
        CHECK(a.keel == b.keel);
      }
    }
  }
  SUBCASE("trapezoids and Hirzebruch surfaces") {
    // aC + bf on F_n is the trapezoid of height a with bottom b - na, top b.
    for (std::int64_t n = 1; n <= 3; ++n) {
      for (std::int64_t a = 1; a <= 4; ++a) {
        for (std::int64_t b = n * a + 1; b <= n * a + 4; ++b) {
          CAPTURE(n);
          CAPTURE(a);
          CAPTURE(b);
          const auto x = level_keel(poly({{0, 0}, {b - n * a, 0}, {b, a}, {0, a}}));
          const auto y = level_keel_divisor(DivisorClass(SurfaceModel::hirzebruch(static_cast<int>(n)), {a, b}));
          CHECK(x.level == y.level);
          CHECK(x.keel == y.keel);
        }
      }
    }
  }
  SUBCASE("pentagon and the plane blown up in two points") {
    // 3L - E1 - E2: the triangle of side 3 with two corners cut.
    const auto a = level_keel(poly({{1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 1}}));
    const auto b = level_keel_divisor(DivisorClass(SurfaceModel::plane_blowup(3), {3, 1, 1, 1}));
    CHECK(a.level == b.level);
    const auto c = level_keel(poly({{1, 0}, {3, 0}, {0, 1}, {0, 3}}));
    const auto d = level_keel_divisor(DivisorClass(SurfaceModel::plane_blowup(2), {3, 1, 1}));
    CHECK(c.level == d.level);
    CHECK(c.keel == d.keel);
  }
}
