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

// Lattice polygon calculus for toric surfaces: a convex lattice polygon is an
// effective divisor D on the minimal resolution of its toric surface, and the
// class qD + pK is the rational figure obtained by scaling by q and pushing
// every edge of the resolved normal fan p lattice steps inward.

#include <adjkeel/rational.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace adjkeel {

struct IntPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  auto operator<=>(const IntPoint&) const = default;
};

struct RatPoint {
  Rational x;
  Rational y;

  bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
};

// Half-plane {v : <normal, v> >= support}, normal primitive.
struct Edge {
  IntPoint normal;
  std::int64_t support = 0;

  bool operator==(const Edge&) const = default;
};

struct HalfPlane {
  IntPoint normal;
  Rational support;

  bool operator==(const HalfPlane& o) const {
    return normal == o.normal && support == o.support;
  }
};

class LatticePolygon {
 public:
  // Convex hull of `points`. Throws DegenerateInput for point or segment hulls
  // and InvalidInput for an empty list.
  static LatticePolygon normalize(std::span<const IntPoint> points);

  // Counterclockwise, strictly convex, starting at the lexicographically
  // smallest vertex.
  const std::vector<IntPoint>& vertices() const { return vertices_; }

  // One entry per polygon edge, sorted by the angle of the inner normal
  // measured counterclockwise from (1, 0).
  const std::vector<Edge>& edges() const { return edges_; }

  // Rays of the minimal resolution that are not edge normals (zero-length
  // edges sitting at singular vertices), with support = value at the vertex.
  const std::vector<Edge>& corner_rays() const { return corner_rays_; }

  // Edges followed by corner rays: the full resolved fan.
  std::vector<Edge> fan() const;

  std::int64_t twice_area() const;

  bool operator==(const LatticePolygon& o) const { return vertices_ == o.vertices_; }

 private:
  std::vector<IntPoint> vertices_;
  std::vector<Edge> edges_;
  std::vector<Edge> corner_rays_;
};

enum class Shape { Empty, Point, Segment, TwoDimensional };

const char* shape_name(Shape s) noexcept;

class RationalPolygon {
 public:
  // Intersection of half-planes. Throws Unbounded unless the normals
  // positively span the plane.
  static RationalPolygon from_halfplanes(std::vector<HalfPlane> halfplanes);

  // Convex hull of integer points of any dimension (empty list gives Empty).
  static RationalPolygon hull_of(std::span<const IntPoint> points);

  static RationalPolygon from_lattice(const LatticePolygon& polygon);

  Shape shape() const { return shape_; }
  bool empty() const { return shape_ == Shape::Empty; }

  // Counterclockwise from the lexicographically smallest vertex.
  const std::vector<RatPoint>& vertices() const { return vertices_; }
  const std::vector<HalfPlane>& halfplanes() const { return halfplanes_; }

  bool contains(const RatPoint& p) const;
  bool has_lattice_vertices() const;

  // Same point set.
  bool same_set(const RationalPolygon& o) const { return vertices_ == o.vertices_; }

 private:
  std::vector<HalfPlane> halfplanes_;
  std::vector<RatPoint> vertices_;
  Shape shape_ = Shape::Empty;
};

// {x : <n, x> >= q*a + p} over the resolved fan of `polygon`; the figure of
// the class qD + pK.
RationalPolygon offset_scale(const LatticePolygon& polygon, std::int64_t q, std::int64_t p);

// Convex hull of the lattice points strictly inside `polygon`.
RationalPolygon interior_hull(const LatticePolygon& polygon);

// Integer points of a bounded figure in lexicographic order.
std::vector<IntPoint> lattice_points(const RationalPolygon& polygon);

struct PolygonInvariants {
  Rational level;
  Rational keel;
  RationalPolygon optimal_face;
  BigInt denominator;
};

PolygonInvariants level_keel(const LatticePolygon& polygon);

// 0 for Empty/Point, lattice points - 1 for Segment, 1 for TwoDimensional.
// Throws NonLatticeVertices when a vertex is not integral.
std::int64_t nmc_polygon(const RationalPolygon& polygon);

// For a segment with rational endpoints: the factor lambda with
// B - A = lambda * v, v primitive. Zero for a point.
Rational lattice_length(const RatPoint& a, const RatPoint& b);

// How a chain of interior hulls ends when the last member is two-dimensional
// without interior lattice points.
enum class PolygonEndpoint {
  Point,              // D_a = 0
  Segment,            // D_a = kP
  ScaleThreeOnePoint, // 3 * last has one interior point
  ScaleThreeHull,     // hull of interior of 3 * last has one interior point
  ScaleTwoOnePoint,   // 2 * last has one interior point
  ScaleTwoCollinear,  // 2 * last has several collinear interior points
  Unclassified,
};

const char* polygon_endpoint_name(PolygonEndpoint e) noexcept;

struct PolygonChain {
  std::vector<RationalPolygon> members;
  PolygonEndpoint endpoint = PolygonEndpoint::Unclassified;
  // level and keel read off the chain's end, independent of the offset LP.
  Rational level;
  Rational keel;
};

PolygonChain polygon_adjoint_chain(const LatticePolygon& polygon);

}  // namespace adjkeel
