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

#include <adjkeel/polygon.hpp>

#include <adjkeel/error.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace adjkeel {

namespace {

__extension__ using i128 = __int128;

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

IntPoint primitive(IntPoint v) {
  const std::int64_t g = gcd64(v.x, v.y);
  return g == 0 ? v : IntPoint{v.x / g, v.y / g};
}

std::int64_t cross(IntPoint a, IntPoint b) { return a.x * b.y - a.y * b.x; }
std::int64_t dot(IntPoint a, IntPoint b) { return a.x * b.x + a.y * b.y; }
IntPoint sub(IntPoint a, IntPoint b) { return {a.x - b.x, a.y - b.y}; }

Rational cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool rat_less(const RatPoint& a, const RatPoint& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Andrew's monotone chain. Counterclockwise, collinear points dropped, starts
// at the lexicographically smallest point. Degenerate inputs give one or two
// points.
std::vector<IntPoint> hull_int(std::vector<IntPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<IntPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(sub(h[k - 1], h[k - 2]), sub(p, h[k - 2])) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(sub(h[k - 1], h[k - 2]), sub(pts[i], h[k - 2])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && h[0] == h[1]) h.resize(1);
  return h;
}

std::vector<RatPoint> hull_rat(std::vector<RatPoint> pts) {
  std::sort(pts.begin(), pts.end(), rat_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<RatPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && sgn(cross(h[k - 2], h[k - 1], p)) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_of(IntPoint n) { return (n.y > 0 || (n.y == 0 && n.x > 0)) ? 0 : 1; }

bool angle_less(IntPoint a, IntPoint b) {
  const int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

// Hilbert basis elements strictly between the rays n1 and n2 (n2
// counterclockwise from n1, angle < pi): the exceptional rays of the minimal
// resolution of the cone they span.
std::vector<IntPoint> resolution_rays(IntPoint n1, IntPoint n2) {
  const std::int64_t det = cross(n1, n2);
  if (det == 1) return {};
  std::vector<IntPoint> box;
  const std::int64_t x_lo = std::min({std::int64_t{0}, n1.x, n2.x, n1.x + n2.x});
  const std::int64_t x_hi = std::max({std::int64_t{0}, n1.x, n2.x, n1.x + n2.x});
  const std::int64_t y_lo = std::min({std::int64_t{0}, n1.y, n2.y, n1.y + n2.y});
  const std::int64_t y_hi = std::max({std::int64_t{0}, n1.y, n2.y, n1.y + n2.y});
  for (std::int64_t x = x_lo; x <= x_hi; ++x) {
    for (std::int64_t y = y_lo; y <= y_hi; ++y) {
      const IntPoint p{x, y};
      if (p == IntPoint{0, 0}) continue;
      // p = a*n1 + b*n2 with a = cross(p, n2)/det, b = cross(n1, p)/det.
      const std::int64_t a = cross(p, n2), b = cross(n1, p);
      if (a >= 0 && b >= 0 && a <= det && b <= det) box.push_back(p);
    }
  }
  const std::vector<IntPoint> hull = hull_int(box);
  const auto i1 = std::find(hull.begin(), hull.end(), n1);
  const auto i2 = std::find(hull.begin(), hull.end(), n2);
  if (i1 == hull.end() || i2 == hull.end()) {
    fail(ErrorCode::InvariantViolation, "resolution: cone generators are not hull vertices");
  }
  // The origin-facing chain runs counterclockwise from n2 to n1.
  std::vector<IntPoint> chain;
  const std::size_t m = hull.size();
  std::size_t i = static_cast<std::size_t>(i2 - hull.begin());
  const std::size_t stop = static_cast<std::size_t>(i1 - hull.begin());
  chain.push_back(hull[i]);
  while (i != stop) {
    i = (i + 1) % m;
    chain.push_back(hull[i]);
  }
  std::reverse(chain.begin(), chain.end());
  std::vector<IntPoint> rays;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const IntPoint d = sub(chain[k + 1], chain[k]);
    const std::int64_t g = gcd64(d.x, d.y);
    const IntPoint step{d.x / g, d.y / g};
    for (std::int64_t j = (k == 0 ? 1 : 0); j < g; ++j) {
      rays.push_back({chain[k].x + j * step.x, chain[k].y + j * step.y});
    }
  }
  return rays;
}

std::vector<HalfPlane> lattice_hull_halfplanes(const std::vector<IntPoint>& h) {
  std::vector<HalfPlane> out;
  if (h.empty()) {
    // x >= 1, x <= 0: empty but bounded.
    out.push_back({{1, 0}, make_rational(1)});
    out.push_back({{-1, 0}, make_rational(0)});
    out.push_back({{0, 1}, make_rational(0)});
    out.push_back({{0, -1}, make_rational(0)});
  } else if (h.size() == 1) {
    out.push_back({{1, 0}, make_rational(h[0].x)});
    out.push_back({{-1, 0}, make_rational(-h[0].x)});
    out.push_back({{0, 1}, make_rational(h[0].y)});
    out.push_back({{0, -1}, make_rational(-h[0].y)});
  } else if (h.size() == 2) {
    const IntPoint v = primitive(sub(h[1], h[0]));
    const IntPoint n{-v.y, v.x};
    out.push_back({n, make_rational(dot(n, h[0]))});
    out.push_back({{-n.x, -n.y}, make_rational(-dot(n, h[0]))});
    out.push_back({v, make_rational(dot(v, h[0]))});
    out.push_back({{-v.x, -v.y}, make_rational(-dot(v, h[1]))});
  } else {
    for (std::size_t i = 0; i < h.size(); ++i) {
      const IntPoint d = primitive(sub(h[(i + 1) % h.size()], h[i]));
      const IntPoint n{-d.y, d.x};
      out.push_back({n, make_rational(dot(n, h[i]))});
    }
  }
  return out;
}

Shape shape_for_count(std::size_t n) {
  switch (n) {
    case 0: return Shape::Empty;
    case 1: return Shape::Point;
    case 2: return Shape::Segment;
    default: return Shape::TwoDimensional;
  }
}

std::vector<IntPoint> interior_points(const LatticePolygon& polygon) {
  std::vector<IntPoint> out;
  const auto& vs = polygon.vertices();
  std::int64_t x_lo = vs[0].x, x_hi = vs[0].x, y_lo = vs[0].y, y_hi = vs[0].y;
  for (const auto& v : vs) {
    x_lo = std::min(x_lo, v.x);
    x_hi = std::max(x_hi, v.x);
    y_lo = std::min(y_lo, v.y);
    y_hi = std::max(y_hi, v.y);
  }
  for (std::int64_t x = x_lo + 1; x < x_hi; ++x) {
    for (std::int64_t y = y_lo + 1; y < y_hi; ++y) {
      bool inside = true;
      for (const auto& e : polygon.edges()) {
        if (dot(e.normal, {x, y}) <= e.support) {
          inside = false;
          break;
        }
      }
      if (inside) out.push_back({x, y});
    }
  }
  return out;
}

}  // namespace

const char* shape_name(Shape s) noexcept {
  switch (s) {
    case Shape::Empty: return "empty";
    case Shape::Point: return "point";
    case Shape::Segment: return "segment";
    case Shape::TwoDimensional: return "polygon";
  }
  return "?";
}

const char* polygon_endpoint_name(PolygonEndpoint e) noexcept {
  switch (e) {
    case PolygonEndpoint::Point: return "point";
    case PolygonEndpoint::Segment: return "segment";
    case PolygonEndpoint::ScaleThreeOnePoint: return "scale3_one_interior_point";
    case PolygonEndpoint::ScaleThreeHull: return "scale3_hull_one_interior_point";
    case PolygonEndpoint::ScaleTwoOnePoint: return "scale2_one_interior_point";
    case PolygonEndpoint::ScaleTwoCollinear: return "scale2_collinear_interior_points";
    case PolygonEndpoint::Unclassified: return "unclassified";
  }
  return "?";
}

LatticePolygon LatticePolygon::normalize(std::span<const IntPoint> points) {
  if (points.empty()) fail(ErrorCode::InvalidInput, "vertices: empty point list");
  std::vector<IntPoint> h = hull_int({points.begin(), points.end()});
  if (h.size() < 3) {
    fail(ErrorCode::DegenerateInput,
         h.size() == 1 ? "vertices: hull is a point" : "vertices: hull is a segment");
  }
  LatticePolygon out;
  out.vertices_ = std::move(h);
  const auto& vs = out.vertices_;
  const std::size_t m = vs.size();
  std::vector<Edge> edges(m);  // edges[i] runs from vs[i] to vs[i+1]
  for (std::size_t i = 0; i < m; ++i) {
    const IntPoint d = primitive(sub(vs[(i + 1) % m], vs[i]));
    const IntPoint n{-d.y, d.x};
    edges[i] = {n, dot(n, vs[i])};
  }
  // Vertex i sits between edge i-1 (incoming) and edge i (outgoing).
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& in = edges[(i + m - 1) % m];
    const Edge& outgoing = edges[i];
    for (const IntPoint& r : resolution_rays(in.normal, outgoing.normal)) {
      out.corner_rays_.push_back({r, dot(r, vs[i])});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return angle_less(a.normal, b.normal); });
  std::sort(out.corner_rays_.begin(), out.corner_rays_.end(),
            [](const Edge& a, const Edge& b) { return angle_less(a.normal, b.normal); });
  out.edges_ = std::move(edges);
  return out;
}

std::vector<Edge> LatticePolygon::fan() const {
  std::vector<Edge> out = edges_;
  out.insert(out.end(), corner_rays_.begin(), corner_rays_.end());
  return out;
}

std::int64_t LatticePolygon::twice_area() const {
  std::int64_t a = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    a += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  return a;
}

RationalPolygon RationalPolygon::from_halfplanes(std::vector<HalfPlane> halfplanes) {
  // Recession cone is trivial iff no direction perpendicular to a normal is
  // weakly inside every half-plane.
  if (halfplanes.empty()) fail(ErrorCode::Unbounded, "halfplanes: no constraints");
  for (const auto& hp : halfplanes) {
    for (const IntPoint d : {IntPoint{-hp.normal.y, hp.normal.x}, IntPoint{hp.normal.y, -hp.normal.x}}) {
      bool recedes = true;
      for (const auto& other : halfplanes) {
        if (dot(other.normal, d) < 0) {
          recedes = false;
          break;
        }
      }
      if (recedes) fail(ErrorCode::Unbounded, "halfplanes: region is unbounded");
    }
  }
  RationalPolygon out;
  out.halfplanes_ = std::move(halfplanes);
  const auto& hs = out.halfplanes_;
  std::vector<RatPoint> candidates;
  const bool small = std::all_of(hs.begin(), hs.end(), [](const HalfPlane& h) {
    return is_integer(h.support) && abs(h.support.get_num()) < BigInt(1L << 40) && std::llabs(h.normal.x) < (1L << 20) &&
           std::llabs(h.normal.y) < (1L << 20);
  });
  if (small) {
    // Integer supports: test candidates as exact fractions in i128 first.
    std::vector<std::int64_t> sup;
    for (const auto& h : hs) sup.push_back(h.support.get_num().get_si());
    for (std::size_t i = 0; i < hs.size(); ++i) {
      for (std::size_t j = i + 1; j < hs.size(); ++j) {
        i128 det = cross(hs[i].normal, hs[j].normal);
        if (det == 0) continue;
        i128 nx = static_cast<i128>(sup[i]) * hs[j].normal.y - static_cast<i128>(sup[j]) * hs[i].normal.y;
        i128 ny = static_cast<i128>(sup[j]) * hs[i].normal.x - static_cast<i128>(sup[i]) * hs[j].normal.x;
        if (det < 0) det = -det, nx = -nx, ny = -ny;
        bool inside = true;
        for (std::size_t k = 0; k < hs.size() && inside; ++k) {
          inside = hs[k].normal.x * nx + hs[k].normal.y * ny >= static_cast<i128>(sup[k]) * det;
        }
        if (!inside) continue;
        const std::int64_t d = cross(hs[i].normal, hs[j].normal);
        candidates.push_back({(hs[i].support * hs[j].normal.y - hs[j].support * hs[i].normal.y) / d,
                              (hs[j].support * hs[i].normal.x - hs[i].support * hs[j].normal.x) / d});
      }
    }
    out.vertices_ = hull_rat(std::move(candidates));
    out.shape_ = shape_for_count(out.vertices_.size());
    return out;
  }
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const std::int64_t det = cross(hs[i].normal, hs[j].normal);
      if (det == 0) continue;
      RatPoint p{(hs[i].support * hs[j].normal.y - hs[j].support * hs[i].normal.y) / det,
                 (hs[j].support * hs[i].normal.x - hs[i].support * hs[j].normal.x) / det};
      if (out.contains(p)) candidates.push_back(std::move(p));
    }
  }
  out.vertices_ = hull_rat(std::move(candidates));
  out.shape_ = shape_for_count(out.vertices_.size());
  return out;
}

RationalPolygon RationalPolygon::hull_of(std::span<const IntPoint> points) {
  const std::vector<IntPoint> h = hull_int({points.begin(), points.end()});
  RationalPolygon out;
  out.halfplanes_ = lattice_hull_halfplanes(h);
  for (const auto& p : h) out.vertices_.push_back({make_rational(p.x), make_rational(p.y)});
  out.shape_ = shape_for_count(h.size());
  return out;
}

RationalPolygon RationalPolygon::from_lattice(const LatticePolygon& polygon) {
  return hull_of(polygon.vertices());
}

bool RationalPolygon::contains(const RatPoint& p) const {
  for (const auto& hp : halfplanes_) {
    if (hp.normal.x * p.x + hp.normal.y * p.y < hp.support) return false;
  }
  return true;
}

bool RationalPolygon::has_lattice_vertices() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RatPoint& v) { return is_integer(v.x) && is_integer(v.y); });
}

RationalPolygon offset_scale(const LatticePolygon& polygon, std::int64_t q, std::int64_t p) {
  if (q <= 0) fail(ErrorCode::InvalidInput, "q: must be positive");
  if (p < 0) fail(ErrorCode::InvalidInput, "p: must be nonnegative");
  std::vector<HalfPlane> hs;
  for (const auto& e : polygon.fan()) {
    hs.push_back({e.normal, make_rational(q * e.support + p)});
  }
  return RationalPolygon::from_halfplanes(std::move(hs));
}

RationalPolygon interior_hull(const LatticePolygon& polygon) {
  const std::vector<IntPoint> pts = interior_points(polygon);
  return RationalPolygon::hull_of(pts);
}

std::vector<IntPoint> lattice_points(const RationalPolygon& polygon) {
  std::vector<IntPoint> out;
  if (polygon.empty()) return out;
  const auto& vs = polygon.vertices();
  Rational x_lo = vs[0].x, x_hi = vs[0].x, y_lo = vs[0].y, y_hi = vs[0].y;
  for (const auto& v : vs) {
    x_lo = std::min(x_lo, v.x);
    x_hi = std::max(x_hi, v.x);
    y_lo = std::min(y_lo, v.y);
    y_hi = std::max(y_hi, v.y);
  }
  const std::int64_t x0 = to_int64(ceil_of(x_lo)), x1 = to_int64(floor_of(x_hi));
  const std::int64_t y0 = to_int64(ceil_of(y_lo)), y1 = to_int64(floor_of(y_hi));
  for (std::int64_t x = x0; x <= x1; ++x) {
    for (std::int64_t y = y0; y <= y1; ++y) {
      if (polygon.contains({make_rational(x), make_rational(y)})) out.push_back({x, y});
    }
  }
  return out;
}

Rational lattice_length(const RatPoint& a, const RatPoint& b) {
  const Rational dx = b.x - a.x, dy = b.y - a.y;
  BigInt l;
  mpz_lcm(l.get_mpz_t(), dx.get_den_mpz_t(), dy.get_den_mpz_t());
  const BigInt wx = dx.get_num() * (l / dx.get_den());
  const BigInt wy = dy.get_num() * (l / dy.get_den());
  BigInt g;
  mpz_gcd(g.get_mpz_t(), wx.get_mpz_t(), wy.get_mpz_t());
  return make_rational(g, l);
}

PolygonInvariants level_keel(const LatticePolygon& polygon) {
  // maximize t subject to n.x*x + n.y*y - t >= a over the resolved fan; the
  // optimum sits on a vertex of the (x, y, t) polyhedron, i.e. where three
  // constraints are tight.
  const std::vector<Edge> fan = polygon.fan();
  const std::size_t m = fan.size();
  std::optional<Rational> best;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const Edge* rows[3] = {&fan[i], &fan[j], &fan[k]};
        // Rows (nx, ny, -1) | a. Cramer's rule in exact integers.
        auto det3 = [&](int col_rhs) {
          i128 mtx[3][3];
          for (int r = 0; r < 3; ++r) {
            i128 c[3] = {rows[r]->normal.x, rows[r]->normal.y, -1};
            c[col_rhs] = rows[r]->support;
            for (int s = 0; s < 3; ++s) mtx[r][s] = c[s];
          }
          return mtx[0][0] * (mtx[1][1] * mtx[2][2] - mtx[1][2] * mtx[2][1]) -
                 mtx[0][1] * (mtx[1][0] * mtx[2][2] - mtx[1][2] * mtx[2][0]) +
                 mtx[0][2] * (mtx[1][0] * mtx[2][1] - mtx[1][1] * mtx[2][0]);
        };
        auto det_plain = [&]() {
          i128 mtx[3][3];
          for (int r = 0; r < 3; ++r) {
            mtx[r][0] = rows[r]->normal.x;
            mtx[r][1] = rows[r]->normal.y;
            mtx[r][2] = -1;
          }
          return mtx[0][0] * (mtx[1][1] * mtx[2][2] - mtx[1][2] * mtx[2][1]) -
                 mtx[0][1] * (mtx[1][0] * mtx[2][2] - mtx[1][2] * mtx[2][0]) +
                 mtx[0][2] * (mtx[1][0] * mtx[2][1] - mtx[1][1] * mtx[2][0]);
        };
        i128 d = det_plain();
        if (d == 0) continue;
        i128 X = det3(0), Y = det3(1), T = det3(2);
        if (d < 0) {
          d = -d;
          X = -X;
          Y = -Y;
          T = -T;
        }
        bool feasible = true;
        for (const auto& e : fan) {
          if (e.normal.x * X + e.normal.y * Y - T < static_cast<i128>(e.support) * d) {
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;
        const Rational t = make_rational(static_cast<std::int64_t>(T), static_cast<std::int64_t>(d));
        if (!best || t > *best) best = t;
      }
    }
  }
  if (!best) fail(ErrorCode::InvariantViolation, "level: offset program has no vertex");
  std::vector<HalfPlane> hs;
  for (const auto& e : fan) hs.push_back({e.normal, make_rational(e.support) + *best});
  PolygonInvariants out{*best, Rational(0), RationalPolygon::from_halfplanes(std::move(hs)),
                        best->get_den()};
  const auto& face = out.optimal_face;
  switch (face.shape()) {
    case Shape::Point: break;
    case Shape::Segment: out.keel = lattice_length(face.vertices()[0], face.vertices()[1]); break;
    default: {
      std::ostringstream msg;
      msg << "level: optimal face is " << shape_name(face.shape());
      fail(ErrorCode::InvariantViolation, msg.str());
    }
  }
  return out;
}

std::int64_t nmc_polygon(const RationalPolygon& polygon) {
  if (!polygon.has_lattice_vertices()) {
    fail(ErrorCode::NonLatticeVertices, "nmc: polygon has non-integral vertices");
  }
  switch (polygon.shape()) {
    case Shape::Empty:
    case Shape::Point: return 0;
    case Shape::Segment:
      return to_int64(lattice_length(polygon.vertices()[0], polygon.vertices()[1]));
    case Shape::TwoDimensional: return 1;
  }
  return 0;
}

PolygonChain polygon_adjoint_chain(const LatticePolygon& polygon) {
  PolygonChain out;
  out.members.push_back(RationalPolygon::from_lattice(polygon));
  LatticePolygon current = polygon;
  std::int64_t a = 0;
  for (;;) {
    const std::vector<IntPoint> inner = interior_points(current);
    if (inner.empty()) break;
    out.members.push_back(RationalPolygon::hull_of(inner));
    ++a;
    const RationalPolygon& h = out.members.back();
    if (h.shape() == Shape::Point) {
      out.endpoint = PolygonEndpoint::Point;
      out.level = a;
      out.keel = 0;
      return out;
    }
    if (h.shape() == Shape::Segment) {
      out.endpoint = PolygonEndpoint::Segment;
      out.level = a;
      out.keel = lattice_length(h.vertices()[0], h.vertices()[1]);
      return out;
    }
    current = LatticePolygon::normalize(inner);
  }

  // Two-dimensional without interior lattice points.
  const Rational base = a;
  const std::vector<IntPoint> in3 = lattice_points(offset_scale(current, 3, 1));
  if (in3.size() == 1) {
    out.endpoint = PolygonEndpoint::ScaleThreeOnePoint;
    out.level = base + make_rational(1, 3);
    out.keel = 0;
    return out;
  }
  const RationalPolygon hull3 = RationalPolygon::hull_of(in3);
  if (hull3.shape() == Shape::TwoDimensional &&
      interior_points(LatticePolygon::normalize(in3)).size() == 1) {
    out.endpoint = PolygonEndpoint::ScaleThreeHull;
    out.level = base + make_rational(2, 3);
    out.keel = 0;
    return out;
  }
  const std::vector<IntPoint> in2 = lattice_points(offset_scale(current, 2, 1));
  const RationalPolygon hull2 = RationalPolygon::hull_of(in2);
  if (hull2.shape() == Shape::Point) {
    out.endpoint = PolygonEndpoint::ScaleTwoOnePoint;
    out.level = base + make_rational(1, 2);
    out.keel = 0;
    return out;
  }
  if (hull2.shape() == Shape::Segment) {
    out.endpoint = PolygonEndpoint::ScaleTwoCollinear;
    out.level = base + make_rational(1, 2);
    out.keel = lattice_length(hull2.vertices()[0], hull2.vertices()[1]) / 2;
    return out;
  }
  out.endpoint = PolygonEndpoint::Unclassified;
  return out;
}

}  // namespace adjkeel
