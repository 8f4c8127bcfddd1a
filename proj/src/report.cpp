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


#include <adjkeel/report.hpp>

#include <adjkeel/error.hpp>
#include <adjkeel/oracles.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

namespace adjkeel {

using Json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "text") return Format::Text;
  if (name == "svg") return Format::Svg;
  fail(ErrorCode::InvalidInput, "format: expected json, text or svg, got '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Input

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::InvalidInput, std::string("input: invalid JSON (") + e.what() + ")");
  }
}

std::int64_t int_field(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(ErrorCode::InvalidInput, field + ": expected an integer");
  return v.get<std::int64_t>();
}

IntVector int_vector(const Json& v, const std::string& field) {
  if (!v.is_array()) fail(ErrorCode::InvalidInput, field + ": expected an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(int_field(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<IntVector> int_rows(const Json& obj, const std::string& field) {
  if (!obj.contains(field)) return {};
  const Json& v = obj[field];
  if (!v.is_array()) fail(ErrorCode::InvalidInput, field + ": expected an array of integer arrays");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(int_vector(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

const Json& require(const Json& obj, const std::string& field) {
  if (!obj.contains(field)) fail(ErrorCode::InvalidInput, field + ": missing");
  return obj[field];
}

int small_int(const Json& obj, const std::string& field) {
  const std::int64_t v = int_field(require(obj, field), field);
  if (v < 0 || v > 1000) fail(ErrorCode::InvalidInput, field + ": out of range");
  return static_cast<int>(v);
}

}  // namespace

LatticePolygon parse_polygon(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) fail(ErrorCode::InvalidInput, "input: expected a JSON object");
  const Json& vs = require(doc, "vertices");
  if (!vs.is_array() || vs.empty()) fail(ErrorCode::InvalidInput, "vertices: expected a nonempty array of [x, y]");
  std::vector<IntPoint> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string field = "vertices[" + std::to_string(i) + "]";
    const IntVector xy = int_vector(vs[i], field);
    if (xy.size() != 2) fail(ErrorCode::InvalidInput, field + ": expected [x, y]");
    if (std::llabs(xy[0]) > (1 << 20) || std::llabs(xy[1]) > (1 << 20)) {
      fail(ErrorCode::InvalidInput, field + ": coordinate out of range");
    }
    pts.push_back({xy[0], xy[1]});
  }
  return LatticePolygon::normalize(pts);
}

DivisorClass parse_surface(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) fail(ErrorCode::InvalidInput, "input: expected a JSON object");
  std::string model = "custom";
  if (doc.contains("model")) {
    if (!doc["model"].is_string()) fail(ErrorCode::InvalidInput, "model: expected a string");
    model = doc["model"].get<std::string>();
  } else if (!doc.contains("gram")) {
    fail(ErrorCode::InvalidInput, "model: missing");
  }
  SurfacePtr s;
  if (model == "plane_blowup") {
    const int r = small_int(doc, "r");
    if (r > 8) fail(ErrorCode::UnsupportedRank, "r: plane_blowup supports r <= 8");
    s = SurfaceModel::plane_blowup(r);
  } else if (model == "hirzebruch") {
    s = SurfaceModel::hirzebruch(small_int(doc, "n"));
  } else if (model == "quadric") {
    s = SurfaceModel::quadric();
  } else if (model == "quadric_deg2_blowup") {
    s = SurfaceModel::quadric_deg2_blowup();
  } else if (model == "plane_deg4_blowup") {
    s = SurfaceModel::plane_deg4_blowup();
  } else if (model == "custom") {
    const auto gram = int_rows(doc, "gram");
    if (gram.empty()) fail(ErrorCode::InvalidInput, "gram: missing");
    IntMatrix g = IntMatrix::from_rows(gram);
    s = SurfaceModel::custom(g, int_vector(require(doc, "K"), "K"), int_rows(doc, "effective_generators"),
                             int_rows(doc, "contractibles"));
  } else {
    fail(ErrorCode::InvalidInput, "model: unknown model '" + model + "'");
  }
  const IntVector d = int_vector(require(doc, "D"), "D");
  if (d.size() != s->rank()) {
    fail(ErrorCode::InvalidInput, "D: expected " + std::to_string(s->rank()) + " coefficients for " + s->tag() +
                                      ", got " + std::to_string(d.size()));
  }
  for (auto x : d) {
    if (std::llabs(x) > 10000) fail(ErrorCode::InvalidInput, "D: coefficient out of range");
  }
  return {s, d};
}

// ---------------------------------------------------------------------------
// Output helpers

namespace {

std::string str(const Rational& r) { return to_string(r); }

Json point_json(const RatPoint& p) { return Json::array({str(p.x), str(p.y)}); }

Json figure_json(const RationalPolygon& f) {
  Json vs = Json::array();
  for (const auto& v : f.vertices()) vs.push_back(point_json(v));
  return Json{{"shape", shape_name(f.shape())}, {"vertices", vs}};
}

Json checks_json(const std::vector<InvariantCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json item{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    out.push_back(item);
  }
  return out;
}

bool all_ok(const std::vector<InvariantCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed; });
}

// Flat "key: value" rendering; nested values are printed as compact JSON.
std::string as_text(const Json& j) {
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    if (key == "checks" && value.is_array()) {
      out << "checks:\n";
      for (const auto& c : value) {
        out << "  " << (c["passed"].get<bool>() ? "pass" : "FAIL") << "  " << c["name"].get<std::string>();
        if (c.contains("detail")) out << "  (" << c["detail"].get<std::string>() << ")";
        out << "\n";
      }
      continue;
    }
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return out.str();
}

std::string render(const Json& j, Format format) {
  if (format == Format::Text) return as_text(j);
  return j.dump();
}

void require_command(std::string_view command) {
  if (command != "level" && command != "keel" && command != "chain" && command != "bounds") {
    fail(ErrorCode::InvalidInput, "command: expected level, keel, chain or bounds, got '" + std::string(command) + "'");
  }
}

std::vector<InvariantCheck> polygon_oracle_checks(const LatticePolygon& poly, const PolygonInvariants& inv,
                                                  const PolygonChain& chain) {
  std::vector<InvariantCheck> out;
  if (inv.denominator <= 24) {
    const Rational o = polygon_level_oracle(poly, 24);
    out.push_back({"level_matches_enumeration", o == inv.level, str(o) + " vs " + str(inv.level)});
  }
  const Rational k = polygon_keel_oracle(poly, 12);
  out.push_back({"keel_matches_lattice_count", k == inv.keel, str(k) + " vs " + str(inv.keel)});
  out.push_back({"interior_hull_chain_agrees", chain.level == inv.level && chain.keel == inv.keel,
                 str(chain.level) + "/" + str(chain.keel)});
  return out;
}

std::vector<InvariantCheck> surface_oracle_checks(const DivisorClass& d, const AdjointChainResult& chain,
                                                  const PdegBounds& bounds, std::uint64_t seed) {
  std::vector<InvariantCheck> out = chain.checks;
  out.insert(out.end(), bounds.checks.begin(), bounds.checks.end());
  const Rational o = divisor_level_oracle(d, 12);
  out.push_back({"level_matches_small_q_search", o == chain.level, str(o) + " vs " + str(chain.level)});
  const SurfaceModel& m = d.model();
  const auto bounded = [](const DivisorClass& c) {
    return std::all_of(c.coeffs().begin(), c.coeffs().end(), [](std::int64_t x) { return std::llabs(x) <= 10; });
  };
  if (m.kind() == ModelKind::PlaneBlowup && m.parameter() <= 5) {
    for (const DivisorClass& c : {d, d + DivisorClass::canonical(d.surface())}) {
      if (!bounded(c)) continue;
      const bool a = is_effective(c), b = effectivity_oracle(c, seed);
      out.push_back({"effectivity_matches_interpolation " + to_string(c.coeffs()), a == b,
                     std::string(a ? "effective" : "not effective") + " vs " + (b ? "effective" : "not effective")});
    }
  }
  return out;
}

Json vector_json(const IntVector& v) { return Json(v); }

}  // namespace

Report polygon_command(const LatticePolygon& poly, std::string_view command, Format format, bool oracle,
                       std::uint64_t seed) {
  require_command(command);
  const PolygonInvariants inv = level_keel(poly);
  const PolygonChain chain = polygon_adjoint_chain(poly);
  Report rep;
  std::vector<InvariantCheck> checks;
  if (oracle) {
    checks = polygon_oracle_checks(poly, inv, chain);
    rep.checks_passed = all_ok(checks);
  }
  if (format == Format::Svg) {
    rep.body = render_chain_svg(poly, chain);
    return rep;
  }
  Json j;
  if (command == "level") {
    j = Json{{"level", str(inv.level)}, {"keel", str(inv.keel)}};
  } else if (command == "keel") {
    j = Json{{"keel", str(inv.keel)}, {"level", str(inv.level)}, {"denominator", inv.denominator.get_str()},
             {"optimal_face", figure_json(inv.optimal_face)}};
  } else if (command == "bounds") {
    j = Json{{"level", str(inv.level)},
             {"keel", str(inv.keel)},
             {"lower", str(3 * inv.level + inv.keel)},
             {"upper", str(6 * inv.level + 2 * inv.keel)}};
  } else {
    Json vs = Json::array();
    for (const auto& v : poly.vertices()) vs.push_back(Json::array({v.x, v.y}));
    Json members = Json::array();
    for (const auto& m : chain.members) members.push_back(figure_json(m));
    j = Json{{"vertices", vs},
             {"level", str(inv.level)},
             {"keel", str(inv.keel)},
             {"denominator", inv.denominator.get_str()},
             {"optimal_face", figure_json(inv.optimal_face)},
             {"chain", members},
             {"endpoint", polygon_endpoint_name(chain.endpoint)},
             {"chain_level", str(chain.level)},
             {"chain_keel", str(chain.keel)}};
  }
  if (oracle) j["oracle"] = Json{{"seed", seed}, {"checks", checks_json(checks)}};
  rep.body = render(j, format);
  return rep;
}

Report surface_command(const DivisorClass& d, std::string_view command, Format format, bool oracle,
                       std::uint64_t seed) {
  require_command(command);
  if (format == Format::Svg) fail(ErrorCode::InvalidInput, "format: svg is only available for polygon input");
  const AdjointChainResult chain = adjoint_chain(d);
  Report rep;
  std::vector<InvariantCheck> checks;
  std::optional<PdegBounds> bounds;
  if (oracle || command == "bounds" || command == "chain") bounds = pdeg_bounds(d);
  if (oracle) {
    checks = surface_oracle_checks(d, chain, *bounds, seed);
    rep.checks_passed = all_ok(checks);
  }
  Json j;
  if (command == "level") {
    j = Json{{"level", str(chain.level)}, {"keel", str(chain.keel)}};
  } else if (command == "keel") {
    j = Json{{"keel", str(chain.keel)}, {"level", str(chain.level)}, {"endpoint", endpoint_case_name(chain.endpoint)}};
    if (chain.fiber) {
      j["fiber"] = vector_json(chain.fiber->coeffs());
      j["fiber_multiple"] = chain.fiber_multiple;
    }
  } else if (command == "bounds") {
    j = Json{{"level", str(chain.level)},
             {"keel", str(chain.keel)},
             {"lower", str(bounds->lower)},
             {"upper", str(bounds->upper)}};
    if (bounds->constructive_upper) j["constructive_upper"] = std::to_string(*bounds->constructive_upper);
  } else {
    Json steps = Json::array();
    for (const auto& s : chain.steps) {
      Json cs = Json::array();
      for (const auto& c : s.contractions) {
        cs.push_back(Json{{"exceptional", vector_json(c.exceptional())},
                          {"source", c.source()->tag()},
                          {"target", c.target()->tag()}});
      }
      steps.push_back(Json{{"model", s.divisor.model().tag()}, {"D", vector_json(s.divisor.coeffs())},
                           {"contractions", cs}});
    }
    Json b{{"lower", str(bounds->lower)},
           {"lower_int", bounds->lower_int.get_str()},
           {"upper", str(bounds->upper)}};
    if (bounds->constructive_upper) b["constructive_upper"] = std::to_string(*bounds->constructive_upper);
    b["endpoint_surface"] = endpoint_surface_name(bounds->endpoint_surface);
    b["scale"] = bounds->scale;
    if (bounds->parametrizing_class) b["parametrizing_class"] = vector_json(bounds->parametrizing_class->coeffs());
    j = Json{{"model", d.model().tag()},
             {"D", vector_json(d.coeffs())},
             {"steps", steps},
             {"a", chain.a},
             {"endpoint", endpoint_case_name(chain.endpoint)},
             {"level", str(chain.level)},
             {"keel", str(chain.keel)}};
    if (chain.fiber) {
      j["fiber"] = vector_json(chain.fiber->coeffs());
      j["fiber_multiple"] = chain.fiber_multiple;
    }
    j["bounds"] = b;
    std::vector<InvariantCheck> all = chain.checks;
    all.insert(all.end(), bounds->checks.begin(), bounds->checks.end());
    j["checks"] = checks_json(all);
    rep.checks_passed = rep.checks_passed && all_ok(all);
  }
  if (oracle) j["oracle"] = Json{{"seed", seed}, {"checks", checks_json(checks)}};
  rep.body = render(j, format);
  return rep;
}

Report example_high_command(int n, Format format) {
  if (format == Format::Svg) fail(ErrorCode::InvalidInput, "format: svg is only available for polygon input");
  const ExampleHighReport r = example_high_report(n);
  Json j{{"level", str(r.level)},
         {"keel", str(r.keel)},
         {"lower", str(r.lower)},
         {"param_degree", r.param_degree},
         {"sandwich", r.sandwich ? "ok" : "violated"}};
  if (format == Format::Text) {
    Json profile = Json::array();
    for (const auto& c : r.profile) profile.push_back(Json{{"multiplicity", c.multiplicity}, {"count", c.count}});
    j["upper"] = str(r.upper);
    j["profile"] = profile;
    j["feasible"] = "2p <= " + std::to_string(r.feasibility_slope) + "q";
    j["checks"] = checks_json(r.checks);
  }
  return {render(j, format), r.all_passed()};
}

// ---------------------------------------------------------------------------
// SVG

std::string render_chain_svg(const LatticePolygon& polygon, const PolygonChain& chain) {
  constexpr int kUnit = 32;
  std::int64_t x0 = polygon.vertices()[0].x, x1 = x0, y0 = polygon.vertices()[0].y, y1 = y0;
  for (const auto& v : polygon.vertices()) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  --x0;
  --y0;
  ++x1;
  ++y1;
  const std::int64_t w = (x1 - x0) * kUnit, h = (y1 - y0) * kUnit;
  auto px = [&](const Rational& x) { return Rational(x - x0).get_d() * kUnit; };
  auto py = [&](const Rational& y) { return Rational(y1 - y).get_d() * kUnit; };
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
    << ' ' << h << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const std::size_t n = chain.members.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& m = chain.members[i];
    const int shade = n > 1 ? static_cast<int>(160 - 160 * i / (n - 1)) : 0;
    char color[16];
    std::snprintf(color, sizeof color, "#%02x%02x%02x", shade, shade, shade);
    const auto& vs = m.vertices();
    if (m.shape() == Shape::TwoDimensional) {
      s << "<polygon fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
      for (std::size_t k = 0; k < vs.size(); ++k) s << (k ? " " : "") << fmt(px(vs[k].x)) << ',' << fmt(py(vs[k].y));
      s << "\"/>\n";
    } else if (m.shape() == Shape::Segment) {
      s << "<line stroke=\"" << color << "\" stroke-width=\"2\" x1=\"" << fmt(px(vs[0].x)) << "\" y1=\""
        << fmt(py(vs[0].y)) << "\" x2=\"" << fmt(px(vs[1].x)) << "\" y2=\"" << fmt(py(vs[1].y)) << "\"/>\n";
    } else if (m.shape() == Shape::Point) {
      s << "<circle fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" r=\"6\" cx=\"" << fmt(px(vs[0].x))
        << "\" cy=\"" << fmt(py(vs[0].y)) << "\"/>\n";
    }
  }
  // Lattice points of the bounding box, margin excluded.
  for (std::int64_t y = y0 + 1; y < y1; ++y) {
    for (std::int64_t x = x0 + 1; x < x1; ++x) {
      s << "<circle r=\"2\" fill=\"#888888\" cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y)) << "\"/>\n";
    }
  }
  s << "</svg>\n";
  return s.str();
}

// ---------------------------------------------------------------------------
// Self check

namespace {

LatticePolygon poly(std::vector<IntPoint> pts) { return LatticePolygon::normalize(pts); }

LatticePolygon triangle(std::int64_t n) { return poly({{0, 0}, {n, 0}, {0, n}}); }

LatticePolygon rectangle(std::int64_t m, std::int64_t n) { return poly({{0, 0}, {n, 0}, {n, m}, {0, m}}); }

}  // namespace

std::vector<InvariantCheck> self_check(std::uint64_t seed) {
  std::vector<InvariantCheck> out;
  auto run = [&](const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    out.push_back({name, ok, detail});
  };
  auto same = [](std::string& detail, const Rational& got, const Rational& want) {
    detail = str(got) + " (expected " + str(want) + ")";
    return got == want;
  };

  for (std::int64_t n : {3, 6, 7, 8, 9}) {
    run("triangle side " + std::to_string(n), [&](std::string& d) {
      const auto p = triangle(n);
      const auto inv = level_keel(p);
      return same(d, inv.level, make_rational(n, 3)) && inv.keel == 0 &&
             polygon_level_oracle(p, 24) == inv.level;
    });
  }
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 5}, {2, 4}, {4, 6}, {5, 6}, {1, 1}}) {
    run("rectangle " + std::to_string(m) + "x" + std::to_string(n), [&](std::string& d) {
      const auto p = rectangle(m, n);
      const auto inv = level_keel(p);
      return same(d, inv.level, make_rational(m, 2)) && inv.keel == n - m &&
             polygon_level_oracle(p, 24) == inv.level;
    });
  }
  run("hexagon interior hull chain", [&](std::string& d) {
    const auto c = polygon_adjoint_chain(poly({{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 2}}));
    return c.members.size() == 2 && c.members[1].shape() == Shape::Point && same(d, c.level, 1);
  });
  run("square [0,4]^2 interior hull chain", [&](std::string& d) {
    const auto c = polygon_adjoint_chain(rectangle(4, 4));
    return c.members.size() == 3 && c.members[2].shape() == Shape::Point && same(d, c.level, 2);
  });
  run("unit square offsets", [&](std::string&) {
    const auto sq = rectangle(1, 1);
    const auto f = offset_scale(sq, 2, 1);
    return f.shape() == Shape::Point && f.vertices()[0] == RatPoint{1, 1} && offset_scale(sq, 1, 1).empty();
  });

  const auto p2 = SurfaceModel::plane_blowup(0);
  const auto qd = SurfaceModel::quadric();
  for (std::int64_t n = 1; n <= 9; ++n) {
    run("chain nL, n = " + std::to_string(n), [&](std::string& d) {
      const auto r = adjoint_chain(DivisorClass(p2, {n}));
      return same(d, r.level, make_rational(n, 3)) && r.keel == 0 && r.all_passed();
    });
  }
  for (std::int64_t m = 1; m <= 4; ++m) {
    for (std::int64_t n = m; n <= 5; ++n) {
      run("chain quadric " + std::to_string(m) + "F1+" + std::to_string(n) + "F2", [&](std::string& d) {
        const auto r = adjoint_chain(DivisorClass(qd, {m, n}));
        return same(d, r.level, make_rational(m, 2)) && r.keel == n - m && r.all_passed();
      });
    }
  }
  run("chain cubic surface -K", [&](std::string& d) {
    const auto s = SurfaceModel::plane_blowup(6);
    const auto r = adjoint_chain(-DivisorClass::canonical(s));
    return same(d, r.level, 1) && r.keel == 0 && r.a == 1 && r.terminal().model().tag() == "plane_blowup(0)";
  });
  run("chain quadric F1+F2 ends Half", [&](std::string&) {
    return adjoint_chain(DivisorClass(qd, {1, 1})).endpoint == EndpointCase::Half;
  });
  run("chain quadric F1+2F2 ends HalfFiber", [&](std::string& d) {
    const auto r = adjoint_chain(DivisorClass(qd, {1, 2}));
    return r.endpoint == EndpointCase::HalfFiber && same(d, r.keel, 1);
  });
  run("chain hirzebruch(2) 2C+5f vs small-q search", [&](std::string& d) {
    const DivisorClass D(SurfaceModel::hirzebruch(2), {2, 5});
    return same(d, level_keel_divisor(D).level, divisor_level_oracle(D, 12));
  });
  run("bounds cubic surface", [&](std::string&) {
    const auto b = pdeg_bounds(DivisorClass(SurfaceModel::plane_blowup(6), {3, 1, 1, 1, 1, 1, 1}));
    return b.lower == 3 && b.upper == 6 && b.constructive_upper == 3 && b.all_passed();
  });
  run("bounds quadric 2F1+5F2", [&](std::string&) {
    const auto b = pdeg_bounds(DivisorClass(qd, {2, 5}));
    return b.lower == 6 && b.upper == 12 && b.constructive_upper == 7 && b.all_passed();
  });
  run("bounds plane 3L", [&](std::string&) {
    const auto b = pdeg_bounds(DivisorClass(p2, {3}));
    return b.lower == 3 && b.upper == 6 && b.constructive_upper == 3 && b.all_passed();
  });
  run("endpoint quadric_deg2_blowup fiber", [&](std::string&) {
    const auto s = SurfaceModel::quadric_deg2_blowup();
    return classify_endpoint(DivisorClass(s, {1, 0}), EndpointCase::FiberMultiple, DivisorClass(s, {1, 0})) ==
           EndpointSurface::ConicQuadricDeg2;
  });
  for (int n : {5, 7, 9}) {
    run("example-high n = " + std::to_string(n), [&](std::string& d) {
      const auto r = example_high_report(n);
      const std::int64_t m = n;
      return same(d, r.level, m + make_rational(1, 2)) && r.keel == make_rational(2 * m * m - 5 * m - 5, 4) &&
             r.lower == make_rational(2 * m * m + 7 * m + 1, 4) && r.param_degree == m * m + 1 && r.all_passed();
    });
  }
  run("(-1)-class counts r = 1..8", [&](std::string& d) {
    const std::vector<std::size_t> want{1, 3, 6, 10, 16, 27, 56, 240};
    for (int r = 1; r <= 8; ++r) {
      if (neg_one_vectors(r).size() != want[static_cast<std::size_t>(r - 1)]) {
        d = "r = " + std::to_string(r);
        return false;
      }
    }
    return true;
  });
  run("fat points", [&](std::string&) {
    return fatpoint_dim(FatPointProblem::general(1, {1}, seed)) == 1 &&
           fatpoint_dim(FatPointProblem::general(2, {1, 1, 1, 1, 1}, seed)) == 0 &&
           fatpoint_dim(FatPointProblem::general(1, {1, 1, 1}, seed)) == -1;
  });
  run("effectivity oracle agrees on r <= 3, d <= 5", [&](std::string& d) {
    for (int r = 0; r <= 3; ++r) {
      const auto s = SurfaceModel::plane_blowup(r);
      IntVector v(static_cast<std::size_t>(r) + 1, 0);
      std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == v.size()) {
          const DivisorClass c(s, v);
          if (is_effective(c) != effectivity_oracle(c, seed)) {
            d = to_string(v);
            return false;
          }
          return true;
        }
        for (std::int64_t x = 0; x <= (i == 0 ? 5 : 3); ++x) {
          v[i] = x;
          if (!rec(i + 1)) return false;
        }
        return true;
      };
      if (!rec(0)) return false;
    }
    return true;
  });
  run("cross-backend hexagon vs plane_blowup(3) -K", [&](std::string& d) {
    const auto a = level_keel(poly({{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}}));
    const auto b = level_keel_divisor(DivisorClass(SurfaceModel::plane_blowup(3), {3, 1, 1, 1}));
    return same(d, a.level, b.level) && a.keel == b.keel && a.level == 1;
  });
  run("cross-backend square [0,2]^2 vs quadric 2F1+2F2", [&](std::string& d) {
    const auto a = level_keel(rectangle(2, 2));
    const auto b = level_keel_divisor(DivisorClass(qd, {2, 2}));
    return same(d, a.level, b.level) && a.keel == b.keel && a.level == 1;
  });
  return out;
}

Report self_check_command(std::uint64_t seed, Format format) {
  if (format == Format::Svg) fail(ErrorCode::InvalidInput, "format: svg is only available for polygon input");
  const auto checks = self_check(seed);
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const InvariantCheck& c) { return !c.passed; });
  Json j{{"seed", seed},
         {"passed", static_cast<std::int64_t>(checks.size()) - failed},
         {"failed", failed},
         {"checks", checks_json(checks)}};
  return {render(j, format), failed == 0};
}

}  // namespace adjkeel
