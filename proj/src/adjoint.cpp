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

#include <algorithm>
#include <sstream>

namespace adjkeel {

const char* endpoint_case_name(EndpointCase e) noexcept {
  switch (e) {
    case EndpointCase::ZeroClass: return "ZeroClass";
    case EndpointCase::FiberMultiple: return "FiberMultiple";
    case EndpointCase::Third: return "Third";
    case EndpointCase::TwoThirds: return "TwoThirds";
    case EndpointCase::Half: return "Half";
    case EndpointCase::HalfFiber: return "HalfFiber";
  }
  return "?";
}

const char* endpoint_surface_name(EndpointSurface e) noexcept {
  switch (e) {
    case EndpointSurface::Plane: return "plane";
    case EndpointSurface::Quadric: return "quadric";
    case EndpointSurface::DelPezzo5: return "del_pezzo_5";
    case EndpointSurface::DelPezzo6: return "del_pezzo_6";
    case EndpointSurface::RuledHirzebruch: return "ruled_hirzebruch";
    case EndpointSurface::ConicQuadricDeg2: return "conic_quadric_deg2";
    case EndpointSurface::ConicPlaneDeg4: return "conic_plane_deg4";
  }
  return "?";
}

namespace {

bool every_check(const std::vector<InvariantCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed; });
}

void add_check(std::vector<InvariantCheck>& out, std::string name, bool ok, std::string detail = {}) {
  out.push_back({std::move(name), ok, std::move(detail)});
}

std::int64_t square(const DivisorClass& d) { return intersect(d, d); }

// Exact division of every coefficient, or nullopt.
std::optional<DivisorClass> exact_quotient(const DivisorClass& d, std::int64_t k) {
  for (auto x : d.coeffs()) {
    if (x % k != 0) return std::nullopt;
  }
  return d.divided_by(k);
}

bool safe_effective(const DivisorClass& d, std::string& why) {
  try {
    return is_effective(d);
  } catch (const Error& e) {
    why = e.what();
    return false;
  }
}

}  // namespace

bool AdjointChainResult::all_passed() const { return every_check(checks); }
bool PdegBounds::all_passed() const { return every_check(checks); }
bool ExampleHighReport::all_passed() const { return every_check(checks); }

AdjointChainResult adjoint_chain(const DivisorClass& d, TieBreak tie) {
  if (!is_nef(d)) fail(ErrorCode::NotNef, "D: " + to_string(d.coeffs()) + " is not nef on " + d.model().tag());
  const std::int64_t d2 = square(d);
  if (d2 <= 0) fail(ErrorCode::NotBig, "D: D^2 = " + std::to_string(d2) + " is not positive");
  if (!is_effective(d)) fail(ErrorCode::NotEffective, "D: " + to_string(d.coeffs()) + " is not effective");

  AdjointChainResult out;
  Minimalization first = minimalize(d, tie);
  out.steps.push_back({first.divisor, std::move(first.contractions)});
  const std::int64_t cap = d2 + 8;
  for (std::int64_t i = 0;; ++i) {
    const DivisorClass& cur = out.steps.back().divisor;
    const DivisorClass adj = cur + DivisorClass::canonical(cur.surface());
    if (!is_effective(adj)) break;
    if (i >= cap) fail(ErrorCode::NonTerminating, "adjoint_chain: more than D^2 + 8 steps");
    Minimalization next = minimalize(adj, tie);
    out.steps.push_back({next.divisor, std::move(next.contractions)});
  }
  out.a = static_cast<int>(out.steps.size()) - 1;

  const DivisorClass& da = out.terminal();
  const DivisorClass k = DivisorClass::canonical(da.surface());
  const std::int64_t da2 = square(da);
  if (da.is_zero()) {
    out.endpoint = EndpointCase::ZeroClass;
    out.level = out.a;
    out.keel = 0;
  } else if (da2 == 0) {
    out.endpoint = EndpointCase::FiberMultiple;
    out.fiber_multiple = da.content();
    out.fiber = da.divided_by(out.fiber_multiple);
    out.level = out.a;
    out.keel = out.fiber_multiple;
  } else if (da2 < 0) {
    fail(ErrorCode::UnknownEndpoint, "adjoint_chain: terminal class has negative square");
  } else if ((da * 3 + k).is_zero()) {
    out.endpoint = EndpointCase::Third;
    out.level = out.a + make_rational(1, 3);
    out.keel = 0;
  } else if ((da * 3 + k * 2).is_zero()) {
    out.endpoint = EndpointCase::TwoThirds;
    out.level = out.a + make_rational(2, 3);
    out.keel = 0;
  } else {
    const DivisorClass b = da * 2 + k;
    out.level = out.a + make_rational(1, 2);
    if (b.is_zero()) {
      out.endpoint = EndpointCase::Half;
      out.keel = 0;
    } else if (square(b) == 0) {
      out.endpoint = EndpointCase::HalfFiber;
      out.fiber_multiple = b.content();
      out.fiber = b.divided_by(out.fiber_multiple);
      out.keel = make_rational(out.fiber_multiple, 2);
    } else {
      fail(ErrorCode::UnknownEndpoint, "adjoint_chain: terminal class " + to_string(da.coeffs()) + " on " +
                                           da.model().tag() + " matches no endpoint case");
    }
  }

  // Invariants.
  bool nef_eff = true;
  std::string why;
  for (std::size_t i = 0; i < out.steps.size(); ++i) {
    const DivisorClass& di = out.steps[i].divisor;
    if (!is_nef(di) || !safe_effective(di, why)) {
      nef_eff = false;
      why = "D_" + std::to_string(i) + " = " + to_string(di.coeffs()) + (why.empty() ? "" : ": " + why);
      break;
    }
  }
  add_check(out.checks, "steps_nef_and_effective", nef_eff, why);

  bool positive = true;
  for (int i = 0; i < out.a; ++i) positive = positive && square(out.steps[static_cast<std::size_t>(i)].divisor) > 0;
  add_check(out.checks, "positive_square_before_end", positive);
  add_check(out.checks, "a_at_most_level", Rational(out.a) <= out.level);
  add_check(out.checks, "level_denominator_divides_6", 6 % out.level.get_den() == 0,
            "level " + to_string(out.level));

  if (out.fiber) {
    const DivisorClass& p = *out.fiber;
    const DivisorClass kp = DivisorClass::canonical(p.surface());
    add_check(out.checks, "fiber_square_zero_and_pk_minus_two", square(p) == 0 && intersect(p, kp) == -2,
              "P = " + to_string(p.coeffs()));
  }

  // D = pullback of the minimal-model class, step by step.
  bool pulls = true;
  for (std::size_t i = 0; i < out.steps.size() && pulls; ++i) {
    DivisorClass source = i == 0 ? d
                                 : out.steps[i - 1].divisor + DivisorClass::canonical(out.steps[i - 1].divisor.surface());
    const auto& cs = out.steps[i].contractions;
    DivisorClass back = out.steps[i].divisor;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) back = it->pullback(back);
    pulls = back == source;
  }
  add_check(out.checks, "pullback_recovers_class", pulls);
  return out;
}

LevelKeel level_keel_divisor(const DivisorClass& d) {
  const AdjointChainResult r = adjoint_chain(d);
  return {r.level, r.keel};
}

namespace {

// C with CP = 1 and K = -(n+2)P - 2C, n = -C^2.
std::optional<DivisorClass> ruled_section(const DivisorClass& p) {
  const SurfaceModel& m = p.model();
  const DivisorClass k = DivisorClass::canonical(p.surface());
  std::vector<IntVector> pool = m.effective_generators();
  pool.insert(pool.end(), m.contractibles().begin(), m.contractibles().end());
  for (const auto& g : pool) {
    const DivisorClass c(p.surface(), g);
    if (intersect(c, p) != 1) continue;
    const std::int64_t n = -square(c);
    if (n < 0) continue;
    if (k == p * (-(n + 2)) - c * 2) return c;
  }
  return std::nullopt;
}

}  // namespace

EndpointSurface classify_endpoint(const DivisorClass& terminal, EndpointCase endpoint,
                                  const std::optional<DivisorClass>& fiber) {
  const SurfacePtr& s = terminal.surface();
  const DivisorClass k = DivisorClass::canonical(s);
  const std::int64_t k2 = square(k);
  const bool fibered = endpoint == EndpointCase::FiberMultiple || endpoint == EndpointCase::HalfFiber;
  auto unknown = [&]() -> EndpointSurface {
    fail(ErrorCode::UnknownEndpoint, "classify_endpoint: " + s->tag() + " with K^2 = " + std::to_string(k2) +
                                         " matches no " + (fibered ? "conic bundle" : "minimal surface") + " case");
  };
  if (fibered) {
    if (!fiber) fail(ErrorCode::InvalidInput, "classify_endpoint: fiber class required");
    const DivisorClass& p = *fiber;
    if (k2 == 8 && ruled_section(p)) return EndpointSurface::RuledHirzebruch;
    if (k2 == 6) {
      const DivisorClass e = -k - p * 2;
      if (square(e) == -2 && intersect(p, e) == 2) return EndpointSurface::ConicQuadricDeg2;
    }
    if (k2 == 5) {
      const DivisorClass l = -(p + k);
      if (square(l) == 1) return EndpointSurface::ConicPlaneDeg4;
    }
    return unknown();
  }
  if (k2 == 9 && exact_quotient(k, 3)) return EndpointSurface::Plane;
  if (k2 == 8 && exact_quotient(k, 2)) return EndpointSurface::Quadric;
  if (s->rank() == 1 && k2 == 5) return EndpointSurface::DelPezzo5;
  if (s->rank() == 1 && k2 == 6) return EndpointSurface::DelPezzo6;
  return unknown();
}

PdegBounds pdeg_bounds(const DivisorClass& d) {
  const AdjointChainResult chain = adjoint_chain(d);
  PdegBounds out;
  out.level = chain.level;
  out.keel = chain.keel;
  out.lower = 3 * out.level + out.keel;
  out.lower_int = ceil_of(out.lower);
  out.upper = 6 * out.level + 2 * out.keel;

  switch (chain.endpoint) {
    case EndpointCase::ZeroClass:
    case EndpointCase::FiberMultiple: out.scale = 1; break;
    case EndpointCase::Third:
    case EndpointCase::TwoThirds: out.scale = 3; break;
    case EndpointCase::Half:
    case EndpointCase::HalfFiber: out.scale = 2; break;
  }
  const std::int64_t s = out.scale;
  const AdjointChainResult scaled = s == 1 ? chain : adjoint_chain(d * s);
  if (scaled.endpoint != EndpointCase::ZeroClass && scaled.endpoint != EndpointCase::FiberMultiple) {
    fail(ErrorCode::InvariantViolation, "pdeg_bounds: scaled chain ends at a fractional level");
  }
  add_check(out.checks, "scaled_chain_scales", scaled.level == s * out.level && scaled.keel == s * out.keel,
            "scale " + std::to_string(s));

  const DivisorClass& da = scaled.terminal();
  const SurfacePtr& sa = da.surface();
  const DivisorClass ka = DivisorClass::canonical(sa);
  out.endpoint_surface = classify_endpoint(da, scaled.endpoint, scaled.fiber);

  const std::int64_t a = scaled.a;
  const std::int64_t k = scaled.fiber_multiple;
  std::optional<DivisorClass> q;
  std::int64_t closed_form = 0;
  switch (out.endpoint_surface) {
    case EndpointSurface::Plane:
      q = ka.divided_by(-3);
      closed_form = 3 * a;
      break;
    case EndpointSurface::Quadric:
      q = ka.divided_by(-2);
      closed_form = 4 * a;
      break;
    case EndpointSurface::DelPezzo5:
      q = -ka;
      closed_form = 5 * a;
      break;
    case EndpointSurface::DelPezzo6:
      q = -ka;
      closed_form = 6 * a;
      break;
    case EndpointSurface::RuledHirzebruch: {
      const DivisorClass& p = *scaled.fiber;
      const DivisorClass c = *ruled_section(p);
      const std::int64_t n = -square(c);
      if (n == 0) {
        q = c + p;
        closed_form = 4 * a + k;
      } else {
        q = c + p * n;
        closed_form = a * n + 2 * a + k;
        add_check(out.checks, "ruled_nef_guard", 2 * a + k - a * n >= 0,
                  "2a+k-an = " + std::to_string(2 * a + k - a * n));
      }
      break;
    }
    case EndpointSurface::ConicQuadricDeg2:
      q = -ka - *scaled.fiber;
      closed_form = 4 * a + 2 * k;
      break;
    case EndpointSurface::ConicPlaneDeg4:
      q = -(*scaled.fiber + ka);
      closed_form = 3 * a + 2 * k;
      break;
  }

  DivisorClass pushed = d;
  for (const auto& step : scaled.steps) {
    for (const auto& c : step.contractions) pushed = c.pushforward(pushed);
  }
  const std::int64_t value = intersect(*q, pushed);
  out.constructive_upper = value;
  out.parametrizing_class = q;

  const std::int64_t via_chain = intersect(*q, da - ka * a);
  add_check(out.checks, "projection_formula", s * value == via_chain,
            std::to_string(s) + " * " + std::to_string(value) + " vs " + std::to_string(via_chain));
  add_check(out.checks, "case_formula", s * value == closed_form,
            std::to_string(s) + " * " + std::to_string(value) + " vs " + std::to_string(closed_form));
  add_check(out.checks, "parametrizing_class_nef", is_nef(*q), to_string(q->coeffs()));
  add_check(out.checks, "parametrizing_class_qk_at_most_minus_3", intersect(*q, ka) <= -3,
            "QK = " + std::to_string(intersect(*q, ka)));
  if (scaled.endpoint == EndpointCase::ZeroClass) {
    add_check(out.checks, "parametrizing_class_anticanonical_degree_at_most_6", -intersect(*q, ka) <= 6,
              "Q(-K) = " + std::to_string(-intersect(*q, ka)));
  }
  add_check(out.checks, "sandwich", out.lower <= Rational(value) && Rational(value) <= out.upper,
            to_string(out.lower) + " <= " + std::to_string(value) + " <= " + to_string(out.upper));
  return out;
}

ExampleHighReport example_high_report(int n) {
  if (n < 5 || n % 2 == 0) {
    fail(ErrorCode::BadN, "n: expected an odd integer >= 5, got " + std::to_string(n));
  }
  const std::int64_t m = n;
  ExampleHighReport out;
  out.n = n;
  out.level = m + make_rational(1, 2);
  out.keel = make_rational(2 * m * m - 5 * m - 5, 4);
  out.lower = make_rational(2 * m * m + 7 * m + 1, 4);
  out.upper = 6 * out.level + 2 * out.keel;
  out.param_degree = m * m + 1;
  out.feasibility_slope = 2 * m + 1;
  out.profile = {{m * m - 2 * m, 1}, {2 * m, (m - 3) / 2}, {m, 2 * m + 3}, {1, m * m - 2 * m}};
  const Rational deg(out.param_degree);
  out.sandwich = out.lower <= deg && deg <= out.upper;

  add_check(out.checks, "lower_is_3_level_plus_keel", out.lower == 3 * out.level + out.keel);
  add_check(out.checks, "sandwich", out.sandwich,
            to_string(out.lower) + " <= " + std::to_string(out.param_degree) + " <= " + to_string(out.upper));

  // H^2 from the base points.
  std::int64_t h2 = out.param_degree * out.param_degree;
  for (const auto& c : out.profile) h2 -= c.count * c.multiplicity * c.multiplicity;
  add_check(out.checks, "profile_self_intersection", h2 == 2 * m + 1, "H^2 = " + std::to_string(h2));

  // qH + pK has degree q(n^2+1) - 3p and multiplicity qm - p at a point of
  // multiplicity m.
  auto degree_at = [&](std::int64_t q, std::int64_t p) { return q * out.param_degree - 3 * p; };
  const std::int64_t main = out.profile[0].multiplicity;
  const std::int64_t q = 2, p = out.feasibility_slope;
  const std::int64_t big = degree_at(q, p);
  add_check(out.checks, "adjoint_degree", big == 2 * m * m - 6 * m - 1, "N = " + std::to_string(big));
  // At p/q = level the main point has full multiplicity: a pencil of lines
  // through it, plus fixed lines to the 2n-points with multiplicity 2n-1.
  add_check(out.checks, "cone_over_main_point", q * main - p == big);
  const std::int64_t fixed = out.profile[1].count * (q * out.profile[1].multiplicity - p);
  const Rational keel_from_profile = make_rational(big - fixed, 2);
  add_check(out.checks, "keel_from_profile", keel_from_profile == out.keel,
            to_string(keel_from_profile) + " vs " + to_string(out.keel));
  // One step further the main point multiplicity exceeds the degree.
  add_check(out.checks, "empty_beyond_level", q * main - (p + 1) > degree_at(q, p + 1));
  add_check(out.checks, "level_is_feasibility_slope", out.level == make_rational(out.feasibility_slope, 2));
  return out;
}

}  // namespace adjkeel
