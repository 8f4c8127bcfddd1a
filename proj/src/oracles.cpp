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

#include <adjkeel/error.hpp>

#include "linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

namespace adjkeel {

FatPointProblem FatPointProblem::general(int degree, std::vector<int> multiplicities, std::uint64_t seed) {
  FatPointProblem p;
  p.degree = degree;
  p.multiplicities = std::move(multiplicities);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> num(-60, 60);
  std::uniform_int_distribution<std::int64_t> den(1, 7);
  std::set<std::pair<Rational, Rational>> seen;
  while (p.points.size() < p.multiplicities.size()) {
    RatPoint pt{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
    if (seen.insert({pt.x, pt.y}).second) p.points.push_back(pt);
  }
  return p;
}

int fatpoint_virtual_dim(int degree, const std::vector<int>& multiplicities) {
  int v = (degree + 2) * (degree + 1) / 2 - 1;
  for (int m : multiplicities) v -= m * (m + 1) / 2;
  return v;
}

int fatpoint_dim(const FatPointProblem& problem) {
  const int d = problem.degree;
  if (d < 0) return -1;
  if (problem.points.size() != problem.multiplicities.size()) {
    fail(ErrorCode::InvalidInput, "fat points: point and multiplicity counts differ");
  }
  std::vector<std::pair<int, int>> monomials;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) monomials.emplace_back(i, j);
  }
  // falling[i][s] = i! / (i-s)!
  std::vector<std::vector<Rational>> falling(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    falling[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int s = 1; s <= i; ++s) {
      falling[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] =
          falling[static_cast<std::size_t>(i)][static_cast<std::size_t>(s) - 1] * (i - s + 1);
    }
  }
  linalg::RatMatrix rows;
  for (std::size_t k = 0; k < problem.points.size(); ++k) {
    const int m = problem.multiplicities[k];
    const RatPoint& pt = problem.points[k];
    std::vector<Rational> xp(static_cast<std::size_t>(d) + 1, 1), yp(static_cast<std::size_t>(d) + 1, 1);
    for (int e = 1; e <= d; ++e) {
      xp[static_cast<std::size_t>(e)] = xp[static_cast<std::size_t>(e) - 1] * pt.x;
      yp[static_cast<std::size_t>(e)] = yp[static_cast<std::size_t>(e) - 1] * pt.y;
    }
    for (int s = 0; s < m; ++s) {
      for (int t = 0; s + t < m; ++t) {
        std::vector<Rational> row(monomials.size());
        for (std::size_t c = 0; c < monomials.size(); ++c) {
          const auto [i, j] = monomials[c];
          if (i < s || j < t) continue;
          row[c] = falling[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] *
                   falling[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)] *
                   xp[static_cast<std::size_t>(i - s)] * yp[static_cast<std::size_t>(j - t)];
        }
        rows.push_back(std::move(row));
      }
    }
  }
  const std::size_t rank = linalg::eliminate(rows);
  return static_cast<int>(monomials.size() - rank) - 1;
}

namespace {

std::int64_t max_offset(const LatticePolygon& polygon, std::int64_t q) {
  auto nonempty = [&](std::int64_t p) { return !offset_scale(polygon, q, p).empty(); };
  std::int64_t lo = 0, hi = 1;
  while (nonempty(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (nonempty(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

Rational polygon_level_oracle(const LatticePolygon& polygon, int max_q) {
  Rational best = 0;
  for (std::int64_t q = 1; q <= max_q; ++q) best = std::max(best, make_rational(max_offset(polygon, q), q));
  return best;
}

Rational polygon_keel_oracle(const LatticePolygon& polygon, int max_k) {
  const Rational level = polygon_level_oracle(polygon, 24);
  const std::int64_t den = to_int64(BigInt(level.get_den()));
  const std::int64_t num = to_int64(BigInt(level.get_num()));
  Rational best = 0;
  for (std::int64_t k = 1; k <= max_k; ++k) {
    const RationalPolygon face = offset_scale(polygon, k * den, k * num);
    if (face.shape() == Shape::TwoDimensional) {
      fail(ErrorCode::InvariantViolation, "polygon_keel_oracle: figure at the level is two-dimensional");
    }
    const auto pts = lattice_points(face);
    if (pts.size() > 1) best = std::max(best, make_rational(static_cast<std::int64_t>(pts.size()) - 1, k * den));
  }
  return best;
}

namespace {

struct FatPointCache {
  std::mutex mu;
  std::map<std::tuple<int, std::vector<int>, std::uint64_t>, int> dims;
};

FatPointCache& cache() {
  static FatPointCache c;
  return c;
}

int cached_dim(int d, std::vector<int> mults, std::uint64_t seed) {
  mults.erase(std::remove(mults.begin(), mults.end(), 0), mults.end());
  std::sort(mults.rbegin(), mults.rend());
  auto key = std::make_tuple(d, mults, seed);
  {
    std::lock_guard lock(cache().mu);
    if (auto it = cache().dims.find(key); it != cache().dims.end()) return it->second;
  }
  const int dim = fatpoint_dim(FatPointProblem::general(d, mults, seed));
  std::lock_guard lock(cache().mu);
  cache().dims.emplace(std::move(key), dim);
  return dim;
}

}  // namespace

bool effectivity_oracle(const DivisorClass& d, std::uint64_t seed) {
  const SurfaceModel& m = d.model();
  if (m.kind() != ModelKind::PlaneBlowup) {
    fail(ErrorCode::InvalidInput, "effectivity_oracle: expects a plane_blowup model");
  }
  if (m.parameter() > 5) fail(ErrorCode::UnsupportedRank, "effectivity_oracle: r must be at most 5");
  const auto& c = d.coeffs();
  const std::int64_t deg = c[0];
  if (deg < 0) return false;
  std::vector<int> mults;
  for (std::size_t i = 1; i < c.size(); ++i) mults.push_back(static_cast<int>(std::max<std::int64_t>(c[i], 0)));
  int dim = cached_dim(static_cast<int>(deg), mults, seed);
  // A nonempty system below the expected dimension bound may be a special
  // sample; a second sample settles it.
  if (dim >= 0 && fatpoint_virtual_dim(static_cast<int>(deg), mults) < 0) {
    dim = std::min(dim, cached_dim(static_cast<int>(deg), mults, seed ^ 0x9e3779b97f4a7c15ULL));
  }
  return dim >= 0;
}

Rational divisor_level_oracle(const DivisorClass& d, int max_q) {
  const DivisorClass k = DivisorClass::canonical(d.surface());
  Rational best = 0;
  for (std::int64_t q = 1; q <= max_q; ++q) {
    std::int64_t p = 0;
    while (is_effective(d * q + k * (p + 1))) ++p;
    best = std::max(best, make_rational(p, q));
  }
  return best;
}

}  // namespace adjkeel
