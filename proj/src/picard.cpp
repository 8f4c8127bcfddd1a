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

#include <adjkeel/picard.hpp>

#include <adjkeel/error.hpp>

#include "linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

namespace adjkeel {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) fail(ErrorCode::InvalidInput, "matrix: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  IntVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
    }
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Signature signature(const IntMatrix& symmetric) {
  const std::size_t n = symmetric.rows();
  linalg::RatMatrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(symmetric(i, j));
  }
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(a[pivot][pivot]) == 0) ++pivot;
    if (pivot == n) {
      // No nonzero diagonal entry left: make one from an off-diagonal pair.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (sgn(a[i][j]) != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        sig.zero += static_cast<int>(n - k);
        return sig;
      }
      // row/col pi += row/col pj
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      pivot = pi;
    }
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      for (auto& row : a) std::swap(row[pivot], row[k]);
    }
    const Rational p = a[k][k];
    if (sgn(p) > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    // Schur complement keeps the trailing block symmetric.
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a[r][k]) == 0) continue;
      const Rational f = a[r][k] / p;
      for (std::size_t c = k + 1; c < n; ++c) a[r][c] -= f * a[k][c];
    }
    for (std::size_t r = k + 1; r < n; ++r) a[r][k] = a[k][r] = 0;
  }
  return sig;
}

// ---------------------------------------------------------------------------
// SurfaceModel

namespace {

std::int64_t bilinear(const IntMatrix& g, const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < g.cols(); ++j) s += a[i] * g(i, j) * b[j];
  }
  return s;
}

IntVector unit(std::size_t n, std::size_t i, std::int64_t v = 1) {
  IntVector e(n, 0);
  e[i] = v;
  return e;
}

void search_neg_one(int r, std::int64_t d, std::size_t pos, std::int64_t sum_rem, std::int64_t sq_rem,
                    IntVector& cur, std::vector<IntVector>& out) {
  const std::int64_t left = r - static_cast<std::int64_t>(pos);
  if (left == 0) {
    if (sum_rem == 0 && sq_rem == 0) out.push_back(cur);
    return;
  }
  // Cauchy-Schwarz: sum^2 <= left * squares.
  if (sq_rem < 0 || sum_rem * sum_rem > left * sq_rem) return;
  const auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(sq_rem)) + 1e-9);
  for (std::int64_t m = -bound; m <= bound; ++m) {
    cur[pos + 1] = m;
    search_neg_one(r, d, pos + 1, sum_rem - m, sq_rem - m * m, cur, out);
  }
  cur[pos + 1] = 0;
}

std::vector<IntVector> compute_neg_one(int r) {
  std::vector<IntVector> out;
  if (r <= 0) return out;
  // (3d - 1)^2 <= r (d^2 + 1) bounds the degree.
  for (std::int64_t d = 0;; ++d) {
    if ((3 * d - 1) * (3 * d - 1) > r * (d * d + 1)) {
      if (d > 0) break;
      continue;
    }
    IntVector cur(static_cast<std::size_t>(r) + 1, 0);
    cur[0] = d;
    search_neg_one(r, d, 0, 3 * d - 1, d * d + 1, cur, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<IntVector>& neg_one_vectors(int r) {
  if (r > 8) fail(ErrorCode::UnsupportedRank, "neg_one_classes: r > 8 gives infinitely many classes");
  if (r < 0) fail(ErrorCode::InvalidInput, "r: must be nonnegative");
  static std::array<std::vector<IntVector>, 9> cache;
  static std::array<std::once_flag, 9> once;
  std::call_once(once[static_cast<std::size_t>(r)], [r] { cache[static_cast<std::size_t>(r)] = compute_neg_one(r); });
  return cache[static_cast<std::size_t>(r)];
}

SurfacePtr SurfaceModel::plane_blowup(int r) {
  if (r < 0) fail(ErrorCode::InvalidInput, "r: must be nonnegative");
  auto m = std::shared_ptr<SurfaceModel>(new SurfaceModel());
  const auto n = static_cast<std::size_t>(r) + 1;
  m->kind_ = ModelKind::PlaneBlowup;
  m->parameter_ = r;
  m->gram_ = IntMatrix(n, n);
  m->gram_(0, 0) = 1;
  for (std::size_t i = 1; i < n; ++i) m->gram_(i, i) = -1;
  m->canonical_ = IntVector(n, -1);
  m->canonical_[0] = -3;
  if (r > 8) {
    m->has_cone_ = false;
    for (std::size_t i = 1; i < n; ++i) m->contractibles_.push_back(unit(n, i, -1));
    return m;
  }
  if (r == 0) {
    m->effective_ = {IntVector{1}};
  } else if (r == 1) {
    m->effective_ = {IntVector{0, -1}, IntVector{1, 1}};
  } else {
    m->effective_ = neg_one_vectors(r);
  }
  if (r >= 1) m->contractibles_ = neg_one_vectors(r);
  m->nef_.push_back(unit(n, 0));
  IntVector anti = m->canonical_;
  for (auto& x : anti) x = -x;
  m->nef_.push_back(anti);
  for (std::size_t i = 1; i < n; ++i) {
    IntVector fiber = unit(n, 0);
    fiber[i] = 1;
    m->nef_.push_back(fiber);
  }
  return m;
}

SurfacePtr SurfaceModel::hirzebruch(int n) {
  if (n < 0) fail(ErrorCode::InvalidInput, "n: must be nonnegative");
  auto m = std::shared_ptr<SurfaceModel>(new SurfaceModel());
  m->kind_ = ModelKind::Hirzebruch;
  m->parameter_ = n;
  m->gram_ = IntMatrix::from_rows({{-n, 1}, {1, 0}});
  m->canonical_ = {-2, -(n + 2)};
  m->effective_ = {{1, 0}, {0, 1}};
  m->nef_ = {{0, 1}, {1, n}};
  if (n == 1) m->contractibles_ = {{1, 0}};
  return m;
}

SurfacePtr SurfaceModel::quadric() {
  auto m = std::shared_ptr<SurfaceModel>(new SurfaceModel());
  m->kind_ = ModelKind::Quadric;
  m->gram_ = IntMatrix::from_rows({{0, 1}, {1, 0}});
  m->canonical_ = {-2, -2};
  m->effective_ = {{1, 0}, {0, 1}};
  m->nef_ = {{1, 0}, {0, 1}};
  return m;
}

SurfacePtr SurfaceModel::quadric_deg2_blowup() {
  auto m = std::shared_ptr<SurfaceModel>(new SurfaceModel());
  m->kind_ = ModelKind::QuadricDeg2Blowup;
  m->gram_ = IntMatrix::from_rows({{0, 2}, {2, -2}});
  m->canonical_ = {-2, -1};
  m->effective_ = {{1, 0}, {0, 1}};
  m->nef_ = {{1, 0}, {1, 1}};
  m->contractibles_ = {{0, 1}};
  return m;
}

SurfacePtr SurfaceModel::plane_deg4_blowup() {
  auto m = std::shared_ptr<SurfaceModel>(new SurfaceModel());
  m->kind_ = ModelKind::PlaneDeg4Blowup;
  m->gram_ = IntMatrix::from_rows({{1, 0}, {0, -4}});
  m->canonical_ = {-3, 1};
  // E and the conic-bundle fiber 2L - E span the effective cone.
  m->effective_ = {{0, 1}, {2, -1}};
  m->nef_ = {{1, 0}, {2, -1}};
  m->contractibles_ = {{0, 1}};
  return m;
}

SurfacePtr SurfaceModel::custom(IntMatrix gram, IntVector canonical,
                                std::vector<IntVector> effective_generators,
                                std::vector<IntVector> contractibles) {
  const std::size_t n = gram.rows();
  if (n == 0 || gram.cols() != n) fail(ErrorCode::InvalidInput, "gram: must be a nonempty square matrix");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (gram(i, j) != gram(j, i)) fail(ErrorCode::InvalidInput, "gram: not symmetric");
    }
  }
  const Signature sig = signature(gram);
  if (sig.positive != 1 || sig.negative != static_cast<int>(n) - 1) {
    std::ostringstream msg;
    msg << "gram: signature (" << sig.positive << ", " << sig.negative << ") is not (1, " << n - 1 << ")";
    fail(ErrorCode::InvalidInput, msg.str());
  }
  if (canonical.size() != n) fail(ErrorCode::InvalidInput, "K: length does not match the rank of gram");
  for (const auto& g : effective_generators) {
    if (g.size() != n) fail(ErrorCode::InvalidInput, "effective_generators: entry has the wrong length");
  }
  for (const auto& e : contractibles) {
    if (e.size() != n) fail(ErrorCode::InvalidInput, "contractibles: entry has the wrong length");
    const std::int64_t ee = bilinear(gram, e, e), ek = bilinear(gram, e, canonical);
    if (!(ee == ek && ee < 0)) {
      fail(ErrorCode::InvalidInput, "contractibles: " + to_string(e) + " does not satisfy E^2 = E.K < 0");
    }
  }
  auto m = std::shared_ptr<SurfaceModel>(new SurfaceModel());
  m->kind_ = ModelKind::Custom;
  m->gram_ = std::move(gram);
  m->canonical_ = std::move(canonical);
  m->effective_ = std::move(effective_generators);
  m->contractibles_ = std::move(contractibles);
  m->has_cone_ = !m->effective_.empty();
  // Nef witnesses: generators pairing nonnegatively with all generators, and
  // -K when it does.
  for (const auto& g : m->effective_) {
    if (std::all_of(m->effective_.begin(), m->effective_.end(),
                    [&](const IntVector& h) { return bilinear(m->gram_, g, h) >= 0; })) {
      m->nef_.push_back(g);
    }
  }
  IntVector anti = m->canonical_;
  for (auto& x : anti) x = -x;
  if (m->has_cone_ && std::all_of(m->effective_.begin(), m->effective_.end(), [&](const IntVector& h) {
        return bilinear(m->gram_, anti, h) >= 0;
      })) {
    m->nef_.push_back(anti);
  }
  return m;
}

std::string SurfaceModel::tag() const {
  switch (kind_) {
    case ModelKind::PlaneBlowup: return "plane_blowup(" + std::to_string(parameter_) + ")";
    case ModelKind::Hirzebruch: return "hirzebruch(" + std::to_string(parameter_) + ")";
    case ModelKind::Quadric: return "quadric";
    case ModelKind::QuadricDeg2Blowup: return "quadric_deg2_blowup";
    case ModelKind::PlaneDeg4Blowup: return "plane_deg4_blowup";
    case ModelKind::Custom: return "custom(rank " + std::to_string(rank()) + ")";
  }
  return "?";
}

void SurfaceModel::require_cone() const {
  if (!has_cone_) {
    fail(ErrorCode::UnsupportedRank, tag() + ": no finite effective cone data for this model");
  }
}

const std::vector<IntVector>& SurfaceModel::effective_generators() const {
  require_cone();
  return effective_;
}

const std::vector<IntVector>& SurfaceModel::nef_witnesses() const {
  require_cone();
  return nef_;
}

std::int64_t SurfaceModel::dot(const IntVector& a, const IntVector& b) const {
  return bilinear(gram_, a, b);
}

bool SurfaceModel::same_lattice(const SurfaceModel& o) const {
  return kind_ == o.kind_ && parameter_ == o.parameter_ && gram_ == o.gram_ && canonical_ == o.canonical_;
}

// ---------------------------------------------------------------------------
// DivisorClass

DivisorClass::DivisorClass(SurfacePtr surface, IntVector coeffs)
    : surface_(std::move(surface)), coeffs_(std::move(coeffs)) {
  if (!surface_) fail(ErrorCode::InvalidInput, "divisor: no surface");
  if (coeffs_.size() != surface_->rank()) {
    fail(ErrorCode::InvalidInput, "D: expected " + std::to_string(surface_->rank()) + " coefficients for " +
                                      surface_->tag() + ", got " + std::to_string(coeffs_.size()));
  }
}

DivisorClass DivisorClass::zero(const SurfacePtr& surface) {
  return DivisorClass(surface, IntVector(surface->rank(), 0));
}

DivisorClass DivisorClass::canonical(const SurfacePtr& surface) {
  return DivisorClass(surface, surface->canonical());
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t DivisorClass::content() const {
  std::int64_t g = 0;
  for (auto x : coeffs_) g = std::gcd(g, x);
  return g;
}

DivisorClass DivisorClass::divided_by(std::int64_t k) const {
  IntVector out = coeffs_;
  for (auto& x : out) {
    if (k == 0 || x % k != 0) fail(ErrorCode::InvariantViolation, "divisor: inexact division");
    x /= k;
  }
  return {surface_, std::move(out)};
}

void DivisorClass::require_same(const DivisorClass& o) const {
  if (surface_ != o.surface_ && !surface_->same_lattice(*o.surface_)) {
    fail(ErrorCode::ModelMismatch, "classes live on " + surface_->tag() + " and " + o.surface_->tag());
  }
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  require_same(o);
  IntVector out = coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.coeffs_[i];
  return {surface_, std::move(out)};
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + (-o); }

DivisorClass DivisorClass::operator-() const { return *this * -1; }

DivisorClass DivisorClass::operator*(std::int64_t s) const {
  IntVector out = coeffs_;
  for (auto& x : out) x *= s;
  return {surface_, std::move(out)};
}

bool DivisorClass::operator==(const DivisorClass& o) const {
  return (surface_ == o.surface_ || surface_->same_lattice(*o.surface_)) && coeffs_ == o.coeffs_;
}

std::string to_string(const IntVector& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ']';
  return s.str();
}

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
  if (a.surface() != b.surface() && !a.model().same_lattice(b.model())) {
    fail(ErrorCode::ModelMismatch, "intersect: classes live on " + a.model().tag() + " and " + b.model().tag());
  }
  return a.model().dot(a.coeffs(), b.coeffs());
}

Rational arithmetic_genus_fiber(const DivisorClass& p) {
  const DivisorClass k = DivisorClass::canonical(p.surface());
  return make_rational(intersect(p, p) + intersect(p, k), 2) + 1;
}

std::vector<DivisorClass> neg_one_classes(const SurfacePtr& surface) {
  if (surface->kind() != ModelKind::PlaneBlowup) {
    fail(ErrorCode::InvalidInput, "neg_one_classes: expects a plane_blowup model");
  }
  std::vector<DivisorClass> out;
  for (const auto& v : neg_one_vectors(surface->parameter())) out.emplace_back(surface, v);
  return out;
}

bool is_nef(const DivisorClass& d) {
  const auto& m = d.model();
  for (const auto& g : m.effective_generators()) {
    if (m.dot(d.coeffs(), g) < 0) return false;
  }
  return true;
}

namespace {

// Coordinates of v over the generators when they form a Q-basis.
std::optional<std::vector<Rational>> generator_coordinates(const SurfaceModel& m, const IntVector& v) {
  const auto& gens = m.effective_generators();
  const std::size_t n = m.rank();
  if (gens.size() != n) return std::nullopt;
  linalg::RatMatrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(gens[j][i]);
  }
  const auto inv = linalg::inverse(a);
  if (!inv) return std::nullopt;
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i] += (*inv)[i][j] * static_cast<long>(v[j]);
  }
  return out;
}

}  // namespace

bool is_effective(const DivisorClass& d) {
  const auto& m = d.model();
  const auto& gens = m.effective_generators();
  const auto& nef = m.nef_witnesses();
  IntVector res = d.coeffs();
  const std::size_t cap = m.rank() * 64;
  for (std::size_t step = 0;; ++step) {
    if (std::all_of(res.begin(), res.end(), [](std::int64_t x) { return x == 0; })) return true;
    for (const auto& a : nef) {
      if (m.dot(res, a) < 0) return false;
    }
    const IntVector* fixed = nullptr;
    std::int64_t times = 0;
    for (const auto& g : gens) {
      const std::int64_t gg = m.dot(g, g);
      const std::int64_t rg = m.dot(res, g);
      if (gg < 0 && rg < 0) {
        fixed = &g;
        times = (-rg + (-gg) - 1) / (-gg);
        break;
      }
    }
    if (!fixed) break;
    if (step >= cap) {
      fail(ErrorCode::Undecided, "is_effective: peeling did not terminate on " + m.tag());
    }
    for (std::size_t i = 0; i < res.size(); ++i) res[i] -= times * (*fixed)[i];
  }

  if (const auto coords = generator_coordinates(m, res)) {
    const bool inside = std::all_of(coords->begin(), coords->end(), [](const Rational& c) { return sgn(c) >= 0; });
    const bool integral = std::all_of(coords->begin(), coords->end(), [](const Rational& c) { return is_integer(c); });
    if (inside && integral) return true;
    if (!inside) return false;
  }
  // Riemann-Roch: h^0 >= chi = D(D-K)/2 + 1 once h^2 = h^0(K-D) vanishes,
  // which a nef A with D.A >= 0 > K.A guarantees.
  const IntVector& k = m.canonical();
  const std::int64_t chi2 = m.dot(res, res) - m.dot(res, k) + 2;  // 2 * chi
  if (chi2 > 0) {
    for (const auto& a : nef) {
      if (m.dot(res, a) >= 0 && m.dot(k, a) < 0) return true;
    }
  }
  fail(ErrorCode::Undecided, "is_effective: cannot decide " + to_string(d.coeffs()) + " on " + m.tag());
}

// ---------------------------------------------------------------------------
// Contraction

DivisorClass Contraction::pushforward(const DivisorClass& d) const {
  if (d.surface() != source_ && !d.model().same_lattice(*source_)) {
    fail(ErrorCode::ModelMismatch, "pushforward: class lives on " + d.model().tag());
  }
  IntVector out = push_.apply(d.coeffs());
  for (auto& x : out) {
    if (x % push_den_ != 0) {
      fail(ErrorCode::NotContractible, "pushforward: " + to_string(d.coeffs()) + " has no integral image");
    }
    x /= push_den_;
  }
  return {target_, std::move(out)};
}

DivisorClass Contraction::pullback(const DivisorClass& d) const {
  if (d.surface() != target_ && !d.model().same_lattice(*target_)) {
    fail(ErrorCode::ModelMismatch, "pullback: class lives on " + d.model().tag());
  }
  return {source_, pull_.apply(d.coeffs())};
}

namespace {

// Permutation / Cremona moves of plane_blowup coordinates, tracked together
// with the inverse.
struct WeylTracker {
  IntMatrix w;
  IntMatrix winv;

  explicit WeylTracker(std::size_t n) : w(IntMatrix::identity(n)), winv(IntMatrix::identity(n)) {}

  void swap_coords(std::size_t i, std::size_t j) {
    if (i == j) return;
    IntMatrix p = IntMatrix::identity(w.rows());
    p(i, i) = p(j, j) = 0;
    p(i, j) = p(j, i) = 1;
    w = p * w;
    winv = winv * p;
  }

  // Quadratic transformation based at E_1, E_2, E_3.
  void cremona() {
    IntMatrix c = IntMatrix::identity(w.rows());
    const std::int64_t rows[4][4] = {{2, -1, -1, -1}, {1, 0, -1, -1}, {1, -1, 0, -1}, {1, -1, -1, 0}};
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t s = 0; s < 4; ++s) c(r, s) = rows[r][s];
    }
    w = c * w;
    winv = winv * c;
  }
};

// Express v in an integer basis of the sublattice orthogonal to `row`.
IntMatrix kernel_basis(IntVector row) {
  const std::size_t n = row.size();
  IntMatrix u = IntMatrix::identity(n);
  auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t r = 0; r < n; ++r) u(r, dst) -= q * u(r, src);
    row[dst] -= q * row[src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < n; ++r) std::swap(u(r, a), u(r, b));
    std::swap(row[a], row[b]);
  };
  for (;;) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (row[i] != 0 && (piv == n || std::llabs(row[i]) < std::llabs(row[piv]))) piv = i;
    }
    if (piv == n) break;
    bool reduced = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != piv && row[i] != 0) {
        col_axpy(i, piv, row[i] / row[piv]);
        reduced = true;
      }
    }
    if (!reduced) {
      col_swap(0, piv);
      break;
    }
  }
  IntMatrix basis(n, n - 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 1; c < n; ++c) basis(r, c - 1) = u(r, c);
  }
  return basis;
}

}  // namespace

Contraction blow_down(const DivisorClass& e) {
  const SurfacePtr& s = e.surface();
  const SurfaceModel& m = *s;
  const auto& cs = m.contractibles();
  if (std::find(cs.begin(), cs.end(), e.coeffs()) == cs.end()) {
    fail(ErrorCode::NotContractible, to_string(e.coeffs()) + " is not a contractible class of " + m.tag());
  }
  const std::size_t n = m.rank();
  Contraction c;
  c.source_ = s;
  c.exceptional_ = e.coeffs();

  if (m.kind() == ModelKind::PlaneBlowup) {
    const int r = m.parameter();
    const IntVector& v = e.coeffs();
    if (r == 2 && v == IntVector{1, 1, 1}) {
      // L - E1 - E2 blows down to the quadric, F1 = L - E1, F2 = L - E2.
      c.target_ = SurfaceModel::quadric();
      c.push_ = IntMatrix::from_rows({{1, 0, -1}, {1, -1, 0}});
      c.pull_ = IntMatrix::from_rows({{1, 1}, {1, 0}, {0, 1}});
      return c;
    }
    WeylTracker t(n);
    for (int guard = 0;; ++guard) {
      if (guard > 64) fail(ErrorCode::InvariantViolation, "blow_down: Cremona reduction did not terminate");
      const IntVector cur = t.w.apply(v);
      if (cur[0] == 0) {
        std::size_t j = 1;
        while (j < n && cur[j] != -1) ++j;
        if (j == n) fail(ErrorCode::InvariantViolation, "blow_down: reduced class is not an E_i");
        t.swap_coords(j, n - 1);
        break;
      }
      if (r < 3) fail(ErrorCode::InvariantViolation, "blow_down: unexpected exceptional class");
      // Sort multiplicities decreasingly with adjacent swaps, then Cremona.
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j + 1 < n; ++j) {
          const IntVector now = t.w.apply(v);
          if (now[j] < now[j + 1]) t.swap_coords(j, j + 1);
        }
      }
      t.cremona();
    }
    c.target_ = SurfaceModel::plane_blowup(r - 1);
    c.push_ = IntMatrix(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) c.push_(i, j) = t.w(i, j);
    }
    c.pull_ = IntMatrix(n, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j + 1 < n; ++j) c.pull_(i, j) = t.winv(i, j);
    }
    return c;
  }

  if (m.kind() == ModelKind::Hirzebruch && m.parameter() == 1) {
    // F_1 -> P^2 with C = E, f = L - E.
    c.target_ = SurfaceModel::plane_blowup(0);
    c.push_ = IntMatrix::from_rows({{0, 1}});
    c.pull_ = IntMatrix::from_rows({{1}, {1}});
    return c;
  }

  // Generic lattice contraction: the target lattice is E^perp, pushforward is
  // the projection along E.
  const IntVector& ev = e.coeffs();
  IntVector form_row(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) form_row[j] += ev[i] * m.gram()(i, j);
  }
  IntMatrix basis = kernel_basis(form_row);
  linalg::RatMatrix full(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) full[i][j] = static_cast<long>(basis(i, j));
    full[i][n - 1] = static_cast<long>(ev[i]);
  }
  const auto inv = linalg::inverse(full);
  if (!inv) fail(ErrorCode::NotContractible, "blow_down: exceptional class lies in its own orthogonal");
  BigInt den = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BigInt l;
      mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), (*inv)[i][j].get_den_mpz_t());
      den = l;
    }
  }
  c.push_den_ = to_int64(den);
  c.push_ = IntMatrix(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c.push_(i, j) = to_int64(Rational((*inv)[i][j] * den));
  }
  c.pull_ = basis;

  const IntMatrix gram = basis.transposed() * m.gram() * basis;
  auto push_vec = [&](const IntVector& v) -> std::optional<IntVector> {
    IntVector out = c.push_.apply(v);
    for (auto& x : out) {
      if (x % c.push_den_ != 0) return std::nullopt;
      x /= c.push_den_;
    }
    return out;
  };
  const auto k = push_vec(m.canonical());
  if (!k) fail(ErrorCode::NotContractible, "blow_down: canonical class has no integral image");

  if (n == 2 && gram(0, 0) == 1 && ((*k)[0] == -3 || (*k)[0] == 3)) {
    if ((*k)[0] == 3) {
      c.push_(0, 0) = -c.push_(0, 0);
      c.push_(0, 1) = -c.push_(0, 1);
      c.pull_(0, 0) = -c.pull_(0, 0);
      c.pull_(1, 0) = -c.pull_(1, 0);
    }
    c.target_ = SurfaceModel::plane_blowup(0);
    return c;
  }

  std::vector<IntVector> gens, contractibles;
  if (m.effective_generators().size() > 0) {
    for (const auto& g : m.effective_generators()) {
      if (g == ev) continue;
      const auto pg = push_vec(g);
      if (!pg || std::all_of(pg->begin(), pg->end(), [](std::int64_t x) { return x == 0; })) continue;
      if (std::find(gens.begin(), gens.end(), *pg) == gens.end()) gens.push_back(*pg);
    }
  }
  for (const auto& other : cs) {
    if (other == ev || m.dot(other, ev) != 0) continue;
    if (const auto po = push_vec(other)) contractibles.push_back(*po);
  }
  c.target_ = SurfaceModel::custom(gram, *k, std::move(gens), std::move(contractibles));
  return c;
}

std::pair<SurfacePtr, DivisorClass> contract(const DivisorClass& e, const DivisorClass& d) {
  const Contraction c = blow_down(e);
  return {c.target(), c.pushforward(d)};
}

Minimalization minimalize(const DivisorClass& d, TieBreak tie) {
  Minimalization out{d, {}};
  for (;;) {
    const SurfaceModel& m = out.divisor.model();
    const IntVector* pick = nullptr;
    for (const auto& e : m.contractibles()) {
      if (m.dot(out.divisor.coeffs(), e) != 0) continue;
      if (!pick || (tie == TieBreak::Lexicographic ? e < *pick : *pick < e)) pick = &e;
    }
    if (!pick) return out;
    if (out.contractions.size() > 64) {
      fail(ErrorCode::NonTerminating, "minimalize: too many contractions");
    }
    Contraction c = blow_down(DivisorClass(out.divisor.surface(), *pick));
    out.divisor = c.pushforward(out.divisor);
    out.contractions.push_back(std::move(c));
  }
}

}  // namespace adjkeel
