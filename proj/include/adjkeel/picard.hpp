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

// Integer intersection theory on Picard lattices of rational surfaces.
//
// Built-in bases:
//   plane_blowup(r)      (d; m_1..m_r) stands for dL - sum m_i E_i, so
//                        K = (-3; -1, .., -1) and E_i has m_i = -1.
//   hirzebruch(n)        (C, f), C^2 = -n, C.f = 1, f^2 = 0.
//   quadric              (F1, F2), F1.F2 = 1.
//   quadric_deg2_blowup  (P, E), P^2 = 0, P.E = 2, E^2 = -2.
//   plane_deg4_blowup    (L, E), L^2 = 1, E^2 = -4.
// Points blown up are assumed to be in general position.

#include <adjkeel/rational.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace adjkeel {

using IntVector = std::vector<std::int64_t>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector apply(const IntVector& v) const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transposed() const;
  IntVector row(std::size_t r) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// (positive, negative, zero) eigenvalue counts, computed by exact congruence
// diagonalization.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  bool operator==(const Signature&) const = default;
};

Signature signature(const IntMatrix& symmetric);

enum class ModelKind { PlaneBlowup, Hirzebruch, Quadric, QuadricDeg2Blowup, PlaneDeg4Blowup, Custom };

class SurfaceModel;
using SurfacePtr = std::shared_ptr<const SurfaceModel>;

class SurfaceModel {
 public:
  static SurfacePtr plane_blowup(int r);
  static SurfacePtr hirzebruch(int n);
  static SurfacePtr quadric();
  static SurfacePtr quadric_deg2_blowup();
  static SurfacePtr plane_deg4_blowup();
  // Validates symmetry, signature (1, rank-1) and E^2 = E.K < 0 for every
  // contractible class. Throws InvalidInput naming the offending field.
  static SurfacePtr custom(IntMatrix gram, IntVector canonical,
                           std::vector<IntVector> effective_generators,
                           std::vector<IntVector> contractibles);

  ModelKind kind() const { return kind_; }
  // r for plane_blowup, n for hirzebruch, 0 otherwise.
  int parameter() const { return parameter_; }
  // "plane_blowup(6)", "hirzebruch(2)", "quadric", ...
  std::string tag() const;

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const IntVector& canonical() const { return canonical_; }

  // Throws UnsupportedRank when the model carries no finite cone data
  // (plane_blowup with r > 8, custom models without generators).
  const std::vector<IntVector>& effective_generators() const;
  // Nef classes used to reject effectivity and to bound h^2.
  const std::vector<IntVector>& nef_witnesses() const;
  const std::vector<IntVector>& contractibles() const { return contractibles_; }

  std::int64_t dot(const IntVector& a, const IntVector& b) const;

  // Same kind, parameter, form and canonical class.
  bool same_lattice(const SurfaceModel& o) const;

 private:
  SurfaceModel() = default;
  void require_cone() const;

  ModelKind kind_ = ModelKind::Custom;
  int parameter_ = 0;
  IntMatrix gram_;
  IntVector canonical_;
  std::vector<IntVector> effective_;
  std::vector<IntVector> nef_;
  std::vector<IntVector> contractibles_;
  bool has_cone_ = true;
};

class DivisorClass {
 public:
  DivisorClass(SurfacePtr surface, IntVector coeffs);

  static DivisorClass zero(const SurfacePtr& surface);
  static DivisorClass canonical(const SurfacePtr& surface);

  const SurfacePtr& surface() const { return surface_; }
  const IntVector& coeffs() const { return coeffs_; }
  const SurfaceModel& model() const { return *surface_; }

  bool is_zero() const;
  // gcd of the coefficients; 0 for the zero class.
  std::int64_t content() const;
  // Exact division; throws InvariantViolation if k does not divide.
  DivisorClass divided_by(std::int64_t k) const;

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;
  DivisorClass operator*(std::int64_t s) const;

  bool operator==(const DivisorClass& o) const;

 private:
  void require_same(const DivisorClass& o) const;

  SurfacePtr surface_;
  IntVector coeffs_;
};

inline DivisorClass operator*(std::int64_t s, const DivisorClass& d) { return d * s; }

std::string to_string(const IntVector& v);

// A^T * gram * B. Throws ModelMismatch across surfaces.
std::int64_t intersect(const DivisorClass& a, const DivisorClass& b);

// (P^2 + P.K)/2 + 1.
Rational arithmetic_genus_fiber(const DivisorClass& p);

// All (d; m) with d^2 - sum m^2 = -1 and -3d + sum m = -1, ascending
// lexicographic order. Throws UnsupportedRank for r > 8.
const std::vector<IntVector>& neg_one_vectors(int r);
std::vector<DivisorClass> neg_one_classes(const SurfacePtr& surface);

bool is_nef(const DivisorClass& d);

// Fixed-component peeling followed by a cone / Riemann-Roch decision. Throws
// Undecided when neither test applies.
bool is_effective(const DivisorClass& d);

// Blow-down of a contractible class. Coordinates of the target are related
// to the source by integer matrices: pullback is exact, pushforward divides
// by a common denominator (1 for all built-in transitions).
class Contraction {
 public:
  const SurfacePtr& source() const { return source_; }
  const SurfacePtr& target() const { return target_; }
  const IntVector& exceptional() const { return exceptional_; }

  DivisorClass pushforward(const DivisorClass& d) const;
  DivisorClass pullback(const DivisorClass& d) const;

 private:
  friend Contraction blow_down(const DivisorClass& e);

  SurfacePtr source_;
  SurfacePtr target_;
  IntVector exceptional_;
  IntMatrix push_;  // rank-1 x rank
  std::int64_t push_den_ = 1;
  IntMatrix pull_;  // rank x rank-1
};

// Throws NotContractible unless `e` is listed among the model's contractibles.
Contraction blow_down(const DivisorClass& e);

// Blow down `e` and push `d` along.
std::pair<SurfacePtr, DivisorClass> contract(const DivisorClass& e, const DivisorClass& d);

enum class TieBreak { Lexicographic, ReverseLexicographic };

struct Minimalization {
  DivisorClass divisor;
  std::vector<Contraction> contractions;
};

// Repeatedly contracts a contractible E with D.E = 0 until none is left.
Minimalization minimalize(const DivisorClass& d, TieBreak tie = TieBreak::Lexicographic);

}  // namespace adjkeel
