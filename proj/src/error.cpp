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
#include <adjkeel/rational.hpp>

#include <stdexcept>

namespace adjkeel {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NonLatticeVertices: return "NonLatticeVertices";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::Undecided: return "Undecided";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::NotNef: return "NotNef";
    case ErrorCode::NotBig: return "NotBig";
    case ErrorCode::NotEffective: return "NotEffective";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return z.get_si();
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) fail(ErrorCode::InvariantViolation, "expected an integral value, got " + r.get_str());
  return to_int64(BigInt(r.get_num()));
}

}  // namespace adjkeel
