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

#include <doctest.h>

using namespace adjkeel;

TEST_CASE("fractions are serialized in lowest terms") {
  CHECK(to_string(make_rational(10, 4)) == "5/2");
  CHECK(to_string(make_rational(-6, 3)) == "-2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(to_string(make_rational(3, -9)) == "-1/3");
}

TEST_CASE("floor and ceiling") {
  CHECK(floor_of(make_rational(7, 2)) == 3);
  CHECK(ceil_of(make_rational(7, 2)) == 4);
  CHECK(floor_of(make_rational(-7, 2)) == -4);
  CHECK(ceil_of(make_rational(-7, 2)) == -3);
  CHECK(ceil_of(make_rational(4)) == 4);
}

TEST_CASE("int64 conversion") {
  CHECK(to_int64(make_rational(12, 4)) == 3);
  CHECK_THROWS_AS(to_int64(make_rational(1, 2)), Error);
  BigInt huge = 1;
  huge <<= 80;
  CHECK_THROWS_AS(to_int64(huge), std::overflow_error);
}

TEST_CASE("error codes have names") {
  CHECK(std::string(error_code_name(ErrorCode::InvalidInput)) == "InvalidInput");
  CHECK(std::string(error_code_name(ErrorCode::BadN)) == "BadN");
  try {
    fail(ErrorCode::NotNef, "D: not nef");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNef);
    CHECK(std::string(e.what()) == "D: not nef");
  }
}
