// Copyright 2026 The GQAS Authors
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

#include <doctest.h>

#include <stdexcept>

#include "gqas/pauli.hpp"
#include "test_support.hpp"

using namespace gqas;
using gqas::testing::dense;
using gqas::testing::max_abs;

TEST_CASE("single-qubit products follow XY = iZ") {
  const auto x = PauliString::from_letters("X");
  const auto y = PauliString::from_letters("Y");
  const auto z = PauliString::from_letters("Z");
  CHECK(x * y == z.with_phase(1));
  CHECK(y * x == z.with_phase(3));
  CHECK(y * z == x.with_phase(1));
  CHECK(z * x == y.with_phase(1));
  CHECK(x * x == PauliString::identity(1));
  CHECK(y * y == PauliString::identity(1));
}

TEST_CASE("parse and to_string round trip") {
  for (const char* text : {"+ XZIY", "+i IIZ", "- YYX", "-i Z"}) {
    CHECK(PauliString::parse(text).to_string() == text);
  }
  CHECK(PauliString::parse("+1 XX") == PauliString::from_letters("XX"));
  CHECK(PauliString::parse("-1 XX") == PauliString::from_letters("XX").with_phase(2));
  CHECK_THROWS_AS(PauliString::parse("XX"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("+2 XX"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::from_letters("XQ"), std::invalid_argument);
}

TEST_CASE("qubit 0 is the leftmost tensor factor") {
  const auto p = PauliString::single(3, 0, 'X');
  CHECK(p.letters() == "XII");
  CHECK(max_abs(to_dense(p) - testing::dense_letters("XII")) == 0.0);
}

TEST_CASE("to_dense agrees with an independent Kronecker build") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = rng.pauli(1 + rng.index(4));
    CHECK(max_abs(to_dense(p) - dense(p)) == 0.0);
  }
}

TEST_CASE("random products, daggers and triples match dense algebra") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.index(5);
    const auto a = rng.pauli(n);
    const auto b = rng.pauli(n);
    const auto c = rng.pauli(n);
    CHECK(max_abs(dense(a * b) - dense(a) * dense(b)) == 0.0);
    CHECK(max_abs(dense(dagger(a)) - dense(a).adjoint()) == 0.0);
    CHECK((a * b) * c == a * (b * c));
    // Pauli strings square to the identity up to phase.
    CHECK((a * a).same_base(PauliString::identity(n)));
  }
}

TEST_CASE("hermitian_base splits off the phase") {
  const auto p = PauliString::parse("-i XYZ");
  const auto split = hermitian_base(p);
  CHECK(split.base == PauliString::from_letters("XYZ"));
  CHECK(split.phase() == cplx(0, -1));
}

TEST_CASE("PauliSum folds string phases into coefficients") {
  PauliSum s(2);
  s.add(2.0, PauliString::parse("+i XZ"));
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms()[0].coeff == cplx(0, 2));
  CHECK(s.terms()[0].string.phase_exponent() == 0);
}

TEST_CASE("canonicalize merges duplicates and drops zeros") {
  PauliSum s(2);
  s.add(1.0, PauliString::from_letters("XX"));
  s.add(0.5, PauliString::from_letters("ZI"));
  s.add(-1.0, PauliString::from_letters("XX"));
  s.add(0.25, PauliString::from_letters("ZI"));
  const auto c = canonicalize(s);
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms()[0].string == PauliString::from_letters("ZI"));
  CHECK(c.terms()[0].coeff.real() == doctest::Approx(0.75));
}

TEST_CASE("raising operator pair reduces to (1 + Z)/2") {
  PauliSum up(1);
  up.add(0.5, PauliString::from_letters("X"));
  up.add(cplx(0, -0.5), PauliString::from_letters("Y"));
  const auto f = canonicalize(dagger(up) * up);
  REQUIRE(f.terms().size() == 2);
  for (const auto& t : f.terms()) {
    CHECK(std::abs(t.coeff - cplx(0.5, 0)) < 1e-15);
    CHECK((t.string.is_identity() || t.string == PauliString::from_letters("Z")));
  }
}

TEST_CASE("sum algebra is linear and multiplicative under densification") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.index(3);
    const auto a = rng.hermitian_sum(n, 4);
    const auto b = rng.hermitian_sum(n, 3);
    const cplx w = rng.complex();
    CHECK(max_abs(to_dense(a + w * b) - (dense(a) + w * dense(b))) < 1e-12);
    CHECK(max_abs(to_dense(a * b) - dense(a) * dense(b)) < 1e-12);
    CHECK(max_abs(to_dense(dagger(w * a)) - (w * dense(a)).adjoint()) < 1e-12);
    CHECK(a.is_hermitian());
  }
}

TEST_CASE("mismatched sizes are rejected") {
  CHECK_THROWS_AS(PauliString::from_letters("X") * PauliString::from_letters("XX"),
                  std::invalid_argument);
  CHECK_THROWS_AS(PauliString(0), std::invalid_argument);
  PauliSum s(2);
  CHECK_THROWS_AS(s.add(1.0, PauliString::from_letters("X")), std::invalid_argument);
}
