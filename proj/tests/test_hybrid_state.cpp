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

#include "gqas/hybrid_state.hpp"
#include "gqas/models.hpp"
#include "gqas/overlap.hpp"
#include "test_support.hpp"

using namespace gqas;
using gqas::testing::max_abs;

namespace {

struct Fixture {
  AnsatzBasis basis;
  Matrix e;
  Matrix psi;

  explicit Fixture(std::size_t m) {
    const auto terms = ising_ladder(4, 1.0, 1.0).strings();
    basis = materialize(k_moment_expand(terms, 2, m, CircuitSpec::random(4, 2, 4)));
    e = compute_operator_overlaps(basis, PauliSum::identity(4), MeasurementBackend::exact());
    psi = testing::dense_basis(basis.paulis, basis.reference);
  }
};

Matrix random_beta(testing::Rng& rng, Eigen::Index m) {
  Matrix a(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) a(i, j) = rng.complex();
  }
  return a * a.adjoint();
}

}  // namespace

TEST_CASE("trace, purity and expectations match the densified state") {
  Fixture f(8);
  testing::Rng rng(2);
  const Matrix h_overlaps =
      compute_operator_overlaps(f.basis, ising_ladder(4, 1.0, 1.0), MeasurementBackend::exact());
  for (int trial = 0; trial < 20; ++trial) {
    HybridDensityMatrix h{random_beta(rng, 8), f.basis.id()};
    normalize(h, f.e);
    const Matrix rho = f.psi * h.beta * f.psi.adjoint();
    CHECK(std::abs(trace(h, f.e) - 1.0) < 1e-12);
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
    CHECK(purity(h, f.e) == doctest::Approx((rho * rho).trace().real()).epsilon(1e-10));
    const Matrix hd = testing::dense(ising_ladder(4, 1.0, 1.0));
    CHECK(std::abs(expectation(h, h_overlaps) - (rho * hd).trace()) < 1e-10);
    CHECK(max_abs(densify(h, f.basis) - rho) < 1e-12);
  }
}

TEST_CASE("pure states lift to rank-one hybrid densities") {
  Fixture f(6);
  testing::Rng rng(3);
  Vector alpha(6);
  for (auto& a : alpha) a = rng.complex();
  alpha /= std::sqrt(alpha.dot(f.e * alpha).real());
  const HybridPureState s{alpha, f.basis.id()};
  CHECK(norm_squared(s, f.e) == doctest::Approx(1.0));
  const auto h = from_pure(s, f.e);
  CHECK(purity(h, f.e) == doctest::Approx(1.0));
  const Vector v = densify(s, f.basis);
  CHECK(max_abs(densify(h, f.basis) - v * v.adjoint()) < 1e-12);
  CHECK_THROWS_AS(from_pure(HybridPureState{2.0 * alpha, f.basis.id()}, f.e),
                  std::invalid_argument);
}

TEST_CASE("normalization divides by Tr(beta E) and detects collapse") {
  Fixture f(4);
  HybridDensityMatrix h{Matrix::Identity(4, 4) * 3.0, f.basis.id()};
  normalize(h, f.e);
  CHECK(trace(h, f.e) == doctest::Approx(1.0));
  HybridDensityMatrix zero{Matrix::Zero(4, 4), f.basis.id()};
  CHECK_THROWS_AS(normalize(zero, f.e, 1.5), TraceCollapseError);
  try {
    normalize(zero, f.e, 1.5);
  } catch (const TraceCollapseError& err) {
    CHECK(err.time() == 1.5);
  }
}

TEST_CASE("a trace with an imaginary part is rejected") {
  Fixture f(3);
  Matrix beta = Matrix::Zero(3, 3);
  beta(0, 0) = cplx(1.0, 0.5);
  CHECK_THROWS(trace(HybridDensityMatrix{beta, f.basis.id()}, f.e));
}

TEST_CASE("min_eigenvalue sees indefinite coefficient matrices") {
  Matrix beta = Matrix::Zero(2, 2);
  beta(0, 0) = 1.0;
  beta(1, 1) = -0.25;
  CHECK(min_eigenvalue(beta) == doctest::Approx(-0.25));
}
