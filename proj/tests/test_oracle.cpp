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

#include <cmath>
#include <limits>

#include "gqas/models.hpp"
#include "gqas/oracle.hpp"
#include "test_support.hpp"

using namespace gqas;
using namespace gqas::oracle;
using gqas::testing::max_abs;

TEST_CASE("Uhlmann fidelity basics") {
  testing::Rng rng(4);
  const Matrix rho = rng.density(4);
  const Matrix sigma = rng.density(4);
  const auto r = DenseState::from_density(rho);
  const auto s = DenseState::from_density(sigma);
  CHECK(uhlmann_fidelity(r, r) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(uhlmann_fidelity(r, s) == doctest::Approx(uhlmann_fidelity(s, r)).epsilon(1e-8));
  CHECK(uhlmann_fidelity(r, s) <= 1.0 + 1e-10);
  Vector a = Vector::Zero(2), b = Vector::Zero(2);
  a[0] = 1.0;
  b[1] = 1.0;
  CHECK(uhlmann_fidelity(DenseState::from_vector(a), DenseState::from_vector(b)) ==
        doctest::Approx(0.0));
}

TEST_CASE("pure-state fidelity reduces to <phi|rho|phi> through the general path") {
  testing::Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix rho = rng.density(8);
    const Vector phi = rng.state(3);
    const double general = uhlmann_fidelity(DenseState::from_density(rho),
                                            DenseState::from_density(phi * phi.adjoint()));
    const double expected = phi.dot(rho * phi).real();
    CHECK(std::abs(general - expected) < 1e-10);
    CHECK(std::abs(uhlmann_fidelity(DenseState::from_vector(phi), DenseState::from_density(rho)) -
                   expected) < 1e-10);
  }
}

TEST_CASE("fidelity rejects clearly non-positive inputs") {
  Matrix bad = Matrix::Identity(2, 2);
  bad(1, 1) = -0.5;
  CHECK_THROWS(uhlmann_fidelity(DenseState::from_density(bad),
                                DenseState::from_density(Matrix::Identity(2, 2) / 2.0)));
}

TEST_CASE("closed dense Lindblad agrees with exact unitary propagation") {
  const auto h = ising_ladder(4, 1.0, 0.6);
  testing::Rng rng(2);
  const Vector psi0 = rng.state(4);
  const auto traj = exact_lindblad(h, {}, psi0 * psi0.adjoint(), 1e-3, 1.0, 250);
  const auto vecs = exact_unitary(h, psi0, traj.times);
  const auto dens = exact_unitary_density(h, psi0 * psi0.adjoint(), traj.times);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    CHECK(max_abs(traj.states[k] - vecs[k] * vecs[k].adjoint()) < 1e-10);
    CHECK(max_abs(dens[k] - vecs[k] * vecs[k].adjoint()) < 1e-12);
  }
}

TEST_CASE("dense Lindblad pump steady state is all-excited") {
  Matrix rho0 = Matrix::Zero(4, 4);
  rho0(0, 0) = 1.0;
  const auto diss = raising_dissipators(2, 1.0);
  const auto traj = exact_lindblad(PauliSum::identity(2, 0.0), diss, rho0, 1e-2, 20.0, 2000);
  CHECK(traj.states.back()(3, 3).real() == doctest::Approx(1.0).epsilon(1e-6));
  for (const auto& rho : traj.states) CHECK(std::abs(rho.trace() - 1.0) < 1e-10);
}

TEST_CASE("Gibbs limits") {
  const auto h = transverse_ising_chain(4, 1.0, 1.0);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(std::abs(exact_gibbs(h, inf).energy) < 1e-12);
  CHECK(exact_gibbs(h, 1e-3).energy == doctest::Approx(ground_energy(h)).epsilon(1e-9));
  const auto g = exact_gibbs(h, 0.7);
  CHECK(std::abs(g.rho.trace() - 1.0) < 1e-12);
  CHECK(g.energy == doctest::Approx((g.rho * to_dense(h)).trace().real()));
  CHECK_THROWS(exact_gibbs(h, 0.0));
}

TEST_CASE("Gibbs energy at large beta stays finite for large spectra") {
  const auto h = transverse_ising_chain(4, 50.0, 50.0);
  CHECK(std::isfinite(exact_gibbs(h, 0.01).energy));
}

TEST_CASE("linear DNLS oracle equals the tight-binding propagator") {
  const std::size_t n = 6;
  Vector eta0 = Vector::Zero(6);
  eta0[0] = std::sqrt(0.5);
  eta0[2] = std::sqrt(0.5);
  const std::vector<double> v(n, 0.0);
  const auto traj = exact_dnls(eta0, 1.0, v, 0.0, 1e-3, 3.0, 500);
  Matrix h = Matrix::Zero(6, 6);
  for (Eigen::Index i = 0; i + 1 < 6; ++i) h(i, i + 1) = h(i + 1, i) = -1.0;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    Vector ph(6);
    for (Eigen::Index i = 0; i < 6; ++i) ph[i] = std::exp(-kI * eig.eigenvalues()[i] * traj.times[k]);
    const Vector expected = eig.eigenvectors() * ph.asDiagonal() * eig.eigenvectors().adjoint() * eta0;
    CHECK((traj.etas[k] - expected).norm() < 1e-10);
    double even = 0.0;
    for (Eigen::Index i = 1; i < 6; i += 2) even += std::norm(expected[i]);
    CHECK(std::abs(traj.n_even[k] - even) < 1e-10);
  }
}

TEST_CASE("dense linear solve") {
  testing::Rng rng(1);
  const Matrix m = rng.hermitian(6) + 5.0 * Matrix::Identity(6, 6);
  const Vector b = rng.state(2).head(4).normalized();
  Vector rhs = Vector::Zero(6);
  rhs.head(4) = b;
  const Vector x = dense_linear_solve(m, rhs);
  CHECK((m * x - rhs).norm() < 1e-12);
}

TEST_CASE("oracle size limit") {
  CHECK_THROWS(exact_gibbs(transverse_ising_chain(kMaxOracleQubits + 1, 1.0, 1.0), 1.0));
}
