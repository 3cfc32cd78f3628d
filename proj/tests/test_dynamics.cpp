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

#include "gqas/dynamics.hpp"
#include "gqas/hybrid_state.hpp"
#include "gqas/models.hpp"
#include "gqas/oracle.hpp"
#include "test_support.hpp"

using namespace gqas;
using gqas::testing::max_abs;

namespace {

// Full single-qubit basis {|0>, |1>} with one raising-operator pump.
struct Pump {
  AnsatzBasis basis;
  OverlapSet ov;
  Matrix beta0;
  Matrix number;

  explicit Pump(double gamma) {
    basis.reference = CircuitSpec::zero_state(1);
    basis.paulis = {PauliString::identity(1), PauliString::from_letters("X")};
    OverlapRequest req;
    req.hamiltonian = PauliSum(1);
    req.hamiltonian.add(0.0, PauliString::identity(1));
    req.dissipators = raising_dissipators(1, gamma);
    req.extra_ops = {number_operator(1, 0)};
    ov = compute_overlap_set(basis, req, MeasurementBackend::exact());
    beta0 = Matrix::Zero(2, 2);
    beta0(0, 0) = 1.0;
    number = ov.S[0];
  }

  double occupation(const Matrix& beta) const {
    return expectation(HybridDensityMatrix{beta, {}}, number).real();
  }
};

IntegratorConfig config(double dt, double t_final, std::size_t stride = 1) {
  IntegratorConfig cfg;
  cfg.dt = dt;
  cfg.t_final = t_final;
  cfg.output_stride = stride;
  return cfg;
}

}  // namespace

TEST_CASE("pseudo-inverse of a full-rank matrix is the inverse") {
  testing::Rng rng(1);
  const Matrix a = rng.hermitian(5) + 6.0 * Matrix::Identity(5, 5);
  const auto p = pseudo_inverse(a, 1e-8);
  CHECK(p.full_rank());
  CHECK(max_abs(p.inverse * a - Matrix::Identity(5, 5)) < 1e-12);
  CHECK(max_abs(p.projector - Matrix::Identity(5, 5)) == 0.0);
}

TEST_CASE("pseudo-inverse drops the null space and satisfies Penrose identities") {
  testing::Rng rng(2);
  Matrix v(6, 3);
  for (Eigen::Index i = 0; i < 6; ++i) {
    for (Eigen::Index j = 0; j < 3; ++j) v(i, j) = rng.complex();
  }
  const Matrix a = v * v.adjoint();  // rank 3
  const auto p = pseudo_inverse(a, 1e-10);
  CHECK(p.rank == 3);
  CHECK(max_abs(a * p.inverse * a - a) < 1e-10);
  CHECK(max_abs(p.inverse * a * p.inverse - p.inverse) < 1e-10);
  CHECK(max_abs(p.projector * p.projector - p.projector) < 1e-12);
  CHECK(max_abs(p.projector - a * p.inverse) < 1e-10);
}

TEST_CASE("pseudo-inverse failure modes") {
  CHECK_THROWS_AS(pseudo_inverse(Matrix::Zero(3, 3), 1e-8), SingularBasisError);
  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(pseudo_inverse(skew, 1e-8), std::invalid_argument);
  Matrix tiny = Matrix::Identity(2, 2);
  tiny(1, 1) = 1e-12;
  CHECK(pseudo_inverse(tiny, 1e-8).rank == 1);
  CHECK(pseudo_inverse(tiny, 1e-14).rank == 2);
}

TEST_CASE("integrator config validation") {
  IntegratorConfig cfg;
  cfg.dt = 0.0;
  CHECK_THROWS(cfg.validate());
  cfg.dt = 0.1;
  cfg.t_final = 1.0;
  CHECK(cfg.steps() == 10);
  cfg.output_stride = 0;
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("single-qubit pump follows 1 - exp(-gamma t)") {
  for (double gamma : {0.5, 1.0, 2.0}) {
    Pump pump(gamma);
    const auto traj = evolve_lindblad(pump.ov, pump.beta0, std::vector<double>{gamma},
                                      config(1e-3, 3.0, 100));
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
      const double expected = 1.0 - std::exp(-gamma * traj.times[k]);
      CHECK(std::abs(pump.occupation(traj.betas[k]) - expected) < 1e-9);
    }
  }
}

TEST_CASE("trajectories record t = 0, every stride and the final step") {
  Pump pump(1.0);
  const auto traj =
      evolve_lindblad(pump.ov, pump.beta0, std::vector<double>{1.0}, config(0.1, 1.05, 4));
  REQUIRE(traj.times.size() == 4);
  CHECK(traj.times[0] == 0.0);
  CHECK(traj.times[1] == doctest::Approx(0.4));
  CHECK(traj.times[3] == doctest::Approx(1.1));
}

TEST_CASE("rk4 converges at fourth order and Euler at first order") {
  Pump pump(1.0);
  auto end_error = [&](Method method, double dt) {
    auto cfg = config(dt, 2.0, 1000000);
    cfg.method = method;
    const auto traj = evolve_lindblad(pump.ov, pump.beta0, std::vector<double>{1.0}, cfg);
    return std::abs(pump.occupation(traj.betas.back()) - (1.0 - std::exp(-2.0)));
  };
  const double rk_ratio = end_error(Method::rk4, 0.1) / end_error(Method::rk4, 0.05);
  const double euler_ratio = end_error(Method::euler, 0.01) / end_error(Method::euler, 0.005);
  CHECK(rk_ratio > 12.0);
  CHECK(rk_ratio < 20.0);
  CHECK(euler_ratio == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("random open systems keep beta Hermitian with unit trace") {
  testing::Rng rng(14);
  for (int trial = 0; trial < 5; ++trial) {
    const auto terms = ising_ladder(4, 1.0, 1.0).strings();
    const auto basis = k_moment_expand(terms, 2, 6 + rng.index(6),
                                       CircuitSpec::random(4, 2, 10 + trial));
    OverlapRequest req;
    req.hamiltonian = rng.hermitian_sum(4, 5);
    req.dissipators = {{0.3, raising_operator(4, rng.index(4))}};
    const auto ov = compute_overlap_set(basis, req, MeasurementBackend::exact());
    const auto m = static_cast<Eigen::Index>(basis.size());
    Matrix beta0 = Matrix::Zero(m, m);
    beta0(0, 0) = 1.0;
    const auto traj = evolve_lindblad(ov, beta0, std::vector<double>{0.3}, config(0.01, 1.0, 10));
    for (const auto& beta : traj.betas) {
      CHECK(max_abs(beta - beta.adjoint()) < 1e-14);
      CHECK(std::abs(trace(HybridDensityMatrix{beta, {}}, ov.E) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("full-basis closed Lindblad reproduces unitary evolution") {
  const auto h = ising_ladder(4, 1.0, 0.7);
  const auto basis = materialize(k_moment_expand(h.strings(), 3, 16, CircuitSpec::random(4, 3, 5)));
  OverlapRequest req;
  req.hamiltonian = h;
  const auto ov = compute_overlap_set(basis, req, MeasurementBackend::exact());
  REQUIRE(pseudo_inverse(ov.E, 1e-8).full_rank());
  Matrix beta0 = Matrix::Zero(16, 16);
  beta0(0, 0) = 1.0;
  const auto traj = evolve_lindblad(ov, beta0, {}, config(1e-3, 2.0, 500));
  const Vector psi0 = testing::dense_circuit_state(basis.reference);
  const auto exact = oracle::exact_unitary(h, psi0, traj.times);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const Matrix rho = densify(HybridDensityMatrix{traj.betas[k], basis.id()}, basis);
    CHECK(max_abs(rho - exact[k] * exact[k].adjoint()) < 1e-9);
  }
}

TEST_CASE("totally mixed init and imaginary time cool toward the ground state") {
  const auto h = transverse_ising_chain(3, 1.0, 1.0);
  const auto basis = k_moment_expand(h.strings(), 3, 8, CircuitSpec::random(3, 3, 1));
  OverlapRequest req;
  req.hamiltonian = h;
  const auto ov = compute_overlap_set(basis, req, MeasurementBackend::exact());
  const Matrix beta0 = totally_mixed_init(ov.E, 1e-8);
  CHECK(std::abs(trace(HybridDensityMatrix{beta0, {}}, ov.E) - 1.0) < 1e-12);
  const auto traj = evolve_imaginary(ov.E, ov.D, beta0, config(1e-3, 4.0, 100));
  double previous = 1e300;
  for (const auto& beta : traj.betas) {
    const double e = expectation(HybridDensityMatrix{beta, {}}, ov.D).real();
    CHECK(e <= previous + 1e-10);
    previous = e;
  }
  CHECK(previous == doctest::Approx(oracle::exact_gibbs(h, 1.0 / 8.0).energy).epsilon(1e-6));
}

TEST_CASE("IQAE finds the |0...0> ground state in a full basis") {
  const std::size_t n = 4;
  const auto terms = ising_ladder(n, 1.0, 1.0).strings();
  const auto basis = materialize(k_moment_expand(terms, 2, 16, CircuitSpec::random(n, 3, 2)));
  const Matrix e = compute_operator_overlaps(basis, PauliSum::identity(n), MeasurementBackend::exact());
  const Matrix g =
      compute_operator_overlaps(basis, iqae_init_hamiltonian(n), MeasurementBackend::exact());
  const auto result = iqae_ground_state(g, e, 1e-10);
  CHECK(result.energy == doctest::Approx(-4.0));
  CHECK(std::abs(result.alpha.dot(e * result.alpha) - 1.0) < 1e-10);
  const Vector v = densify(HybridPureState{result.alpha, basis.id()}, basis);
  CHECK(std::norm(v[0]) > 1.0 - 1e-10);
}

TEST_CASE("generalized evolution with V = E and D = -iH alpha is Schroedinger") {
  const auto h = ising_ladder(4, 1.0, 0.4);
  const auto basis = materialize(k_moment_expand(h.strings(), 3, 16, CircuitSpec::random(4, 2, 9)));
  OverlapRequest req;
  req.hamiltonian = h;
  const auto ov = compute_overlap_set(basis, req, MeasurementBackend::exact());
  GeneralizedSystem sys;
  sys.e = ov.E;
  sys.v = [&](double) { return ov.E; };
  sys.d = [&](const Vector& a, double) -> Vector { return -kI * (ov.D * a); };
  Vector alpha0 = Vector::Zero(16);
  alpha0[0] = 1.0;
  const auto traj = evolve_generalized(sys, alpha0, config(1e-3, 1.0, 250));
  const auto exact = oracle::exact_unitary(h, testing::dense_circuit_state(basis.reference),
                                           traj.times);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const Vector v = densify(HybridPureState{traj.alphas[k], basis.id()}, basis);
    CHECK((v - exact[k]).norm() < 1e-9);
  }
}

TEST_CASE("inversion blocks assemble V(t) = B(t)^dag B(t) sandwiches") {
  const auto m_op = random_positive_operator(2, 4, 3);
  std::vector<PauliString> terms;
  for (const auto& t : m_op.terms()) {
    if (!t.string.is_identity()) terms.push_back(t.string);
  }
  const auto basis = k_moment_expand(terms, 2, 4, CircuitSpec::random(2, 2, 1));
  const auto problem = measure_inversion_problem(basis, m_op, MeasurementBackend::exact());
  const auto sys = inversion_system(problem, 10.0);
  const Matrix psi = testing::dense_basis(basis.paulis, basis.reference);
  const Matrix md = testing::dense(m_op);
  const Matrix id = Matrix::Identity(4, 4);
  for (double t : {0.0, 3.0, 10.0}) {
    const double s = t / 10.0;
    const Matrix b = s * md + (1.0 - s) * id;
    CHECK(max_abs(sys.v(t) - psi.adjoint() * b.adjoint() * b * psi) < 1e-12);
    Vector alpha = Vector::Zero(4);
    alpha[1] = 1.0;
    const Matrix a_op = -(md - id) / 10.0;
    CHECK((sys.d(alpha, t) - psi.adjoint() * b.adjoint() * a_op * psi * alpha).norm() < 1e-12);
  }
}

TEST_CASE("nonlinear evolver at zero interaction is linear evolution") {
  const auto sys = dnls_system(4, 1.0, {0.1, -0.2, 0.3, 0.0}, 0.0);
  const auto basis = single_excitation_basis(4);
  OverlapRequest req;
  req.hamiltonian = sys.linear_part;
  req.extra_ops = sys.spec.operators;
  const auto ov = compute_overlap_set(basis, req, MeasurementBackend::exact());
  Vector alpha0 = Vector::Zero(4);
  alpha0[0] = 1.0;
  const auto traj = evolve_nonlinear(ov.E, ov.S, sys.spec, alpha0, config(1e-3, 2.0, 100));
  const Matrix h_sector = ov.D;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h_sector);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    Vector phases(4);
    for (Eigen::Index i = 0; i < 4; ++i) phases[i] = std::exp(-kI * eig.eigenvalues()[i] * traj.times[k]);
    const Vector expected =
        eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint() * alpha0;
    CHECK((traj.alphas[k] - expected).norm() < 1e-10);
  }
  CHECK_THROWS_AS(evolve_nonlinear(ov.E, ov.S, sys.spec, 2.0 * alpha0, config(1e-3, 0.1)),
                  std::invalid_argument);
}

TEST_CASE("nonlinear right-hand side equals the classical DNLS right-hand side") {
  testing::Rng rng(6);
  const std::size_t n = 6;
  const std::vector<double> v = {0.3, 0.0, -0.1, 0.2, 0.5, -0.4};
  const double g = 1.7;
  const auto sys = dnls_system(n, 0.8, v, g);
  const auto basis = single_excitation_basis(n);
  OverlapRequest req;
  req.hamiltonian = sys.linear_part;
  req.extra_ops = sys.spec.operators;
  const auto ov = compute_overlap_set(basis, req, MeasurementBackend::exact());
  for (int trial = 0; trial < 10; ++trial) {
    Vector eta(static_cast<Eigen::Index>(n));
    for (auto& x : eta) x = rng.complex();
    eta.normalize();
    std::vector<cplx> expect;
    for (const auto& s : ov.S) expect.push_back(eta.dot(s * eta));
    const auto f = sys.spec.coefficients(0.0, expect);
    Matrix h_eff = Matrix::Zero(ov.E.rows(), ov.E.cols());
    for (std::size_t k = 0; k < f.size(); ++k) h_eff += f[k] * ov.S[k];
    const Vector gqas_rhs = -kI * (h_eff * eta);
    Vector classical(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < eta.size(); ++i) {
      cplx hop = 0.0;
      if (i > 0) hop += eta[i - 1];
      if (i + 1 < eta.size()) hop += eta[i + 1];
      classical[i] = -kI * (-0.8 * hop + v[static_cast<std::size_t>(i)] * eta[i] +
                            g * std::norm(eta[i]) * eta[i]);
    }
    CHECK((gqas_rhs - classical).cwiseAbs().maxCoeff() < 1e-10);
  }
}
