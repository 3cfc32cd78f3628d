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

#include "gqas/oracle.hpp"

#include <Eigen/Sparse>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gqas::oracle {

namespace {

void check_oracle_size(std::size_t n) {
  if (n > kMaxOracleQubits) {
    throw std::invalid_argument("dense oracle limited to " + std::to_string(kMaxOracleQubits) +
                                " qubits, got " + std::to_string(n));
  }
}

Eigen::SelfAdjointEigenSolver<Matrix> hermitian_eig(const Matrix& a) {
  return Eigen::SelfAdjointEigenSolver<Matrix>(0.5 * (a + a.adjoint()));
}

Matrix psd_sqrt(const Matrix& a, const char* what) {
  const auto eig = hermitian_eig(a);
  if (eig.eigenvalues().minCoeff() < -1e-6) {
    throw std::invalid_argument(std::string(what) + " is not positive semidefinite (min eig " +
                                std::to_string(eig.eigenvalues().minCoeff()) + ")");
  }
  const RealVector root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * root.cast<cplx>().asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace

DenseState DenseState::from_vector(Vector psi) {
  if (std::abs(psi.squaredNorm() - 1.0) > 1e-8) {
    throw std::invalid_argument("dense state vector is not normalized");
  }
  DenseState s;
  s.kind_ = Kind::vector;
  s.psi_ = std::move(psi);
  return s;
}

DenseState DenseState::from_density(Matrix rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
  DenseState s;
  s.kind_ = Kind::density;
  s.rho_ = std::move(rho);
  return s;
}

Matrix DenseState::density() const {
  return kind_ == Kind::density ? rho_ : Matrix(psi_ * psi_.adjoint());
}

Eigen::Index DenseState::dimension() const {
  return kind_ == Kind::density ? rho_.rows() : psi_.size();
}

DenseTrajectory exact_lindblad(const PauliSum& hamiltonian, std::span<const Dissipator> dissipators,
                               const Matrix& rho0, double dt, double t_final,
                               std::size_t output_stride) {
  check_oracle_size(hamiltonian.n_qubits());
  if (!(dt > 0.0) || !(t_final > 0.0) || output_stride == 0) {
    throw std::invalid_argument("exact_lindblad needs dt, t_final > 0 and stride >= 1");
  }
  const Matrix h = to_dense(hamiltonian);
  if (rho0.rows() != h.rows() || rho0.cols() != h.cols()) {
    throw std::invalid_argument("rho0 has the wrong dimension");
  }
  // rho' = K rho + rho K^dag + sum_n rate_n L_n rho L_n^dag,
  // K = -iH - (1/2) sum_n rate_n L_n^dag L_n
  using Sparse = Eigen::SparseMatrix<cplx>;
  Matrix k_dense = -kI * h;
  std::vector<Sparse> jumps;
  std::vector<Sparse> jumps_adj;
  std::vector<double> rates;
  for (const auto& d : dissipators) {
    if (!(d.rate >= 0.0)) throw std::invalid_argument("dissipator rate must be >= 0");
    if (d.rate == 0.0) continue;
    const Matrix l = to_dense(d.op);
    k_dense -= 0.5 * d.rate * (l.adjoint() * l);
    jumps.push_back(l.sparseView());
    jumps_adj.push_back(Matrix(l.adjoint()).sparseView());
    rates.push_back(d.rate);
  }
  const Sparse k = k_dense.sparseView();
  const Sparse k_adj = Matrix(k_dense.adjoint()).sparseView();
  auto rhs = [&](const Matrix& rho) {
    Matrix out = k * rho;
    out += rho * k_adj;
    for (std::size_t n = 0; n < jumps.size(); ++n) {
      const Matrix left = jumps[n] * rho;
      out += rates[n] * (left * jumps_adj[n]);
    }
    return out;
  };

  DenseTrajectory traj;
  Matrix rho = rho0;
  traj.times.push_back(0.0);
  traj.states.push_back(rho);
  const auto steps = static_cast<std::size_t>(std::llround(t_final / dt));
  for (std::size_t s = 1; s <= steps; ++s) {
    const Matrix k1 = rhs(rho);
    const Matrix k2 = rhs(rho + 0.5 * dt * k1);
    const Matrix k3 = rhs(rho + 0.5 * dt * k2);
    const Matrix k4 = rhs(rho + dt * k3);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (s % output_stride == 0 || s == steps) {
      traj.times.push_back(static_cast<double>(s) * dt);
      traj.states.push_back(rho);
    }
  }
  return traj;
}

std::vector<Vector> exact_unitary(const PauliSum& hamiltonian, const Vector& psi0,
                                  std::span<const double> times) {
  check_oracle_size(hamiltonian.n_qubits());
  const auto eig = hermitian_eig(to_dense(hamiltonian));
  if (psi0.size() != eig.eigenvalues().size()) {
    throw std::invalid_argument("psi0 has the wrong dimension");
  }
  const Vector coords = eig.eigenvectors().adjoint() * psi0;
  std::vector<Vector> out;
  out.reserve(times.size());
  for (double t : times) {
    Vector phased = coords;
    for (Eigen::Index i = 0; i < phased.size(); ++i) {
      phased[i] *= std::exp(-kI * eig.eigenvalues()[i] * t);
    }
    out.push_back(eig.eigenvectors() * phased);
  }
  return out;
}

std::vector<Matrix> exact_unitary_density(const PauliSum& hamiltonian, const Matrix& rho0,
                                          std::span<const double> times) {
  check_oracle_size(hamiltonian.n_qubits());
  const auto eig = hermitian_eig(to_dense(hamiltonian));
  if (rho0.rows() != eig.eigenvalues().size() || rho0.cols() != rho0.rows()) {
    throw std::invalid_argument("rho0 has the wrong dimension");
  }
  const Matrix& v = eig.eigenvectors();
  const Matrix coords = v.adjoint() * rho0 * v;
  std::vector<Matrix> out;
  out.reserve(times.size());
  for (double t : times) {
    Vector phases(coords.rows());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
      phases[i] = std::exp(-kI * eig.eigenvalues()[i] * t);
    }
    const Matrix rotated = phases.asDiagonal() * coords * phases.conjugate().asDiagonal();
    out.push_back(v * rotated * v.adjoint());
  }
  return out;
}

GibbsResult exact_gibbs(const PauliSum& hamiltonian, double temperature) {
  check_oracle_size(hamiltonian.n_qubits());
  if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be positive");
  const Matrix h = to_dense(hamiltonian);
  const auto eig = hermitian_eig(h);
  const RealVector& e = eig.eigenvalues();
  RealVector w(e.size());
  if (std::isinf(temperature)) {
    w.setConstant(1.0);
  } else {
    // shift by the ground energy to keep the exponentials bounded
    for (Eigen::Index i = 0; i < e.size(); ++i) w[i] = std::exp(-(e[i] - e[0]) / temperature);
  }
  w /= w.sum();
  GibbsResult out;
  out.rho = eig.eigenvectors() * w.cast<cplx>().asDiagonal() * eig.eigenvectors().adjoint();
  out.energy = w.dot(e);
  return out;
}

double ground_energy(const PauliSum& hamiltonian) {
  check_oracle_size(hamiltonian.n_qubits());
  return hermitian_eig(to_dense(hamiltonian)).eigenvalues()[0];
}

DnlsTrajectory exact_dnls(const Vector& eta0, double hopping, std::span<const double> potential,
                          double interaction, double dt, double t_final,
                          std::size_t output_stride) {
  const Eigen::Index n = eta0.size();
  if (static_cast<Eigen::Index>(potential.size()) != n) {
    throw std::invalid_argument("potential length must match the chain");
  }
  if (std::abs(eta0.squaredNorm() - 1.0) > 1e-10) {
    throw std::invalid_argument("eta0 must be normalized");
  }
  if (!(dt > 0.0) || !(t_final > 0.0) || output_stride == 0) {
    throw std::invalid_argument("exact_dnls needs dt, t_final > 0 and stride >= 1");
  }
  auto rhs = [&](const Vector& eta) {
    Vector out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      cplx hop = 0.0;
      if (i > 0) hop += eta[i - 1];
      if (i + 1 < n) hop += eta[i + 1];
      const cplx h_eta = -hopping * hop + potential[static_cast<std::size_t>(i)] * eta[i] +
                         interaction * std::norm(eta[i]) * eta[i];
      out[i] = -kI * h_eta;
    }
    return out;
  };
  auto even_density = [&](const Vector& eta) {
    double s = 0.0;
    for (Eigen::Index i = 1; i < n; i += 2) s += std::norm(eta[i]);
    return s;
  };

  DnlsTrajectory traj;
  Vector eta = eta0;
  traj.times.push_back(0.0);
  traj.etas.push_back(eta);
  traj.n_even.push_back(even_density(eta));
  const auto steps = static_cast<std::size_t>(std::llround(t_final / dt));
  for (std::size_t s = 1; s <= steps; ++s) {
    const Vector k1 = rhs(eta);
    const Vector k2 = rhs(eta + 0.5 * dt * k1);
    const Vector k3 = rhs(eta + 0.5 * dt * k2);
    const Vector k4 = rhs(eta + dt * k3);
    eta += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    eta.normalize();
    if (s % output_stride == 0 || s == steps) {
      traj.times.push_back(static_cast<double>(s) * dt);
      traj.etas.push_back(eta);
      traj.n_even.push_back(even_density(eta));
    }
  }
  return traj;
}

double uhlmann_fidelity(const DenseState& rho, const DenseState& sigma) {
  if (rho.dimension() != sigma.dimension()) {
    throw std::invalid_argument("fidelity of states with different dimensions");
  }
  if (rho.kind() == DenseState::Kind::vector && sigma.kind() == DenseState::Kind::vector) {
    return std::norm(rho.vector().dot(sigma.vector()));
  }
  if (sigma.kind() == DenseState::Kind::vector) {
    const Matrix r = rho.density();
    psd_sqrt(r, "rho");
    return sigma.vector().dot(r * sigma.vector()).real();
  }
  if (rho.kind() == DenseState::Kind::vector) return uhlmann_fidelity(sigma, rho);

  const Matrix root = psd_sqrt(rho.density(), "rho");
  psd_sqrt(sigma.density(), "sigma");
  const Matrix inner = root * sigma.density() * root;
  const RealVector ev = hermitian_eig(inner).eigenvalues();
  const double floor = 1e-13 * std::max(ev.maxCoeff(), 0.0);
  double tr = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > floor) tr += std::sqrt(ev[i]);
  }
  return tr * tr;
}

Vector dense_linear_solve(const Matrix& m, const Vector& b) {
  return m.fullPivLu().solve(b);
}

}  // namespace gqas::oracle
