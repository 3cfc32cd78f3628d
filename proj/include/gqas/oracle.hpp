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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gqas/pauli.hpp"
#include "gqas/types.hpp"

/// Dense brute-force references. Only PauliSum densification is shared
/// with the main pipeline.
namespace gqas::oracle {

inline constexpr std::size_t kMaxOracleQubits = 8;

/// Either a normalized state vector or a density matrix.
class DenseState {
 public:
  enum class Kind { vector, density };

  static DenseState from_vector(Vector psi);
  static DenseState from_density(Matrix rho);

  Kind kind() const { return kind_; }
  /// Density form; vectors are promoted to |psi><psi|.
  Matrix density() const;
  const Vector& vector() const { return psi_; }
  Eigen::Index dimension() const;

 private:
  Kind kind_ = Kind::vector;
  Vector psi_;
  Matrix rho_;
};

struct DenseTrajectory {
  std::vector<double> times;
  std::vector<Matrix> states;
};

/// rk4 on the dense master equation, recording every `output_stride` steps.
DenseTrajectory exact_lindblad(const PauliSum& hamiltonian, std::span<const Dissipator> dissipators,
                               const Matrix& rho0, double dt, double t_final,
                               std::size_t output_stride = 1);

/// exp(-iHt)|psi0> via eigendecomposition, one state per requested time.
std::vector<Vector> exact_unitary(const PauliSum& hamiltonian, const Vector& psi0,
                                  std::span<const double> times);

/// U(t) rho0 U(t)^dag with U(t) = exp(-iHt), one matrix per requested time.
std::vector<Matrix> exact_unitary_density(const PauliSum& hamiltonian, const Matrix& rho0,
                                          std::span<const double> times);

struct GibbsResult {
  Matrix rho;
  double energy = 0.0;
};

/// exp(-H/T)/Tr exp(-H/T); T = +inf gives the maximally mixed state.
GibbsResult exact_gibbs(const PauliSum& hamiltonian, double temperature);

/// Smallest eigenvalue of H.
double ground_energy(const PauliSum& hamiltonian);

struct DnlsTrajectory {
  std::vector<double> times;
  std::vector<Vector> etas;
  /// sum over 1-indexed even sites of |eta_i|^2
  std::vector<double> n_even;
};

/// rk4 on i eta_i' = -J(eta_{i+1} + eta_{i-1}) + V_i eta_i + g|eta_i|^2 eta_i
/// (open chain), renormalizing after each step.
DnlsTrajectory exact_dnls(const Vector& eta0, double hopping, std::span<const double> potential,
                          double interaction, double dt, double t_final,
                          std::size_t output_stride = 1);

/// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2. Rejects inputs with an
/// eigenvalue below -1e-6.
double uhlmann_fidelity(const DenseState& rho, const DenseState& sigma);

/// Solves M x = b densely.
Vector dense_linear_solve(const Matrix& m, const Vector& b);

}  // namespace gqas::oracle
