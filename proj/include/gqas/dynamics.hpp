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
#include <functional>
#include <span>
#include <vector>

#include "gqas/ansatz.hpp"
#include "gqas/overlap.hpp"
#include "gqas/pauli.hpp"
#include "gqas/types.hpp"

namespace gqas {

enum class Method { rk4, euler };

/// Fixed-step integration settings. Time is measured in units of 1/J.
struct IntegratorConfig {
  double dt = 1e-3;
  double t_final = 1.0;
  Method method = Method::rk4;
  /// Relative eigenvalue cutoff of every pseudo-inverse.
  double pinv_cutoff = 1e-8;
  bool renormalize_each_step = true;
  /// Record every `output_stride` steps (the final step is always recorded).
  std::size_t output_stride = 100;

  void validate() const;
  std::size_t steps() const;
};

struct PseudoInverse {
  Matrix inverse;
  /// Orthogonal projector onto the retained eigenspace.
  Matrix projector;
  std::size_t rank = 0;
  RealVector spectrum;

  bool full_rank() const { return rank == static_cast<std::size_t>(inverse.rows()); }
};

/**
 * Eigendecomposition-based pseudo-inverse of a Hermitian matrix.
 * Eigenvalues with |lambda| < cutoff * max|lambda| are discarded.
 * Throws SingularBasisError when nothing survives and
 * std::invalid_argument when A is not Hermitian within 1e-8.
 */
PseudoInverse pseudo_inverse(const Matrix& a, double cutoff);
Matrix regularized_pinv(const Matrix& a, double cutoff);

struct DensityTrajectory {
  std::vector<double> times;
  std::vector<Matrix> betas;
};

struct PureTrajectory {
  std::vector<double> times;
  std::vector<Vector> alphas;
};

/**
 * Integrates
 *   E beta' E = -i(D beta E - E beta D)
 *             + sum_n rate_n (R_n beta R_n^dag - F_n beta E / 2 - E beta F_n / 2)
 * for beta' = E+ (rhs) E+. Each step is followed by hermitization and, when
 * configured, division by Tr(beta E).
 */
DensityTrajectory evolve_lindblad(const OverlapSet& ov, const Matrix& beta0,
                                  std::span<const double> rates, const IntegratorConfig& cfg);

/// Imaginary time: E beta' E = -(D beta E + E beta D). Temperature T = 1/(2 tau).
DensityTrajectory evolve_imaginary(const Matrix& e, const Matrix& d, const Matrix& beta0,
                                   const IntegratorConfig& cfg);

/// beta_I = E+ / Tr(E+ E), the in-basis stand-in for the totally mixed state.
Matrix totally_mixed_init(const Matrix& e, double cutoff);

struct IqaeResult {
  Vector alpha;
  double energy = 0.0;
};

/// Minimizes alpha^dag G alpha subject to alpha^dag E alpha = 1 on the
/// eigenspace of E kept by the cutoff.
IqaeResult iqae_ground_state(const Matrix& g, const Matrix& e, double cutoff);

/// V(t) alpha' = D(alpha, t).
struct GeneralizedSystem {
  std::function<Matrix(double)> v;
  std::function<Vector(const Vector&, double)> d;
  /// Gram matrix used for renormalization; only read when
  /// cfg.renormalize_each_step is set.
  Matrix e;
};

PureTrajectory evolve_generalized(const GeneralizedSystem& system, const Vector& alpha0,
                                  const IntegratorConfig& cfg);

/**
 * Measured, time-independent blocks for solving M|x> = |v0> by evolving
 * B(t)|v'> = A|v> with B(t) = (t/T) M + (1 - t/T) 1 and A = -(M - 1)/T.
 * unitaries[0] is the identity; blocks[m][n]_kj = <psi_k|V_m^dag V_n|psi_j>.
 */
struct InversionProblem {
  std::vector<PauliString> unitaries;
  std::vector<cplx> mu;
  std::vector<std::vector<Matrix>> blocks;
  Matrix e;
};

InversionProblem measure_inversion_problem(const AnsatzBasis& basis, const PauliSum& m_op,
                                           const MeasurementBackend& backend);

/// V(t) = sum lambda_m^* lambda_n W_mn and D(alpha,t) = sum lambda_m^* nu_n W_mn alpha,
/// assembled classically from the measured blocks.
GeneralizedSystem inversion_system(const InversionProblem& problem, double total_time);

/**
 * Operators U_k and the coefficient callback f for
 *   E alpha' = -i (sum_k f_k(t, <U_1>, ..., <U_r>) S^k) alpha
 * where <U_k> = alpha^dag S^k alpha. The -i is applied by the evolver, so
 * f describes a (possibly state-dependent) Hamiltonian.
 */
struct NonlinearSpec {
  std::vector<PauliSum> operators;
  std::function<std::vector<cplx>(double, std::span<const cplx>)> coefficients;
};

PureTrajectory evolve_nonlinear(const Matrix& e, std::span<const Matrix> s,
                                const NonlinearSpec& spec, const Vector& alpha0,
                                const IntegratorConfig& cfg);

}  // namespace gqas
