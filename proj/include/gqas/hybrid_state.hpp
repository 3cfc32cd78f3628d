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

#include <string>

#include "gqas/ansatz.hpp"
#include "gqas/types.hpp"

namespace gqas {

/// rho = sum_ij beta_ij |psi_i><psi_j| over a fixed basis.
struct HybridDensityMatrix {
  Matrix beta;
  std::string basis_id;

  std::size_t dimension() const { return static_cast<std::size_t>(beta.rows()); }
};

/// |phi> = sum_i alpha_i |psi_i>.
struct HybridPureState {
  Vector alpha;
  std::string basis_id;
};

/// Tr(beta E) before dropping the imaginary part.
cplx trace_complex(const Matrix& beta, const Matrix& e);

/// Re Tr(beta E). Throws NumericalError when |Im| >= 1e-8.
double trace(const HybridDensityMatrix& h, const Matrix& e);

/// Tr(E beta E beta) = Tr(rho^2).
double purity(const HybridDensityMatrix& h, const Matrix& e);

/// Tr(O beta) where O_ij = <psi_i|O|psi_j>.
cplx expectation(const HybridDensityMatrix& h, const Matrix& op_overlaps);

/// alpha^dag O alpha.
cplx expectation(const HybridPureState& s, const Matrix& op_overlaps);

/// alpha^dag E alpha.
double norm_squared(const HybridPureState& s, const Matrix& e);

/// Dense sum_ij beta_ij |psi_i><psi_j|; oracle use, n <= 10.
Matrix densify(const HybridDensityMatrix& h, const AnsatzBasis& basis);

/// Dense sum_i alpha_i |psi_i>.
Vector densify(const HybridPureState& s, const AnsatzBasis& basis);

/// beta = alpha alpha^dag. Rejects |alpha^dag E alpha - 1| > 1e-8.
HybridDensityMatrix from_pure(const HybridPureState& s, const Matrix& e);

/// beta / Tr(beta E); throws TraceCollapseError when |Tr(beta E)| < 1e-12.
void normalize(HybridDensityMatrix& h, const Matrix& e, double time = 0.0);

/// Smallest eigenvalue of the Hermitian part of beta.
double min_eigenvalue(const Matrix& beta);

}  // namespace gqas
