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

#include "gqas/hybrid_state.hpp"

#include <cmath>
#include <stdexcept>

#include "gqas/overlap.hpp"

namespace gqas {

namespace {

constexpr std::size_t kMaxDensifyQubits = 10;
constexpr double kCollapseThreshold = 1e-12;

void check_square(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument(std::string("shape mismatch in ") + what);
  }
}

}  // namespace

cplx trace_complex(const Matrix& beta, const Matrix& e) {
  check_square(beta, e, "trace");
  // Tr(beta E) = sum_ij beta_ij E_ji
  return (beta.array() * e.transpose().array()).sum();
}

double trace(const HybridDensityMatrix& h, const Matrix& e) {
  const cplx t = trace_complex(h.beta, e);
  if (std::abs(t.imag()) >= 1e-8) {
    throw NumericalError("Tr(beta E) has imaginary part " + std::to_string(t.imag()));
  }
  return t.real();
}

double purity(const HybridDensityMatrix& h, const Matrix& e) {
  check_square(h.beta, e, "purity");
  const Matrix eb = e * h.beta;
  return (eb.array() * eb.transpose().array()).sum().real();
}

cplx expectation(const HybridDensityMatrix& h, const Matrix& op_overlaps) {
  return trace_complex(h.beta, op_overlaps);
}

cplx expectation(const HybridPureState& s, const Matrix& op_overlaps) {
  if (op_overlaps.rows() != s.alpha.size() || op_overlaps.cols() != s.alpha.size()) {
    throw std::invalid_argument("shape mismatch in expectation");
  }
  return s.alpha.dot(op_overlaps * s.alpha);
}

double norm_squared(const HybridPureState& s, const Matrix& e) {
  return expectation(s, e).real();
}

Matrix densify(const HybridDensityMatrix& h, const AnsatzBasis& basis) {
  if (basis.n_qubits() > kMaxDensifyQubits) {
    throw std::invalid_argument("densify limited to " + std::to_string(kMaxDensifyQubits) +
                                " qubits");
  }
  if (h.beta.rows() != static_cast<Eigen::Index>(basis.size())) {
    throw std::invalid_argument("beta dimension does not match basis size");
  }
  const Matrix psi = basis_matrix(basis);
  return psi * h.beta * psi.adjoint();
}

Vector densify(const HybridPureState& s, const AnsatzBasis& basis) {
  if (s.alpha.size() != static_cast<Eigen::Index>(basis.size())) {
    throw std::invalid_argument("alpha dimension does not match basis size");
  }
  return basis_matrix(basis) * s.alpha;
}

HybridDensityMatrix from_pure(const HybridPureState& s, const Matrix& e) {
  const double n2 = norm_squared(s, e);
  if (std::abs(n2 - 1.0) > 1e-8) {
    throw std::invalid_argument("pure state is not normalized: alpha^dag E alpha = " +
                                std::to_string(n2));
  }
  return {s.alpha * s.alpha.adjoint(), s.basis_id};
}

void normalize(HybridDensityMatrix& h, const Matrix& e, double time) {
  const cplx t = trace_complex(h.beta, e);
  if (std::abs(t) < kCollapseThreshold) {
    throw TraceCollapseError("Tr(beta E) collapsed to " + std::to_string(std::abs(t)), time, t);
  }
  h.beta /= t.real();
}

double min_eigenvalue(const Matrix& beta) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(beta), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace gqas
