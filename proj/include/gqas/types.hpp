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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gqas {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr cplx kI{0.0, 1.0};

/// Raised when a numerical precondition breaks during a run (singular
/// basis, collapsed trace). The CLI maps this family to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every eigenvalue of the overlap matrix fell below the pseudo-inverse
/// cutoff, or a retained subspace came out empty.
class SingularBasisError : public NumericalError {
 public:
  SingularBasisError(const std::string& what, RealVector spectrum)
      : NumericalError(what), spectrum_(std::move(spectrum)) {}

  const RealVector& spectrum() const { return spectrum_; }

 private:
  RealVector spectrum_;
};

/// |Tr(beta E)| dropped below the collapse threshold during renormalization.
class TraceCollapseError : public NumericalError {
 public:
  TraceCollapseError(const std::string& what, double time, cplx trace)
      : NumericalError(what), time_(time), trace_(trace) {}

  double time() const { return time_; }
  cplx trace() const { return trace_; }

 private:
  double time_;
  cplx trace_;
};

}  // namespace gqas
