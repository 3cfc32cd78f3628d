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

#include "gqas/dynamics.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "gqas/hybrid_state.hpp"

namespace gqas {

namespace {

template <class State, class Rhs>
State advance(const State& y, double t, double dt, Method method, const Rhs& f) {
  if (method == Method::euler) return State(y + dt * f(t, y));
  const State k1 = f(t, y);
  const State k2 = f(t + 0.5 * dt, State(y + (0.5 * dt) * k1));
  const State k3 = f(t + 0.5 * dt, State(y + (0.5 * dt) * k2));
  const State k4 = f(t + dt, State(y + dt * k3));
  return State(y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

// Fixed-step driver. `post` runs after every completed step with the new
// time; `record` sees t = 0 and every output_stride-th step.
template <class State, class Rhs, class Post, class Record>
void integrate(State y, const IntegratorConfig& cfg, const Rhs& f, const Post& post,
               const Record& record) {
  const std::size_t steps = cfg.steps();
  record(0.0, y);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t = static_cast<double>(k - 1) * cfg.dt;
    y = advance(y, t, cfg.dt, cfg.method, f);
    const double t_next = static_cast<double>(k) * cfg.dt;
    post(y, t_next);
    if (k % cfg.output_stride == 0 || k == steps) record(t_next, y);
  }
}

void check_square(const Matrix& m, Eigen::Index dim, const std::string& name) {
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument(name + " must be " + std::to_string(dim) + "x" +
                                std::to_string(dim));
  }
}

void hermitize_in_place(Matrix& beta) {
  beta = 0.5 * (beta + beta.adjoint()).eval();
}

void renormalize(Vector& alpha, const Matrix& e, double t) {
  const double n2 = alpha.dot(e * alpha).real();
  if (!(n2 > 1e-24)) {
    throw TraceCollapseError("alpha^dag E alpha collapsed", t, n2);
  }
  alpha /= std::sqrt(n2);
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(t_final > 0.0)) throw std::invalid_argument("t_final must be positive");
  if (dt > t_final) throw std::invalid_argument("dt must not exceed t_final");
  if (!(pinv_cutoff > 0.0 && pinv_cutoff < 1.0)) {
    throw std::invalid_argument("pinv_cutoff must lie in (0, 1)");
  }
  if (output_stride == 0) throw std::invalid_argument("output_stride must be >= 1");
}

std::size_t IntegratorConfig::steps() const {
  return static_cast<std::size_t>(std::llround(t_final / dt));
}

PseudoInverse pseudo_inverse(const Matrix& a, double cutoff) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw std::invalid_argument("pseudo-inverse needs a non-empty square matrix");
  }
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-8 * scale) {
    throw std::invalid_argument("pseudo-inverse input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (a + a.adjoint()));
  const RealVector& lambda = solver.eigenvalues();
  const Matrix& u = solver.eigenvectors();
  const double largest = lambda.cwiseAbs().maxCoeff();

  PseudoInverse out;
  out.spectrum = lambda;
  RealVector inv = RealVector::Zero(lambda.size());
  RealVector keep = RealVector::Zero(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (largest > 0.0 && std::abs(lambda[i]) >= cutoff * largest) {
      inv[i] = 1.0 / lambda[i];
      keep[i] = 1.0;
      ++out.rank;
    }
  }
  if (out.rank == 0) {
    throw SingularBasisError("every eigenvalue fell below the pseudo-inverse cutoff", lambda);
  }
  out.inverse = u * inv.cast<cplx>().asDiagonal() * u.adjoint();
  out.projector = out.full_rank() ? Matrix::Identity(a.rows(), a.cols())
                                  : Matrix(u * keep.cast<cplx>().asDiagonal() * u.adjoint());
  return out;
}

Matrix regularized_pinv(const Matrix& a, double cutoff) {
  return pseudo_inverse(a, cutoff).inverse;
}

// With K = E+(-iD - sum_n rate_n F_n / 2), P = E E+ and Rt_n = E+ R_n, the
// equation of motion reads beta' = K beta P + P beta K^dag + sum rate Rt beta Rt^dag.
DensityTrajectory evolve_lindblad(const OverlapSet& ov, const Matrix& beta0,
                                  std::span<const double> rates, const IntegratorConfig& cfg) {
  cfg.validate();
  const Eigen::Index m = ov.E.rows();
  check_square(ov.D, m, "D");
  check_square(beta0, m, "beta0");
  if (rates.size() != ov.R.size() || ov.R.size() != ov.F.size()) {
    throw std::invalid_argument("need one rate per dissipator overlap pair");
  }
  for (double r : rates) {
    if (!(r >= 0.0)) throw std::invalid_argument("dissipator rates must be >= 0");
  }

  const PseudoInverse pinv = pseudo_inverse(ov.E, cfg.pinv_cutoff);
  const Matrix& e_inv = pinv.inverse;
  Matrix generator = -kI * ov.D;
  std::vector<Matrix> jumps;
  std::vector<double> jump_rates;
  for (std::size_t n = 0; n < rates.size(); ++n) {
    check_square(ov.R[n], m, "R");
    check_square(ov.F[n], m, "F");
    if (rates[n] == 0.0) continue;
    generator -= 0.5 * rates[n] * ov.F[n];
    jumps.push_back(e_inv * ov.R[n]);
    jump_rates.push_back(rates[n]);
  }
  const Matrix k = e_inv * generator;
  const Matrix k_adj = k.adjoint();
  const bool full = pinv.full_rank();
  const Matrix& p = pinv.projector;

  auto rhs = [&](double, const Matrix& beta) -> Matrix {
    Matrix out = full ? Matrix(k * beta + beta * k_adj) : Matrix(k * beta * p + p * beta * k_adj);
    for (std::size_t n = 0; n < jumps.size(); ++n) {
      out.noalias() += jump_rates[n] * (jumps[n] * beta * jumps[n].adjoint());
    }
    return out;
  };

  HybridDensityMatrix work{beta0, {}};
  auto post = [&](Matrix& beta, double t) {
    hermitize_in_place(beta);
    if (cfg.renormalize_each_step) {
      work.beta = std::move(beta);
      normalize(work, ov.E, t);
      beta = std::move(work.beta);
    }
  };

  DensityTrajectory traj;
  integrate(Matrix(beta0), cfg, rhs, post, [&](double t, const Matrix& beta) {
    traj.times.push_back(t);
    traj.betas.push_back(beta);
  });
  return traj;
}

DensityTrajectory evolve_imaginary(const Matrix& e, const Matrix& d, const Matrix& beta0,
                                   const IntegratorConfig& cfg) {
  cfg.validate();
  const Eigen::Index m = e.rows();
  check_square(d, m, "D");
  check_square(beta0, m, "beta0");
  const PseudoInverse pinv = pseudo_inverse(e, cfg.pinv_cutoff);
  const Matrix k = pinv.inverse * d;
  const Matrix k_adj = k.adjoint();
  const bool full = pinv.full_rank();
  const Matrix& p = pinv.projector;

  auto rhs = [&](double, const Matrix& beta) -> Matrix {
    return full ? Matrix(-(k * beta + beta * k_adj)) : Matrix(-(k * beta * p + p * beta * k_adj));
  };
  HybridDensityMatrix work{beta0, {}};
  auto post = [&](Matrix& beta, double t) {
    hermitize_in_place(beta);
    if (cfg.renormalize_each_step) {
      work.beta = std::move(beta);
      normalize(work, e, t);
      beta = std::move(work.beta);
    }
  };
  DensityTrajectory traj;
  integrate(Matrix(beta0), cfg, rhs, post, [&](double t, const Matrix& beta) {
    traj.times.push_back(t);
    traj.betas.push_back(beta);
  });
  return traj;
}

Matrix totally_mixed_init(const Matrix& e, double cutoff) {
  const Matrix e_inv = regularized_pinv(e, cutoff);
  const cplx t = trace_complex(e_inv, e);
  if (std::abs(t) < 1e-12) throw TraceCollapseError("Tr(E+ E) vanished", 0.0, t);
  return e_inv / t.real();
}

IqaeResult iqae_ground_state(const Matrix& g, const Matrix& e, double cutoff) {
  check_square(g, e.rows(), "G");
  const double scale = std::max(1.0, e.cwiseAbs().maxCoeff());
  if ((e - e.adjoint()).cwiseAbs().maxCoeff() > 1e-8 * scale) {
    throw std::invalid_argument("E is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> e_solver(hermitize(e));
  const RealVector& lambda = e_solver.eigenvalues();
  const double largest = lambda.cwiseAbs().maxCoeff();
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (largest > 0.0 && lambda[i] >= cutoff * largest) kept.push_back(i);
  }
  if (kept.empty()) throw SingularBasisError("IQAE subspace is empty", lambda);

  // Whitened coordinates: alpha = W y with W^dag E W = 1.
  Matrix w(e.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    w.col(static_cast<Eigen::Index>(c)) =
        e_solver.eigenvectors().col(kept[c]) / std::sqrt(lambda[kept[c]]);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> g_solver(hermitize(w.adjoint() * g * w));
  IqaeResult out;
  out.energy = g_solver.eigenvalues()[0];
  out.alpha = w * g_solver.eigenvectors().col(0);
  return out;
}

PureTrajectory evolve_generalized(const GeneralizedSystem& system, const Vector& alpha0,
                                  const IntegratorConfig& cfg) {
  cfg.validate();
  if (!system.v || !system.d) throw std::invalid_argument("generalized system is incomplete");
  if (cfg.renormalize_each_step) check_square(system.e, alpha0.size(), "E");

  auto rhs = [&](double t, const Vector& alpha) -> Vector {
    const Matrix v = system.v(t);
    check_square(v, alpha.size(), "V(t)");
    return regularized_pinv(v, cfg.pinv_cutoff) * system.d(alpha, t);
  };
  auto post = [&](Vector& alpha, double t) {
    if (cfg.renormalize_each_step) renormalize(alpha, system.e, t);
  };
  PureTrajectory traj;
  integrate(Vector(alpha0), cfg, rhs, post, [&](double t, const Vector& alpha) {
    traj.times.push_back(t);
    traj.alphas.push_back(alpha);
  });
  return traj;
}

InversionProblem measure_inversion_problem(const AnsatzBasis& basis, const PauliSum& m_op,
                                           const MeasurementBackend& backend) {
  const std::size_t n = basis.n_qubits();
  if (m_op.n_qubits() != n) throw std::invalid_argument("operator/basis qubit mismatch");
  InversionProblem problem;
  problem.unitaries.push_back(PauliString::identity(n));
  problem.mu.push_back(0.0);
  const PauliSum canonical = canonicalize(m_op);
  for (const auto& t : canonical.terms()) {
    if (t.string.is_identity()) {
      problem.mu[0] += t.coeff;
    } else {
      problem.unitaries.push_back(t.string);
      problem.mu.push_back(t.coeff);
    }
  }
  PauliMeasurer measurer(basis.reference, backend);
  const std::size_t r = problem.unitaries.size();
  problem.blocks.assign(r, std::vector<Matrix>(r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      const PauliString prod = multiply(dagger(problem.unitaries[a]), problem.unitaries[b]);
      problem.blocks[a][b] = compute_operator_overlaps(basis, PauliSum(prod), measurer);
    }
  }
  problem.e = problem.blocks[0][0];
  return problem;
}

GeneralizedSystem inversion_system(const InversionProblem& problem, double total_time) {
  if (!(total_time > 0.0)) throw std::invalid_argument("inversion time must be positive");
  auto shared = std::make_shared<const InversionProblem>(problem);
  const std::size_t r = problem.unitaries.size();
  const double inv_t = 1.0 / total_time;

  // A = -(M - 1)/T has constant coefficients nu_n.
  std::vector<cplx> nu(r);
  nu[0] = -(problem.mu[0] - 1.0) * inv_t;
  for (std::size_t k = 1; k < r; ++k) nu[k] = -problem.mu[k] * inv_t;

  auto lambdas = [shared, inv_t](double t) {
    const double s = t * inv_t;
    std::vector<cplx> lam(shared->mu.size());
    lam[0] = (1.0 - s) + s * shared->mu[0];
    for (std::size_t k = 1; k < lam.size(); ++k) lam[k] = s * shared->mu[k];
    return lam;
  };

  GeneralizedSystem system;
  system.e = problem.e;
  system.v = [shared, lambdas](double t) {
    const auto lam = lambdas(t);
    const auto m = shared->e.rows();
    Matrix v = Matrix::Zero(m, m);
    for (std::size_t a = 0; a < lam.size(); ++a) {
      for (std::size_t b = 0; b < lam.size(); ++b) {
        v += std::conj(lam[a]) * lam[b] * shared->blocks[a][b];
      }
    }
    return v;
  };
  system.d = [shared, lambdas, nu](const Vector& alpha, double t) {
    const auto lam = lambdas(t);
    Vector out = Vector::Zero(alpha.size());
    for (std::size_t a = 0; a < lam.size(); ++a) {
      for (std::size_t b = 0; b < nu.size(); ++b) {
        out += std::conj(lam[a]) * nu[b] * (shared->blocks[a][b] * alpha);
      }
    }
    return out;
  };
  return system;
}

PureTrajectory evolve_nonlinear(const Matrix& e, std::span<const Matrix> s,
                                const NonlinearSpec& spec, const Vector& alpha0,
                                const IntegratorConfig& cfg) {
  cfg.validate();
  const Eigen::Index m = e.rows();
  if (alpha0.size() != m) throw std::invalid_argument("alpha0 does not match E");
  if (!spec.coefficients) throw std::invalid_argument("nonlinear spec has no coefficient callback");
  for (const auto& sk : s) check_square(sk, m, "S^k");
  const double n0 = alpha0.dot(e * alpha0).real();
  if (std::abs(n0 - 1.0) > 1e-8) {
    throw std::invalid_argument("alpha0 must satisfy alpha^dag E alpha = 1, got " +
                                std::to_string(n0));
  }

  const Matrix e_inv = regularized_pinv(e, cfg.pinv_cutoff);
  std::vector<Matrix> lifted;
  lifted.reserve(s.size());
  for (const auto& sk : s) lifted.push_back(e_inv * sk);

  std::vector<cplx> expectations(s.size());
  auto rhs = [&](double t, const Vector& alpha) -> Vector {
    for (std::size_t k = 0; k < s.size(); ++k) expectations[k] = alpha.dot(s[k] * alpha);
    const std::vector<cplx> f = spec.coefficients(t, expectations);
    if (f.size() != s.size()) {
      throw std::invalid_argument("coefficient callback returned " + std::to_string(f.size()) +
                                  " values for " + std::to_string(s.size()) + " operators");
    }
    Vector out = Vector::Zero(m);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (f[k] != cplx(0.0)) out.noalias() += (-kI * f[k]) * (lifted[k] * alpha);
    }
    return out;
  };
  auto post = [&](Vector& alpha, double t) {
    if (cfg.renormalize_each_step) renormalize(alpha, e, t);
  };
  PureTrajectory traj;
  integrate(Vector(alpha0), cfg, rhs, post, [&](double t, const Vector& alpha) {
    traj.times.push_back(t);
    traj.alphas.push_back(alpha);
  });
  return traj;
}

}  // namespace gqas
