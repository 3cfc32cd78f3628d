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

#include "gqas/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gqas/ansatz.hpp"
#include "gqas/dynamics.hpp"
#include "gqas/hybrid_state.hpp"
#include "gqas/models.hpp"
#include "gqas/oracle.hpp"
#include "gqas/parallel.hpp"

#ifndef GQAS_VERSION
#define GQAS_VERSION "unknown"
#endif

namespace gqas {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Everything a run consumes that depends only on the config.
struct Problem {
  PauliSum hamiltonian;
  AnsatzBasis basis;
  OverlapRequest request;
  std::optional<PauliSum> m_op;
  std::optional<DnlsSystem> dnls;
};

std::vector<PauliString> non_identity_strings(const PauliSum& s) {
  std::vector<PauliString> out;
  const PauliSum canonical = canonicalize(s);
  for (const auto& t : canonical.terms()) {
    if (!t.string.is_identity()) out.push_back(t.string);
  }
  return out;
}

PauliSum model_hamiltonian(const ExperimentConfig& c) {
  switch (c.model) {
    case Model::ising_ladder: return ising_ladder(c.n_qubits, c.J, c.h);
    case Model::tfim: return transverse_ising_chain(c.n_qubits, c.J, c.h, c.periodic);
    case Model::dnls: break;
  }
  std::vector<double> v = c.V.empty() ? std::vector<double>(c.n_qubits, 0.0) : c.V;
  return dnls_system(c.n_qubits, c.J, v, c.g).linear_part;
}

PauliSum inversion_operator(const ExperimentConfig& c) {
  if (c.operator_terms.empty()) return random_positive_operator(c.n_qubits, 4, c.operator_seed);
  PauliSum m(c.n_qubits);
  for (const auto& t : c.operator_terms) m.add(t.coeff, PauliString::from_letters(t.letters));
  m = canonicalize(m);
  if (!m.is_hermitian()) throw ConfigError("config key 'operator_terms': operator is not Hermitian");
  return m;
}

Problem build_problem(const ExperimentConfig& c) {
  Problem p;
  if (c.experiment == Experiment::matrix_inverse) {
    p.m_op = inversion_operator(c);
    p.hamiltonian = *p.m_op;
    const auto terms = non_identity_strings(*p.m_op);
    p.basis = k_moment_expand(terms, c.K, c.M, c.circuit(), c.selection, c.selection_seed);
    return p;
  }
  if (c.model == Model::dnls) {
    std::vector<double> v = c.V.empty() ? std::vector<double>(c.n_qubits, 0.0) : c.V;
    p.dnls = dnls_system(c.n_qubits, c.J, v, c.g);
    p.hamiltonian = p.dnls->linear_part;
    p.basis = single_excitation_basis(c.n_qubits);
    p.request.hamiltonian = p.hamiltonian;
    p.request.extra_ops = p.dnls->spec.operators;
    return p;
  }
  p.hamiltonian = model_hamiltonian(c);
  const auto terms = non_identity_strings(p.hamiltonian);
  p.basis = k_moment_expand(terms, c.K, c.M, c.circuit(), c.selection, c.selection_seed);
  p.request.hamiltonian = p.hamiltonian;
  if (c.model == Model::ising_ladder) {
    if (c.gamma > 0.0) p.request.dissipators = raising_dissipators(c.n_qubits, c.gamma);
    p.request.extra_ops = {ladder_zz_correlation(c.n_qubits), total_z(c.n_qubits)};
    p.request.g_op = iqae_init_hamiltonian(c.n_qubits);
  }
  return p;
}

// Inversion blocks travel through the overlap directory as S_<a*r+b>.
OverlapSet inversion_as_overlaps(const InversionProblem& inv) {
  OverlapSet set;
  set.E = inv.e;
  set.D = inv.e;
  for (const auto& row : inv.blocks) {
    for (const auto& b : row) set.S.push_back(b);
  }
  return set;
}

InversionProblem inversion_from_overlaps(const OverlapSet& set, const PauliSum& m_op,
                                         std::size_t n) {
  InversionProblem inv;
  inv.unitaries.push_back(PauliString::identity(n));
  inv.mu.push_back(0.0);
  const PauliSum canonical = canonicalize(m_op);
  for (const auto& t : canonical.terms()) {
    if (t.string.is_identity()) {
      inv.mu[0] += t.coeff;
    } else {
      inv.unitaries.push_back(t.string);
      inv.mu.push_back(t.coeff);
    }
  }
  const std::size_t r = inv.unitaries.size();
  if (set.S.size() != r * r) {
    throw ConfigError("overlap directory holds " + std::to_string(set.S.size()) +
                      " blocks, expected " + std::to_string(r * r));
  }
  inv.blocks.assign(r, std::vector<Matrix>(r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) inv.blocks[a][b] = set.S[a * r + b];
  }
  inv.e = set.E;
  return inv;
}

void check_loaded(const OverlapSet& set, const Problem& p, bool inversion) {
  const std::size_t m = p.basis.size();
  auto fail = [](const std::string& why) { throw ConfigError("overlap directory: " + why); };
  if (set.dimension() != m) {
    fail("matrices have dimension " + std::to_string(set.dimension()) + ", basis has " +
         std::to_string(m) + " states");
  }
  if (inversion) return;
  if (set.R.size() != p.request.dissipators.size() || set.F.size() != p.request.dissipators.size()) {
    fail("dissipator count does not match the config");
  }
  if (set.S.size() != p.request.extra_ops.size()) fail("operator count does not match the config");
  if (p.request.g_op && !set.G) fail("missing G");
}

std::string read_text(const fs::path& file) {
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& file, const std::string& text) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << text;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) : width_(header.size()) { row_strings(header); }
  void row(const std::vector<double>& values) {
    std::vector<std::string> s;
    for (double v : values) s.push_back(fmt(v));
    row_strings(s);
  }
  const std::string& text() const { return text_; }

 private:
  void row_strings(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw std::logic_error("csv row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) text_ += (i ? "," : "") + cells[i];
    text_ += "\n";
  }
  std::size_t width_;
  std::string text_;
};

double max_of(const std::vector<double>& v) {
  return v.empty() ? std::numeric_limits<double>::quiet_NaN() : *std::max_element(v.begin(), v.end());
}
double min_of(const std::vector<double>& v) {
  return v.empty() ? std::numeric_limits<double>::quiet_NaN() : *std::min_element(v.begin(), v.end());
}

void add_observable_summary(RunResult& r) {
  r.summary.insert(r.summary.begin(), {{"end_" + r.observable_name, r.observable.back()},
                                       {"min_" + r.observable_name, min_of(r.observable)},
                                       {"max_" + r.observable_name, max_of(r.observable)}});
  if (!r.fidelity.empty()) {
    double mean = 0.0;
    for (double f : r.fidelity) mean += f;
    mean /= static_cast<double>(r.fidelity.size());
    r.summary.push_back({"min_fidelity", min_of(r.fidelity)});
    r.summary.push_back({"mean_fidelity", mean});
    r.summary.push_back({"end_fidelity", r.fidelity.back()});
  }
}

// Fidelity against a dense reference. The densified hybrid state can carry
// small negative eigenvalues; they are clipped and the trace restored so the
// fidelity stays defined, and beta_min_eig reports how large they were.
double fidelity_to(const Matrix& rho_hybrid, const Matrix& rho_exact) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(rho_hybrid));
  RealVector lam = eig.eigenvalues().cwiseMax(0.0);
  const double total = lam.sum();
  if (!(total > 0.0)) return 0.0;
  lam /= total;
  const Matrix clipped =
      eig.eigenvectors() * lam.cast<cplx>().asDiagonal() * eig.eigenvectors().adjoint();
  return oracle::uhlmann_fidelity(oracle::DenseState::from_density(clipped),
                                  oracle::DenseState::from_density(rho_exact));
}

struct Prepared {
  Problem problem;
  OverlapSet overlaps;
  std::optional<InversionProblem> inversion;
};

Prepared prepare(const ExperimentConfig& c, const RunOptions& options, const fs::path& out,
                 RunResult& result) {
  Prepared prep;
  prep.problem = build_problem(c);
  Problem& p = prep.problem;
  if (p.basis.exhausted) {
    result.warnings.push_back("only " + std::to_string(p.basis.size()) +
                              " distinct ansatz states exist; M = " + std::to_string(c.M) +
                              " was requested");
  }
  p.basis = materialize(std::move(p.basis));
  const bool inversion = c.experiment == Experiment::matrix_inverse;

  if (options.overlaps_dir) {
    const fs::path dir = *options.overlaps_dir;
    if (!fs::is_directory(dir)) throw ConfigError("overlap directory " + dir.string() + " not found");
    const fs::path id_file = dir / "basis_id.txt";
    if (fs::exists(id_file)) {
      std::string id = read_text(id_file);
      while (!id.empty() && (id.back() == '\n' || id.back() == ' ')) id.pop_back();
      if (id != p.basis.id()) {
        throw ConfigError("overlap directory was computed on basis " + id +
                          ", config selects basis " + p.basis.id());
      }
    }
    try {
      prep.overlaps = load_overlap_set(dir);
    } catch (const std::runtime_error& e) {
      throw ConfigError(std::string("overlap directory: ") + e.what());
    }
    check_loaded(prep.overlaps, p, inversion);
    if (inversion) prep.inversion = inversion_from_overlaps(prep.overlaps, *p.m_op, c.n_qubits);
  } else if (inversion) {
    prep.inversion = measure_inversion_problem(p.basis, *p.m_op, c.measurement());
    prep.overlaps = inversion_as_overlaps(*prep.inversion);
    prep.overlaps.measurement_jobs = 0;
  } else {
    prep.overlaps = compute_overlap_set(p.basis, p.request, c.measurement());
  }

  fs::create_directories(out / "overlaps");
  save_overlap_set(prep.overlaps, out / "overlaps");
  write_text(out / "overlaps" / "basis_id.txt", p.basis.id() + "\n");
  write_text(out / "basis.tsv", dump_basis(p.basis));
  return prep;
}

void write_manifest(const ExperimentConfig& c, const RunOptions& options, const Prepared& prep,
                    const RunResult& r, const fs::path& out) {
  json j;
  j["version"] = GQAS_VERSION;
  j["config"] = c.to_json();
  j["basis_id"] = prep.problem.basis.id();
  j["basis_size"] = prep.problem.basis.size();
  j["basis_exhausted"] = prep.problem.basis.exhausted;
  j["measurement_jobs"] = prep.overlaps.measurement_jobs;
  j["overlaps_reused"] = options.overlaps_dir.has_value();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(prep.overlaps.E), Eigen::EigenvaluesOnly);
  j["gram_min_eigenvalue"] = eig.eigenvalues().minCoeff();
  j["gram_max_eigenvalue"] = eig.eigenvalues().maxCoeff();
  j["observable"] = r.observable_name;
  json summary = json::object();
  for (const auto& [k, v] : r.summary) summary[k] = std::isfinite(v) ? json(v) : json(fmt(v));
  j["summary"] = summary;
  j["warnings"] = r.warnings;
  write_text(out / "manifest.json", j.dump(2) + "\n");
}

void run_open_ising(const ExperimentConfig& c, const Prepared& prep, bool oracle_on, RunResult& r,
                    const fs::path& out) {
  const OverlapSet& ov = prep.overlaps;
  const auto cfg = c.integrator();
  const IqaeResult init = iqae_ground_state(*ov.G, ov.E, cfg.pinv_cutoff);
  Matrix beta0 = init.alpha * init.alpha.adjoint();
  std::vector<double> rates;
  for (const auto& d : prep.problem.request.dissipators) rates.push_back(d.rate);
  const DensityTrajectory traj = evolve_lindblad(ov, beta0, rates, cfg);

  std::vector<Matrix> exact;
  const AnsatzBasis& basis = prep.problem.basis;
  if (oracle_on) {
    // The exact reference starts from the state IQAE targets.
    Eigen::SelfAdjointEigenSolver<Matrix> g_eig(to_dense(*prep.problem.request.g_op));
    const Vector ground = g_eig.eigenvectors().col(0);
    const Matrix rho0 = ground * ground.adjoint();
    if (prep.problem.request.dissipators.empty()) {
      exact = oracle::exact_unitary_density(prep.problem.hamiltonian, rho0, traj.times);
    } else {
      exact = oracle::exact_lindblad(prep.problem.hamiltonian, prep.problem.request.dissipators,
                                     rho0, cfg.dt, cfg.t_final, cfg.output_stride)
                  .states;
    }
    if (exact.size() != traj.times.size()) throw std::logic_error("oracle time grid mismatch");
  }

  std::vector<std::string> header = {"time", "trace", "purity", "zz_corr", "sz_total",
                                     "beta_min_eig"};
  if (oracle_on) header.push_back("fidelity");
  Csv csv(header);
  r.observable_name = "zz_corr";
  r.fidelity.assign(traj.times.size(), 0.0);
  std::vector<std::vector<double>> rows(traj.times.size());
  parallel_for(traj.times.size(), [&](std::size_t k) {
    const HybridDensityMatrix h{traj.betas[k], basis.id()};
    std::vector<double> row = {traj.times[k],
                               trace(h, ov.E),
                               purity(h, ov.E),
                               expectation(h, ov.S[0]).real(),
                               expectation(h, ov.S[1]).real(),
                               min_eigenvalue(traj.betas[k])};
    if (oracle_on) {
      r.fidelity[k] = fidelity_to(densify(h, basis), exact[k]);
      row.push_back(r.fidelity[k]);
    }
    rows[k] = std::move(row);
  });
  if (!oracle_on) r.fidelity.clear();
  for (const auto& row : rows) {
    csv.row(row);
    r.times.push_back(row[0]);
    r.observable.push_back(row[3]);
  }
  write_text(out / "trajectory.csv", csv.text());
  r.summary.push_back({"iqae_energy", init.energy});
  if (oracle_on) {
    r.summary.push_back({"initial_fidelity", r.fidelity.front()});
  }
}

void run_gibbs(const ExperimentConfig& c, const Prepared& prep, bool oracle_on, RunResult& r,
               const fs::path& out) {
  const OverlapSet& ov = prep.overlaps;
  const auto cfg = c.integrator();
  const Matrix beta0 = totally_mixed_init(ov.E, cfg.pinv_cutoff);
  const DensityTrajectory traj = evolve_imaginary(ov.E, ov.D, beta0, cfg);
  const std::string id = prep.problem.basis.id();

  std::vector<std::string> header = {"tau", "temperature", "trace", "purity", "energy"};
  if (oracle_on) header.push_back("exact_energy");
  Csv csv(header);
  r.observable_name = "energy";
  double max_error = 0.0;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const double tau = traj.times[k];
    const double temperature =
        tau > 0.0 ? 1.0 / (2.0 * tau) : std::numeric_limits<double>::infinity();
    const HybridDensityMatrix h{traj.betas[k], id};
    const double energy = expectation(h, ov.D).real();
    std::vector<double> row = {tau, temperature, trace(h, ov.E), purity(h, ov.E), energy};
    if (oracle_on) {
      const double exact = tau > 0.0
                               ? oracle::exact_gibbs(prep.problem.hamiltonian, temperature).energy
                               : oracle::exact_gibbs(prep.problem.hamiltonian,
                                                     std::numeric_limits<double>::infinity())
                                     .energy;
      max_error = std::max(max_error, std::abs(energy - exact));
      row.push_back(exact);
    }
    csv.row(row);
    r.times.push_back(tau);
    r.observable.push_back(energy);
  }
  write_text(out / "trajectory.csv", csv.text());
  if (oracle_on) {
    r.summary.push_back({"max_energy_error", max_error});
    r.summary.push_back({"ground_energy", oracle::ground_energy(prep.problem.hamiltonian)});
  }
}

Vector dnls_initial(std::size_t n) {
  Vector eta = Vector::Zero(static_cast<Eigen::Index>(n));
  std::size_t occupied = (n + 1) / 2;
  for (std::size_t i = 0; i < n; i += 2) {
    eta[static_cast<Eigen::Index>(i)] = std::sqrt(1.0 / static_cast<double>(occupied));
  }
  return eta;
}

void run_dnls(const ExperimentConfig& c, const Prepared& prep, bool oracle_on, RunResult& r,
              const fs::path& out) {
  const OverlapSet& ov = prep.overlaps;
  const auto cfg = c.integrator();
  const Vector alpha0 = dnls_initial(c.n_qubits);
  const PureTrajectory traj =
      evolve_nonlinear(ov.E, ov.S, prep.problem.dnls->spec, alpha0, cfg);

  std::vector<double> exact;
  if (oracle_on) {
    std::vector<double> v = c.V.empty() ? std::vector<double>(c.n_qubits, 0.0) : c.V;
    exact = oracle::exact_dnls(alpha0, c.J, v, c.g, cfg.dt, cfg.t_final, cfg.output_stride).n_even;
    if (exact.size() != traj.times.size()) throw std::logic_error("oracle time grid mismatch");
  }
  std::vector<std::string> header = {"time", "norm", "n_even", "n_odd"};
  if (oracle_on) header.push_back("oracle_n_even");
  Csv csv(header);
  r.observable_name = "n_even";
  double max_error = 0.0;
  double max_norm_drift = 0.0;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const HybridPureState s{traj.alphas[k], prep.problem.basis.id()};
    double even = 0.0;
    double odd = 0.0;
    for (std::size_t i = 0; i < c.n_qubits; ++i) {
      const double n_i = expectation(s, ov.S[1 + i]).real();
      (i % 2 == 1 ? even : odd) += n_i;
    }
    const double norm = norm_squared(s, ov.E);
    max_norm_drift = std::max(max_norm_drift, std::abs(norm - 1.0));
    std::vector<double> row = {traj.times[k], norm, even, odd};
    if (oracle_on) {
      row.push_back(exact[k]);
      max_error = std::max(max_error, std::abs(even - exact[k]));
    }
    csv.row(row);
    r.times.push_back(traj.times[k]);
    r.observable.push_back(even);
  }
  write_text(out / "trajectory.csv", csv.text());
  r.summary.push_back({"max_norm_drift", max_norm_drift});
  if (oracle_on) r.summary.push_back({"max_n_even_error", max_error});
}

void run_matrix_inverse(const ExperimentConfig& c, const Prepared& prep, bool oracle_on,
                        RunResult& r, const fs::path& out) {
  auto cfg = c.integrator();
  cfg.renormalize_each_step = false;
  const GeneralizedSystem system = inversion_system(*prep.inversion, cfg.t_final);
  Vector alpha0 = Vector::Zero(static_cast<Eigen::Index>(prep.problem.basis.size()));
  alpha0[0] = 1.0;
  const PureTrajectory traj = evolve_generalized(system, alpha0, cfg);

  Matrix psi;
  Matrix m_dense;
  Vector v0;
  if (oracle_on) {
    psi = basis_matrix(prep.problem.basis);
    m_dense = to_dense(*prep.problem.m_op);
    v0 = psi.col(0);
  }
  std::vector<std::string> header = {"time", "norm"};
  if (oracle_on) header.push_back("residual");
  Csv csv(header);
  r.observable_name = "norm";
  double end_residual = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const HybridPureState s{traj.alphas[k], prep.problem.basis.id()};
    const double norm = norm_squared(s, prep.inversion->e);
    std::vector<double> row = {traj.times[k], norm};
    if (oracle_on) {
      const Vector mv = m_dense * (psi * traj.alphas[k]);
      const cplx scale = v0.dot(mv) / v0.squaredNorm();
      end_residual = (mv - scale * v0).norm() / (scale * v0).norm();
      row.push_back(end_residual);
    }
    csv.row(row);
    r.times.push_back(traj.times[k]);
    r.observable.push_back(norm);
  }
  write_text(out / "trajectory.csv", csv.text());
  write_matrix(out / "solution.txt", traj.alphas.back());
  if (oracle_on) r.summary.push_back({"relative_residual", end_residual});
}

void run_overlaps_only(const ExperimentConfig& c, const Prepared& prep, bool oracle_on,
                       RunResult& r) {
  r.observable_name = "gram_trace";
  r.times.push_back(0.0);
  r.observable.push_back(prep.overlaps.E.trace().real());
  if (!oracle_on) return;
  (void)c;
  const Matrix psi = basis_matrix(prep.problem.basis);
  const Matrix h = to_dense(prep.problem.hamiltonian);
  double err = (psi.adjoint() * psi - prep.overlaps.E).cwiseAbs().maxCoeff();
  err = std::max(err, (psi.adjoint() * h * psi - prep.overlaps.D).cwiseAbs().maxCoeff());
  const auto& diss = prep.problem.request.dissipators;
  for (std::size_t k = 0; k < diss.size(); ++k) {
    const Matrix l = to_dense(diss[k].op);
    err = std::max(err, (psi.adjoint() * l * psi - prep.overlaps.R[k]).cwiseAbs().maxCoeff());
    err = std::max(err, (psi.adjoint() * l.adjoint() * l * psi - prep.overlaps.F[k])
                            .cwiseAbs()
                            .maxCoeff());
  }
  r.summary.push_back({"max_overlap_error", err});
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  config.validate();
  const bool oracle_on = options.with_oracle || config.with_oracle;
  if (oracle_on && config.n_qubits > oracle::kMaxOracleQubits) {
    throw ConfigError("the dense oracle supports at most " +
                      std::to_string(oracle::kMaxOracleQubits) + " qubits");
  }
  RunResult r;
  const fs::path out = config.output_dir;
  r.output_dir = out;
  fs::create_directories(out);

  Prepared prep;
  try {
    prep = prepare(config, options, out, r);
    switch (config.experiment) {
      case Experiment::open_ising: run_open_ising(config, prep, oracle_on, r, out); break;
      case Experiment::gibbs: run_gibbs(config, prep, oracle_on, r, out); break;
      case Experiment::dnls: run_dnls(config, prep, oracle_on, r, out); break;
      case Experiment::matrix_inverse: run_matrix_inverse(config, prep, oracle_on, r, out); break;
      case Experiment::overlaps_only: run_overlaps_only(config, prep, oracle_on, r); break;
    }
  } catch (const SingularBasisError& e) {
    std::ostringstream spectrum;
    spectrum << std::setprecision(17);
    for (Eigen::Index i = 0; i < e.spectrum().size(); ++i) spectrum << e.spectrum()[i] << "\n";
    write_text(out / "gram_spectrum.txt", spectrum.str());
    throw;
  }
  add_observable_summary(r);
  write_manifest(config, options, prep, r, out);
  return r;
}

RunResult compute_overlaps(const ExperimentConfig& config) {
  config.validate();
  RunResult r;
  const fs::path out = config.output_dir;
  r.output_dir = out;
  fs::create_directories(out);
  const RunOptions options;
  const Prepared prep = prepare(config, options, out, r);
  r.observable_name = "gram_trace";
  r.times.push_back(0.0);
  r.observable.push_back(prep.overlaps.E.trace().real());
  add_observable_summary(r);
  write_manifest(config, options, prep, r, out);
  return r;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& config, const std::string& key,
                                const std::vector<double>& values, const RunOptions& options) {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  std::vector<ExperimentConfig> configs;
  for (double v : values) {
    ExperimentConfig c = config;
    c.set_numeric(key, v);
    c.output_dir = (fs::path(config.output_dir) / (key + "_" + fmt(v))).string();
    configs.push_back(std::move(c));
  }
  std::vector<SweepRow> rows(values.size());
  parallel_for(values.size(), [&](std::size_t i) {
    rows[i] = SweepRow{values[i], run_experiment(configs[i], options)};
  });

  std::vector<std::string> header = {"value"};
  for (const auto& [name, v] : rows.front().result.summary) header.push_back(name);
  Csv csv(header);
  for (const auto& row : rows) {
    std::vector<double> cells = {row.value};
    for (const auto& [name, v] : row.result.summary) cells.push_back(v);
    csv.row(cells);
  }
  fs::create_directories(config.output_dir);
  write_text(fs::path(config.output_dir) / "summary.csv", csv.text());
  return rows;
}

}  // namespace gqas
