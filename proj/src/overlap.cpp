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

#include "gqas/overlap.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <stdexcept>
#include <string>

#include "gqas/parallel.hpp"

namespace gqas {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t job_seed(std::uint64_t seed, const PauliString& base) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ base.x_bits());
  h = splitmix64(h ^ base.z_bits());
  return splitmix64(h ^ base.n_qubits());
}

struct EntryJob {
  cplx factor;
  std::size_t base;
};

}  // namespace

PauliMeasurer::PauliMeasurer(const CircuitSpec& reference, MeasurementBackend backend)
    : state_(build_reference_state(reference)), backend_(backend) {
  if (backend_.mode == MeasurementMode::sampled && backend_.shots == 0) {
    throw std::invalid_argument("sampled backend needs shots >= 1");
  }
}

void PauliMeasurer::measure(std::span<const PauliString> bases) {
  std::vector<PauliString> todo;
  for (const auto& b : bases) {
    if (!cache_.contains(b)) todo.push_back(b.with_phase(0));
  }
  std::sort(todo.begin(), todo.end(), [](const PauliString& a, const PauliString& b) {
    return a.x_bits() != b.x_bits() ? a.x_bits() < b.x_bits() : a.z_bits() < b.z_bits();
  });
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());

  std::vector<double> values(todo.size());
  parallel_for(todo.size(), [&](std::size_t i) {
    const double exact = hermitian_expectation(todo[i], state_);
    values[i] = backend_.mode == MeasurementMode::exact
                    ? exact
                    : sample_pauli_estimate(exact, backend_.shots,
                                            job_seed(backend_.rng_seed, todo[i]));
  });
  for (std::size_t i = 0; i < todo.size(); ++i) cache_.emplace(todo[i], values[i]);
}

double PauliMeasurer::value(const PauliString& base) const {
  const auto it = cache_.find(base);
  if (it == cache_.end()) {
    throw std::logic_error("Pauli string " + base.to_string() + " was never measured");
  }
  return it->second;
}

double sample_pauli_estimate(double exact_value, std::size_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be >= 1");
  const double p_plus = std::clamp((1.0 + exact_value) / 2.0, 0.0, 1.0);
  std::mt19937_64 rng(seed);
  std::binomial_distribution<long long> plus(static_cast<long long>(shots), p_plus);
  const long long k = plus(rng);
  return (2.0 * static_cast<double>(k) - static_cast<double>(shots)) /
         static_cast<double>(shots);
}

double sampled_expectation(const PauliString& base, const CircuitSpec& reference,
                           std::size_t shots, std::uint64_t rng_seed) {
  PauliMeasurer m(reference, MeasurementBackend::sampled(shots, rng_seed));
  const PauliString b = base.with_phase(0);
  m.measure(std::span(&b, 1));
  return m.value(b);
}

Matrix compute_operator_overlaps(const AnsatzBasis& basis, const PauliSum& op,
                                 PauliMeasurer& measurer) {
  if (op.n_qubits() != basis.n_qubits()) {
    throw std::invalid_argument("operator acts on " + std::to_string(op.n_qubits()) +
                                " qubits but the basis has " +
                                std::to_string(basis.n_qubits()));
  }
  const std::size_t m = basis.size();
  const auto& terms = op.terms();

  // pass 1: reduce every (i, j, t) to phase * base and collect distinct bases
  std::unordered_map<PauliString, std::size_t, PauliBaseHash, PauliBaseEqual> index;
  std::vector<PauliString> bases;
  std::vector<EntryJob> jobs;
  jobs.reserve(m * m * terms.size());
  for (std::size_t i = 0; i < m; ++i) {
    const PauliString left = dagger(basis.paulis[i]);
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& t : terms) {
        const PhasedBase split =
            hermitian_base(multiply(multiply(left, t.string), basis.paulis[j]));
        auto [it, inserted] = index.try_emplace(split.base, bases.size());
        if (inserted) bases.push_back(split.base);
        jobs.push_back({t.coeff * split.phase(), it->second});
      }
    }
  }
  measurer.measure(bases);
  std::vector<double> values(bases.size());
  for (std::size_t b = 0; b < bases.size(); ++b) values[b] = measurer.value(bases[b]);

  // pass 2: assemble
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cplx acc = 0.0;
      for (std::size_t t = 0; t < terms.size(); ++t, ++k) {
        acc += jobs[k].factor * values[jobs[k].base];
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  }
  return out;
}

Matrix compute_operator_overlaps(const AnsatzBasis& basis, const PauliSum& op,
                                 const MeasurementBackend& backend) {
  PauliMeasurer measurer(basis.reference, backend);
  return compute_operator_overlaps(basis, op, measurer);
}

Matrix hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

OverlapSet compute_overlap_set(const AnsatzBasis& basis, const OverlapRequest& request,
                               const MeasurementBackend& backend) {
  for (const auto& d : request.dissipators) {
    if (!(d.rate >= 0.0)) {
      throw std::invalid_argument("dissipator rate must be >= 0, got " + std::to_string(d.rate));
    }
  }
  const std::size_t n = basis.n_qubits();
  const bool sampled = backend.mode == MeasurementMode::sampled;
  PauliMeasurer measurer(basis.reference, backend);

  OverlapSet set;
  Matrix e = compute_operator_overlaps(basis, PauliSum::identity(n), measurer);
  if (sampled) {
    set.raw_E = e;
    set.E = hermitize(e);
  } else {
    set.E = std::move(e);
  }
  set.D = compute_operator_overlaps(basis, request.hamiltonian, measurer);
  for (const auto& d : request.dissipators) {
    set.R.push_back(compute_operator_overlaps(basis, d.op, measurer));
    Matrix f = compute_operator_overlaps(basis, canonicalize(dagger(d.op) * d.op), measurer);
    if (sampled) {
      set.raw_F.push_back(f);
      set.F.push_back(hermitize(f));
    } else {
      set.F.push_back(std::move(f));
    }
  }
  for (const auto& op : request.extra_ops) {
    set.S.push_back(compute_operator_overlaps(basis, op, measurer));
  }
  if (request.g_op) set.G = compute_operator_overlaps(basis, *request.g_op, measurer);
  if (request.v_op) {
    Matrix v = compute_operator_overlaps(basis, *request.v_op, measurer);
    set.V = sampled ? hermitize(v) : v;
  }
  set.measurement_jobs = measurer.job_count();
  return set;
}

void write_matrix(const std::filesystem::path& file, const Matrix& m) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << m.rows() << '\n' << std::setprecision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j).real() << ' ' << m(i, j).imag();
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

Matrix read_matrix(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  Eigen::Index dim = 0;
  if (!(in >> dim) || dim <= 0) throw std::runtime_error("bad dimension in " + file.string());
  Matrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      double re = 0.0;
      double im = 0.0;
      if (!(in >> re >> im)) throw std::runtime_error("truncated matrix file " + file.string());
      m(i, j) = {re, im};
    }
  }
  return m;
}

void save_overlap_set(const OverlapSet& set, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_matrix(dir / "E.txt", set.E);
  write_matrix(dir / "D.txt", set.D);
  for (std::size_t n = 0; n < set.R.size(); ++n) {
    write_matrix(dir / ("R_" + std::to_string(n) + ".txt"), set.R[n]);
    write_matrix(dir / ("F_" + std::to_string(n) + ".txt"), set.F[n]);
  }
  for (std::size_t k = 0; k < set.S.size(); ++k) {
    write_matrix(dir / ("S_" + std::to_string(k) + ".txt"), set.S[k]);
  }
  if (set.G) write_matrix(dir / "G.txt", *set.G);
  if (set.V) write_matrix(dir / "V.txt", *set.V);
}

OverlapSet load_overlap_set(const std::filesystem::path& dir) {
  OverlapSet set;
  set.E = read_matrix(dir / "E.txt");
  set.D = read_matrix(dir / "D.txt");
  for (std::size_t n = 0; std::filesystem::exists(dir / ("R_" + std::to_string(n) + ".txt")); ++n) {
    set.R.push_back(read_matrix(dir / ("R_" + std::to_string(n) + ".txt")));
    set.F.push_back(read_matrix(dir / ("F_" + std::to_string(n) + ".txt")));
  }
  for (std::size_t k = 0; std::filesystem::exists(dir / ("S_" + std::to_string(k) + ".txt")); ++k) {
    set.S.push_back(read_matrix(dir / ("S_" + std::to_string(k) + ".txt")));
  }
  if (std::filesystem::exists(dir / "G.txt")) set.G = read_matrix(dir / "G.txt");
  if (std::filesystem::exists(dir / "V.txt")) set.V = read_matrix(dir / "V.txt");
  const auto m = set.E.rows();
  auto check = [&](const Matrix& x, const std::string& name) {
    if (x.rows() != m) throw std::runtime_error("overlap matrix " + name + " has wrong size");
  };
  check(set.D, "D");
  for (const auto& x : set.R) check(x, "R");
  for (const auto& x : set.F) check(x, "F");
  for (const auto& x : set.S) check(x, "S");
  if (set.G) check(*set.G, "G");
  if (set.V) check(*set.V, "V");
  return set;
}

}  // namespace gqas
