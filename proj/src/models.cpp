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

#include "gqas/models.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace gqas {

namespace {

PauliString pair(std::size_t n, std::size_t i, std::size_t j, char letter) {
  return multiply(PauliString::single(n, i, letter), PauliString::single(n, j, letter));
}

}  // namespace

LadderTopology ladder_topology(std::size_t n_qubits) {
  if (n_qubits < 4 || n_qubits % 2 != 0) {
    throw std::invalid_argument("ladder needs an even qubit count >= 4, got " +
                                std::to_string(n_qubits));
  }
  const std::size_t rail = n_qubits / 2;
  LadderTopology topo;
  topo.n_qubits = n_qubits;
  for (std::size_t i = 0; i + 1 < rail; ++i) topo.edges.emplace_back(i, i + 1);
  for (std::size_t i = 0; i + 1 < rail; ++i) topo.edges.emplace_back(rail + i, rail + i + 1);
  for (std::size_t i = 0; i < rail; ++i) topo.edges.emplace_back(i, rail + i);
  return topo;
}

PauliSum ising_ladder(std::size_t n_qubits, double coupling, double field) {
  const LadderTopology topo = ladder_topology(n_qubits);
  PauliSum h(n_qubits);
  for (const auto& [i, j] : topo.edges) h.add(coupling, pair(n_qubits, i, j, 'Z'));
  for (std::size_t i = 0; i < n_qubits; ++i) h.add(field, PauliString::single(n_qubits, i, 'X'));
  return h;
}

PauliSum ladder_zz_correlation(std::size_t n_qubits) {
  const LadderTopology topo = ladder_topology(n_qubits);
  PauliSum o(n_qubits);
  const double w = 1.0 / static_cast<double>(topo.edges.size());
  for (const auto& [i, j] : topo.edges) o.add(w, pair(n_qubits, i, j, 'Z'));
  return o;
}

PauliSum transverse_ising_chain(std::size_t n_qubits, double coupling, double field,
                                bool periodic) {
  if (n_qubits < 2) throw std::invalid_argument("transverse Ising chain needs n >= 2");
  PauliSum h(n_qubits);
  const std::size_t bonds = periodic ? n_qubits : n_qubits - 1;
  for (std::size_t i = 0; i < bonds; ++i) {
    h.add(0.5 * coupling, pair(n_qubits, i, (i + 1) % n_qubits, 'X'));
  }
  for (std::size_t i = 0; i < n_qubits; ++i) {
    h.add(-0.5 * field, PauliString::single(n_qubits, i, 'Z'));
  }
  return canonicalize(h);
}

PauliSum raising_operator(std::size_t n_qubits, std::size_t qubit) {
  PauliSum s(n_qubits);
  s.add(0.5, PauliString::single(n_qubits, qubit, 'X'));
  s.add(-0.5 * kI, PauliString::single(n_qubits, qubit, 'Y'));
  return s;
}

std::vector<Dissipator> raising_dissipators(std::size_t n_qubits, double rate) {
  if (!(rate >= 0.0)) throw std::invalid_argument("dissipation rate must be >= 0");
  std::vector<Dissipator> out;
  for (std::size_t i = 0; i < n_qubits; ++i) out.push_back({rate, raising_operator(n_qubits, i)});
  return out;
}

PauliSum number_operator(std::size_t n_qubits, std::size_t qubit) {
  PauliSum s = PauliSum::identity(n_qubits, 0.5);
  s.add(-0.5, PauliString::single(n_qubits, qubit, 'Z'));
  return s;
}

PauliSum total_z(std::size_t n_qubits) {
  PauliSum s(n_qubits);
  for (std::size_t i = 0; i < n_qubits; ++i) s.add(1.0, PauliString::single(n_qubits, i, 'Z'));
  return s;
}

PauliSum iqae_init_hamiltonian(std::size_t n_qubits) {
  if (n_qubits == 0) throw std::invalid_argument("need at least one qubit");
  return -1.0 * total_z(n_qubits);
}

DnlsSystem dnls_system(std::size_t n_sites, double hopping, const std::vector<double>& potential,
                       double interaction) {
  if (n_sites < 2) throw std::invalid_argument("DNLS chain needs at least two sites");
  if (potential.size() != n_sites) {
    throw std::invalid_argument("DNLS potential has " + std::to_string(potential.size()) +
                                " entries for " + std::to_string(n_sites) + " sites");
  }
  DnlsSystem sys;
  sys.linear_part = PauliSum(n_sites);
  for (std::size_t i = 0; i + 1 < n_sites; ++i) {
    sys.linear_part.add(-0.5 * hopping, pair(n_sites, i, i + 1, 'X'));
    sys.linear_part.add(-0.5 * hopping, pair(n_sites, i, i + 1, 'Y'));
  }
  for (std::size_t i = 0; i < n_sites; ++i) {
    sys.linear_part += potential[i] * number_operator(n_sites, i);
    sys.density_ops.push_back(number_operator(n_sites, i));
  }
  sys.linear_part = canonicalize(sys.linear_part);

  sys.spec.operators.push_back(sys.linear_part);
  for (const auto& n_i : sys.density_ops) sys.spec.operators.push_back(n_i);
  sys.spec.coefficients = [interaction](double, std::span<const cplx> expect) {
    std::vector<cplx> f(expect.size(), 0.0);
    if (f.empty()) return f;
    f[0] = 1.0;
    for (std::size_t k = 1; k < expect.size(); ++k) f[k] = interaction * expect[k].real();
    return f;
  };
  return sys;
}

PauliSum random_positive_operator(std::size_t n_qubits, std::size_t terms, std::uint64_t seed,
                                  double margin) {
  if (terms == 0) throw std::invalid_argument("operator needs at least one term");
  if (n_qubits == 0 || n_qubits > 20) {
    throw std::invalid_argument("random operator supports 1..20 qubits");
  }
  const std::uint64_t strings = std::uint64_t{1} << (2 * n_qubits);
  if (terms > strings) throw std::invalid_argument("more terms than distinct Pauli strings");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, strings - 1);
  std::uniform_real_distribution<double> weight(-1.0, 1.0);
  const std::uint64_t mask = (std::uint64_t{1} << n_qubits) - 1;

  std::vector<PauliString> chosen;
  while (chosen.size() + 1 < terms) {
    const std::uint64_t code = pick(rng);
    PauliString p(n_qubits, code & mask, code >> n_qubits);
    bool seen = false;
    for (const auto& c : chosen) seen = seen || c == p;
    if (!seen) chosen.push_back(p);
  }
  PauliSum out(n_qubits);
  double total = 0.0;
  std::vector<double> a;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    a.push_back(weight(rng));
    total += std::abs(a.back());
  }
  out.add(total + margin, PauliString::identity(n_qubits));
  for (std::size_t k = 0; k < chosen.size(); ++k) out.add(a[k], chosen[k]);
  return out;
}

PauliSum even_site_density(std::size_t n_sites) {
  PauliSum s(n_sites);
  for (std::size_t i = 1; i < n_sites; i += 2) s += number_operator(n_sites, i);
  return canonicalize(s);
}

}  // namespace gqas
