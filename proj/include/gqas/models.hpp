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
#include <cstdint>
#include <utility>
#include <vector>

#include "gqas/dynamics.hpp"
#include "gqas/pauli.hpp"

namespace gqas {

/// Two rails of n/2 qubits (0..n/2-1 and n/2..n-1) joined by rungs (i, i+n/2).
struct LadderTopology {
  std::size_t n_qubits = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

LadderTopology ladder_topology(std::size_t n_qubits);

/// sum_<ij> J Z_i Z_j + sum_i h X_i on the ladder; n even, n >= 4.
PauliSum ising_ladder(std::size_t n_qubits, double coupling, double field);

/// sum_<ij> Z_i Z_j / |edges|, the nearest-neighbour correlation observable.
PauliSum ladder_zz_correlation(std::size_t n_qubits);

/// (J/2) sum_i X_i X_{i+1} - (h/2) sum_i Z_i; wraps around when periodic.
PauliSum transverse_ising_chain(std::size_t n_qubits, double coupling, double field,
                                bool periodic = true);

/// sigma+ = |1><0| on qubit i as a PauliSum: (X - iY)/2.
PauliSum raising_operator(std::size_t n_qubits, std::size_t qubit);

/// One pump per qubit with the given rate.
std::vector<Dissipator> raising_dissipators(std::size_t n_qubits, double rate);

/// n_i = (1 - Z_i)/2
PauliSum number_operator(std::size_t n_qubits, std::size_t qubit);

/// sum_i Z_i
PauliSum total_z(std::size_t n_qubits);

/// -sum_i Z_i; ground state |0...0>.
PauliSum iqae_init_hamiltonian(std::size_t n_qubits);

/**
 * Discrete nonlinear Schroedinger chain mapped onto spins:
 *   H = -(J/2) sum_i (X_i X_{i+1} + Y_i Y_{i+1}) + sum_i V_i n_i + g sum_i <n_i> n_i
 * on an open chain. spec.operators = [linear_part, n_0, ..., n_{N-1}] and
 * spec.coefficients returns [1, g<n_0>, ..., g<n_{N-1}>].
 */
struct DnlsSystem {
  PauliSum linear_part;
  std::vector<PauliSum> density_ops;
  NonlinearSpec spec;
};

DnlsSystem dnls_system(std::size_t n_sites, double hopping, const std::vector<double>& potential,
                       double interaction);

/**
 * a_0 * 1 + sum_{k=1}^{terms-1} a_k P_k with distinct random non-identity
 * strings P_k, a_k uniform in [-1, 1] and a_0 = sum |a_k| + margin, so the
 * operator is Hermitian with every eigenvalue >= margin.
 */
PauliSum random_positive_operator(std::size_t n_qubits, std::size_t terms, std::uint64_t seed,
                                  double margin = 0.5);

/// Sum over 1-indexed even sites (0-indexed odd): the n_even observable.
PauliSum even_site_density(std::size_t n_sites);

}  // namespace gqas
