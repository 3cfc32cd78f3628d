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
#include <span>
#include <string>
#include <vector>

#include "gqas/pauli.hpp"
#include "gqas/statevector.hpp"

namespace gqas {

enum class Selection { ordered, random };

/**
 * Fixed set of ansatz states |psi_j> = P_j |psi>, where |psi> is prepared by
 * `reference`. No two entries share the same letters and every entry
 * carries phase +1. K-moment bases start with the identity.
 */
struct AnsatzBasis {
  CircuitSpec reference;
  std::vector<PauliString> paulis;
  /// Filled by materialize(); empty otherwise.
  std::vector<StateVector> cached_states;
  /// Set when fewer distinct strings existed than were requested.
  bool exhausted = false;

  std::size_t size() const { return paulis.size(); }
  std::size_t n_qubits() const { return reference.n_qubits; }
  bool materialized() const { return cached_states.size() == paulis.size(); }
  /// Stable content hash of reference and strings, used to bind
  /// coefficient files to the basis they were computed on.
  std::string id() const;
};

/**
 * Cumulative K-moment basis: moment k contributes the products
 * U_{i_k} ... U_{i_1} |psi> for all index tuples (i_1, ..., i_k) in
 * lexicographic order. Strings equal up to phase are dropped after their
 * first occurrence. With Selection::ordered the first `max_states` are
 * kept; with Selection::random the identity plus a uniform sample of the
 * remainder (seeded by `selection_seed`, generation order preserved).
 */
AnsatzBasis k_moment_expand(std::span<const PauliString> terms, std::size_t moments,
                            std::size_t max_states, const CircuitSpec& reference,
                            Selection selection = Selection::ordered,
                            std::uint64_t selection_seed = 0);

/// {X_j |0...0>} for j = 0..n-1: orthonormal single-excitation states.
AnsatzBasis single_excitation_basis(std::size_t n_qubits);

/// Returns a copy with cached_states[j] = P_j |psi>.
AnsatzBasis materialize(AnsatzBasis basis);

/// 2^n x M matrix whose columns are the cached states.
Matrix basis_matrix(const AnsatzBasis& basis);

/// "index<TAB>pauli-text" per line.
std::string dump_basis(const AnsatzBasis& basis);

}  // namespace gqas
