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

#include "gqas/ansatz.hpp"

#include <algorithm>
#include <cstring>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "gqas/parallel.hpp"

namespace gqas {

namespace {

using BaseSet = std::unordered_set<PauliString, PauliBaseHash, PauliBaseEqual>;

struct MomentWalker {
  std::span<const PauliString> terms;
  BaseSet seen;
  std::vector<PauliString> out;
  std::size_t stop_at;

  bool full() const { return out.size() >= stop_at; }

  void offer(const PauliString& p) {
    if (seen.insert(p).second) out.push_back(p.with_phase(0));
  }

  // product = U_{i_depth} ... U_{i_1}; the next factor multiplies on the left.
  void walk(const PauliString& product, std::size_t depth, std::size_t moment) {
    if (full()) return;
    if (depth == moment) {
      offer(product);
      return;
    }
    for (const auto& u : terms) {
      walk(multiply(u, product), depth + 1, moment);
      if (full()) return;
    }
  }
};

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffU;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string AnsatzBasis::id() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, reference.n_qubits);
  h = fnv1a(h, reference.layers);
  for (double a : reference.angles) {
    std::uint64_t bits = 0;
    static_assert(sizeof(bits) == sizeof(a));
    std::memcpy(&bits, &a, sizeof(a));
    h = fnv1a(h, bits);
  }
  for (const auto& p : paulis) {
    h = fnv1a(h, p.x_bits());
    h = fnv1a(h, p.z_bits());
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

AnsatzBasis k_moment_expand(std::span<const PauliString> terms, std::size_t moments,
                            std::size_t max_states, const CircuitSpec& reference,
                            Selection selection, std::uint64_t selection_seed) {
  if (terms.empty()) throw std::invalid_argument("K-moment expansion needs at least one term");
  if (max_states == 0) throw std::invalid_argument("basis size cap must be positive");
  reference.validate();
  for (const auto& t : terms) {
    if (t.n_qubits() != reference.n_qubits) {
      throw std::invalid_argument("expansion term " + t.to_string() +
                                  " does not match the reference qubit count");
    }
  }

  MomentWalker walker{terms, {}, {}, selection == Selection::ordered ? max_states : SIZE_MAX};
  const PauliString id = PauliString::identity(reference.n_qubits);
  for (std::size_t k = 0; k <= moments && !walker.full(); ++k) walker.walk(id, 0, k);

  AnsatzBasis basis;
  basis.reference = reference;
  basis.exhausted = walker.out.size() < max_states;
  if (selection == Selection::ordered || walker.out.size() <= max_states) {
    walker.out.resize(std::min(walker.out.size(), max_states));
    basis.paulis = std::move(walker.out);
    return basis;
  }

  basis.paulis.push_back(walker.out.front());
  std::mt19937_64 rng(selection_seed);
  std::sample(walker.out.begin() + 1, walker.out.end(), std::back_inserter(basis.paulis),
              static_cast<std::ptrdiff_t>(max_states - 1), rng);
  return basis;
}

AnsatzBasis single_excitation_basis(std::size_t n_qubits) {
  if (n_qubits == 0) throw std::invalid_argument("single-excitation basis needs n >= 1");
  AnsatzBasis basis;
  basis.reference = CircuitSpec::zero_state(n_qubits);
  for (std::size_t j = 0; j < n_qubits; ++j) {
    basis.paulis.push_back(PauliString::single(n_qubits, j, 'X'));
  }
  return basis;
}

AnsatzBasis materialize(AnsatzBasis basis) {
  const StateVector ref = build_reference_state(basis.reference);
  basis.cached_states.assign(basis.paulis.size(), StateVector{});
  parallel_for(basis.paulis.size(), [&](std::size_t j) {
    basis.cached_states[j] = apply_pauli(basis.paulis[j], ref);
  });
  return basis;
}

Matrix basis_matrix(const AnsatzBasis& basis) {
  if (!basis.materialized()) throw std::invalid_argument("basis is not materialized");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << basis.n_qubits());
  Matrix out(dim, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    out.col(static_cast<Eigen::Index>(j)) = basis.cached_states[j].amplitudes();
  }
  return out;
}

std::string dump_basis(const AnsatzBasis& basis) {
  std::ostringstream os;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    os << j << '\t' << basis.paulis[j].to_string() << '\n';
  }
  return os.str();
}

}  // namespace gqas
