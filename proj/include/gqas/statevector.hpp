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
#include <vector>

#include "gqas/pauli.hpp"
#include "gqas/types.hpp"

namespace gqas {

inline constexpr std::size_t kMaxStateQubits = 12;

/**
 * Hardware-efficient reference circuit: `layers` repetitions of an Ry
 * rotation on every qubit followed by a CNOT chain (i -> i+1, ascending).
 * angles[l * n_qubits + i] is the rotation of qubit i in layer l.
 */
struct CircuitSpec {
  std::size_t n_qubits = 1;
  std::size_t layers = 1;
  std::uint64_t seed = 0;
  std::vector<double> angles;

  /// Angles drawn uniformly from [0, 2pi) with std::mt19937_64(seed).
  static CircuitSpec random(std::size_t n_qubits, std::size_t layers, std::uint64_t seed);
  /// One layer of zero angles; prepares |0...0> exactly.
  static CircuitSpec zero_state(std::size_t n_qubits);

  void validate() const;
};

/// Dense 2^n amplitude vector. Qubit 0 is the most significant index bit.
class StateVector {
 public:
  StateVector() = default;
  /// |0...0>
  explicit StateVector(std::size_t n_qubits);
  /// Takes ownership of `amplitudes`; rejects sizes that are not 2^n and
  /// vectors whose norm differs from 1 by more than 1e-10.
  StateVector(std::size_t n_qubits, Vector amplitudes);

  std::size_t n_qubits() const { return n_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  cplx operator[](std::size_t index) const { return amps_[static_cast<Eigen::Index>(index)]; }

  void apply_ry(std::size_t qubit, double theta);
  void apply_cnot(std::size_t control, std::size_t target);

 private:
  std::size_t n_ = 0;
  Vector amps_;
};

StateVector build_reference_state(const CircuitSpec& spec);

/// p|v> in O(2^n) without materializing p.
StateVector apply_pauli(const PauliString& p, const StateVector& v);

/// <a|b>, conjugating a.
cplx inner_product(const StateVector& a, const StateVector& b);

/// <v|p|v> = phase(p) * (real number in [-1, 1]).
cplx pauli_expectation(const PauliString& p, const StateVector& v);

/// Real expectation of the Hermitian base of p (phase ignored).
double hermitian_expectation(const PauliString& base, const StateVector& v);

}  // namespace gqas
