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

#include "gqas/statevector.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace gqas {

namespace {

void check_qubits(std::size_t n) {
  if (n == 0 || n > kMaxStateQubits) {
    throw std::invalid_argument("statevector supports 1.." + std::to_string(kMaxStateQubits) +
                                " qubits, got " + std::to_string(n));
  }
}

void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b) + " qubits");
  }
}

// Qubit q lives at index bit (n - 1 - q); reverse the low n bits of a mask.
std::uint64_t to_index_mask(std::uint64_t qubit_mask, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if ((qubit_mask >> q) & 1U) out |= std::uint64_t{1} << (n - 1 - q);
  }
  return out;
}

constexpr cplx kPhaseTable[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

}  // namespace

CircuitSpec CircuitSpec::random(std::size_t n_qubits, std::size_t layers, std::uint64_t seed) {
  CircuitSpec spec;
  spec.n_qubits = n_qubits;
  spec.layers = layers;
  spec.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  spec.angles.resize(n_qubits * layers);
  for (auto& a : spec.angles) a = angle(rng);
  return spec;
}

CircuitSpec CircuitSpec::zero_state(std::size_t n_qubits) {
  CircuitSpec spec;
  spec.n_qubits = n_qubits;
  spec.layers = 1;
  spec.seed = 0;
  spec.angles.assign(n_qubits, 0.0);
  return spec;
}

void CircuitSpec::validate() const {
  check_qubits(n_qubits);
  if (layers == 0) throw std::invalid_argument("circuit needs at least one layer");
  if (angles.size() != n_qubits * layers) {
    throw std::invalid_argument("circuit has " + std::to_string(angles.size()) +
                                " angles, expected layers * n_qubits = " +
                                std::to_string(n_qubits * layers));
  }
}

StateVector::StateVector(std::size_t n_qubits) : n_(n_qubits) {
  check_qubits(n_qubits);
  amps_ = Vector::Zero(Eigen::Index{1} << n_qubits);
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, Vector amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
  check_qubits(n_qubits);
  if (amps_.size() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("amplitude vector has wrong length for " +
                                std::to_string(n_qubits) + " qubits");
  }
  if (std::abs(amps_.squaredNorm() - 1.0) > 1e-10) {
    throw std::invalid_argument("state is not normalized (norm^2 = " +
                                std::to_string(amps_.squaredNorm()) + ")");
  }
}

void StateVector::apply_ry(std::size_t qubit, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const std::size_t stride = std::size_t{1} << (n_ - 1 - qubit);
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (i & stride) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | stride);
    const cplx a0 = amps_[i0];
    const cplx a1 = amps_[i1];
    amps_[i0] = c * a0 - s * a1;
    amps_[i1] = s * a0 + c * a1;
  }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
  const std::size_t cbit = std::size_t{1} << (n_ - 1 - control);
  const std::size_t tbit = std::size_t{1} << (n_ - 1 - target);
  for (std::size_t i = 0; i < dimension(); ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(amps_[static_cast<Eigen::Index>(i)],
                amps_[static_cast<Eigen::Index>(i | tbit)]);
    }
  }
}

StateVector build_reference_state(const CircuitSpec& spec) {
  spec.validate();
  StateVector v(spec.n_qubits);
  for (std::size_t l = 0; l < spec.layers; ++l) {
    for (std::size_t q = 0; q < spec.n_qubits; ++q) {
      v.apply_ry(q, spec.angles[l * spec.n_qubits + q]);
    }
    for (std::size_t q = 0; q + 1 < spec.n_qubits; ++q) v.apply_cnot(q, q + 1);
  }
  return v;
}

// X^x Z^z |b> = (-1)^{|z & b|} |b ^ x>, and the letters carry i^{|x&z|}.
StateVector apply_pauli(const PauliString& p, const StateVector& v) {
  check_same_size(p.n_qubits(), v.n_qubits());
  const std::size_t n = v.n_qubits();
  const std::uint64_t xm = to_index_mask(p.x_bits(), n);
  const std::uint64_t zm = to_index_mask(p.z_bits(), n);
  const cplx global =
      kPhaseTable[(p.phase_exponent() + std::popcount(p.x_bits() & p.z_bits())) & 3];
  Vector out(v.amplitudes().size());
  const Vector& in = v.amplitudes();
  for (std::uint64_t b = 0; b < v.dimension(); ++b) {
    const double sign = (std::popcount(zm & b) & 1) ? -1.0 : 1.0;
    out[static_cast<Eigen::Index>(b ^ xm)] = global * sign * in[static_cast<Eigen::Index>(b)];
  }
  return StateVector(n, std::move(out));
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  check_same_size(a.n_qubits(), b.n_qubits());
  return a.amplitudes().dot(b.amplitudes());
}

double hermitian_expectation(const PauliString& base, const StateVector& v) {
  check_same_size(base.n_qubits(), v.n_qubits());
  const std::size_t n = v.n_qubits();
  const std::uint64_t xm = to_index_mask(base.x_bits(), n);
  const std::uint64_t zm = to_index_mask(base.z_bits(), n);
  const cplx letters = kPhaseTable[std::popcount(base.x_bits() & base.z_bits()) & 3];
  const Vector& a = v.amplitudes();
  cplx acc = 0.0;
  for (std::uint64_t b = 0; b < v.dimension(); ++b) {
    const double sign = (std::popcount(zm & b) & 1) ? -1.0 : 1.0;
    acc += std::conj(a[static_cast<Eigen::Index>(b ^ xm)]) * sign *
           a[static_cast<Eigen::Index>(b)];
  }
  return (letters * acc).real();
}

cplx pauli_expectation(const PauliString& p, const StateVector& v) {
  const PhasedBase split = hermitian_base(p);
  return split.phase() * hermitian_expectation(split.base, v);
}

}  // namespace gqas
