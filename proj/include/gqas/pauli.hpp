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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gqas/types.hpp"

namespace gqas {

/**
 * @brief n-qubit Pauli operator i^k * P_0 (x) P_1 (x) ... (x) P_{n-1}.
 *
 * Stored in binary symplectic form: bit q of x_bits / z_bits selects the
 * letter on qubit q via (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z. The phase is
 * the integer exponent k in {0,1,2,3} of i, so all products stay exact.
 *
 * Qubit 0 is the leftmost tensor factor of the dense matrix.
 */
class PauliString {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);
  PauliString(std::size_t n_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
              int phase_exponent = 0);

  static PauliString identity(std::size_t n_qubits) { return PauliString(n_qubits); }
  /// Single letter ('X', 'Y', 'Z' or 'I') on `qubit`.
  static PauliString single(std::size_t n_qubits, std::size_t qubit, char letter);
  /// Letters only, e.g. "XZIY"; phase +1.
  static PauliString from_letters(std::string_view letters);
  /// Inverse of to_string(): "<phase> <letters>" with phase in {+, -, +i, -i}.
  static PauliString parse(std::string_view text);

  std::size_t n_qubits() const { return n_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  int phase_exponent() const { return phase_; }
  cplx phase() const;

  char letter(std::size_t qubit) const;
  std::string letters() const;
  std::string to_string() const;

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  /// Same letters, phase ignored.
  bool same_base(const PauliString& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
  }
  PauliString with_phase(int phase_exponent) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::uint32_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  std::uint8_t phase_ = 0;
};

/// Exact operator product a*b, including phase.
PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return multiply(a, b);
}

PauliString dagger(const PauliString& p);

struct PhasedBase {
  int phase_exponent = 0;
  PauliString base;

  cplx phase() const;
};

/// Splits p into i^k times a Hermitian string with phase +1.
PhasedBase hermitian_base(const PauliString& p);

/// Hash on (n, x_bits, z_bits); phase ignored.
struct PauliBaseHash {
  std::size_t operator()(const PauliString& p) const noexcept;
};

struct PauliBaseEqual {
  bool operator()(const PauliString& a, const PauliString& b) const noexcept {
    return a.same_base(b);
  }
};

struct PauliTerm {
  cplx coeff;
  PauliString string;  // phase always +1
};

/**
 * Complex linear combination of Pauli strings. Phases of added strings are
 * folded into the coefficient, so every stored string has phase +1.
 * Arithmetic results are not merged until canonicalize() is applied.
 */
class PauliSum {
 public:
  static constexpr double kMergeTolerance = 1e-12;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits) : n_(n_qubits) {}
  PauliSum(const PauliString& p, cplx coeff = 1.0);

  static PauliSum identity(std::size_t n_qubits, cplx coeff = 1.0);

  std::size_t n_qubits() const { return n_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  PauliSum& add(cplx coeff, const PauliString& p);
  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(cplx scalar);

  /// True when every coefficient of the canonical form is real.
  bool is_hermitian(double tol = kMergeTolerance) const;

  /// Strings of the terms, in order.
  std::vector<PauliString> strings() const;

 private:
  std::size_t n_ = 0;
  std::vector<PauliTerm> terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator*(cplx scalar, PauliSum s);
PauliSum operator*(const PauliSum& a, const PauliSum& b);
PauliSum dagger(const PauliSum& s);

/// Merge duplicate strings (first-occurrence order), drop |coeff| < tol.
PauliSum canonicalize(const PauliSum& s, double tol = PauliSum::kMergeTolerance);

/// Oracle-only dense matrices, n <= 12.
inline constexpr std::size_t kMaxDenseQubits = 12;
Matrix to_dense(const PauliString& p);
Matrix to_dense(const PauliSum& s);

/// Jump operator with rate: the dissipator term rate * D[op].
struct Dissipator {
  double rate = 0.0;
  PauliSum op;
};

}  // namespace gqas
