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

#include "gqas/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace gqas {

namespace {

constexpr cplx kPhaseTable[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

int popcount(std::uint64_t v) { return std::popcount(v); }

void check_same_size(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("Pauli strings act on " + std::to_string(a.n_qubits()) +
                                " and " + std::to_string(b.n_qubits()) + " qubits");
  }
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits) : PauliString(n_qubits, 0, 0, 0) {}

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_bits,
                         std::uint64_t z_bits, int phase_exponent)
    : n_(static_cast<std::uint32_t>(n_qubits)), x_(x_bits), z_(z_bits) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("PauliString needs 1.." + std::to_string(kMaxQubits) +
                                " qubits, got " + std::to_string(n_qubits));
  }
  if (((x_bits | z_bits) & ~low_mask(n_qubits)) != 0) {
    throw std::invalid_argument("Pauli bits set beyond qubit count");
  }
  phase_ = static_cast<std::uint8_t>(((phase_exponent % 4) + 4) % 4);
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, char letter) {
  if (qubit >= n_qubits) {
    throw std::invalid_argument("qubit index " + std::to_string(qubit) + " out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (letter) {
    case 'I': return PauliString(n_qubits);
    case 'X': return PauliString(n_qubits, bit, 0);
    case 'Y': return PauliString(n_qubits, bit, bit);
    case 'Z': return PauliString(n_qubits, 0, bit);
    default: throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
  }
}

PauliString PauliString::from_letters(std::string_view letters) {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (letters[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw std::invalid_argument("unknown Pauli letter '" + std::string(1, letters[q]) +
                                    "' in \"" + std::string(letters) + "\"");
    }
  }
  return PauliString(letters.size(), x, z, 0);
}

PauliString PauliString::parse(std::string_view text) {
  const auto space = text.find(' ');
  if (space == std::string_view::npos) {
    throw std::invalid_argument("expected \"<phase> <letters>\", got \"" + std::string(text) + "\"");
  }
  const std::string_view token = text.substr(0, space);
  int k = 0;
  if (token == "+" || token == "+1") {
    k = 0;
  } else if (token == "+i") {
    k = 1;
  } else if (token == "-" || token == "-1") {
    k = 2;
  } else if (token == "-i") {
    k = 3;
  } else {
    throw std::invalid_argument("bad phase token \"" + std::string(token) + "\"");
  }
  return from_letters(text.substr(space + 1)).with_phase(k);
}

cplx PauliString::phase() const { return kPhaseTable[phase_]; }

char PauliString::letter(std::size_t qubit) const {
  const bool x = (x_ >> qubit) & 1U;
  const bool z = (z_ >> qubit) & 1U;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::letters() const {
  std::string out(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) out[q] = letter(q);
  return out;
}

std::string PauliString::to_string() const {
  static constexpr const char* kTokens[4] = {"+", "+i", "-", "-i"};
  return std::string(kTokens[phase_]) + " " + letters();
}

PauliString PauliString::with_phase(int phase_exponent) const {
  return PauliString(n_, x_, z_, phase_exponent);
}

// Letter Y = i X Z, so i^k sigma(x,z) = i^(k + |x&z|) X^x Z^z. Moving Z^za
// past X^xb costs (-1)^|za&xb|.
PauliString multiply(const PauliString& a, const PauliString& b) {
  check_same_size(a, b);
  const std::uint64_t x = a.x_bits() ^ b.x_bits();
  const std::uint64_t z = a.z_bits() ^ b.z_bits();
  const int k = a.phase_exponent() + b.phase_exponent() +
                popcount(a.x_bits() & a.z_bits()) + popcount(b.x_bits() & b.z_bits()) +
                2 * popcount(a.z_bits() & b.x_bits()) - popcount(x & z);
  return PauliString(a.n_qubits(), x, z, k);
}

PauliString dagger(const PauliString& p) { return p.with_phase(4 - p.phase_exponent()); }

cplx PhasedBase::phase() const { return kPhaseTable[phase_exponent & 3]; }

PhasedBase hermitian_base(const PauliString& p) {
  return PhasedBase{p.phase_exponent(), p.with_phase(0)};
}

std::size_t PauliBaseHash::operator()(const PauliString& p) const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(p.x_bits());
  h ^= std::hash<std::uint64_t>{}(p.z_bits() * 0x9e3779b97f4a7c15ULL) + 0x9e3779b9 + (h << 6) +
       (h >> 2);
  return h ^ p.n_qubits();
}

PauliSum::PauliSum(const PauliString& p, cplx coeff) : n_(p.n_qubits()) { add(coeff, p); }

PauliSum PauliSum::identity(std::size_t n_qubits, cplx coeff) {
  return PauliSum(PauliString::identity(n_qubits), coeff);
}

PauliSum& PauliSum::add(cplx coeff, const PauliString& p) {
  if (n_ == 0) n_ = p.n_qubits();
  if (p.n_qubits() != n_) {
    throw std::invalid_argument("PauliSum on " + std::to_string(n_) +
                                " qubits cannot take a term on " +
                                std::to_string(p.n_qubits()));
  }
  terms_.push_back({coeff * p.phase(), p.with_phase(0)});
  return *this;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  for (const auto& t : other.terms_) add(t.coeff, t.string);
  return *this;
}

PauliSum& PauliSum::operator*=(cplx scalar) {
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

bool PauliSum::is_hermitian(double tol) const {
  const PauliSum canonical = canonicalize(*this, tol);
  for (const auto& t : canonical.terms()) {
    if (std::abs(t.coeff.imag()) > tol) return false;
  }
  return true;
}

std::vector<PauliString> PauliSum::strings() const {
  std::vector<PauliString> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.string);
  return out;
}

PauliSum operator+(PauliSum a, const PauliSum& b) {
  a += b;
  return a;
}

PauliSum operator*(cplx scalar, PauliSum s) {
  s *= scalar;
  return s;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  PauliSum out(a.n_qubits());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      out.add(ta.coeff * tb.coeff, multiply(ta.string, tb.string));
    }
  }
  return out;
}

PauliSum dagger(const PauliSum& s) {
  PauliSum out(s.n_qubits());
  for (const auto& t : s.terms()) out.add(std::conj(t.coeff), t.string);
  return out;
}

PauliSum canonicalize(const PauliSum& s, double tol) {
  std::unordered_map<PauliString, std::size_t, PauliBaseHash, PauliBaseEqual> slot;
  std::vector<PauliTerm> merged;
  for (const auto& t : s.terms()) {
    auto [it, inserted] = slot.try_emplace(t.string, merged.size());
    if (inserted) {
      merged.push_back(t);
    } else {
      merged[it->second].coeff += t.coeff;
    }
  }
  PauliSum out(s.n_qubits());
  for (const auto& t : merged) {
    if (std::abs(t.coeff) >= tol) out.add(t.coeff, t.string);
  }
  return out;
}

Matrix to_dense(const PauliString& p) {
  if (p.n_qubits() > kMaxDenseQubits) {
    throw std::invalid_argument("to_dense limited to " + std::to_string(kMaxDenseQubits) +
                                " qubits");
  }
  Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  Eigen::Matrix2cd y;
  y << 0, -kI, kI, 0;
  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;

  Matrix out = Matrix::Constant(1, 1, p.phase());
  for (std::size_t q = 0; q < p.n_qubits(); ++q) {
    const Eigen::Matrix2cd* f = &id;
    switch (p.letter(q)) {
      case 'X': f = &x; break;
      case 'Y': f = &y; break;
      case 'Z': f = &z; break;
      default: break;
    }
    // qubit q becomes the next (less significant) tensor factor
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        next.block<2, 2>(2 * r, 2 * c) = out(r, c) * (*f);
      }
    }
    out = std::move(next);
  }
  return out;
}

Matrix to_dense(const PauliSum& s) {
  if (s.n_qubits() == 0) throw std::invalid_argument("to_dense of an empty PauliSum");
  if (s.n_qubits() > kMaxDenseQubits) {
    throw std::invalid_argument("to_dense limited to " + std::to_string(kMaxDenseQubits) +
                                " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << s.n_qubits();
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& t : s.terms()) out += t.coeff * to_dense(t.string);
  return out;
}

}  // namespace gqas
