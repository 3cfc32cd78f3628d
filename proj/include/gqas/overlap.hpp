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
#include <filesystem>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gqas/ansatz.hpp"
#include "gqas/pauli.hpp"
#include "gqas/statevector.hpp"

namespace gqas {

enum class MeasurementMode { exact, sampled };

struct MeasurementBackend {
  MeasurementMode mode = MeasurementMode::exact;
  std::size_t shots = 1000;
  std::uint64_t rng_seed = 0;

  static MeasurementBackend exact() { return {}; }
  static MeasurementBackend sampled(std::size_t shots, std::uint64_t seed) {
    return {MeasurementMode::sampled, shots, seed};
  }
};

/**
 * Estimates <psi|P|psi> for Hermitian Pauli strings P on the reference
 * state, caching one value per distinct string. Exact mode evaluates the
 * statevector; sampled mode draws `shots` +-1 outcomes per string from a
 * generator seeded by (rng_seed, string), so estimates do not depend on
 * evaluation order or thread count.
 */
class PauliMeasurer {
 public:
  PauliMeasurer(const CircuitSpec& reference, MeasurementBackend backend);

  /// Evaluates every string not yet cached, in parallel.
  void measure(std::span<const PauliString> bases);
  /// Cached value; the string must have been measured.
  double value(const PauliString& base) const;
  /// Number of distinct strings measured so far.
  std::size_t job_count() const { return cache_.size(); }
  const MeasurementBackend& backend() const { return backend_; }

 private:
  StateVector state_;
  MeasurementBackend backend_;
  std::unordered_map<PauliString, double, PauliBaseHash, PauliBaseEqual> cache_;
};

/// Mean of `shots` +-1 draws with P(+1) = (1 + exact)/2; deterministic in seed.
double sample_pauli_estimate(double exact_value, std::size_t shots, std::uint64_t seed);

/// Shot-sampled estimate of <psi|base|psi> for the state prepared by `reference`.
double sampled_expectation(const PauliString& base, const CircuitSpec& reference,
                           std::size_t shots, std::uint64_t rng_seed);

/// O_ij = <psi_i|op|psi_j>, each term reduced to phase * <psi|Q|psi>.
Matrix compute_operator_overlaps(const AnsatzBasis& basis, const PauliSum& op,
                                 PauliMeasurer& measurer);
Matrix compute_operator_overlaps(const AnsatzBasis& basis, const PauliSum& op,
                                 const MeasurementBackend& backend);

/// Every overlap matrix the evolvers consume, all over one basis.
struct OverlapSet {
  Matrix E;               ///< <psi_i|psi_j>
  Matrix D;               ///< <psi_i|H|psi_j>
  std::vector<Matrix> R;  ///< <psi_i|L_n|psi_j>
  std::vector<Matrix> F;  ///< <psi_i|L_n^dag L_n|psi_j>
  std::vector<Matrix> S;  ///< <psi_i|U_k|psi_j> for extra operators
  std::optional<Matrix> G;
  std::optional<Matrix> V;

  /// Pre-symmetrization E and F in sampled mode; empty in exact mode.
  std::optional<Matrix> raw_E;
  std::vector<Matrix> raw_F;

  std::size_t measurement_jobs = 0;

  std::size_t dimension() const { return static_cast<std::size_t>(E.rows()); }
};

struct OverlapRequest {
  PauliSum hamiltonian;
  std::vector<Dissipator> dissipators;
  std::vector<PauliSum> extra_ops;
  std::optional<PauliSum> g_op;
  std::optional<PauliSum> v_op;
};

OverlapSet compute_overlap_set(const AnsatzBasis& basis, const OverlapRequest& request,
                               const MeasurementBackend& backend);

/// (A + A^dag) / 2
Matrix hermitize(const Matrix& a);

/// Text matrix file: first line the dimension, then one row per line of
/// "re im" pairs at round-trip precision.
void write_matrix(const std::filesystem::path& file, const Matrix& m);
Matrix read_matrix(const std::filesystem::path& file);

/// One file per matrix: E, D, R_<n>, F_<n>, S_<k>, G, V (".txt").
void save_overlap_set(const OverlapSet& set, const std::filesystem::path& dir);
OverlapSet load_overlap_set(const std::filesystem::path& dir);

}  // namespace gqas
