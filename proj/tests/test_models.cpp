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

#include <doctest.h>

#include <utility>

#include "gqas/models.hpp"
#include "test_support.hpp"

using namespace gqas;
using gqas::testing::dense;
using gqas::testing::dense_letters;
using gqas::testing::max_abs;

TEST_CASE("six-qubit ladder has two rails of three and three rungs") {
  const auto topo = ladder_topology(6);
  const std::vector<std::pair<std::size_t, std::size_t>> expected = {
      {0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
  CHECK(topo.edges == expected);
  CHECK_THROWS(ladder_topology(5));
  CHECK_THROWS(ladder_topology(2));
}

TEST_CASE("Ising ladder equals its hand-written dense form") {
  const Matrix expected =
      0.7 * (dense_letters("ZZII") + dense_letters("IIZZ") + dense_letters("ZIZI") +
             dense_letters("IZIZ")) +
      1.3 * (dense_letters("XIII") + dense_letters("IXII") + dense_letters("IIXI") +
             dense_letters("IIIX"));
  CHECK(max_abs(to_dense(ising_ladder(4, 0.7, 1.3)) - expected) < 1e-15);
  CHECK(max_abs(to_dense(ladder_zz_correlation(4)) -
                0.25 * (dense_letters("ZZII") + dense_letters("IIZZ") + dense_letters("ZIZI") +
                        dense_letters("IZIZ"))) < 1e-15);
}

TEST_CASE("transverse Ising chain terms and boundary") {
  const auto periodic = transverse_ising_chain(6, 1.0, 1.0, true);
  const auto open = transverse_ising_chain(6, 1.0, 1.0, false);
  CHECK(periodic.terms().size() == 12);
  CHECK(open.terms().size() == 11);
  CHECK(std::abs(to_dense(periodic).trace()) < 1e-12);
  const Matrix expected3 = 0.5 * (dense_letters("XXI") + dense_letters("IXX") + dense_letters("XIX")) -
                           0.5 * 2.0 * (dense_letters("ZII") + dense_letters("IZI") +
                                        dense_letters("IIZ"));
  CHECK(max_abs(to_dense(transverse_ising_chain(3, 1.0, 2.0)) - expected3) < 1e-15);
}

TEST_CASE("raising operator maps |0> to |1>") {
  Matrix expected = Matrix::Zero(2, 2);
  expected(1, 0) = 1.0;
  CHECK(max_abs(to_dense(raising_operator(1, 0)) - expected) < 1e-15);
  const Matrix on_qubit1 = testing::kron(testing::letter_matrix('I'), expected);
  CHECK(max_abs(to_dense(raising_operator(2, 1)) - on_qubit1) < 1e-15);
  const auto pumps = raising_dissipators(3, 0.4);
  REQUIRE(pumps.size() == 3);
  for (const auto& d : pumps) CHECK(d.rate == 0.4);
}

TEST_CASE("number, magnetization and IQAE operators") {
  Matrix n0 = Matrix::Zero(2, 2);
  n0(1, 1) = 1.0;
  CHECK(max_abs(to_dense(number_operator(1, 0)) - n0) < 1e-15);
  CHECK(max_abs(to_dense(total_z(2)) - (dense_letters("ZI") + dense_letters("IZ"))) < 1e-15);
  const Matrix g = to_dense(iqae_init_hamiltonian(3));
  CHECK(g(0, 0).real() == doctest::Approx(-3.0));
  for (Eigen::Index i = 1; i < 8; ++i) CHECK(g(i, i).real() > -3.0);
}

TEST_CASE("DNLS hopping acts as -J tight binding on single excitations") {
  const std::vector<double> v = {0.1, 0.2, -0.3, 0.4, 0.0};
  const auto sys = dnls_system(5, 0.9, v, 2.0);
  const auto basis = materialize(single_excitation_basis(5));
  const Matrix psi = basis_matrix(basis);
  const Matrix h = psi.adjoint() * dense(sys.linear_part) * psi;
  for (Eigen::Index i = 0; i < 5; ++i) {
    for (Eigen::Index j = 0; j < 5; ++j) {
      double expected = 0.0;
      if (i == j) expected = v[static_cast<std::size_t>(i)];
      if (std::abs(i - j) == 1) expected = -0.9;
      CHECK(std::abs(h(i, j) - expected) < 1e-14);
    }
  }
  REQUIRE(sys.spec.operators.size() == 6);
  const std::vector<cplx> expect = {0.0, 0.5, 0.25, 0.0, 0.25, 0.0};
  const auto f = sys.spec.coefficients(0.0, expect);
  CHECK(f[0] == cplx(1.0));
  CHECK(f[1] == cplx(1.0));
  CHECK(f[2] == cplx(0.5));
  CHECK_THROWS(dnls_system(5, 1.0, {0.0}, 0.0));
}

TEST_CASE("even-site density counts 1-indexed even sites") {
  const Matrix d = to_dense(even_site_density(4));
  // |0101>: qubits 1 and 3 (0-indexed) excited, i.e. sites 2 and 4.
  CHECK(d(0b0101, 0b0101).real() == doctest::Approx(2.0));
  CHECK(d(0b1010, 0b1010).real() == doctest::Approx(0.0));
}

TEST_CASE("random positive operators are Hermitian with the promised margin") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = random_positive_operator(2, 4, seed);
    CHECK(canonicalize(m).terms().size() == 4);
    CHECK(m.is_hermitian());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(to_dense(m));
    CHECK(eig.eigenvalues().minCoeff() >= 0.5 - 1e-12);
  }
  CHECK(canonicalize(random_positive_operator(2, 4, 1)).terms().size() == 4);
}
