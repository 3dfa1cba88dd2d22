// Copyright 2026 The bewit Authors
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

#include "bewit/qmat.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numeric>

#include "bewit/errors.hpp"
#include "bewit/ghz.hpp"
#include "oracles.hpp"

namespace bewit {
namespace {

using testing::kron_entry;
using testing::min_eigenvalue_power;
using testing::random_hermitian;

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_TRUE(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2))
                  .approx_equal(ComplexMatrix::identity(4), 0.0));
}

TEST(Kron, ZZDiagonal) {
  const ComplexMatrix zz = kron(pauli_matrix('Z'), pauli_matrix('Z'));
  const std::array<double, 4> expected = {1, -1, -1, 1};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(zz(i, i), Complex(expected[i]));
}

TEST(Kron, XYYCornerEntry) {
  const ComplexMatrix xyy = kron(pauli_matrix('X'), kron(pauli_matrix('Y'), pauli_matrix('Y')));
  // <111|X⊗Y⊗Y|000> = 1 * i * i.
  EXPECT_NEAR(std::abs(xyy(7, 0) - Complex(-1.0)), 0.0, 1e-15);
}

TEST(Kron, MatchesIndexDefinitionAndIsAssociative) {
  Xoshiro256 rng(7);
  const ComplexMatrix a = random_hermitian(rng, 2);
  const ComplexMatrix b = random_hermitian(rng, 2);
  const ComplexMatrix c = random_hermitian(rng, 4);
  const ComplexMatrix ab = kron(a, b);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t col = 0; col < 4; ++col) {
      EXPECT_EQ(ab(r, col), kron_entry(a, b, r, col));
    }
  }
  EXPECT_LE(kron(ab, c).max_abs_diff(kron(a, kron(b, c))), 1e-12);
}

TEST(PauliString, IdentityAndDiagonals) {
  EXPECT_TRUE(pauli_string_matrix("III").approx_equal(ComplexMatrix::identity(8), 0.0));
  const ComplexMatrix izz = pauli_string_matrix("IZZ");
  const std::array<double, 8> expected = {1, -1, -1, 1, 1, -1, -1, 1};
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(izz(i, i), Complex(expected[i]));
}

TEST(PauliString, XYYIsAntidiagonal) {
  const ComplexMatrix m = pauli_string_matrix("XYY");
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      if (c != 7 - r) {
        EXPECT_EQ(m(r, c), Complex{});
        continue;
      }
      // Column c = |b1 b2 b3>: Y⊗Y contributes i^2 (-1)^(b2+b3).
      const int b2 = (c >> 1) & 1;
      const int b3 = c & 1;
      const double sign = -((b2 + b3) % 2 == 0 ? 1.0 : -1.0);
      EXPECT_NEAR(std::abs(m(r, c) - Complex(sign)), 0.0, 1e-15) << r << "," << c;
    }
  }
}

TEST(PauliString, AllSquaresAreIdentity) {
  const std::string letters = "IXYZ";
  for (char a : letters) {
    for (char b : letters) {
      for (char c : letters) {
        const std::string label{a, b, c};
        const ComplexMatrix p = pauli_string_matrix(label);
        EXPECT_LE((p * p).max_abs_diff(ComplexMatrix::identity(8)), 1e-12) << label;
        EXPECT_TRUE(is_hermitian(p, 0.0)) << label;
        if (label != "III") {
          EXPECT_NEAR(std::abs(p.trace()), 0.0, 1e-15) << label;
        }
      }
    }
  }
}

TEST(PauliString, RejectsBadLabels) {
  EXPECT_THROW(pauli_string_matrix("XQZ"), InputError);
  EXPECT_THROW(pauli_string_matrix("XZ"), InputError);
  EXPECT_THROW(pauli_string_matrix("XXXX"), InputError);
}

TEST(PartialTranspose, MaximallyMixedIsFixed) {
  const ComplexMatrix mixed = ComplexMatrix::identity(8) * Complex{0.125};
  for (int cut = 1; cut <= 3; ++cut) {
    EXPECT_TRUE(partial_transpose(mixed, cut).approx_equal(mixed, 0.0));
  }
}

TEST(PartialTranspose, IsAnExactInvolutionAndKeepsTrace) {
  Xoshiro256 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix m = random_hermitian(rng, 8);
    for (int cut = 1; cut <= 3; ++cut) {
      const ComplexMatrix once = partial_transpose(m, cut);
      EXPECT_TRUE(partial_transpose(once, cut).approx_equal(m, 0.0));
      EXPECT_NEAR(std::abs(once.trace() - m.trace()), 0.0, 1e-14);
    }
  }
}

TEST(PartialTranspose, GhzPlusHasMinusHalfOnEveryCut) {
  const ComplexMatrix ghz = ghz_basis_vector(0, +1).projector();
  for (int cut = 1; cut <= 3; ++cut) {
    const ComplexMatrix pt = partial_transpose(ghz, cut);
    EXPECT_NEAR(min_eigenvalue_power(pt), -0.5, 1e-10);
    EXPECT_NEAR(hermitian_eigenvalues(pt).front(), -0.5, 1e-12);
  }
}

TEST(PartialTranspose, RejectsWrongShapes) {
  EXPECT_THROW(partial_transpose(ComplexMatrix(8, 4), 1), InputError);
  EXPECT_THROW(partial_transpose(ComplexMatrix(6, 6), 1), InputError);
  EXPECT_THROW(partial_transpose(ComplexMatrix::identity(8), 4), InputError);
}

TEST(PartialTrace, BasisStateReducesToBasisProjector) {
  const std::array<int, 3> keep = {1, 2, 3};
  const ComplexMatrix reduced = partial_trace(StateVector(6), keep);
  EXPECT_TRUE(reduced.approx_equal(StateVector::basis(3, 0).projector(), 0.0));
}

TEST(PartialTrace, ProductStateFactorizes) {
  Xoshiro256 rng(3);
  const StateVector a = testing::random_product_state(rng);
  const StateVector b = testing::random_product_state(rng);
  std::vector<Complex> amps;
  for (const auto& x : a.amplitudes()) {
    for (const auto& y : b.amplitudes()) amps.push_back(x * y);
  }
  const StateVector ab(6, amps);
  const std::array<int, 3> first = {1, 2, 3};
  const std::array<int, 3> second = {4, 5, 6};
  EXPECT_LE(trace_distance(partial_trace(ab, first), a.projector()), 1e-12);
  EXPECT_LE(trace_distance(partial_trace(ab, second), b.projector()), 1e-12);
}

TEST(PartialTrace, PurificationGivesMixture) {
  // Σ_k √p_k |φ_k>|k> with arbitrary (non-orthogonal) |φ_k>.
  Xoshiro256 rng(5);
  std::array<double, 8> p{};
  uniform_simplex(rng, p);
  std::vector<StateVector> phis;
  for (int k = 0; k < 8; ++k) phis.push_back(testing::random_product_state(rng));
  std::vector<Complex> amps(64);
  ComplexMatrix expected(8, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::size_t i = 0; i < 8; ++i) amps[(i << 3) | k] = std::sqrt(p[k]) * phis[k][i];
    expected += phis[k].projector() * Complex{p[k]};
  }
  const std::array<int, 3> keep = {1, 2, 3};
  const ComplexMatrix reduced = partial_trace(StateVector(6, amps), keep);
  EXPECT_LE(reduced.max_abs_diff(expected), 1e-12);
  EXPECT_NEAR(reduced.trace().real(), 1.0, 1e-12);
  EXPECT_TRUE(is_hermitian(reduced));
  EXPECT_GE(hermitian_eigenvalues(reduced).front(), -1e-10);
}

TEST(PartialTrace, KeepingEverythingIsIdentity) {
  Xoshiro256 rng(9);
  const ComplexMatrix m = random_hermitian(rng, 8);
  const std::array<int, 3> keep = {3, 1, 2};
  EXPECT_TRUE(partial_trace(m, keep).approx_equal(m, 0.0));
}

TEST(PartialTrace, MatrixAndVectorFormsAgree) {
  Xoshiro256 rng(13);
  const StateVector psi = testing::random_product_state(rng);
  const std::array<int, 2> keep = {1, 3};
  EXPECT_LE(partial_trace(psi, keep).max_abs_diff(partial_trace(psi.projector(), keep)), 1e-14);
}

TEST(PartialTrace, RejectsBadKeepSets) {
  const StateVector s(3);
  EXPECT_THROW(partial_trace(s, std::span<const int>{}), InputError);
  const std::array<int, 2> dup = {1, 1};
  EXPECT_THROW(partial_trace(s, dup), InputError);
  const std::array<int, 1> out_of_range = {4};
  EXPECT_THROW(partial_trace(s, out_of_range), InputError);
}

TEST(Eigen, SmallCases) {
  const auto z = hermitian_eigenvalues(pauli_matrix('Z'));
  ASSERT_EQ(z.size(), 2u);
  EXPECT_NEAR(z[0], -1.0, 1e-14);
  EXPECT_NEAR(z[1], 1.0, 1e-14);
  for (double lambda : hermitian_eigenvalues(ComplexMatrix::identity(8) * Complex{0.125})) {
    EXPECT_NEAR(lambda, 0.125, 1e-15);
  }
}

TEST(Eigen, KayTwoIsPptOnFirstCut) {
  const ComplexMatrix pt = partial_transpose(kay(2.0), 1);
  const double jacobi = hermitian_eigenvalues(pt).front();
  EXPECT_GE(jacobi, -1e-10);
  EXPECT_NEAR(jacobi, min_eigenvalue_power(pt), 1e-9);
}

TEST(Eigen, SumEqualsTraceOnRandomHermitian) {
  Xoshiro256 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const ComplexMatrix m = random_hermitian(rng, 8);
    const auto eig = hermitian_eigenvalues(m);
    EXPECT_TRUE(std::is_sorted(eig.begin(), eig.end()));
    const double sum = std::accumulate(eig.begin(), eig.end(), 0.0);
    ASSERT_NEAR(sum, m.trace().real(), 1e-9) << "trial " << trial;
  }
}

TEST(Eigen, AgreesWithPowerIterationOnRandomMatrices) {
  Xoshiro256 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix m = random_hermitian(rng, 8);
    EXPECT_NEAR(hermitian_eigenvalues(m).front(), min_eigenvalue_power(m), 1e-8);
  }
}

TEST(Eigen, HandlesSixtyFourDimensions) {
  Xoshiro256 rng(1);
  const ComplexMatrix m = random_hermitian(rng, 64);
  const auto eig = hermitian_eigenvalues(m);
  EXPECT_NEAR(std::accumulate(eig.begin(), eig.end(), 0.0), m.trace().real(), 1e-9);
}

TEST(Eigen, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m(0, 1) = 1e-6;
  EXPECT_THROW(hermitian_eigenvalues(m), InputError);
}

TEST(ComplexMatrix, EntryCountMustMatch) {
  EXPECT_THROW(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), InputError);
}

}  // namespace
}  // namespace bewit
