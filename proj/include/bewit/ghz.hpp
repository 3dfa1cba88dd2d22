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

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "bewit/qmat.hpp"

namespace bewit {

/// Three-qubit state diagonal in the GHZ basis.
///
/// Probabilities use the pair convention: (p[0], p[1]) are the weights of
/// (|0x> + |1x̄>)/√2 and (|0x> - |1x̄>)/√2 for x = 00, (p[2], p[3]) for x = 01,
/// (p[4], p[5]) for x = 10 and (p[6], p[7]) for x = 11. This is the labeling
/// under which the published family identities and witness values hold.
class GhzDiagonalState {
 public:
  static constexpr double kSumTol = 1e-12;

  // Throws InputError unless every entry is in [0, 1] and they sum to 1.
  explicit GhzDiagonalState(const std::array<double, 8>& probs);

  static GhzDiagonalState uniform();

  const std::array<double, 8>& probs() const { return p_; }
  double operator[](std::size_t k) const { return p_[k]; }

  // Weight of the doublet built on |0x>, i.e. p[2x] + p[2x+1].
  double pair_sum(unsigned x) const { return p_[2 * x] + p_[2 * x + 1]; }

 private:
  std::array<double, 8> p_;
};

/// The seven Pauli correlations r[s] = Tr[rho P_s] of a GHZ-diagonal state.
///
/// Storage is in the Pauli-expansion order r1..r7 = ZZI, ZIZ, IZZ, XXX, XYY,
/// YXY, YYX. Witness formulas use the observable order O1..O7 = IZZ, ZIZ,
/// ZZI, XXX, XYY, YXY, YYX, which swaps indices 1 and 3.
class RVector {
 public:
  static constexpr std::array<std::string_view, 7> kKeys = {"ZZI", "ZIZ", "IZZ", "XXX",
                                                            "XYY", "YXY", "YYX"};

  RVector() = default;
  explicit RVector(const std::array<double, 7>& expansion_order) : r_(expansion_order) {}

  double operator[](std::string_view key) const;
  // r_n in the expansion labeling, n = 1..7.
  double expansion(int n) const;
  // r_n in the observable labeling, n = 1..7.
  double observable(int n) const;

  const std::array<double, 7>& values() const { return r_; }

 private:
  std::array<double, 7> r_{};
};

struct PptReport {
  static constexpr double kTol = 1e-10;
  static constexpr std::array<std::string_view, 3> kCutNames = {"1|23", "2|13", "3|12"};

  // Minimum eigenvalue of the partial transpose on qubit 1, 2, 3.
  std::array<double, 3> min_eigenvalue{};
  bool is_ppt = false;
};

/// (|0x> + sign |1x̄>)/√2 for a two-bit label x in 0..3.
StateVector ghz_basis_vector(unsigned x, int sign);

ComplexMatrix density_matrix(const GhzDiagonalState& state);

/// Inverse of density_matrix. Throws StructureError if rho is not
/// GHZ-diagonal or a recovered probability is below -1e-10; tiny negative
/// values are clamped to zero.
GhzDiagonalState probs_from_density(const ComplexMatrix& rho);

bool is_ghz_diagonal(const ComplexMatrix& rho, double tol = 1e-10);

ComplexMatrix kay(double a);
ComplexMatrix kye(double b, double c);

RVector r_vector(const ComplexMatrix& rho);

// (1/8)[I + sum_s r[s] P_s].
ComplexMatrix reconstruct_density(const RVector& r);

PptReport ppt_report(const ComplexMatrix& rho);

/// The worked instance of each PPT-entangled family (cat = 1, 2, 3).
GhzDiagonalState category_state(int cat);

/// Random member of family `cat` that is PPT; deterministic in `seed`.
/// Category 1 is further restricted to p3 <= 1/4, 2p1 + 4p3 >= 1,
/// 2p2 + 4p3 >= 1. Throws SamplingExhaustedError after 10^6 proposals.
GhzDiagonalState sample_category(int cat, std::uint64_t seed);

// Uniformly random state on the 8-simplex (test and CLI helper).
GhzDiagonalState random_ghz_state(std::uint64_t seed);

}  // namespace bewit
