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

#include "bewit/ghz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bewit/errors.hpp"
#include "bewit/rng.hpp"

namespace bewit {

namespace {

constexpr std::size_t kDim = 8;
constexpr double kNegativeProbTol = 1e-10;
constexpr int kMaxDraws = 1'000'000;

// Index of |1x̄> given the index x of |0x> (x in 0..3).
constexpr std::size_t partner(std::size_t x) { return 7 - x; }

void require_8x8(const ComplexMatrix& m, const char* what) {
  if (m.rows() != kDim || m.cols() != kDim) {
    throw InputError(std::string(what) + ": expected an 8x8 matrix");
  }
}

ComplexMatrix from_diagonal_and_antidiagonal(const std::array<double, 8>& diag,
                                             const std::array<double, 8>& anti, double scale) {
  ComplexMatrix m(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) {
    m(i, i) = diag[i] * scale;
    m(i, kDim - 1 - i) = anti[i] * scale;
  }
  return m;
}

bool in_category1_region(const std::array<double, 8>& p) {
  const double p3 = p[2];
  return p3 <= 0.25 && 2.0 * p[0] + 4.0 * p3 >= 1.0 && 2.0 * p[1] + 4.0 * p3 >= 1.0;
}

std::array<double, 8> propose(int cat, Xoshiro256& rng) {
  switch (cat) {
    case 1: {
      // p4 = p6 = p8 = 0, p3 = p5 = p7.
      std::array<double, 3> u{};
      uniform_simplex(rng, u);
      const double p = u[2] / 3.0;
      return {u[0], u[1], p, 0.0, p, 0.0, p, 0.0};
    }
    case 2: {
      // p4 = 0, p3 = p1 + p2, p7 = p3 + p8; the normalization reads
      // 3(p1 + p2) + p5 + p6 + 2 p8 = 1.
      std::array<double, 4> u{};
      uniform_simplex(rng, u);
      const double s12 = u[0] / 3.0;
      const double p1 = s12 * rng.uniform();
      const double p8 = u[3] / 2.0;
      return {p1, s12 - p1, s12, 0.0, u[1], u[2], s12 + p8, p8};
    }
    case 3: {
      // p1 + p3 = 1/2. Inside this family the PPT conditions pin
      // p1 - p2 = p3 - p4 = p5 + p6 = p7 + p8 =: w, so draw on that face.
      const double p1 = 0.5 * rng.uniform();
      const double p3 = 0.5 - p1;
      const double w = rng.uniform() * std::min(p1, p3);
      const double p5 = w * rng.uniform();
      const double p7 = w * rng.uniform();
      return {p1, p1 - w, p3, p3 - w, p5, w - p5, p7, w - p7};
    }
    default:
      throw InputError("category must be 1, 2 or 3");
  }
}

}  // namespace

GhzDiagonalState::GhzDiagonalState(const std::array<double, 8>& probs) : p_(probs) {
  double sum = 0.0;
  for (double x : p_) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw InputError("GHZ-diagonal probabilities must lie in [0, 1]");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw InputError("GHZ-diagonal probabilities must sum to 1 (got " + std::to_string(sum) + ")");
  }
}

GhzDiagonalState GhzDiagonalState::uniform() {
  std::array<double, 8> p{};
  p.fill(0.125);
  return GhzDiagonalState(p);
}

double RVector::operator[](std::string_view key) const {
  for (std::size_t i = 0; i < kKeys.size(); ++i) {
    if (kKeys[i] == key) return r_[i];
  }
  throw InputError("RVector has no entry for \"" + std::string(key) + "\"");
}

double RVector::expansion(int n) const {
  if (n < 1 || n > 7) throw InputError("r index must be in 1..7");
  return r_[n - 1];
}

double RVector::observable(int n) const {
  if (n < 1 || n > 7) throw InputError("observable index must be in 1..7");
  if (n == 1) return r_[2];
  if (n == 3) return r_[0];
  return r_[n - 1];
}

StateVector ghz_basis_vector(unsigned x, int sign) {
  if (x > 3) throw InputError("GHZ label must be a two-bit value");
  if (sign != 1 && sign != -1) throw InputError("GHZ sign must be +1 or -1");
  StateVector v(3);
  const double h = 1.0 / std::sqrt(2.0);
  v[0] = 0.0;
  v[x] = h;
  v[partner(x)] = sign * h;
  return v;
}

ComplexMatrix density_matrix(const GhzDiagonalState& state) {
  ComplexMatrix rho(kDim, kDim);
  for (std::size_t x = 0; x < 4; ++x) {
    const double plus = state[2 * x];
    const double minus = state[2 * x + 1];
    const double d = 0.5 * (plus + minus);
    const double a = 0.5 * (plus - minus);
    rho(x, x) = d;
    rho(partner(x), partner(x)) = d;
    rho(x, partner(x)) = a;
    rho(partner(x), x) = a;
  }
  return rho;
}

bool is_ghz_diagonal(const ComplexMatrix& rho, double tol) {
  require_8x8(rho, "is_ghz_diagonal");
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t c = 0; c < kDim; ++c) {
      if (c == r || c == kDim - 1 - r) continue;
      if (std::abs(rho(r, c)) > tol) return false;
    }
  }
  for (std::size_t x = 0; x < 4; ++x) {
    const Complex d0 = rho(x, x);
    const Complex d1 = rho(partner(x), partner(x));
    const Complex a0 = rho(x, partner(x));
    const Complex a1 = rho(partner(x), x);
    if (std::abs(d0.imag()) > tol || std::abs(d1.imag()) > tol) return false;
    if (std::abs(a0.imag()) > tol || std::abs(a1.imag()) > tol) return false;
    if (std::abs(d0.real() - d1.real()) > tol) return false;
    if (std::abs(a0.real() - a1.real()) > tol) return false;
  }
  return true;
}

GhzDiagonalState probs_from_density(const ComplexMatrix& rho) {
  require_8x8(rho, "probs_from_density");
  if (!is_ghz_diagonal(rho)) throw StructureError("matrix is not GHZ-diagonal");
  std::array<double, 8> p{};
  for (std::size_t x = 0; x < 4; ++x) {
    const double d = 0.5 * (rho(x, x).real() + rho(partner(x), partner(x)).real());
    const double a = 0.5 * (rho(x, partner(x)).real() + rho(partner(x), x).real());
    p[2 * x] = d + a;
    p[2 * x + 1] = d - a;
  }
  for (double& x : p) {
    if (x < -kNegativeProbTol) {
      throw StructureError("GHZ-diagonal matrix has a negative weight");
    }
    x = std::max(x, 0.0);
  }
  return GhzDiagonalState(p);
}

ComplexMatrix kay(double a) {
  if (!(a >= 0.0)) throw InputError("Kay state requires a >= 0");
  const std::array<double, 8> diag = {4 + a, a, a, a, a, a, a, 4 + a};
  const std::array<double, 8> anti = {2, 2, -2, 2, 2, -2, 2, 2};
  return from_diagonal_and_antidiagonal(diag, anti, 1.0 / (8.0 + 8.0 * a));
}

ComplexMatrix kye(double b, double c) {
  if (!(b > 0.0) || !(c > 0.0)) throw InputError("Kye state requires b > 0 and c > 0");
  const std::array<double, 8> diag = {1, 1, 1, b, c, 1, 1, 1};
  const std::array<double, 8> anti = {-1, -1, 1, -1, -1, 1, -1, -1};
  return from_diagonal_and_antidiagonal(diag, anti, 1.0 / (6.0 + b + c));
}

RVector r_vector(const ComplexMatrix& rho) {
  require_8x8(rho, "r_vector");
  if (!is_hermitian(rho)) throw InputError("r_vector: matrix is not Hermitian");
  std::array<double, 7> r{};
  for (std::size_t i = 0; i < RVector::kKeys.size(); ++i) {
    const ComplexMatrix pauli = pauli_string_matrix(RVector::kKeys[i]);
    Complex t = 0.0;
    for (std::size_t row = 0; row < kDim; ++row) {
      for (std::size_t k = 0; k < kDim; ++k) t += rho(row, k) * pauli(k, row);
    }
    r[i] = t.real();
  }
  return RVector(r);
}

ComplexMatrix reconstruct_density(const RVector& r) {
  ComplexMatrix rho = ComplexMatrix::identity(kDim);
  for (std::size_t i = 0; i < RVector::kKeys.size(); ++i) {
    rho += pauli_string_matrix(RVector::kKeys[i]) * Complex{r.values()[i]};
  }
  return rho * Complex{0.125};
}

PptReport ppt_report(const ComplexMatrix& rho) {
  require_8x8(rho, "ppt_report");
  PptReport report;
  report.is_ppt = true;
  for (int cut = 1; cut <= 3; ++cut) {
    const double lowest = hermitian_eigenvalues(partial_transpose(rho, cut)).front();
    report.min_eigenvalue[cut - 1] = lowest;
    report.is_ppt = report.is_ppt && lowest >= -PptReport::kTol;
  }
  return report;
}

GhzDiagonalState category_state(int cat) {
  switch (cat) {
    case 1:
      return GhzDiagonalState({0.2, 0.35, 0.15, 0.0, 0.15, 0.0, 0.15, 0.0});
    case 2:
      return GhzDiagonalState({0.1, 0.0, 0.1, 0.0, 0.0, 0.1, 0.4, 0.3});
    case 3:
      return GhzDiagonalState({0.2, 0.0, 0.3, 0.1, 0.0, 0.2, 0.2, 0.0});
    default:
      throw InputError("category must be 1, 2 or 3");
  }
}

GhzDiagonalState sample_category(int cat, std::uint64_t seed) {
  if (cat < 1 || cat > 3) throw InputError("category must be 1, 2 or 3");
  Xoshiro256 rng(seed);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const std::array<double, 8> p = propose(cat, rng);
    if (cat == 1 && !in_category1_region(p)) continue;
    GhzDiagonalState state(p);
    if (ppt_report(density_matrix(state)).is_ppt) return state;
  }
  throw SamplingExhaustedError("sample_category: no PPT member found in 10^6 draws");
}

GhzDiagonalState random_ghz_state(std::uint64_t seed) {
  Xoshiro256 rng(seed);
  std::array<double, 8> p{};
  uniform_simplex(rng, p);
  return GhzDiagonalState(p);
}

}  // namespace bewit
