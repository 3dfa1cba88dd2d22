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

#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace bewit::testing {

Complex kron_entry(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t r, std::size_t c) {
  return a(r / b.rows(), c / b.cols()) * b(r % b.rows(), c % b.cols());
}

double min_eigenvalue_power(const ComplexMatrix& m, int iterations) {
  const std::size_t n = m.rows();
  const double shift = m.frobenius_norm() + 1.0;
  // B = shift*I - m is positive definite; its top eigenvector is m's bottom one.
  std::vector<Complex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(1.0 + 0.1 * i, 0.05 * i);
  auto apply = [&](const std::vector<Complex>& x) {
    std::vector<Complex> y(n);
    for (std::size_t r = 0; r < n; ++r) {
      Complex s = shift * x[r];
      for (std::size_t c = 0; c < n; ++c) s -= m(r, c) * x[c];
      y[r] = s;
    }
    return y;
  };
  for (int it = 0; it < iterations; ++it) {
    v = apply(v);
    double norm = 0.0;
    for (const auto& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : v) z /= norm;
  }
  Complex num = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) num += std::conj(v[r]) * m(r, c) * v[c];
  }
  return num.real();
}

double pauli_expectation_direct(const ComplexMatrix& rho, const char* label) {
  using namespace std::complex_literals;
  double total = 0.0;
  for (std::size_t col = 0; col < 8; ++col) {
    // P|col> = phase |row>
    std::size_t row = col;
    Complex phase = 1.0;
    for (int q = 0; q < 3; ++q) {
      const std::size_t mask = std::size_t{1} << (2 - q);
      const bool bit = col & mask;
      switch (label[q]) {
        case 'X':
          row ^= mask;
          break;
        case 'Y':
          row ^= mask;
          phase *= bit ? -1i : 1i;
          break;
        case 'Z':
          if (bit) phase = -phase;
          break;
        default:
          break;
      }
    }
    // Tr[rho P] = Σ_col <col| rho P |col> = Σ_col rho(col, row) * phase.
    total += (rho(col, row) * phase).real();
  }
  return total;
}

double grid_min_linear(const RVector& r, const WitnessSpec& spec, int points) {
  double best = 1e300;
  for (int n = 0; n < points; ++n) {
    const double theta = 2.0 * std::numbers::pi * n / points;
    best = std::min(best, linear_value(r, spec, theta).value);
  }
  return best;
}

StateVector direct_purification(const GhzDiagonalState& p) {
  std::vector<Complex> amps(64);
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 0; k < 8; ++k) {
    const std::size_t x = k / 2;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double w = std::sqrt(p[k]);
    amps[(x << 3) | k] += w * h;                // |0x> ⊗ |k>
    amps[((7 - x) << 3) | k] += sign * w * h;  // |1x̄> ⊗ |k>
  }
  return StateVector(6, std::move(amps));
}

StateVector random_product_state(Xoshiro256& rng) {
  std::vector<Complex> amps = {1.0};
  for (int q = 0; q < 3; ++q) {
    const double theta = std::acos(1.0 - 2.0 * rng.uniform());
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    const Complex a0 = std::cos(theta / 2.0);
    const Complex a1 = std::polar(std::sin(theta / 2.0), phi);
    std::vector<Complex> next;
    next.reserve(amps.size() * 2);
    for (const auto& z : amps) {
      next.push_back(z * a0);
      next.push_back(z * a1);
    }
    amps = std::move(next);
  }
  return StateVector(3, std::move(amps));
}

ComplexMatrix random_hermitian(Xoshiro256& rng, std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = 2.0 * rng.uniform() - 1.0;
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex z(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
      m(r, c) = z;
      m(c, r) = std::conj(z);
    }
  }
  return m;
}

WitnessSpec random_spec(Xoshiro256& rng) {
  std::array<int, 4> rest = {4, 5, 6, 7};
  for (std::size_t i = rest.size() - 1; i > 0; --i) {
    std::swap(rest[i], rest[rng.below(i + 1)]);
  }
  auto sign = [&] { return rng.below(2) ? 1 : -1; };
  WitnessSpec spec;
  spec.i = static_cast<int>(rng.below(3)) + 1;
  spec.s = sign();
  spec.j = rest[0];
  spec.k = rest[1];
  spec.s_jk = sign();
  spec.l = rest[2];
  spec.m = rest[3];
  spec.s_lm = sign();
  return spec;
}

ComplexMatrix random_ghz_density(std::uint64_t seed) {
  return density_matrix(random_ghz_state(seed));
}

ComplexMatrix controlled_block_target(const std::vector<ComplexMatrix>& branch_ops) {
  ComplexMatrix u(64, 64);
  for (std::size_t col = 0; col < 64; ++col) {
    const std::size_t x = (col >> 3) & 3;  // qubits 2, 3
    const std::size_t in = (col >> 2) & 1;  // qubit 4
    for (std::size_t out = 0; out < 2; ++out) {
      const std::size_t row = (col & ~std::size_t{4}) | (out << 2);
      u(row, col) = branch_ops[x](out, in);
    }
  }
  return u;
}

}  // namespace bewit::testing
