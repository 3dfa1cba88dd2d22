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

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace bewit {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sized for the 8x8 and 64x64 operators this
/// library works with; nothing here is tuned for large dimensions.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  // Largest absolute entry difference; dimensions must agree.
  double max_abs_diff(const ComplexMatrix& other) const;
  bool approx_equal(const ComplexMatrix& other, double atol) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Pure state on n qubits. Qubit 1 is the most significant bit of the
/// computational-basis index, so |q1 q2 ... qn> sits at index q1*2^(n-1)+...
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int num_qubits);  // |0...0>
  StateVector(int num_qubits, std::vector<Complex> amplitudes);

  static StateVector basis(int num_qubits, std::size_t index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  double norm() const;
  Complex inner(const StateVector& other) const;  // <this|other>
  ComplexMatrix projector() const;

 private:
  int num_qubits_ = 0;
  std::vector<Complex> amps_;
};

// Max entry difference after removing the global phase that best aligns b to a.
double max_abs_diff_up_to_phase(const StateVector& a, const StateVector& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Single-qubit Pauli for 'I', 'X', 'Y', 'Z'.
ComplexMatrix pauli_matrix(char label);

/// 8x8 operator for a three-letter Pauli string such as "XYY"; the first
/// letter acts on qubit 1. Throws InputError on other lengths or letters.
ComplexMatrix pauli_string_matrix(std::string_view label);

// Partial transpose on one qubit (1-based) of a 2^n x 2^n operator.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int qubit);

/// Reduced density operator on `keep` (1-based qubit indices, any order,
/// no duplicates). The kept qubits retain their relative order.
ComplexMatrix partial_trace(const StateVector& state, std::span<const int> keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const int> keep);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);

/// Ascending eigenvalues of a Hermitian matrix via cyclic Jacobi sweeps.
/// Inputs that are not Hermitian within 1e-10 are rejected, not symmetrized.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// 1/2 * sum |eig(a - b)|.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace bewit
