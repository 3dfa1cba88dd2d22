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

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "bewit/errors.hpp"

namespace bewit {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kJacobiTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

int qubits_for_dim(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw InputError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return std::countr_zero(dim);
}

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("matrix dimensions do not match");
  }
}

// Sorted, validated, 0-based bit positions (MSB-first numbering) of `keep`.
std::vector<int> kept_positions(std::span<const int> keep, int n) {
  if (keep.empty()) throw InputError("partial_trace: keep set is empty");
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("partial_trace: duplicate qubit index");
  }
  for (int q : sorted) {
    if (q < 1 || q > n) throw InputError("partial_trace: qubit index out of range");
  }
  return sorted;
}

// Scatter the bits of `kept_index` and `traced_index` into a full n-qubit index.
struct IndexComposer {
  int n;
  std::vector<int> kept;    // 1-based, ascending
  std::vector<int> traced;  // 1-based, ascending

  IndexComposer(int num_qubits, std::vector<int> keep) : n(num_qubits), kept(std::move(keep)) {
    for (int q = 1; q <= n; ++q) {
      if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
    }
  }

  std::size_t compose(std::size_t kept_index, std::size_t traced_index) const {
    std::size_t full = 0;
    scatter(kept, kept_index, full);
    scatter(traced, traced_index, full);
    return full;
  }

 private:
  void scatter(const std::vector<int>& qubits, std::size_t local, std::size_t& full) const {
    const int m = static_cast<int>(qubits.size());
    for (int t = 0; t < m; ++t) {
      const std::size_t bit = (local >> (m - 1 - t)) & 1U;
      full |= bit << (n - qubits[t]);
    }
  }
};

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw InputError("ComplexMatrix: entry count does not match rows*cols");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex x = a(r, k);
      if (x == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  check_same_shape(*this, other);
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  }
  return worst;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double atol) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  return max_abs_diff(other) <= atol;
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0 || num_qubits > 30) throw InputError("StateVector: bad qubit count");
  amps_.assign(std::size_t{1} << num_qubits, Complex{});
  amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits < 0 || num_qubits > 30 || amps_.size() != (std::size_t{1} << num_qubits)) {
    throw InputError("StateVector: amplitude count must be 2^num_qubits");
  }
}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
  StateVector s(num_qubits);
  if (index >= s.dim()) throw InputError("StateVector::basis: index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

Complex StateVector::inner(const StateVector& other) const {
  if (dim() != other.dim()) throw InputError("inner product: dimensions differ");
  Complex s = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

ComplexMatrix StateVector::projector() const {
  ComplexMatrix p(dim(), dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = 0; c < dim(); ++c) p(r, c) = amps_[r] * std::conj(amps_[c]);
  }
  return p;
}

double max_abs_diff_up_to_phase(const StateVector& a, const StateVector& b) {
  const Complex overlap = b.inner(a);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    worst = std::max(worst, std::abs(a[i] - phase * b[i]));
  }
  return worst;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex x = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
        }
      }
    }
  }
  return out;
}

ComplexMatrix pauli_matrix(char label) {
  using namespace std::complex_literals;
  switch (label) {
    case 'I':
      return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, 1.0});
    case 'X':
      return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0});
    case 'Y':
      return ComplexMatrix(2, 2, {0.0, -1i, 1i, 0.0});
    case 'Z':
      return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0});
    default:
      throw InputError(std::string("invalid Pauli letter '") + label + "'");
  }
}

ComplexMatrix pauli_string_matrix(std::string_view label) {
  if (label.size() != 3) {
    throw InputError("Pauli string must have 3 letters, got \"" + std::string(label) + "\"");
  }
  return kron(pauli_matrix(label[0]), kron(pauli_matrix(label[1]), pauli_matrix(label[2])));
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int qubit) {
  if (!rho.is_square()) throw InputError("partial_transpose: matrix is not square");
  const int n = qubits_for_dim(rho.rows());
  if (qubit < 1 || qubit > n) throw InputError("partial_transpose: qubit index out of range");
  const std::size_t mask = std::size_t{1} << (n - qubit);
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t r = 0; r < rho.rows(); ++r) {
    for (std::size_t c = 0; c < rho.cols(); ++c) {
      // Exchange the chosen qubit's row and column bits.
      const std::size_t r2 = (r & ~mask) | (c & mask);
      const std::size_t c2 = (c & ~mask) | (r & mask);
      out(r, c) = rho(r2, c2);
    }
  }
  return out;
}

ComplexMatrix partial_trace(const StateVector& state, std::span<const int> keep) {
  const int n = state.num_qubits();
  const IndexComposer ix(n, kept_positions(keep, n));
  const std::size_t kept_dim = std::size_t{1} << ix.kept.size();
  const std::size_t traced_dim = std::size_t{1} << ix.traced.size();
  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t i = 0; i < kept_dim; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Complex s = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t) {
        s += state[ix.compose(i, t)] * std::conj(state[ix.compose(j, t)]);
      }
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const int> keep) {
  if (!rho.is_square()) throw InputError("partial_trace: matrix is not square");
  const int n = qubits_for_dim(rho.rows());
  const IndexComposer ix(n, kept_positions(keep, n));
  const std::size_t kept_dim = std::size_t{1} << ix.kept.size();
  const std::size_t traced_dim = std::size_t{1} << ix.traced.size();
  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t i = 0; i < kept_dim; ++i) {
    for (std::size_t j = 0; j < kept_dim; ++j) {
      Complex s = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t) s += rho(ix.compose(i, t), ix.compose(j, t));
      out(i, j) = s;
    }
  }
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r; c < m.cols(); ++c) {
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
    }
  }
  return true;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!is_hermitian(m, kHermitianTol)) {
    throw InputError("hermitian_eigenvalues: matrix is not Hermitian within 1e-10");
  }
  // H = A + iB is Hermitian iff [[A, -B], [B, A]] is real symmetric; the
  // embedding has the spectrum of H with every eigenvalue doubled.
  const std::size_t n = m.rows();
  const std::size_t dim = 2 * n;
  std::vector<double> a(dim * dim);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * dim + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Complex z = 0.5 * (m(r, c) + std::conj(m(c, r)));
      at(r, c) = z.real();
      at(r + n, c + n) = z.real();
      at(r, c + n) = -z.imag();
      at(r + n, c) = z.imag();
    }
  }

  double total = 0.0;
  for (double x : a) total += x * x;
  const double threshold = kJacobiTol * std::max(1.0, std::sqrt(total));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = r + 1; c < dim; ++c) s += 2.0 * at(r, c) * at(r, c);
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep < kJacobiMaxSweeps && off_norm() > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t =
            std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < dim; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }
  if (sweep == kJacobiMaxSweeps && off_norm() > threshold) {
    throw Error("hermitian_eigenvalues: Jacobi iteration did not converge");
  }

  std::vector<double> doubled(dim);
  for (std::size_t i = 0; i < dim; ++i) doubled[i] = at(i, i);
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return eig;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(a - b)) s += std::abs(lambda);
  return 0.5 * s;
}

}  // namespace bewit
