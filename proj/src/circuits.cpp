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

#include "bewit/circuits.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "bewit/errors.hpp"

namespace bewit {

namespace {

constexpr double kClampTol = 1e-12;

double clamped_sqrt(double x) {
  if (x < -kClampTol) throw InputError("negative weight in circuit synthesis");
  return std::sqrt(std::max(x, 0.0));
}

std::size_t bit_of(int qubit, int n) { return std::size_t{1} << (n - qubit); }

// Applies the 2x2 matrix [[u00, u01], [u10, u11]] to `qubit`.
void apply_single(StateVector& state, int qubit, Complex u00, Complex u01, Complex u10,
                  Complex u11) {
  const std::size_t mask = bit_of(qubit, state.num_qubits());
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | mask];
    amps[i] = u00 * a0 + u01 * a1;
    amps[i | mask] = u10 * a0 + u11 * a1;
  }
}

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
      return "H";
    case GateKind::kX:
      return "X";
    case GateKind::kY:
      return "Y";
    case GateKind::kZ:
      return "Z";
    case GateKind::kRY:
      return "RY";
    case GateKind::kRZ:
      return "RZ";
    case GateKind::kCNOT:
      return "CNOT";
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view text) {
  for (GateKind k : {GateKind::kH, GateKind::kX, GateKind::kY, GateKind::kZ, GateKind::kRY,
                     GateKind::kRZ, GateKind::kCNOT}) {
    if (to_string(k) == text) return k;
  }
  throw InputError("unknown gate kind \"" + std::string(text) + "\"");
}

ComplexMatrix gate_matrix(const Gate& gate) {
  using namespace std::complex_literals;
  const double h = 1.0 / std::sqrt(2.0);
  const double c = std::cos(gate.angle / 2.0);
  const double s = std::sin(gate.angle / 2.0);
  switch (gate.kind) {
    case GateKind::kH:
      return ComplexMatrix(2, 2, {h, h, h, -h});
    case GateKind::kX:
      return pauli_matrix('X');
    case GateKind::kY:
      return pauli_matrix('Y');
    case GateKind::kZ:
      return pauli_matrix('Z');
    case GateKind::kRY:
      return ComplexMatrix(2, 2, {c, -s, s, c});
    case GateKind::kRZ:
      return ComplexMatrix(2, 2, {std::exp(-0.5i * gate.angle), 0.0, 0.0,
                                  std::exp(0.5i * gate.angle)});
    case GateKind::kCNOT: {
      ComplexMatrix m(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
      return m;
    }
  }
  throw InputError("unknown gate kind");
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw InputError("circuit needs at least one qubit");
}

Circuit& Circuit::append(const Gate& gate) {
  if (gate.target < 1 || gate.target > num_qubits_) {
    throw InputError("gate target " + std::to_string(gate.target) + " outside circuit width");
  }
  if (gate.is_two_qubit()) {
    if (gate.control < 1 || gate.control > num_qubits_) {
      throw InputError("gate control " + std::to_string(gate.control) + " outside circuit width");
    }
    if (gate.control == gate.target) throw InputError("CNOT control equals target");
  }
  if (!std::isfinite(gate.angle)) throw InputError("gate angle is not finite");
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits() > num_qubits_) throw InputError("appended circuit is wider");
  for (const Gate& g : other.gates()) append(g);
  return *this;
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [&](const Gate& g) { return g.kind == kind; }));
}

void apply_gate(StateVector& state, const Gate& gate) {
  using namespace std::complex_literals;
  const int n = state.num_qubits();
  switch (gate.kind) {
    case GateKind::kH: {
      const double h = 1.0 / std::sqrt(2.0);
      apply_single(state, gate.target, h, h, h, -h);
      return;
    }
    case GateKind::kX: {
      const std::size_t mask = bit_of(gate.target, n);
      auto amps = state.amplitudes();
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if (!(i & mask)) std::swap(amps[i], amps[i | mask]);
      }
      return;
    }
    case GateKind::kY:
      apply_single(state, gate.target, 0.0, -1i, 1i, 0.0);
      return;
    case GateKind::kZ: {
      const std::size_t mask = bit_of(gate.target, n);
      auto amps = state.amplitudes();
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) amps[i] = -amps[i];
      }
      return;
    }
    case GateKind::kRY: {
      const double c = std::cos(gate.angle / 2.0);
      const double s = std::sin(gate.angle / 2.0);
      apply_single(state, gate.target, c, -s, s, c);
      return;
    }
    case GateKind::kRZ:
      apply_single(state, gate.target, std::exp(-0.5i * gate.angle), 0.0, 0.0,
                   std::exp(0.5i * gate.angle));
      return;
    case GateKind::kCNOT: {
      const std::size_t cmask = bit_of(gate.control, n);
      const std::size_t tmask = bit_of(gate.target, n);
      auto amps = state.amplitudes();
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
      }
      return;
    }
  }
}

StateVector simulate_statevector(const Circuit& circuit) {
  if (circuit.num_qubits() > Circuit::kMaxSimulatedQubits) {
    throw CapacityError("statevector simulation is limited to 12 qubits");
  }
  return simulate_statevector(circuit, StateVector(circuit.num_qubits()));
}

StateVector simulate_statevector(const Circuit& circuit, StateVector initial) {
  if (circuit.num_qubits() > Circuit::kMaxSimulatedQubits) {
    throw CapacityError("statevector simulation is limited to 12 qubits");
  }
  if (initial.num_qubits() != circuit.num_qubits()) {
    throw InputError("initial state width does not match circuit");
  }
  for (const Gate& g : circuit.gates()) apply_gate(initial, g);
  return initial;
}

ComplexMatrix circuit_unitary(const Circuit& circuit) {
  const std::size_t dim = std::size_t{1} << circuit.num_qubits();
  ComplexMatrix u(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const StateVector col =
        simulate_statevector(circuit, StateVector::basis(circuit.num_qubits(), c));
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = col[r];
  }
  return u;
}

void append_uniformly_controlled_ry(Circuit& circuit, std::span<const int> controls, int target,
                                    std::span<const double> angles) {
  const std::size_t n = controls.size();
  const std::size_t count = std::size_t{1} << n;
  if (angles.size() != count) throw InputError("multiplexor needs 2^controls angles");
  if (n == 0) {
    circuit.append(Gate::ry(target, angles[0]));
    return;
  }
  auto gray = [](std::size_t k) { return k ^ (k >> 1); };
  // RY number k sees the target conjugated by X^(gray(k)·v), so
  //   angles[v] = sum_k theta_k (-1)^popcount(gray(k) & v)
  // which inverts with the same Walsh matrix scaled by 1/2^n.
  for (std::size_t k = 0; k < count; ++k) {
    double theta = 0.0;
    for (std::size_t v = 0; v < count; ++v) {
      const int parity = std::popcount(gray(k) & v) & 1;
      theta += parity ? -angles[v] : angles[v];
    }
    circuit.append(Gate::ry(target, theta / static_cast<double>(count)));
    const std::size_t flipped = gray(k) ^ gray((k + 1) % count);
    const int bit = std::countr_zero(flipped);  // bit 0 = last control
    circuit.append(Gate::cnot(controls[n - 1 - bit], target));
  }
}

Circuit step1_circuit(const GhzDiagonalState& p) {
  std::array<double, 4> amp{};
  for (unsigned x = 0; x < 4; ++x) amp[x] = clamped_sqrt(p.pair_sum(x));
  Circuit c(3);
  c.append(Gate::h(1));
  const double upper = std::hypot(amp[0], amp[1]);
  const double lower = std::hypot(amp[2], amp[3]);
  c.append(Gate::ry(2, 2.0 * std::atan2(lower, upper)));
  const std::array<int, 1> controls = {2};
  const std::array<double, 2> angles = {2.0 * std::atan2(amp[1], amp[0]),
                                        2.0 * std::atan2(amp[3], amp[2])};
  append_uniformly_controlled_ry(c, controls, 3, angles);
  return c;
}

double branch_angle(const GhzDiagonalState& p, unsigned x) {
  if (x > 3) throw InputError("branch label must be a two-bit value");
  return std::atan2(clamped_sqrt(p[2 * x]), clamped_sqrt(p[2 * x + 1]));
}

ComplexMatrix branch_unitary(const GhzDiagonalState& p, unsigned x) {
  const double g = branch_angle(p, x);
  return ComplexMatrix(2, 2, {std::cos(g), std::sin(g), std::sin(g), -std::cos(g)});
}

Circuit multiplexed_u_circuit(const GhzDiagonalState& p) {
  // Z·RY(-2γ) = [[cos γ, sin γ], [sin γ, -cos γ]].
  std::array<double, 4> angles{};
  for (unsigned x = 0; x < 4; ++x) angles[x] = -2.0 * branch_angle(p, x);
  Circuit c(6);
  const std::array<int, 2> controls = {2, 3};
  append_uniformly_controlled_ry(c, controls, 4, angles);
  c.append(Gate::z(4));
  return c;
}

Circuit purification_circuit(const GhzDiagonalState& p) {
  Circuit c(6);
  c.append(step1_circuit(p));
  c.append(Gate::cnot(1, 4)).append(Gate::cnot(2, 5)).append(Gate::cnot(3, 6));
  c.append(multiplexed_u_circuit(p));
  c.append(Gate::cnot(1, 2)).append(Gate::cnot(1, 3)).append(Gate::cnot(1, 4));
  return c;
}

double verify_preparation(const GhzDiagonalState& p) {
  const StateVector out = simulate_statevector(purification_circuit(p));
  const std::array<int, 3> keep = {1, 2, 3};
  return trace_distance(partial_trace(out, keep), density_matrix(p));
}

}  // namespace bewit
