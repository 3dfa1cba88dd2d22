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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bewit/ghz.hpp"
#include "bewit/qmat.hpp"

namespace bewit {

enum class GateKind { kH, kX, kY, kZ, kRY, kRZ, kCNOT };

std::string_view to_string(GateKind kind);
GateKind parse_gate_kind(std::string_view text);

/// A gate on 1-based qubit indices. For CNOT, `control` drives `target`;
/// single-qubit gates act on `target`. Y only appears as an injected noise
/// fault; synthesized circuits use {H, X, Z, RY, RZ, CNOT}.
struct Gate {
  GateKind kind = GateKind::kH;
  int target = 1;
  int control = 0;  // CNOT only
  double angle = 0.0;  // RY / RZ only

  static Gate h(int q) { return {GateKind::kH, q}; }
  static Gate x(int q) { return {GateKind::kX, q}; }
  static Gate y(int q) { return {GateKind::kY, q}; }
  static Gate z(int q) { return {GateKind::kZ, q}; }
  static Gate ry(int q, double theta) { return {GateKind::kRY, q, 0, theta}; }
  static Gate rz(int q, double theta) { return {GateKind::kRZ, q, 0, theta}; }
  static Gate cnot(int c, int t) { return {GateKind::kCNOT, t, c}; }

  bool is_two_qubit() const { return kind == GateKind::kCNOT; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

// 2x2 matrix of a single-qubit gate, or 4x4 (control as the high bit) for CNOT.
ComplexMatrix gate_matrix(const Gate& gate);

class Circuit {
 public:
  static constexpr int kMaxSimulatedQubits = 12;

  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  // Throws InputError for out-of-range indices or control == target.
  Circuit& append(const Gate& gate);
  Circuit& append(const Circuit& other);

  std::size_t count(GateKind kind) const;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

void apply_gate(StateVector& state, const Gate& gate);

/// Exact evolution of |0...0> through the circuit. Throws CapacityError
/// above Circuit::kMaxSimulatedQubits qubits.
StateVector simulate_statevector(const Circuit& circuit);
StateVector simulate_statevector(const Circuit& circuit, StateVector initial);

// Dense unitary, column c = circuit applied to |c>.
ComplexMatrix circuit_unitary(const Circuit& circuit);

/// Uniformly controlled RY: for each computational value v of `controls`
/// (first control = most significant bit of v), applies RY(angles[v]) to
/// `target`. Gray-code construction with 2^c RY and 2^c CNOT gates.
void append_uniformly_controlled_ry(Circuit& circuit, std::span<const int> controls, int target,
                                    std::span<const double> angles);

/// Three-qubit circuit preparing sum_x sqrt(P_x / 2) (|0x> + |1x>) where
/// P_x = p[2x] + p[2x+1].
Circuit step1_circuit(const GhzDiagonalState& p);

// Rotation angle γ_x of branch x, with cos γ = sqrt(p_b / P_x), sin γ = sqrt(p_a / P_x).
double branch_angle(const GhzDiagonalState& p, unsigned x);

// The single-qubit reflection Z·RY(-2γ_x) the multiplexor applies on branch x.
ComplexMatrix branch_unitary(const GhzDiagonalState& p, unsigned x);

/// Six-qubit fragment: qubits 2,3 select branch x and qubit 4 receives the
/// reflection [[√p_b, √p_a], [√p_a, -√p_b]] / √P_x of the pair owning x.
/// Built as a multiplexed RY(-2γ_x) followed by Z on qubit 4 (4 CNOT,
/// 4 RY, 1 Z). Zero-weight branches use γ = 0, i.e. plain Z.
Circuit multiplexed_u_circuit(const GhzDiagonalState& p);

/// Six-qubit circuit whose qubits 1-3, after tracing out 4-6, carry
/// density_matrix(p): step 1; CNOT 1→4, 2→5, 3→6; the multiplexor;
/// CNOT 1→2, 1→3, 1→4.
Circuit purification_circuit(const GhzDiagonalState& p);

// Trace distance between the circuit's reduced state on 1-3 and density_matrix(p).
double verify_preparation(const GhzDiagonalState& p);

/// OpenQASM 2.0 text. Qubit i maps to q[i-1]; angles use 17 significant digits.
std::string emit_qasm(const Circuit& circuit);

/// Reader for the subset emit_qasm produces (h, x, y, z, ry, rz, cx). Throws
/// InputError on anything else.
Circuit parse_qasm(std::string_view text);

}  // namespace bewit
