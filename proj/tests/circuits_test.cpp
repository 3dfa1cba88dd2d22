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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bewit/errors.hpp"
#include "bewit/rng.hpp"
#include "bewit/serialize.hpp"
#include "oracles.hpp"

namespace bewit {
namespace {

using std::numbers::pi;
using testing::controlled_block_target;
using testing::direct_purification;

const std::array<double, 8> kKayTwoProbs = {1.0 / 3, 1.0 / 6, 1.0 / 6, 0, 0, 1.0 / 6, 1.0 / 6, 0};

// Largest entry difference after aligning the global phase on the largest entry of `b`.
double max_diff_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  std::size_t best = 0;
  const auto eb = b.entries();
  for (std::size_t n = 1; n < eb.size(); ++n) {
    if (std::abs(eb[n]) > std::abs(eb[best])) best = n;
  }
  const Complex phase = a.entries()[best] / eb[best];
  return a.max_abs_diff(b * (phase / std::abs(phase)));
}

// Reflection [[√p_b, √p_a], [√p_a, −√p_b]]/√P built straight from the weights.
ComplexMatrix reflection(double pa, double pb) {
  const double total = pa + pb;
  if (total == 0.0) return pauli_matrix('Z');
  const double a = std::sqrt(pa / total);
  const double b = std::sqrt(pb / total);
  return ComplexMatrix(2, 2, {b, a, a, -b});
}

Circuit random_circuit(Xoshiro256& rng, int n, int gates) {
  Circuit c(n);
  for (int g = 0; g < gates; ++g) {
    const int q = 1 + static_cast<int>(rng.below(n));
    switch (rng.below(7)) {
      case 0: c.append(Gate::h(q)); break;
      case 1: c.append(Gate::x(q)); break;
      case 2: c.append(Gate::z(q)); break;
      case 3: c.append(Gate::ry(q, 2 * pi * rng.uniform() - pi)); break;
      case 4: c.append(Gate::rz(q, 2 * pi * rng.uniform() - pi)); break;
      case 5: c.append(Gate::y(q)); break;
      default: {
        int t = 1 + static_cast<int>(rng.below(n - 1));
        if (t >= q) ++t;
        c.append(Gate::cnot(q, t));
      }
    }
  }
  return c;
}

GhzDiagonalState random_state(Xoshiro256& rng) { return random_ghz_state(rng.next()); }

TEST(Step1, UniformGivesPlusStates) {
  const StateVector out = simulate_statevector(step1_circuit(GhzDiagonalState::uniform()));
  const double amp = 1.0 / std::sqrt(8.0);
  EXPECT_NEAR(std::norm(out.inner(StateVector(3, std::vector<Complex>(8, amp)))), 1.0, 1e-10);
}

TEST(Step1, SinglePair) {
  const StateVector out = simulate_statevector(step1_circuit(GhzDiagonalState({0.5, 0.5, 0, 0, 0, 0, 0, 0})));
  const double h = std::sqrt(0.5);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(std::abs(out[i]), (i == 0 || i == 4) ? h : 0.0, 1e-12) << i;
  }
}

TEST(Step1, KayTwoAmplitudes) {
  const StateVector out = simulate_statevector(step1_circuit(GhzDiagonalState(kKayTwoProbs)));
  const std::array<double, 4> branch = {std::sqrt(0.25), std::sqrt(1.0 / 12), std::sqrt(1.0 / 12),
                                        std::sqrt(1.0 / 12)};
  for (std::size_t x = 0; x < 4; ++x) {
    // Same amplitude on |0x> and |1x>.
    EXPECT_NEAR(std::abs(out[x]), branch[x], 1e-12);
    EXPECT_NEAR(std::abs(out[4 + x]), branch[x], 1e-12);
  }
}

TEST(Step1, AmplitudesFollowPairSums) {
  Xoshiro256 rng(1);
  for (int n = 0; n < 200; ++n) {
    const GhzDiagonalState p = random_state(rng);
    const StateVector out = simulate_statevector(step1_circuit(p));
    for (unsigned x = 0; x < 4; ++x) {
      const double expected = std::sqrt(p.pair_sum(x) / 2);
      ASSERT_NEAR(out[x].real(), expected, 1e-12);
      ASSERT_NEAR(out[4 + x].real(), expected, 1e-12);
    }
  }
}

TEST(Multiplexor, MatchesBlockTargetOnRandomStates) {
  Xoshiro256 rng(2);
  for (int n = 0; n < 100; ++n) {
    const GhzDiagonalState p = random_state(rng);
    std::vector<ComplexMatrix> ops;
    for (unsigned x = 0; x < 4; ++x) ops.push_back(reflection(p[2 * x], p[2 * x + 1]));
    const ComplexMatrix u = circuit_unitary(multiplexed_u_circuit(p));
    ASSERT_LE(max_diff_up_to_phase(u, controlled_block_target(ops)), 1e-10);
  }
}

TEST(Multiplexor, EqualWeightsGiveHadamard) {
  const GhzDiagonalState p({0.1, 0.1, 0.2, 0.2, 0.15, 0.15, 0.05, 0.05});
  const ComplexMatrix h = gate_matrix(Gate::h(1));
  for (unsigned x = 0; x < 4; ++x) EXPECT_LE(branch_unitary(p, x).max_abs_diff(h), 1e-15);
  const std::vector<ComplexMatrix> ops(4, h);
  EXPECT_LE(max_diff_up_to_phase(circuit_unitary(multiplexed_u_circuit(p)), controlled_block_target(ops)),
            1e-10);
}

TEST(Multiplexor, ZeroUpperWeightGivesZ) {
  const GhzDiagonalState p({0, 0.4, 0.3, 0.3, 0, 0, 0, 0});
  EXPECT_LE(branch_unitary(p, 0).max_abs_diff(pauli_matrix('Z')), 1e-15);
  // Empty pairs use Z too.
  EXPECT_LE(branch_unitary(p, 2).max_abs_diff(pauli_matrix('Z')), 1e-15);
  EXPECT_LE(branch_unitary(p, 3).max_abs_diff(pauli_matrix('Z')), 1e-15);
}

TEST(Multiplexor, GateCounts) {
  const Circuit c = multiplexed_u_circuit(category_state(1));
  EXPECT_EQ(c.count(GateKind::kCNOT), 4u);
  EXPECT_EQ(c.count(GateKind::kRY), 4u);
  EXPECT_EQ(c.count(GateKind::kZ), 1u);
  EXPECT_EQ(c.size(), 9u);
}

TEST(UniformlyControlledRy, ImplementsEachBranch) {
  Xoshiro256 rng(3);
  const std::array<int, 2> controls = {1, 2};
  std::array<double, 4> angles{};
  for (double& a : angles) a = 2 * pi * rng.uniform() - pi;
  Circuit c(3);
  append_uniformly_controlled_ry(c, controls, 3, angles);
  const ComplexMatrix u = circuit_unitary(c);
  for (std::size_t v = 0; v < 4; ++v) {
    const ComplexMatrix ry = gate_matrix(Gate::ry(1, angles[v]));
    for (std::size_t in = 0; in < 2; ++in) {
      for (std::size_t out = 0; out < 2; ++out) {
        ASSERT_NEAR(std::abs(u((v << 1) | out, (v << 1) | in) - ry(out, in)), 0.0, 1e-12);
      }
    }
  }
  std::array<double, 3> wrong{};
  EXPECT_THROW(append_uniformly_controlled_ry(c, controls, 3, wrong), InputError);
}

TEST(Purification, UniformAndPure) {
  const std::array<int, 3> keep = {1, 2, 3};
  const StateVector u = simulate_statevector(purification_circuit(GhzDiagonalState::uniform()));
  EXPECT_LE(trace_distance(partial_trace(u, keep), ComplexMatrix::identity(8) * Complex{0.125}), 1e-12);
  const StateVector g = simulate_statevector(purification_circuit(GhzDiagonalState({1, 0, 0, 0, 0, 0, 0, 0})));
  EXPECT_LE(trace_distance(partial_trace(g, keep), ghz_basis_vector(0, +1).projector()), 1e-12);
  EXPECT_NEAR(verify_preparation(GhzDiagonalState::uniform()), 0.0, 1e-12);
}

TEST(Purification, KayTwoAndCategories) {
  const std::array<int, 3> keep = {1, 2, 3};
  const StateVector out = simulate_statevector(purification_circuit(GhzDiagonalState(kKayTwoProbs)));
  EXPECT_LE(trace_distance(partial_trace(out, keep), kay(2.0)), 1e-10);
  for (int cat = 1; cat <= 3; ++cat) EXPECT_LE(verify_preparation(category_state(cat)), 1e-10);
}

TEST(Purification, AgreesWithDirectPurificationOracle) {
  const std::array<int, 3> keep = {1, 2, 3};
  Xoshiro256 rng(4);
  for (int n = 0; n < 1000; ++n) {
    const GhzDiagonalState p = random_state(rng);
    const ComplexMatrix from_circuit = partial_trace(simulate_statevector(purification_circuit(p)), keep);
    const ComplexMatrix from_oracle = partial_trace(direct_purification(p), keep);
    ASSERT_LE(trace_distance(from_circuit, from_oracle), 1e-10) << n;
    ASSERT_LE(verify_preparation(p), 1e-10) << n;
  }
}

TEST(Purification, StepStructure) {
  const Circuit c = purification_circuit(category_state(2));
  EXPECT_EQ(c.num_qubits(), 6);
  const auto& g = c.gates();
  ASSERT_GE(g.size(), 6u);
  EXPECT_EQ(g.front(), Gate::h(1));
  EXPECT_EQ(g[g.size() - 3], Gate::cnot(1, 2));
  EXPECT_EQ(g[g.size() - 2], Gate::cnot(1, 3));
  EXPECT_EQ(g[g.size() - 1], Gate::cnot(1, 4));
}

TEST(Simulate, SmallExamples) {
  const StateVector empty = simulate_statevector(Circuit(3));
  EXPECT_EQ(empty[0], Complex(1.0));
  Circuit h(1);
  h.append(Gate::h(1));
  const StateVector plus = simulate_statevector(h);
  EXPECT_NEAR(std::abs(plus[0] - std::sqrt(0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(plus[1] - std::sqrt(0.5)), 0.0, 1e-15);
  Circuit bell(2);
  bell.append(Gate::h(1)).append(Gate::cnot(1, 2));
  const StateVector b = simulate_statevector(bell);
  const std::array<double, 4> expected = {std::sqrt(0.5), 0, 0, std::sqrt(0.5)};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(b[i] - expected[i]), 0.0, 1e-15);
}

TEST(Simulate, CapacityLimit) {
  EXPECT_NO_THROW(simulate_statevector(Circuit(Circuit::kMaxSimulatedQubits)));
  EXPECT_THROW(simulate_statevector(Circuit(Circuit::kMaxSimulatedQubits + 1)), CapacityError);
}

TEST(Simulate, PreservesNorm) {
  Xoshiro256 rng(5);
  for (int n = 0; n < 1000; ++n) {
    const int width = 2 + static_cast<int>(rng.below(5));
    const Circuit c = random_circuit(rng, width, 1 + static_cast<int>(rng.below(60)));
    ASSERT_NEAR(simulate_statevector(c).norm(), 1.0, 1e-10);
  }
}

TEST(Simulate, MatchesDenseGateProducts) {
  Xoshiro256 rng(6);
  const Circuit c = random_circuit(rng, 2, 30);
  ComplexMatrix u = ComplexMatrix::identity(4);
  const ComplexMatrix id = ComplexMatrix::identity(2);
  for (const Gate& g : c.gates()) {
    ComplexMatrix full = gate_matrix(g);
    if (!g.is_two_qubit()) {
      full = g.target == 1 ? kron(full, id) : kron(id, full);
    } else if (g.control == 2) {
      // Swap-conjugate the control-high CNOT.
      const ComplexMatrix swap(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
      full = swap * full * swap;
    }
    u = full * u;
  }
  EXPECT_LE(circuit_unitary(c).max_abs_diff(u), 1e-12);
}

TEST(Gate, MatricesAreUnitary) {
  Xoshiro256 rng(7);
  std::vector<Gate> gates = {Gate::h(1), Gate::x(1), Gate::y(1), Gate::z(1), Gate::cnot(1, 2)};
  for (int n = 0; n < 20; ++n) {
    gates.push_back(Gate::ry(1, 4 * pi * rng.uniform()));
    gates.push_back(Gate::rz(1, 4 * pi * rng.uniform()));
  }
  for (const Gate& g : gates) {
    const ComplexMatrix m = gate_matrix(g);
    ASSERT_LE((m.adjoint() * m).max_abs_diff(ComplexMatrix::identity(m.rows())), 1e-12);
  }
}

TEST(Circuit, RejectsInvalidGates) {
  Circuit c(3);
  EXPECT_THROW(c.append(Gate::h(0)), InputError);
  EXPECT_THROW(c.append(Gate::h(4)), InputError);
  EXPECT_THROW(c.append(Gate::cnot(2, 2)), InputError);
  EXPECT_THROW(c.append(Circuit(4)), InputError);
}

TEST(Qasm, EmittedLines) {
  Circuit one(1);
  one.append(Gate::h(1));
  const std::string q1 = emit_qasm(one);
  EXPECT_NE(q1.find("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n"), std::string::npos);
  EXPECT_NE(q1.find("qreg q[1];"), std::string::npos);
  EXPECT_NE(q1.find("h q[0];"), std::string::npos);
  EXPECT_NE(q1.find("most significant"), std::string::npos);
  Circuit six(6);
  six.append(Gate::cnot(1, 4)).append(Gate::ry(2, 0.1));
  const std::string q6 = emit_qasm(six);
  EXPECT_NE(q6.find("cx q[0],q[3];"), std::string::npos);
  EXPECT_NE(q6.find("ry(0.10000000000000001) q[1];"), std::string::npos);
}

TEST(Qasm, RoundTripPreservesCircuitsAndStates) {
  Xoshiro256 rng(8);
  for (int n = 0; n < 100; ++n) {
    const Circuit c = purification_circuit(random_state(rng));
    const Circuit back = parse_qasm(emit_qasm(c));
    ASSERT_EQ(back.gates(), c.gates());
    ASSERT_LE(max_abs_diff_up_to_phase(simulate_statevector(back), simulate_statevector(c)), 1e-9);
  }
  for (int n = 0; n < 100; ++n) {
    const Circuit c = random_circuit(rng, 4, 40);
    ASSERT_LE(max_abs_diff_up_to_phase(simulate_statevector(parse_qasm(emit_qasm(c))),
                                       simulate_statevector(c)),
              1e-9);
  }
}

TEST(Qasm, RejectsUnsupportedInput) {
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nccx q[0],q[1],q[0];\n"), InputError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nh q[0];\n"), InputError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[5];\n"), InputError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nry q[0];\n"), InputError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0];\n"), InputError);
}

TEST(Json, CircuitRoundTrip) {
  const Circuit c = purification_circuit(category_state(3));
  const auto j = to_json(c);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["gates"].size(), c.size());
  EXPECT_EQ(j["gates"][0]["kind"], "H");
  EXPECT_EQ(circuit_from_json(j).gates(), c.gates());
  EXPECT_THROW(circuit_from_json(nlohmann::json::parse(R"({"n":2,"gates":[{"kind":"Q","q":[1]}]})")),
               InputError);
}

}  // namespace
}  // namespace bewit
