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

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "bewit/circuits.hpp"
#include "bewit/ghz.hpp"
#include "bewit/witness.hpp"

namespace bewit {

/// Stochastic Pauli noise. After every single-qubit gate (two-qubit gate)
/// a uniformly random non-identity Pauli hits the touched qubit(s) with
/// probability depol1 (depol2); every measured bit flips with probability
/// readout.
struct NoiseParams {
  double depol1 = 0.0;
  double depol2 = 0.0;
  double readout = 0.0;

  void validate() const;
  bool noiseless() const { return depol1 == 0.0 && depol2 == 0.0 && readout == 0.0; }

  // "depol1=0.01,depol2=0.05,readout=0.02"; omitted keys stay 0.
  static NoiseParams parse(std::string_view text);
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(shots)
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::int64_t kDefaultShots = 10'000;

/// Basis change that turns a measurement of `obs` into a computational-basis
/// measurement: H for X, RZ(-π/2) then H for Y, nothing for Z and I.
/// Letter n acts on qubit n.
std::vector<Gate> measurement_rotation(std::string_view obs);

/// Shot estimate of <P> for a three-letter Pauli string on qubits 1-3 of the
/// state `prep` produces. Each shot draws its own noise trajectory, samples
/// qubits 1-3 and records the ±1 parity over the non-identity letters.
/// Deterministic in (seed, shots, noise).
Estimate estimate_expectation(const Circuit& prep, std::string_view obs, std::int64_t shots,
                              std::uint64_t seed, const NoiseParams& noise = {});

struct WitnessEstimate {
  Estimate witness;
  // (observable index, estimate of r in observable labeling), ascending index.
  std::vector<std::pair<int, Estimate>> observables;
};

/// Prepares density_matrix(p) with purification_circuit(p), estimates the
/// five correlations the witness reads (shots split evenly, remainder to the
/// lowest index, sub-seed n = derive_seed(seed, n)), and combines them with
/// the formula of `mode`. The standard error is propagated to first order.
/// Supported modes: kFixed (uses theta), kEnvelope, kPaperNlNumbers.
WitnessEstimate estimate_witness_detailed(const GhzDiagonalState& p, const WitnessSpec& spec,
                                          WitnessMode mode, double theta, std::int64_t shots,
                                          std::uint64_t seed, const NoiseParams& noise = {});

Estimate estimate_witness(const GhzDiagonalState& p, const WitnessSpec& spec, WitnessMode mode,
                          double theta, std::int64_t shots, std::uint64_t seed,
                          const NoiseParams& noise = {});

}  // namespace bewit
