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

#include "bewit/estimator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <regex>
#include <string>

#include "bewit/errors.hpp"
#include "bewit/rng.hpp"

namespace bewit {

namespace {

constexpr double kDegenerateTol = 1e-9;

void check_observable(std::string_view obs) {
  if (obs.size() != 3 || obs.find_first_not_of("IXYZ") != std::string_view::npos) {
    throw InputError("observable must be a three-letter Pauli string, got \"" +
                     std::string(obs) + "\"");
  }
}

// Outcome distribution of qubits 1-3 (outcome = q1 q2 q3 as a 3-bit number).
std::array<double, 8> top3_distribution(const StateVector& state) {
  std::array<double, 8> probs{};
  const int shift = state.num_qubits() - 3;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) probs[i >> shift] += std::norm(amps[i]);
  return probs;
}

unsigned draw_outcome(const std::array<double, 8>& probs, Xoshiro256& rng) {
  double u = rng.uniform();
  for (unsigned k = 0; k < 7; ++k) {
    if (u < probs[k]) return k;
    u -= probs[k];
  }
  return 7;
}

void apply_pauli(StateVector& state, int qubit, unsigned which) {
  switch (which) {
    case 1:
      apply_gate(state, Gate::x(qubit));
      break;
    case 2:
      apply_gate(state, Gate::y(qubit));
      break;
    case 3:
      apply_gate(state, Gate::z(qubit));
      break;
    default:
      break;
  }
}

struct Fault {
  std::size_t after_gate;
  unsigned pauli;  // one qubit: 1..3; two qubits: 1..15 as 4*control + target
};

/// Draws shots for one (circuit, observable) pair. Noiseless prefixes of the
/// circuit are cached so a faulty trajectory only re-simulates from its
/// first fault onward.
class ShotSampler {
 public:
  ShotSampler(const Circuit& circuit, const NoiseParams& noise)
      : circuit_(circuit), noise_(noise) {
    prefix_.reserve(circuit.size() + 1);
    prefix_.emplace_back(circuit.num_qubits());
    for (const Gate& g : circuit.gates()) {
      StateVector next = prefix_.back();
      apply_gate(next, g);
      prefix_.push_back(std::move(next));
    }
    clean_ = top3_distribution(prefix_.back());
  }

  unsigned shot(Xoshiro256& rng) {
    faults_.clear();
    if (noise_.depol1 > 0.0 || noise_.depol2 > 0.0) {
      const auto& gates = circuit_.gates();
      for (std::size_t g = 0; g < gates.size(); ++g) {
        const bool two = gates[g].is_two_qubit();
        const double p = two ? noise_.depol2 : noise_.depol1;
        if (p > 0.0 && rng.uniform() < p) {
          faults_.push_back({g, static_cast<unsigned>(rng.below(two ? 15 : 3)) + 1});
        }
      }
    }
    unsigned outcome =
        faults_.empty() ? draw_outcome(clean_, rng) : draw_outcome(trajectory(), rng);
    if (noise_.readout > 0.0) {
      for (unsigned bit = 0; bit < 3; ++bit) {
        if (rng.uniform() < noise_.readout) outcome ^= 1U << bit;
      }
    }
    return outcome;
  }

 private:
  std::array<double, 8> trajectory() {
    const auto& gates = circuit_.gates();
    StateVector state = prefix_[faults_.front().after_gate + 1];
    std::size_t next_fault = 0;
    for (std::size_t g = faults_.front().after_gate; g < gates.size(); ++g) {
      if (g != faults_.front().after_gate) apply_gate(state, gates[g]);
      while (next_fault < faults_.size() && faults_[next_fault].after_gate == g) {
        const Gate& gate = gates[g];
        const unsigned which = faults_[next_fault].pauli;
        if (gate.is_two_qubit()) {
          apply_pauli(state, gate.control, which / 4);
          apply_pauli(state, gate.target, which % 4);
        } else {
          apply_pauli(state, gate.target, which);
        }
        ++next_fault;
      }
    }
    return top3_distribution(state);
  }

  const Circuit& circuit_;
  NoiseParams noise_;
  std::vector<StateVector> prefix_;
  std::array<double, 8> clean_{};
  std::vector<Fault> faults_;
};

}  // namespace

void NoiseParams::validate() const {
  for (double p : {depol1, depol2, readout}) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("noise probabilities must lie in [0, 1]");
  }
}

NoiseParams NoiseParams::parse(std::string_view text) {
  static const std::regex kItem(R"(\s*(depol1|depol2|readout)\s*=\s*([0-9eE.+-]+)\s*)");
  NoiseParams noise;
  std::string s(text);
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = std::min(s.find(',', start), s.size());
    const std::string item = s.substr(start, comma - start);
    start = comma + 1;
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::smatch m;
    if (!std::regex_match(item, m, kItem)) {
      throw InputError("cannot parse noise setting \"" + item + "\"");
    }
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(m[2].str(), &used);
      if (used != m[2].str().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bad noise value \"" + m[2].str() + "\"");
    }
    if (m[1] == "depol1") noise.depol1 = value;
    if (m[1] == "depol2") noise.depol2 = value;
    if (m[1] == "readout") noise.readout = value;
  }
  noise.validate();
  return noise;
}

std::vector<Gate> measurement_rotation(std::string_view obs) {
  check_observable(obs);
  std::vector<Gate> gates;
  for (int q = 1; q <= 3; ++q) {
    switch (obs[q - 1]) {
      case 'X':
        gates.push_back(Gate::h(q));
        break;
      case 'Y':
        gates.push_back(Gate::rz(q, -std::numbers::pi / 2.0));
        gates.push_back(Gate::h(q));
        break;
      default:
        break;
    }
  }
  return gates;
}

Estimate estimate_expectation(const Circuit& prep, std::string_view obs, std::int64_t shots,
                              std::uint64_t seed, const NoiseParams& noise) {
  check_observable(obs);
  if (shots < 1) throw InputError("shots must be at least 1");
  if (prep.num_qubits() < 3) throw InputError("preparation circuit needs at least 3 qubits");
  if (prep.num_qubits() > Circuit::kMaxSimulatedQubits) {
    throw CapacityError("statevector simulation is limited to 12 qubits");
  }
  noise.validate();

  Circuit measured = prep;
  for (const Gate& g : measurement_rotation(obs)) measured.append(g);

  unsigned support = 0;  // outcome bits that enter the parity
  for (unsigned q = 0; q < 3; ++q) {
    if (obs[q] != 'I') support |= 1U << (2 - q);
  }

  ShotSampler sampler(measured, noise);
  Xoshiro256 rng(seed);
  std::int64_t sum = 0;
  for (std::int64_t n = 0; n < shots; ++n) {
    const unsigned outcome = sampler.shot(rng);
    sum += (std::popcount(outcome & support) & 1) ? -1 : 1;
  }

  Estimate est;
  est.shots = shots;
  est.seed = seed;
  est.mean = static_cast<double>(sum) / static_cast<double>(shots);
  // Outcomes are ±1, so the sum of squared deviations is n(1 - mean²).
  if (shots > 1) {
    const double var = std::max(0.0, 1.0 - est.mean * est.mean) / static_cast<double>(shots - 1);
    est.std_error = std::sqrt(var);
  }
  return est;
}

WitnessEstimate estimate_witness_detailed(const GhzDiagonalState& p, const WitnessSpec& spec,
                                          WitnessMode mode, double theta, std::int64_t shots,
                                          std::uint64_t seed, const NoiseParams& noise) {
  spec.validate();
  if (mode == WitnessMode::kPaperNlAsPrinted) {
    throw InputError("estimate_witness supports fixed, envelope and paper-nl modes");
  }
  std::array<int, 5> indices = {spec.i, spec.j, spec.k, spec.l, spec.m};
  std::sort(indices.begin(), indices.end());
  if (shots < static_cast<std::int64_t>(indices.size())) {
    throw InputError("need at least one shot per observable");
  }

  const Circuit prep = purification_circuit(p);
  const std::int64_t base = shots / static_cast<std::int64_t>(indices.size());
  const std::int64_t extra = shots % static_cast<std::int64_t>(indices.size());

  WitnessEstimate out;
  std::array<double, 8> r{};   // by observable index, 1-based
  std::array<double, 8> se{};
  for (std::size_t n = 0; n < indices.size(); ++n) {
    const int idx = indices[n];
    const std::int64_t count = base + (n == 0 ? extra : 0);
    const Estimate e = estimate_expectation(prep, observable(idx), count, derive_seed(seed, n), noise);
    r[idx] = e.mean;
    se[idx] = e.std_error;
    out.observables.emplace_back(idx, e);
  }

  const double a = r[spec.j] + spec.s_jk * r[spec.k];
  const double b = r[spec.l] + spec.s_lm * r[spec.m];
  std::array<double, 8> grad{};
  double value = 0.0;
  switch (mode) {
    case WitnessMode::kFixed: {
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      value = 1.0 + spec.s * r[spec.i] + c * a + s * b;
      grad[spec.i] = spec.s;
      grad[spec.j] = c;
      grad[spec.k] = spec.s_jk * c;
      grad[spec.l] = s;
      grad[spec.m] = spec.s_lm * s;
      break;
    }
    case WitnessMode::kEnvelope: {
      if (a * a + b * b <= kDegenerateTol) {
        throw DegenerateWitnessError("estimated witness direction vanishes");
      }
      const double norm = std::hypot(a, b);
      value = 1.0 + spec.s * r[spec.i] - norm;
      grad[spec.i] = spec.s;
      grad[spec.j] = -a / norm;
      grad[spec.k] = -spec.s_jk * a / norm;
      grad[spec.l] = -b / norm;
      grad[spec.m] = -spec.s_lm * b / norm;
      break;
    }
    case WitnessMode::kPaperNlNumbers: {
      const double d = a * a + b * b;
      if (d <= kDegenerateTol) {
        throw DegenerateWitnessError("estimated witness direction vanishes");
      }
      const double f = 1.0 - spec.s * r[spec.i];
      value = 1.0 + spec.s * r[spec.i] - (a * a + b * b) * f / d;
      grad[spec.i] = 2.0 * spec.s;
      break;
    }
    case WitnessMode::kPaperNlAsPrinted:
      break;
  }

  double var = 0.0;
  for (int idx : indices) var += grad[idx] * grad[idx] * se[idx] * se[idx];
  out.witness = {value, std::sqrt(var), shots, seed};
  return out;
}

Estimate estimate_witness(const GhzDiagonalState& p, const WitnessSpec& spec, WitnessMode mode,
                          double theta, std::int64_t shots, std::uint64_t seed,
                          const NoiseParams& noise) {
  return estimate_witness_detailed(p, spec, mode, theta, shots, seed, noise).witness;
}

}  // namespace bewit
