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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bewit/ghz.hpp"
#include "bewit/qmat.hpp"

namespace bewit {

/// One member of the witness family
///
///   W(θ) = III + s·O_i + cosθ (O_j + s_jk·O_k) + sinθ (O_l + s_lm·O_m)
///
/// with i in {1,2,3} and (j,k,l,m) a permutation of (4,5,6,7). Text form is
/// "i=1,s=-,jk=5-4,lm=7-6".
struct WitnessSpec {
  int i = 1;
  int s = 1;
  int j = 4;
  int k = 5;
  int s_jk = 1;
  int l = 6;
  int m = 7;
  int s_lm = 1;

  // Throws InputError on bad index sets or signs.
  void validate() const;

  static WitnessSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const WitnessSpec&, const WitnessSpec&) = default;
};

enum class WitnessMode {
  kFixed,             // linear witness at a given θ
  kEnvelope,          // exact minimum over θ
  kPaperNlAsPrinted,  // θ' with f = 1 + s·r_i, identically zero
  kPaperNlNumbers,    // θ' with f = 1 - s·r_i, the published nonlinear numbers
};

std::string_view to_string(WitnessMode mode);
// Accepts fixed|linear, envelope, paper-nl|paper-numbers, paper-nl-as-printed|as-printed.
WitnessMode parse_witness_mode(std::string_view text);

struct WitnessValue {
  double value = 0.0;
  WitnessMode mode = WitnessMode::kFixed;
  // θ for kFixed, the minimizing θ for kEnvelope; empty for the θ' modes.
  std::optional<double> theta;
};

// Pauli string of observable O_idx, idx in 1..7.
std::string_view observable(int idx);

ComplexMatrix witness_matrix(const WitnessSpec& spec, double theta);

WitnessValue linear_value(const RVector& r, const WitnessSpec& spec, double theta);

/// min over θ of linear_value: 1 + s·r_i - sqrt(A² + B²) where
/// A = r_j + s_jk·r_k and B = r_l + s_lm·r_m.
WitnessValue envelope_value(const RVector& r, const WitnessSpec& spec);

enum class NonlinearVariant { kAsPrinted, kPaperNumbers };

/// Evaluates the linear witness at (cosθ', sinθ') = (-A f / D, -B f / D),
/// D = A² + B². With f = 1 + s·r_i (kAsPrinted) the result is identically
/// zero; with f = 1 - s·r_i (kPaperNumbers) it equals 2·s·r_i and matches
/// the reported nonlinear values. The latter is a reproduction aid only: it
/// ignores A and B and is negative on some product states, so it is not a
/// witness. Throws DegenerateWitnessError when D <= 1e-12.
WitnessValue paper_nonlinear_value(const RVector& r, const WitnessSpec& spec,
                                   NonlinearVariant variant = NonlinearVariant::kPaperNumbers);

// Dispatch on mode; `theta` is only read for kFixed.
WitnessValue evaluate_witness(const RVector& r, const WitnessSpec& spec, WitnessMode mode,
                              double theta = 0.0);

struct SearchResult {
  WitnessSpec spec;
  WitnessMode mode = WitnessMode::kEnvelope;
  WitnessValue value;
};

/// Every value-distinct member of the family: i (3) x s (2) x partition of
/// {4,5,6,7} into two pairs (3) x pair signs (4). Swapping the two pairs, or
/// the order inside a pair, leaves the envelope unchanged, so those variants
/// are not repeated. Ordered by text encoding.
std::vector<WitnessSpec> enumerate_specs();

/// Most negative envelope value over enumerate_specs(); ties go to the
/// lexicographically smallest encoding.
SearchResult optimal_search(const RVector& r);

}  // namespace bewit
