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
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bewit/estimator.hpp"
#include "bewit/ghz.hpp"

namespace bewit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitReproductionFailure = 2;

inline constexpr double kGoldenTol = 5e-4;

/// Radians as a decimal ("0.785") or a multiple of π ("pi/4", "6pi/5",
/// "-2*pi/3"). Throws InputError otherwise.
double parse_angle(std::string_view text);

enum class CheckStatus { kPass, kFail, kKnownDiscrepancy };
std::string_view to_string(CheckStatus status);

/// One line of the reproduction report.
struct ReportRecord {
  std::string label;     // e.g. "Kay a=2"
  std::string quantity;  // what is compared, e.g. "linear θ=pi/4"
  RVector r;
  PptReport ppt;
  std::string spec;
  WitnessMode mode = WitnessMode::kFixed;
  double theta = 0.0;  // only meaningful for kFixed
  double theoretical = 0.0;
  double published = 0.0;
  CheckStatus status = CheckStatus::kPass;
  std::optional<Estimate> estimated;
};

/// Every in-text witness value plus the theoretical columns of the results
/// table, each recomputed through the library and compared at kGoldenTol.
/// With `shots` set, each record also gets a noiseless-or-`noise` estimate.
std::vector<ReportRecord> reproduction_records(std::optional<std::int64_t> shots = std::nullopt,
                                               std::uint64_t seed = 0,
                                               const NoiseParams& noise = {});

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 success, 1 input error, 2 reproduction failure.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bewit::cli
