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

// JSON forms of the public value types:
//   GhzDiagonalState  {"p": [8 floats]}
//   RVector           {"ZZI": r, "ZIZ": r, ..., "YYX": r}
//   PptReport         {"cuts": {"1|23": min_eig, "2|13": ..., "3|12": ...}, "is_ppt": bool}
//   Estimate          {"mean": m, "stderr": e, "shots": n, "seed": s}
//   Circuit           {"n": int, "gates": [{"kind": "RY", "q": [4], "angle": θ}, ...]}
//                     CNOT lists [control, target].

#include "json.hpp"

#include "bewit/circuits.hpp"
#include "bewit/estimator.hpp"
#include "bewit/ghz.hpp"
#include "bewit/witness.hpp"

namespace bewit {

nlohmann::json to_json(const GhzDiagonalState& state);
nlohmann::json to_json(const RVector& r);
nlohmann::json to_json(const PptReport& report);
nlohmann::json to_json(const Estimate& estimate);
nlohmann::json to_json(const Circuit& circuit);
nlohmann::json to_json(const WitnessValue& value);
// [[re, im], ...] rows.
nlohmann::json to_json(const ComplexMatrix& m);

GhzDiagonalState ghz_state_from_json(const nlohmann::json& j);
RVector r_vector_from_json(const nlohmann::json& j);
PptReport ppt_report_from_json(const nlohmann::json& j);
Estimate estimate_from_json(const nlohmann::json& j);
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace bewit
