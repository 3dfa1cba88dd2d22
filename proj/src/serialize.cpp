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

#include "bewit/serialize.hpp"

#include <string>

#include "bewit/errors.hpp"

namespace bewit {

using nlohmann::json;

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

json to_json(const GhzDiagonalState& state) { return {{"p", state.probs()}}; }

json to_json(const RVector& r) {
  json j = json::object();
  for (std::size_t i = 0; i < RVector::kKeys.size(); ++i) {
    j[std::string(RVector::kKeys[i])] = r.values()[i];
  }
  return j;
}

json to_json(const PptReport& report) {
  json cuts = json::object();
  for (std::size_t c = 0; c < 3; ++c) {
    cuts[std::string(PptReport::kCutNames[c])] = report.min_eigenvalue[c];
  }
  return {{"cuts", cuts}, {"is_ppt", report.is_ppt}};
}

json to_json(const Estimate& estimate) {
  return {{"mean", estimate.mean},
          {"stderr", estimate.std_error},
          {"shots", estimate.shots},
          {"seed", estimate.seed}};
}

json to_json(const Circuit& circuit) {
  json gates = json::array();
  for (const Gate& g : circuit.gates()) {
    json item = {{"kind", std::string(to_string(g.kind))}};
    item["q"] = g.is_two_qubit() ? json::array({g.control, g.target}) : json::array({g.target});
    if (g.kind == GateKind::kRY || g.kind == GateKind::kRZ) item["angle"] = g.angle;
    gates.push_back(std::move(item));
  }
  return {{"n", circuit.num_qubits()}, {"gates", gates}};
}

json to_json(const WitnessValue& value) {
  json j = {{"value", value.value}, {"mode", std::string(to_string(value.mode))}};
  j["theta"] = value.theta ? json(*value.theta) : json(nullptr);
  return j;
}

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

GhzDiagonalState ghz_state_from_json(const json& j) {
  return guarded("GHZ state", [&] {
    const auto p = j.at("p").get<std::vector<double>>();
    if (p.size() != 8) throw InputError("GHZ state JSON needs 8 probabilities");
    std::array<double, 8> a{};
    std::copy(p.begin(), p.end(), a.begin());
    return GhzDiagonalState(a);
  });
}

RVector r_vector_from_json(const json& j) {
  return guarded("r-vector", [&] {
    std::array<double, 7> r{};
    for (std::size_t i = 0; i < RVector::kKeys.size(); ++i) {
      r[i] = j.at(std::string(RVector::kKeys[i])).get<double>();
    }
    return RVector(r);
  });
}

PptReport ppt_report_from_json(const json& j) {
  return guarded("PPT report", [&] {
    PptReport report;
    for (std::size_t c = 0; c < 3; ++c) {
      report.min_eigenvalue[c] = j.at("cuts").at(std::string(PptReport::kCutNames[c])).get<double>();
    }
    report.is_ppt = j.at("is_ppt").get<bool>();
    return report;
  });
}

Estimate estimate_from_json(const json& j) {
  return guarded("estimate", [&] {
    Estimate e;
    e.mean = j.at("mean").get<double>();
    e.std_error = j.at("stderr").get<double>();
    e.shots = j.at("shots").get<std::int64_t>();
    e.seed = j.at("seed").get<std::uint64_t>();
    return e;
  });
}

Circuit circuit_from_json(const json& j) {
  return guarded("circuit", [&] {
    Circuit c(j.at("n").get<int>());
    for (const json& item : j.at("gates")) {
      const GateKind kind = parse_gate_kind(item.at("kind").get<std::string>());
      const auto q = item.at("q").get<std::vector<int>>();
      const std::size_t arity = kind == GateKind::kCNOT ? 2 : 1;
      if (q.size() != arity) throw InputError("gate has the wrong number of qubits");
      Gate g{kind, q.back(), arity == 2 ? q.front() : 0, 0.0};
      if (kind == GateKind::kRY || kind == GateKind::kRZ) g.angle = item.at("angle").get<double>();
      c.append(g);
    }
    return c;
  });
}

}  // namespace bewit
