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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <map>
#include <string>

#include "bewit/circuits.hpp"
#include "bewit/errors.hpp"
#include "bewit/estimator.hpp"
#include "bewit/ghz.hpp"
#include "bewit/witness.hpp"

namespace py = pybind11;

namespace bewit {
namespace {

using ProbArray = std::array<double, 8>;

py::array_t<std::complex<double>> to_numpy(const ComplexMatrix& m) {
  py::array_t<std::complex<double>> out({m.rows(), m.cols()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m(r, c);
  }
  return out;
}

ComplexMatrix from_numpy(const py::array_t<std::complex<double>, py::array::forcecast>& a) {
  if (a.ndim() != 2) throw InputError("expected a 2-d array");
  auto view = a.unchecked<2>();
  ComplexMatrix m(a.shape(0), a.shape(1));
  for (py::ssize_t r = 0; r < a.shape(0); ++r) {
    for (py::ssize_t c = 0; c < a.shape(1); ++c) m(r, c) = view(r, c);
  }
  return m;
}

std::map<std::string, double> r_dict(const RVector& r) {
  std::map<std::string, double> out;
  for (std::string_view key : RVector::kKeys) out[std::string(key)] = r[key];
  return out;
}

RVector r_from_dict(const std::map<std::string, double>& d) {
  std::array<double, 7> values{};
  for (std::size_t n = 0; n < RVector::kKeys.size(); ++n) {
    const auto it = d.find(std::string(RVector::kKeys[n]));
    if (it == d.end()) throw InputError("missing correlation " + std::string(RVector::kKeys[n]));
    values[n] = it->second;
  }
  return RVector(values);
}

py::dict value_dict(const WitnessValue& v) {
  py::dict d;
  d["value"] = v.value;
  d["mode"] = std::string(to_string(v.mode));
  d["theta"] = v.theta ? py::cast(*v.theta) : py::none();
  return d;
}

py::dict estimate_dict(const Estimate& e) {
  py::dict d;
  d["mean"] = e.mean;
  d["stderr"] = e.std_error;
  d["shots"] = e.shots;
  d["seed"] = e.seed;
  return d;
}

NoiseParams noise_from(double depol1, double depol2, double readout) {
  NoiseParams n{depol1, depol2, readout};
  n.validate();
  return n;
}

}  // namespace
}  // namespace bewit

PYBIND11_MODULE(_bewit, m) {
  using namespace bewit;
  m.doc() = "GHZ-diagonal states, PPT tests, entanglement witnesses and purification circuits";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
  py::register_exception<DegenerateWitnessError>(m, "DegenerateWitnessError", PyExc_ArithmeticError);
  py::register_exception<SamplingExhaustedError>(m, "SamplingExhaustedError", PyExc_RuntimeError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  m.def("kay", [](double a) { return to_numpy(kay(a)); }, py::arg("a"));
  m.def("kye", [](double b, double c) { return to_numpy(kye(b, c)); }, py::arg("b"), py::arg("c"));
  m.def(
      "density_matrix", [](const ProbArray& p) { return to_numpy(density_matrix(GhzDiagonalState(p))); },
      py::arg("p"));
  m.def(
      "probs_from_density", [](const py::array_t<std::complex<double>>& rho) {
        return probs_from_density(from_numpy(rho)).probs();
      },
      py::arg("rho"));
  m.def("category_state", [](int cat) { return category_state(cat).probs(); }, py::arg("cat"));
  m.def(
      "sample_category", [](int cat, std::uint64_t seed) { return sample_category(cat, seed).probs(); },
      py::arg("cat"), py::arg("seed"));
  m.def(
      "r_vector", [](const py::array_t<std::complex<double>>& rho) { return r_dict(r_vector(from_numpy(rho))); },
      py::arg("rho"));
  m.def(
      "ppt_report",
      [](const py::array_t<std::complex<double>>& rho) {
        const PptReport rep = ppt_report(from_numpy(rho));
        py::dict cuts;
        for (std::size_t c = 0; c < 3; ++c) cuts[py::str(std::string(PptReport::kCutNames[c]))] = rep.min_eigenvalue[c];
        py::dict d;
        d["cuts"] = cuts;
        d["is_ppt"] = rep.is_ppt;
        return d;
      },
      py::arg("rho"));

  m.def("observable", [](int idx) { return std::string(observable(idx)); }, py::arg("idx"));
  m.def(
      "normalize_spec", [](const std::string& spec) { return WitnessSpec::parse(spec).to_string(); },
      py::arg("spec"));
  m.def(
      "witness_matrix",
      [](const std::string& spec, double theta) { return to_numpy(witness_matrix(WitnessSpec::parse(spec), theta)); },
      py::arg("spec"), py::arg("theta"));
  m.def(
      "evaluate_witness",
      [](const std::map<std::string, double>& r, const std::string& spec, const std::string& mode,
         double theta) {
        return value_dict(evaluate_witness(r_from_dict(r), WitnessSpec::parse(spec), parse_witness_mode(mode), theta));
      },
      py::arg("r"), py::arg("spec"), py::arg("mode") = "fixed", py::arg("theta") = 0.0);
  m.def(
      "optimal_search",
      [](const std::map<std::string, double>& r) {
        const SearchResult best = optimal_search(r_from_dict(r));
        py::dict d = value_dict(best.value);
        d["spec"] = best.spec.to_string();
        return d;
      },
      py::arg("r"));

  m.def(
      "purification_qasm", [](const ProbArray& p) { return emit_qasm(purification_circuit(GhzDiagonalState(p))); },
      py::arg("p"));
  m.def(
      "verify_preparation", [](const ProbArray& p) { return verify_preparation(GhzDiagonalState(p)); },
      py::arg("p"));
  m.def(
      "estimate_witness",
      [](const ProbArray& p, const std::string& spec, const std::string& mode, double theta,
         std::int64_t shots, std::uint64_t seed, double depol1, double depol2, double readout) {
        const GhzDiagonalState state(p);
        const WitnessSpec parsed = WitnessSpec::parse(spec);
        const WitnessMode parsed_mode = parse_witness_mode(mode);
        const NoiseParams noise = noise_from(depol1, depol2, readout);
        Estimate e;
        {
          py::gil_scoped_release release;
          e = estimate_witness(state, parsed, parsed_mode, theta, shots, seed, noise);
        }
        return estimate_dict(e);
      },
      py::arg("p"), py::arg("spec"), py::arg("mode") = "fixed", py::arg("theta") = 0.0,
      py::arg("shots") = kDefaultShots, py::arg("seed") = 0, py::arg("depol1") = 0.0,
      py::arg("depol2") = 0.0, py::arg("readout") = 0.0);
}
