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

#include <charconv>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "bewit/circuits.hpp"
#include "bewit/errors.hpp"

namespace bewit {

namespace {

std::string qasm_name(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
      return "h";
    case GateKind::kX:
      return "x";
    case GateKind::kY:
      return "y";
    case GateKind::kZ:
      return "z";
    case GateKind::kRY:
      return "ry";
    case GateKind::kRZ:
      return "rz";
    case GateKind::kCNOT:
      return "cx";
  }
  return "?";
}

double parse_double(const std::string& text, int line_no) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InputError("qasm line " + std::to_string(line_no) + ": bad angle \"" + text + "\"");
  }
  return value;
}

std::string strip(std::string line) {
  if (auto pos = line.find("//"); pos != std::string::npos) line.erase(pos);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

}  // namespace

std::string emit_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "// Logical qubit i is q[i-1]. Qubit 1 is the most significant bit of\n"
      << "// computational-basis indices, i.e. |q1 q2 ... qn>.\n"
      << "qreg q[" << circuit.num_qubits() << "];\n";
  out << std::setprecision(17);
  for (const Gate& g : circuit.gates()) {
    out << qasm_name(g.kind);
    if (g.kind == GateKind::kRY || g.kind == GateKind::kRZ) out << '(' << g.angle << ')';
    if (g.is_two_qubit()) {
      out << " q[" << g.control - 1 << "],q[" << g.target - 1 << "];\n";
    } else {
      out << " q[" << g.target - 1 << "];\n";
    }
  }
  return out.str();
}

Circuit parse_qasm(std::string_view text) {
  static const std::regex kQreg(R"(qreg\s+q\s*\[\s*(\d+)\s*\]\s*;)");
  static const std::regex kGate(
      R"(([a-z]+)\s*(?:\(\s*([^)]+?)\s*\))?\s+q\s*\[\s*(\d+)\s*\]\s*(?:,\s*q\s*\[\s*(\d+)\s*\])?\s*;)");

  std::istringstream in{std::string(text)};
  std::string raw;
  std::optional<Circuit> circuit;
  bool saw_header = false;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    if (line == "OPENQASM 2.0;") {
      saw_header = true;
      continue;
    }
    if (line == "include \"qelib1.inc\";") continue;
    std::smatch m;
    if (std::regex_match(line, m, kQreg)) {
      if (circuit) throw InputError("qasm: only one qreg is supported");
      circuit.emplace(std::stoi(m[1].str()));
      continue;
    }
    if (!std::regex_match(line, m, kGate)) {
      throw InputError("qasm line " + std::to_string(line_no) + ": unsupported statement");
    }
    if (!circuit) throw InputError("qasm: gate before qreg declaration");
    const std::string name = m[1].str();
    const bool has_angle = m[2].matched;
    const bool has_second = m[4].matched;
    const int q0 = std::stoi(m[3].str()) + 1;
    const bool rotation = name == "ry" || name == "rz";
    if (rotation != has_angle) {
      throw InputError("qasm line " + std::to_string(line_no) + ": bad parameter list");
    }
    if ((name == "cx") != has_second) {
      throw InputError("qasm line " + std::to_string(line_no) + ": bad operand count");
    }
    if (name == "h") {
      circuit->append(Gate::h(q0));
    } else if (name == "x") {
      circuit->append(Gate::x(q0));
    } else if (name == "y") {
      circuit->append(Gate::y(q0));
    } else if (name == "z") {
      circuit->append(Gate::z(q0));
    } else if (name == "ry") {
      circuit->append(Gate::ry(q0, parse_double(m[2].str(), line_no)));
    } else if (name == "rz") {
      circuit->append(Gate::rz(q0, parse_double(m[2].str(), line_no)));
    } else if (name == "cx") {
      circuit->append(Gate::cnot(q0, std::stoi(m[4].str()) + 1));
    } else {
      throw InputError("qasm line " + std::to_string(line_no) + ": unsupported gate " + name);
    }
  }
  if (!saw_header) throw InputError("qasm: missing OPENQASM 2.0 header");
  if (!circuit) throw InputError("qasm: missing qreg declaration");
  return *circuit;
}

}  // namespace bewit
