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

#include "bewit/witness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <regex>

#include "bewit/errors.hpp"

namespace bewit {

namespace {

constexpr double kDegenerateTol = 1e-12;

constexpr std::array<std::string_view, 7> kObservables = {"IZZ", "ZIZ", "ZZI", "XXX",
                                                          "XYY", "YXY", "YYX"};

int parse_sign(char c) {
  if (c == '+') return 1;
  if (c == '-') return -1;
  throw InputError(std::string("bad sign '") + c + "' in witness spec");
}

char sign_char(int s) { return s > 0 ? '+' : '-'; }

struct Coefficients {
  double a;  // r_j + s_jk r_k
  double b;  // r_l + s_lm r_m
  double base;  // 1 + s r_i
};

Coefficients coefficients(const RVector& r, const WitnessSpec& spec) {
  spec.validate();
  return {r.observable(spec.j) + spec.s_jk * r.observable(spec.k),
          r.observable(spec.l) + spec.s_lm * r.observable(spec.m),
          1.0 + spec.s * r.observable(spec.i)};
}

}  // namespace

void WitnessSpec::validate() const {
  if (i < 1 || i > 3) throw InputError("witness index i must be 1, 2 or 3");
  for (int sign : {s, s_jk, s_lm}) {
    if (sign != 1 && sign != -1) throw InputError("witness signs must be +1 or -1");
  }
  std::array<int, 4> rest = {j, k, l, m};
  std::sort(rest.begin(), rest.end());
  if (rest != std::array<int, 4>{4, 5, 6, 7}) {
    throw InputError("witness indices j,k,l,m must be a permutation of 4,5,6,7");
  }
}

WitnessSpec WitnessSpec::parse(std::string_view text) {
  static const std::regex kPattern(
      R"(\s*i\s*=\s*([123])\s*,\s*s\s*=\s*([+-])\s*,\s*jk\s*=\s*([4-7])([+-])([4-7])\s*,)"
      R"(\s*lm\s*=\s*([4-7])([+-])([4-7])\s*)");
  std::cmatch match;
  if (!std::regex_match(text.begin(), text.end(), match, kPattern)) {
    throw InputError("cannot parse witness spec \"" + std::string(text) +
                     "\" (expected e.g. i=1,s=-,jk=5-4,lm=7-6)");
  }
  WitnessSpec spec;
  spec.i = match[1].str()[0] - '0';
  spec.s = parse_sign(match[2].str()[0]);
  spec.j = match[3].str()[0] - '0';
  spec.s_jk = parse_sign(match[4].str()[0]);
  spec.k = match[5].str()[0] - '0';
  spec.l = match[6].str()[0] - '0';
  spec.s_lm = parse_sign(match[7].str()[0]);
  spec.m = match[8].str()[0] - '0';
  spec.validate();
  return spec;
}

std::string WitnessSpec::to_string() const {
  std::string out = "i=";
  out += static_cast<char>('0' + i);
  out += ",s=";
  out += sign_char(s);
  out += ",jk=";
  out += static_cast<char>('0' + j);
  out += sign_char(s_jk);
  out += static_cast<char>('0' + k);
  out += ",lm=";
  out += static_cast<char>('0' + l);
  out += sign_char(s_lm);
  out += static_cast<char>('0' + m);
  return out;
}

std::string_view to_string(WitnessMode mode) {
  switch (mode) {
    case WitnessMode::kFixed:
      return "fixed";
    case WitnessMode::kEnvelope:
      return "envelope";
    case WitnessMode::kPaperNlAsPrinted:
      return "paper-nl-as-printed";
    case WitnessMode::kPaperNlNumbers:
      return "paper-nl";
  }
  return "?";
}

WitnessMode parse_witness_mode(std::string_view text) {
  if (text == "fixed" || text == "linear") return WitnessMode::kFixed;
  if (text == "envelope") return WitnessMode::kEnvelope;
  if (text == "paper-nl" || text == "paper-numbers") return WitnessMode::kPaperNlNumbers;
  if (text == "paper-nl-as-printed" || text == "as-printed") return WitnessMode::kPaperNlAsPrinted;
  throw InputError("unknown witness mode \"" + std::string(text) + "\"");
}

std::string_view observable(int idx) {
  if (idx < 1 || idx > 7) throw InputError("observable index must be in 1..7");
  return kObservables[idx - 1];
}

ComplexMatrix witness_matrix(const WitnessSpec& spec, double theta) {
  spec.validate();
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  auto op = [](int idx) { return pauli_string_matrix(observable(idx)); };
  ComplexMatrix w = ComplexMatrix::identity(8);
  w += op(spec.i) * Complex{static_cast<double>(spec.s)};
  w += (op(spec.j) + op(spec.k) * Complex{static_cast<double>(spec.s_jk)}) * Complex{c};
  w += (op(spec.l) + op(spec.m) * Complex{static_cast<double>(spec.s_lm)}) * Complex{sn};
  return w;
}

WitnessValue linear_value(const RVector& r, const WitnessSpec& spec, double theta) {
  const Coefficients k = coefficients(r, spec);
  return {k.base + std::cos(theta) * k.a + std::sin(theta) * k.b, WitnessMode::kFixed, theta};
}

WitnessValue envelope_value(const RVector& r, const WitnessSpec& spec) {
  const Coefficients k = coefficients(r, spec);
  return {k.base - std::hypot(k.a, k.b), WitnessMode::kEnvelope, std::atan2(-k.b, -k.a)};
}

WitnessValue paper_nonlinear_value(const RVector& r, const WitnessSpec& spec,
                                   NonlinearVariant variant) {
  const Coefficients k = coefficients(r, spec);
  const double d = k.a * k.a + k.b * k.b;
  if (d <= kDegenerateTol) {
    throw DegenerateWitnessError("witness direction vanishes (A^2 + B^2 <= 1e-12)");
  }
  const double ri = spec.s * r.observable(spec.i);
  const double f = variant == NonlinearVariant::kAsPrinted ? 1.0 + ri : 1.0 - ri;
  const double cos_t = -k.a * f / d;
  const double sin_t = -k.b * f / d;
  const WitnessMode mode = variant == NonlinearVariant::kAsPrinted
                               ? WitnessMode::kPaperNlAsPrinted
                               : WitnessMode::kPaperNlNumbers;
  return {k.base + cos_t * k.a + sin_t * k.b, mode, std::nullopt};
}

WitnessValue evaluate_witness(const RVector& r, const WitnessSpec& spec, WitnessMode mode,
                              double theta) {
  switch (mode) {
    case WitnessMode::kFixed:
      return linear_value(r, spec, theta);
    case WitnessMode::kEnvelope:
      return envelope_value(r, spec);
    case WitnessMode::kPaperNlAsPrinted:
      return paper_nonlinear_value(r, spec, NonlinearVariant::kAsPrinted);
    case WitnessMode::kPaperNlNumbers:
      return paper_nonlinear_value(r, spec, NonlinearVariant::kPaperNumbers);
  }
  throw InputError("unknown witness mode");
}

std::vector<WitnessSpec> enumerate_specs() {
  // Partitions of {4,5,6,7} into {4,x} and the complement.
  constexpr std::array<std::array<int, 4>, 3> kPartitions = {
      {{4, 5, 6, 7}, {4, 6, 5, 7}, {4, 7, 5, 6}}};
  std::vector<WitnessSpec> specs;
  for (int i = 1; i <= 3; ++i) {
    for (int s : {1, -1}) {
      for (const auto& part : kPartitions) {
        for (int s_jk : {1, -1}) {
          for (int s_lm : {1, -1}) {
            specs.push_back({i, s, part[0], part[1], s_jk, part[2], part[3], s_lm});
          }
        }
      }
    }
  }
  std::sort(specs.begin(), specs.end(), [](const WitnessSpec& a, const WitnessSpec& b) {
    return a.to_string() < b.to_string();
  });
  return specs;
}

SearchResult optimal_search(const RVector& r) {
  const std::vector<WitnessSpec> specs = enumerate_specs();
  SearchResult best{specs.front(), WitnessMode::kEnvelope, envelope_value(r, specs.front())};
  // specs are sorted by encoding, so a strict comparison keeps the smallest on ties.
  for (std::size_t n = 1; n < specs.size(); ++n) {
    const WitnessValue v = envelope_value(r, specs[n]);
    if (v.value < best.value.value) best = {specs[n], WitnessMode::kEnvelope, v};
  }
  return best;
}

}  // namespace bewit
