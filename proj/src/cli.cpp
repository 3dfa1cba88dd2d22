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

#include "bewit/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <regex>
#include <sstream>

#include "bewit/circuits.hpp"
#include "bewit/errors.hpp"
#include "bewit/rng.hpp"
#include "bewit/serialize.hpp"
#include "bewit/witness.hpp"

namespace bewit::cli {

namespace {

using nlohmann::json;

constexpr double kPreparationTol = 1e-10;

std::string fmt6(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

double parse_number(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("not a number: \"" + std::string(text) + "\"");
  }
  return value;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("BEWIT_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t seed = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("BEWIT_SEED must be an unsigned 64-bit integer");
  }
  return seed;
}

struct StateOptions {
  std::string kind = "kay";
  double a = 2.0;
  double b = 2.0;
  double c = 2.0;
  int cat = 1;
  std::string probs;
  std::uint64_t sample_seed = 0;
};

struct ResolvedState {
  std::string label;
  ComplexMatrix rho;
  std::optional<GhzDiagonalState> probs;

  const GhzDiagonalState& require_probs() const {
    if (!probs) {
      throw StructureError(label + " is not GHZ-diagonal; circuits need a GHZ-diagonal state");
    }
    return *probs;
  }
};

void add_state_options(CLI::App* cmd, StateOptions& opts) {
  cmd->add_option("--kind", opts.kind, "kay | kye | cat | sample | probs")
      ->check(CLI::IsMember({"kay", "kye", "cat", "sample", "probs"}))
      ->capture_default_str();
  cmd->add_option("--a", opts.a, "Kay parameter a")->capture_default_str();
  cmd->add_option("--b", opts.b, "Kye parameter b")->capture_default_str();
  cmd->add_option("--c", opts.c, "Kye parameter c")->capture_default_str();
  cmd->add_option("--cat", opts.cat, "family 1, 2 or 3 (cat, sample)")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  cmd->add_option("--probs", opts.probs, "eight comma-separated probabilities (pair convention)");
  cmd->add_option("--sample-seed", opts.sample_seed, "seed for --kind sample")
      ->capture_default_str();
}

GhzDiagonalState parse_probs(const std::string& text) {
  std::array<double, 8> p{};
  std::size_t count = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (count == 8) throw InputError("--probs needs exactly 8 values");
    p[count++] = parse_number(item);
  }
  if (count != 8) throw InputError("--probs needs exactly 8 values");
  return GhzDiagonalState(p);
}

ResolvedState resolve(const StateOptions& o) {
  ResolvedState s;
  if (o.kind == "kay") {
    s.label = "Kay a=" + fmt6(o.a);
    s.rho = kay(o.a);
  } else if (o.kind == "kye") {
    s.label = "Kye b=" + fmt6(o.b) + " c=" + fmt6(o.c);
    s.rho = kye(o.b, o.c);
  } else if (o.kind == "cat") {
    s.label = "category " + std::to_string(o.cat);
    s.probs = category_state(o.cat);
  } else if (o.kind == "sample") {
    s.label = "category " + std::to_string(o.cat) + " sample seed=" + std::to_string(o.sample_seed);
    s.probs = sample_category(o.cat, o.sample_seed);
  } else {
    if (o.probs.empty()) throw InputError("--kind probs needs --probs");
    s.label = "custom";
    s.probs = parse_probs(o.probs);
  }
  if (s.probs) {
    s.rho = density_matrix(*s.probs);
  } else if (is_ghz_diagonal(s.rho)) {
    s.probs = probs_from_density(s.rho);
  }
  return s;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot open " + path + " for writing");
  file << text;
}

void print_matrix(std::ostream& out, const ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Complex z = m(r, c);
      std::string cell = fmt6(z.real());
      if (std::abs(z.imag()) > 1e-15) cell += (z.imag() < 0 ? "-" : "+") + fmt6(std::abs(z.imag())) + "i";
      out << std::setw(12) << cell;
    }
    out << '\n';
  }
}

void print_r(std::ostream& out, const RVector& r) {
  for (std::size_t i = 0; i < RVector::kKeys.size(); ++i) {
    out << "  r[" << RVector::kKeys[i] << "] = " << fmt6(r.values()[i]) << '\n';
  }
}

void print_ppt(std::ostream& out, const PptReport& ppt) {
  for (std::size_t c = 0; c < 3; ++c) {
    out << "  min eig PT(" << PptReport::kCutNames[c] << ") = " << fmt6(ppt.min_eigenvalue[c])
        << '\n';
  }
  out << "  PPT: " << (ppt.is_ppt ? "yes" : "no") << '\n';
}

// ---- subcommands -----------------------------------------------------------

int cmd_state(const StateOptions& so, bool table, std::ostream& out) {
  const ResolvedState s = resolve(so);
  const RVector r = r_vector(s.rho);
  const PptReport ppt = ppt_report(s.rho);
  if (!table) {
    json j = {{"label", s.label}, {"rho", to_json(s.rho)}, {"r", to_json(r)}};
    j["ppt"] = to_json(ppt);
    j["is_ppt"] = ppt.is_ppt;
    j["p"] = s.probs ? to_json(*s.probs)["p"] : json(nullptr);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << s.label << "\nrho =\n";
  print_matrix(out, s.rho);
  if (s.probs) {
    out << "p =";
    for (double p : s.probs->probs()) out << ' ' << fmt6(p);
    out << '\n';
  }
  out << "correlations:\n";
  print_r(out, r);
  out << "partial transposes:\n";
  print_ppt(out, ppt);
  return kExitOk;
}

struct WitnessOptions {
  std::string spec;
  std::string mode = "fixed";
  std::string theta = "pi/4";
  int sweep = 0;
  std::string out_path;
};

int cmd_witness(const StateOptions& so, const WitnessOptions& wo, bool as_json,
                std::ostream& out) {
  const ResolvedState s = resolve(so);
  const WitnessSpec spec = WitnessSpec::parse(wo.spec);
  const WitnessMode mode = parse_witness_mode(wo.mode);
  const RVector r = r_vector(s.rho);

  if (wo.sweep > 0) {
    std::ostringstream csv;
    csv << "theta,value\n" << std::setprecision(17);
    for (int n = 0; n < wo.sweep; ++n) {
      const double theta = 2.0 * std::numbers::pi * n / wo.sweep;
      csv << theta << ',' << linear_value(r, spec, theta).value << '\n';
    }
    write_text(wo.out_path, csv.str(), out);
    return kExitOk;
  }

  const double theta = parse_angle(wo.theta);
  const WitnessValue v = evaluate_witness(r, spec, mode, theta);
  if (as_json) {
    json j = to_json(v);
    j["state"] = s.label;
    j["spec"] = spec.to_string();
    out << j.dump(2) << '\n';
  } else {
    out << s.label << "  " << spec.to_string() << "  mode=" << to_string(v.mode);
    if (v.theta) out << "  theta=" << fmt6(*v.theta);
    out << "\nvalue = " << fmt6(v.value) << '\n';
  }
  return kExitOk;
}

int cmd_search(const StateOptions& so, bool as_json, std::ostream& out) {
  const ResolvedState s = resolve(so);
  const SearchResult best = optimal_search(r_vector(s.rho));
  if (as_json) {
    json j = {{"state", s.label}, {"spec", best.spec.to_string()}};
    j["mode"] = std::string(to_string(best.mode));
    j["value"] = best.value.value;
    j["theta"] = best.value.theta ? json(*best.value.theta) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << s.label << "\nbest spec " << best.spec.to_string() << "  envelope value "
        << fmt6(best.value.value);
    if (best.value.theta) out << "  at theta " << fmt6(*best.value.theta);
    out << '\n';
  }
  return kExitOk;
}

int cmd_synth(const StateOptions& so, const std::string& emit, const std::string& path,
              std::ostream& out) {
  const ResolvedState s = resolve(so);
  const Circuit c = purification_circuit(s.require_probs());
  if (emit == "qasm") {
    write_text(path, emit_qasm(c), out);
  } else {
    write_text(path, to_json(c).dump(2) + "\n", out);
  }
  return kExitOk;
}

struct SimulateOptions {
  std::string spec;
  std::string mode = "fixed";
  std::string theta = "pi/4";
  std::int64_t shots = kDefaultShots;
  std::optional<std::uint64_t> seed;
  std::string noise;
};

int cmd_simulate(const StateOptions& so, const SimulateOptions& o, bool as_json,
                 std::ostream& out) {
  const ResolvedState s = resolve(so);
  const WitnessSpec spec = WitnessSpec::parse(o.spec);
  const WitnessMode mode = parse_witness_mode(o.mode);
  const double theta = parse_angle(o.theta);
  const NoiseParams noise = o.noise.empty() ? NoiseParams{} : NoiseParams::parse(o.noise);
  const std::uint64_t seed = o.seed ? *o.seed : default_seed();
  const WitnessEstimate est =
      estimate_witness_detailed(s.require_probs(), spec, mode, theta, o.shots, seed, noise);
  const double exact = evaluate_witness(r_vector(s.rho), spec, mode, theta).value;
  if (as_json) {
    json j = to_json(est.witness);
    j["state"] = s.label;
    j["spec"] = spec.to_string();
    j["mode"] = std::string(to_string(mode));
    j["theoretical"] = exact;
    json obs = json::object();
    for (const auto& [idx, e] : est.observables) obs[std::string(observable(idx))] = to_json(e);
    j["observables"] = obs;
    out << j.dump(2) << '\n';
  } else {
    out << s.label << "  " << spec.to_string() << "  mode=" << to_string(mode) << '\n';
    for (const auto& [idx, e] : est.observables) {
      out << "  <" << observable(idx) << "> = " << fmt6(e.mean) << " +- " << fmt6(e.std_error)
          << "  (" << e.shots << " shots)\n";
    }
    out << "estimate    = " << fmt6(est.witness.mean) << " +- " << fmt6(est.witness.std_error)
        << '\n'
        << "theoretical = " << fmt6(exact) << '\n';
  }
  return kExitOk;
}

struct PreparationCheck {
  std::string label;
  bool ppt = false;
  double distance = 0.0;
  bool pass() const { return ppt && distance <= kPreparationTol; }
};

std::vector<PreparationCheck> preparation_checks() {
  const std::vector<std::pair<std::string, GhzDiagonalState>> states = {
      {"state 1 (Kay a=2)", probs_from_density(kay(2.0))},
      {"state 2 (Kye b=c=2)", probs_from_density(kye(2.0, 2.0))},
      {"state 3 (category 1)", category_state(1)},
      {"state 4 (category 2)", category_state(2)},
      {"state 5 (category 3)", category_state(3)},
  };
  std::vector<PreparationCheck> checks;
  for (const auto& [label, p] : states) {
    checks.push_back({label, ppt_report(density_matrix(p)).is_ppt, verify_preparation(p)});
  }
  return checks;
}

int cmd_reproduce(std::optional<std::int64_t> shots, std::uint64_t seed,
                  const NoiseParams& noise, bool as_json, std::ostream& out) {
  const std::vector<ReportRecord> records = reproduction_records(shots, seed, noise);
  const std::vector<PreparationCheck> prep = preparation_checks();
  bool ok = true;
  for (const auto& rec : records) ok = ok && rec.status != CheckStatus::kFail;
  for (const auto& c : prep) ok = ok && c.pass();

  if (as_json) {
    json items = json::array();
    for (const auto& rec : records) {
      json j = {{"state", rec.label}, {"quantity", rec.quantity}, {"spec", rec.spec}};
      j["mode"] = std::string(to_string(rec.mode));
      j["theta"] = rec.mode == WitnessMode::kFixed ? json(rec.theta) : json(nullptr);
      j["theoretical"] = rec.theoretical;
      j["published"] = rec.published;
      j["status"] = std::string(to_string(rec.status));
      j["r"] = to_json(rec.r);
      j["ppt"] = to_json(rec.ppt);
      j["estimated"] = rec.estimated ? to_json(*rec.estimated) : json(nullptr);
      items.push_back(std::move(j));
    }
    json checks = json::array();
    for (const auto& c : prep) {
      checks.push_back({{"state", c.label},
                        {"is_ppt", c.ppt},
                        {"trace_distance", c.distance},
                        {"status", c.pass() ? "PASS" : "FAIL"}});
    }
    out << json{{"records", items}, {"preparation", checks}, {"all_pass", ok}}.dump(2) << '\n';
    return ok ? kExitOk : kExitReproductionFailure;
  }

  out << std::left << std::setw(22) << "state" << std::setw(26) << "quantity" << std::setw(24)
      << "spec" << std::setw(12) << "theory" << std::setw(10) << "reference";
  if (shots) out << std::setw(24) << "estimate";
  out << "status\n";
  std::size_t pass = 0, known = 0, fail = 0;
  for (const auto& rec : records) {
    out << std::setw(22) << rec.label << std::setw(26) << rec.quantity << std::setw(24)
        << rec.spec << std::setw(12) << fmt6(rec.theoretical) << std::setw(10)
        << fmt6(rec.published);
    if (rec.estimated) {
      out << std::setw(24) << (fmt6(rec.estimated->mean) + " +- " + fmt6(rec.estimated->std_error));
    }
    out << to_string(rec.status) << '\n';
    pass += rec.status == CheckStatus::kPass;
    known += rec.status == CheckStatus::kKnownDiscrepancy;
    fail += rec.status == CheckStatus::kFail;
  }
  out << "\npreparation circuits (PPT, trace distance <= 1e-10):\n";
  for (const auto& c : prep) {
    out << "  " << std::setw(22) << c.label << " PPT=" << (c.ppt ? "yes" : "no ")
        << "  distance=" << std::setw(12) << fmt6(c.distance) << (c.pass() ? "PASS" : "FAIL")
        << '\n';
    c.pass() ? ++pass : ++fail;
  }
  out << std::right << '\n'
      << pass << " passed, " << fail << " failed, " << known
      << " known discrepancies in the published table (not failures)\n";
  return ok ? kExitOk : kExitReproductionFailure;
}

}  // namespace

double parse_angle(std::string_view text) {
  static const std::regex kPiForm(R"(\s*([+-]?)\s*(\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d*\.?\d+))?\s*)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, kPiForm)) {
    const double coef = m[2].length() > 0 ? parse_number(m[2].str()) : 1.0;
    const double den = m[3].matched ? parse_number(m[3].str()) : 1.0;
    if (den == 0.0) throw InputError("angle denominator is zero");
    const double sign = m[1] == "-" ? -1.0 : 1.0;
    return sign * coef * std::numbers::pi / den;
  }
  std::string trimmed = s;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
  if (!trimmed.empty() && trimmed.front() == '+') trimmed.erase(0, 1);
  try {
    return parse_number(trimmed);
  } catch (const InputError&) {
    throw InputError("cannot parse angle \"" + s + "\" (use radians or forms like 6pi/5)");
  }
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kKnownDiscrepancy:
      return "KNOWN";
  }
  return "?";
}

std::vector<ReportRecord> reproduction_records(std::optional<std::int64_t> shots,
                                               std::uint64_t seed, const NoiseParams& noise) {
  struct Golden {
    std::string label;
    std::string quantity;
    ComplexMatrix rho;
    std::string spec;
    WitnessMode mode;
    std::string theta;
    double published;
    bool known_discrepancy = false;
  };

  const std::string kay_spec = "i=1,s=-,jk=5-4,lm=7-6";
  const std::string kye_spec = "i=1,s=-,jk=4-5,lm=6-7";
  const std::string cat1_spec = "i=1,s=-,jk=4+5,lm=6+7";
  const std::string cat2_spec = "i=1,s=-,jk=5-6,lm=7-4";
  const std::string cat3_spec = "i=1,s=+,jk=5-6,lm=7-4";
  const ComplexMatrix cat1 = density_matrix(category_state(1));
  const ComplexMatrix cat2 = density_matrix(category_state(2));
  const ComplexMatrix cat3 = density_matrix(category_state(3));
  const double root8 = 2.0 * std::numbers::sqrt2;
  constexpr auto kFixed = WitnessMode::kFixed;
  constexpr auto kNl = WitnessMode::kPaperNlNumbers;
  constexpr auto kEnv = WitnessMode::kEnvelope;

  std::vector<Golden> goldens = {
      // In-text values.
      {"Kay a=2", "linear theta=pi/4", kay(2.0), kay_spec, kFixed, "pi/4", -0.2761},
      {"Kay a=2.5", "linear theta=pi/4", kay(2.5), kay_spec, kFixed, "pi/4", -0.09384},
      {"Kay a=2sqrt2", "linear theta=pi/4", kay(root8), kay_spec, kFixed, "pi/4", 0.0},
      {"Kay a=2", "nonlinear", kay(2.0), kay_spec, kNl, "", -0.6667},
      {"Kay a=2.5", "nonlinear", kay(2.5), kay_spec, kNl, "", -0.5714},
      {"Kay a=2sqrt2", "nonlinear", kay(root8), kay_spec, kNl, "", -0.5224},
      {"Kye b=c=2", "linear theta=pi/4", kye(2, 2), kye_spec, kFixed, "pi/4", -0.3314},
      {"Kye b=c=3", "linear theta=pi/4", kye(3, 3), kye_spec, kFixed, "pi/4", -0.2761},
      {"Kye b=c=4", "linear theta=pi/4", kye(4, 4), kye_spec, kFixed, "pi/4", -0.2367},
      {"Kye b=c=2", "nonlinear", kye(2, 2), kye_spec, kNl, "", -0.4000},
      {"Kye b=c=3", "nonlinear", kye(3, 3), kye_spec, kNl, "", -0.6667},
      {"Kye b=c=4", "nonlinear", kye(4, 4), kye_spec, kNl, "", -0.8571},
      {"category 1", "linear theta=6pi/5", cat1, cat1_spec, kFixed, "6pi/5", -0.2381},
      {"category 1", "nonlinear", cat1, cat1_spec, kNl, "", -0.8},
      {"category 2", "linear theta=pi/5", cat2, cat2_spec, kFixed, "pi/5", -0.1587},
      {"category 2", "nonlinear", cat2, cat2_spec, kNl, "", -1.2},
      {"category 3", "linear theta=4pi/15", cat3, cat3_spec, kFixed, "4pi/15", -0.3298},
      {"category 3", "nonlinear", cat3, cat3_spec, kNl, "", -0.4},
      // Theoretical columns of the results table. The linear column is the
      // θ-optimized linear value of the same witness.
      {"table state 1", "table linear (best theta)", kay(2.0), kay_spec, kEnv, "", -0.2761},
      {"table state 1", "table nonlinear", kay(2.0), kay_spec, kNl, "", -0.6666},
      {"table state 2", "table linear (best theta)", kye(2, 2), kye_spec, kEnv, "", -0.3314},
      {"table state 2", "table nonlinear", kye(2, 2), kye_spec, kNl, "", -0.4000},
      {"table state 3", "table linear (best theta)", cat1, cat1_spec, kEnv, "", -0.2480, true},
      {"table state 3", "table nonlinear", cat1, cat1_spec, kNl, "", -0.8000},
      {"table state 4", "table linear (best theta)", cat2, cat2_spec, kEnv, "", -0.1656, true},
      {"table state 4", "table nonlinear", cat2, cat2_spec, kNl, "", -1.1904, true},
      {"table state 5", "table linear (best theta)", cat3, cat3_spec, kEnv, "", -0.3313},
      {"table state 5", "table nonlinear", cat3, cat3_spec, kNl, "", -0.4000},
  };

  std::vector<ReportRecord> records;
  records.reserve(goldens.size());
  for (std::size_t n = 0; n < goldens.size(); ++n) {
    const Golden& g = goldens[n];
    ReportRecord rec;
    rec.label = g.label;
    rec.quantity = g.quantity;
    rec.r = r_vector(g.rho);
    rec.ppt = ppt_report(g.rho);
    rec.spec = g.spec;
    rec.mode = g.mode;
    rec.theta = g.mode == kFixed ? parse_angle(g.theta) : 0.0;
    const WitnessSpec spec = WitnessSpec::parse(g.spec);
    rec.theoretical = evaluate_witness(rec.r, spec, g.mode, rec.theta).value;
    rec.published = g.published;
    const bool close = std::abs(rec.theoretical - g.published) <= kGoldenTol;
    rec.status = g.known_discrepancy ? CheckStatus::kKnownDiscrepancy
                 : close             ? CheckStatus::kPass
                                     : CheckStatus::kFail;
    if (shots) {
      rec.estimated = estimate_witness(probs_from_density(g.rho), spec, g.mode, rec.theta,
                                       *shots, derive_seed(seed, n), noise);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bewit: GHZ-diagonal states, PPT tests, entanglement witnesses and "
               "purification circuits"};
  app.name("bewit");
  app.require_subcommand(1);

  bool as_json = false;
  bool table = false;

  StateOptions state_opts;
  auto* state = app.add_subcommand("state", "build a state and print rho, correlations, PPT");
  add_state_options(state, state_opts);
  state->add_flag("--json", as_json, "JSON output (default)");
  state->add_flag("--table", table, "human-readable output");

  StateOptions witness_state;
  WitnessOptions witness_opts;
  auto* witness = app.add_subcommand("witness", "evaluate one witness on a state");
  add_state_options(witness, witness_state);
  witness->add_option("--spec", witness_opts.spec, "e.g. i=1,s=-,jk=5-4,lm=7-6")->required();
  witness->add_option("--mode", witness_opts.mode,
                      "fixed | envelope | paper-nl | paper-nl-as-printed")
      ->capture_default_str();
  witness->add_option("--theta", witness_opts.theta, "radians or e.g. 6pi/5")
      ->capture_default_str();
  witness->add_option("--sweep-theta", witness_opts.sweep, "emit N rows of theta,value as CSV")
      ->check(CLI::PositiveNumber);
  witness->add_option("--out", witness_opts.out_path, "CSV destination for --sweep-theta");
  witness->add_flag("--json", as_json, "JSON output");

  StateOptions search_state;
  auto* search = app.add_subcommand("search", "most negative envelope over the witness family");
  add_state_options(search, search_state);
  search->add_flag("--json", as_json, "JSON output");

  StateOptions synth_state;
  std::string emit = "json";
  std::string synth_out;
  auto* synth = app.add_subcommand("synth", "emit the six-qubit preparation circuit");
  add_state_options(synth, synth_state);
  synth->add_option("--emit", emit, "json | qasm")
      ->check(CLI::IsMember({"json", "qasm"}))
      ->capture_default_str();
  synth->add_option("--out", synth_out, "output file (default stdout)");
  synth->add_flag("--json", as_json, "accepted for uniformity; JSON is the default emit format");

  StateOptions sim_state;
  SimulateOptions sim_opts;
  std::uint64_t sim_seed = 0;
  auto* simulate = app.add_subcommand("simulate", "shot-based estimate of a witness");
  add_state_options(simulate, sim_state);
  simulate->add_option("--spec", sim_opts.spec, "witness spec")->required();
  simulate->add_option("--mode", sim_opts.mode, "fixed | envelope | paper-nl")
      ->capture_default_str();
  simulate->add_option("--theta", sim_opts.theta, "radians or e.g. pi/4")->capture_default_str();
  simulate->add_option("--shots", sim_opts.shots, "total shots")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* seed_opt = simulate->add_option("--seed", sim_seed, "RNG seed (default $BEWIT_SEED or 0)");
  simulate->add_option("--noise", sim_opts.noise, "depol1=..,depol2=..,readout=..");
  simulate->add_flag("--json", as_json, "JSON output");

  std::int64_t repro_shots = 0;
  std::uint64_t repro_seed = 0;
  std::string repro_noise;
  auto* reproduce = app.add_subcommand("reproduce", "recompute every published value");
  auto* repro_shots_opt =
      reproduce->add_option("--shots", repro_shots, "also estimate each value with N shots")
          ->check(CLI::PositiveNumber);
  auto* repro_seed_opt = reproduce->add_option("--seed", repro_seed, "RNG seed for --shots");
  reproduce->add_option("--noise", repro_noise, "noise for --shots");
  reproduce->add_flag("--json", as_json, "JSON output");

  std::vector<const char*> argv = {"bewit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (*state) return cmd_state(state_opts, table, out);
    if (*witness) return cmd_witness(witness_state, witness_opts, as_json, out);
    if (*search) return cmd_search(search_state, as_json, out);
    if (*synth) return cmd_synth(synth_state, emit, synth_out, out);
    if (*simulate) {
      if (*seed_opt) sim_opts.seed = sim_seed;
      return cmd_simulate(sim_state, sim_opts, as_json, out);
    }
    if (*reproduce) {
      const NoiseParams noise = repro_noise.empty() ? NoiseParams{} : NoiseParams::parse(repro_noise);
      const std::uint64_t seed = *repro_seed_opt ? repro_seed : default_seed();
      std::optional<std::int64_t> shots;
      if (*repro_shots_opt) shots = repro_shots;
      return cmd_reproduce(shots, seed, noise, as_json, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace bewit::cli
