// Copyright 2026 The pbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "pbsim/circuit_text.hpp"
#include "pbsim/entanglement.hpp"
#include "pbsim/error_model.hpp"
#include "pbsim/network.hpp"
#include "pbsim/polarization.hpp"
#include "pbsim/postselect.hpp"
#include "pbsim/validate.hpp"

namespace {

using namespace pbsim;

constexpr int kPhotonCap = 10;

int print_precision() {
  int p = 15;
  if (const char* env = std::getenv("PBSIM_PRECISION")) {
    p = std::atoi(env);
  }
  return std::clamp(p, 12, 17);
}

std::string fnum(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", print_precision(), v);
  return buf;
}

void check_photon_cap(int n, bool force) {
  if (n > kPhotonCap && !force) {
    throw std::runtime_error(
        "photon number " + std::to_string(n) + " exceeds the cap of " +
        std::to_string(kPhotonCap) +
        " (state size grows combinatorially); pass --force to override");
  }
}

CircuitSpec load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_circuit(buf.str());
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void emit_distribution_csv(const PolarDistribution& dist) {
  const std::string basis =
      dist.basis == PolarBasis::Circular ? "circular" : "linear";
  const std::string phi =
      dist.basis == PolarBasis::Circular ? "" : fnum(dist.phi);
  for (const auto& [dn, p] : dist.probs) {
    std::cout << basis << "," << phi << "," << dn << "," << fnum(p) << "\n";
  }
}

FockState normalized_cat(int n) {
  return normalize(bottleneck_output(n).first).first;
}

int cmd_simulate(int photons, const std::string& circuit_path, bool dump_state,
                 bool dump_unitary, bool force) {
  nlohmann::json out;
  FockState state;
  double probability = 0.0;
  if (!circuit_path.empty()) {
    const CircuitSpec spec = load_circuit(circuit_path);
    check_photon_cap(static_cast<int>(spec.sources.size()), force);
    std::tie(state, probability) = run_circuit(spec);
    out["photons"] = static_cast<int>(spec.sources.size());
    if (dump_unitary) {
      out["unitary"] = nlohmann::json::parse(to_json(circuit_mode_map(spec)));
    }
  } else {
    check_photon_cap(photons, force);
    std::tie(state, probability) = bottleneck_output(photons);
    out["photons"] = photons;
    if (dump_unitary) {
      out["unitary"] = nlohmann::json::parse(to_json(merge_cascade(photons)));
    }
  }
  out["probability"] = probability;
  if (dump_state) out["state"] = nlohmann::json::parse(to_json(state));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_stats(int photons, const std::string& basis, double phi, bool force) {
  check_photon_cap(photons, force);
  const FockState cat = normalized_cat(photons);
  std::cout << "basis,phi,delta_n,probability\n";
  if (basis == "circular") {
    emit_distribution_csv(circular_distribution(cat));
  } else {
    emit_distribution_csv(linear_distribution(cat, phi));
  }
  return 0;
}

int cmd_sweep(int photons, int phi_steps, bool force) {
  check_photon_cap(photons, force);
  if (phi_steps < 1) throw std::runtime_error("--phi-steps must be >= 1");
  const FockState cat = normalized_cat(photons);
  std::cout << "basis,phi,delta_n,probability\n";
  for (int j = 0; j < phi_steps; ++j) {
    emit_distribution_csv(
        linear_distribution(cat, std::numbers::pi * j / phi_steps));
  }
  return 0;
}

int cmd_error(double epsilon, int bad_port) {
  const MixedCircular mix = mixed_circular_distribution(epsilon, bad_port);
  std::cout << "delta_n,weight,probability\n";
  for (const auto& [dn, w] : mix.weights) {
    std::cout << dn << "," << fnum(w) << "," << fnum(w / mix.total_probability)
              << "\n";
  }
  return 0;
}

int cmd_ghz(int photons, double epsilon, int curve_steps, bool force) {
  check_photon_cap(photons, force);
  std::cout << "epsilon,fraction,first_order,witness\n";
  auto emit = [&](double eps) {
    const double fraction = ghz_mixture_fraction(photons, eps);
    std::cout << fnum(eps) << "," << fnum(fraction) << ","
              << fnum(ghz_mixture_first_order(eps)) << ","
              << (witness_passes(fraction) ? "pass" : "fail") << "\n";
  };
  emit(epsilon);
  for (int j = 0; j <= curve_steps; ++j) {
    emit(static_cast<double>(j) / curve_steps);
  }
  return 0;
}

int cmd_validate() {
  const auto results = run_acceptance_criteria();
  for (const CriterionResult& r : results) {
    std::cout << "criterion " << r.index << " "
              << (r.passed ? "PASS" : "FAIL") << " " << r.name << ": "
              << r.detail << "\n";
  }
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pbsim: post-selected n-photon polarization cat states at a photon "
      "bottleneck"};
  app.require_subcommand(1);

  int photons = 4;
  std::string circuit_path;
  bool dump_state = false;
  bool dump_unitary = false;
  bool force = false;
  std::string basis = "circular";
  double phi = 0.0;
  int phi_steps = 64;
  double epsilon = 0.0;
  int bad_port = 0;
  int curve_steps = 10;

  CLI::App* sim = app.add_subcommand(
      "simulate", "Run the bottleneck pipeline, print JSON results");
  auto* sim_photons =
      sim->add_option("--photons", photons, "photon/port count")->check(CLI::PositiveNumber);
  sim->add_option("--circuit", circuit_path, "circuit description file")
      ->excludes(sim_photons);
  sim->add_flag("--dump-state", dump_state, "include the post-selected state");
  sim->add_flag("--dump-unitary", dump_unitary, "include the mode transform");
  sim->add_flag("--force", force, "override the photon cap");

  CLI::App* stats = app.add_subcommand(
      "stats", "Polarization statistics of the cat state, CSV");
  stats->add_option("--photons", photons, "photon count")->check(CLI::PositiveNumber);
  stats->add_option("--basis", basis, "circular or linear")
      ->check(CLI::IsMember({"circular", "linear"}));
  stats->add_option("--phi", phi, "linear measurement angle (radians)");
  stats->add_flag("--force", force, "override the photon cap");

  CLI::App* sweep =
      app.add_subcommand("sweep", "Linear statistics over a phi sweep, CSV");
  sweep->add_option("--photons", photons, "photon count")->check(CLI::PositiveNumber);
  sweep->add_option("--phi-steps", phi_steps, "number of angles in [0, pi)")
      ->check(CLI::PositiveNumber);
  sweep->add_flag("--force", force, "override the photon cap");

  CLI::App* error = app.add_subcommand(
      "error", "Mode-mismatch mixture of circular statistics, CSV");
  error->add_option("--epsilon", epsilon, "mismatch probability in [0, 1]");
  error->add_option("--bad-port", bad_port, "mismatched input port")
      ->check(CLI::NonNegativeNumber);

  CLI::App* ghz = app.add_subcommand(
      "ghz", "GHZ fraction and witness verdict under mismatch, CSV");
  ghz->add_option("--photons", photons, "photon/channel count")->check(CLI::PositiveNumber);
  ghz->add_option("--epsilon", epsilon, "mismatch probability in [0, 1]");
  ghz->add_option("--curve-steps", curve_steps, "epsilon curve resolution")
      ->check(CLI::PositiveNumber);
  ghz->add_flag("--force", force, "override the photon cap");

  CLI::App* validate = app.add_subcommand(
      "validate", "Run the acceptance criteria, nonzero exit on failure");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      return cmd_simulate(photons, circuit_path, dump_state, dump_unitary, force);
    }
    if (stats->parsed()) return cmd_stats(photons, basis, phi, force);
    if (sweep->parsed()) return cmd_sweep(photons, phi_steps, force);
    if (error->parsed()) return cmd_error(epsilon, bad_port);
    if (ghz->parsed()) return cmd_ghz(photons, epsilon, curve_steps, force);
    if (validate->parsed()) return cmd_validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
