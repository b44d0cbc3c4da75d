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

#include "pbsim/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "pbsim/error_model.hpp"
#include "pbsim/network.hpp"
#include "pbsim/postselect.hpp"

namespace pbsim {

namespace {

double ghz_relative_sign(int n) { return n % 2 == 0 ? -1.0 : 1.0; }

}  // namespace

FockState ghz_state(int n) {
  if (n < 1) throw std::invalid_argument("ghz_state needs n >= 1");
  const double amp = 1.0 / std::numbers::sqrt2;
  OccupationVector all_r;
  OccupationVector all_l;
  for (int c = 0; c < n; ++c) {
    all_r = all_r.with_added(mode_r(c));
    all_l = all_l.with_added(mode_l(c));
  }
  FockState::TermMap terms;
  terms[all_r] = Complex{amp, 0.0};
  terms[all_l] = Complex{ghz_relative_sign(n) * amp, 0.0};
  return FockState(n, std::move(terms));
}

FockState redistribute(const FockState& s, int n, std::optional<int> ghost) {
  if (n < 1) throw std::invalid_argument("redistribute needs n >= 1");
  if (s.photons() != n) {
    throw std::invalid_argument("state carries " + std::to_string(s.photons()) +
                                " photons, expected " + std::to_string(n));
  }
  if (ghost && *ghost < n) {
    throw std::invalid_argument("ghost offset must be >= n");
  }
  for (int spatial : spatial_support(s)) {
    const bool on_line = spatial == 0 || (ghost && spatial == *ghost);
    if (!on_line) {
      throw std::invalid_argument("redistribute input must live on the line");
    }
  }
  ModeMap fan_out = split_cascade(n);
  if (ghost) {
    fan_out = direct_sum(fan_out, shift_spatial(split_cascade(n), *ghost));
  }
  PostSelectionRule rule;
  for (int c = 0; c < n; ++c) {
    PortConstraint pc{{c}, DetectKind::ExactlyOne};
    if (ghost) pc.spatials.push_back(c + *ghost);
    rule.push_back(std::move(pc));
  }
  return project(apply_mode_map(s, fan_out), rule);
}

double ghz_overlap_sq(const FockState& s, int n, std::optional<int> ghost) {
  if (n < 1) throw std::invalid_argument("ghz_overlap_sq needs n >= 1");
  // Group the one-photon-per-channel, all-same-polarization terms by
  // which channels hold ghost photons; each group is one orthogonal
  // detector sector.
  std::map<std::vector<int>, std::pair<Complex, Complex>> sectors;
  for (const auto& [occ, amp] : s.terms()) {
    if (static_cast<int>(occ.entries().size()) != n) continue;
    std::vector<int> ghost_channels;
    std::vector<bool> seen(n, false);
    Pol pol = occ.entries().front().first.pol;
    bool eligible = true;
    for (const auto& [mode, count] : occ.entries()) {
      int channel = mode.spatial;
      bool is_ghost = false;
      if (ghost && channel >= *ghost) {
        channel -= *ghost;
        is_ghost = true;
      }
      if (count != 1 || mode.pol != pol || channel < 0 || channel >= n ||
          seen[channel]) {
        eligible = false;
        break;
      }
      seen[channel] = true;
      if (is_ghost) ghost_channels.push_back(channel);
    }
    if (!eligible) continue;
    auto& [a_r, a_l] = sectors[ghost_channels];
    (pol == Pol::R ? a_r : a_l) += amp;
  }
  const double sign = ghz_relative_sign(n);
  double total = 0.0;
  for (const auto& [channels, amps] : sectors) {
    total += std::norm((amps.first + sign * amps.second) / std::numbers::sqrt2);
  }
  return total;
}

double ghz_fraction(const PureEnsemble& e, int n, std::optional<int> ghost) {
  double numerator = 0.0;
  double trace = 0.0;
  for (const auto& [weight, state] : e.components) {
    if (weight < 0.0) throw std::invalid_argument("ensemble weights must be >= 0");
    numerator += weight * ghz_overlap_sq(state, n, ghost);
    trace += weight * norm_sq(state);
  }
  if (trace <= 0.0) throw std::runtime_error("ensemble has zero trace");
  return numerator / trace;
}

bool witness_passes(double fraction) { return fraction >= 0.5; }

double ghz_mixture_fraction(int n, double epsilon, int bad_port) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
  // Components are weighted by their bottleneck post-selection
  // probabilities and enter as normalized redistributed states, matching
  // the witness ratio <GHZ|rho|GHZ>/Tr(rho) evaluated at the bottleneck.
  PureEnsemble ensemble;
  const int offset = ghost_offset(n);
  if (epsilon < 1.0) {
    const auto [ideal, p_ideal] = bottleneck_output(n);
    ensemble.components.push_back(
        {(1.0 - epsilon) * p_ideal, normalize(redistribute(ideal, n)).first});
  }
  if (epsilon > 0.0) {
    const FockState mm = mismatch_output({.photons = n, .bad_port = bad_port});
    ensemble.components.push_back(
        {epsilon * norm_sq(mm), normalize(redistribute(mm, n, offset)).first});
  }
  return ghz_fraction(ensemble, n, offset);
}

double ghz_mixture_first_order(double epsilon) {
  return 1.0 - 5.0 * epsilon / 12.0;
}

}  // namespace pbsim
