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

#pragma once

#include <map>
#include <optional>

#include "pbsim/fock.hpp"
#include "pbsim/polarization.hpp"

namespace pbsim {

/// One input photon fails to match the common wavepacket mode and becomes
/// distinguishable from the rest. Modeled with orthogonal ghost copies of
/// every spatial mode (a second temporal mode), which keeps the whole
/// pipeline pure-state: the mismatched photon rides the ghost copy of the
/// same splitter network.
struct MismatchScenario {
  int photons = 4;
  int bad_port = 0;
  double epsilon = 0.0;  // mixture weight, used by the mixed distributions
  /// Linear polarization override for the mismatched photon (radians).
  /// Defaults to the angle its port would carry anyway, pi*bad_port/n.
  std::optional<double> bad_angle;
};

/// Ghost copy of spatial channel s lives at s + ghost_offset(n).
inline int ghost_offset(int n) { return n; }

/// Bottleneck pipeline with the scenario's photon mismatched: propagate
/// everything through the doubled cascade, post-select zero photons on all
/// non-line ports in both copies. Unnormalized; for n = 4 the norm^2 is
/// 1/128 = (2/3) p(4).
FockState mismatch_output(const MismatchScenario& sc);

/// Circular statistics of the normalized four-photon mismatch state,
/// polarizations summed over the real and ghost line modes:
/// (3, 4, 2, 4, 3)/16 over delta n = +4..-4.
PolarDistribution error_circular_distribution(int bad_port = 0);

/// phi = 0 linear statistics of the same state: mass 3/4 on delta n = -2
/// and 1/4 on +2 for bad_port 0 (the mismatched photon keeps its input
/// polarization, so which sign is preferred follows bad_port).
PolarDistribution error_hv_distribution(int bad_port = 0);

/// Post-selection-weighted circular mixture of the ideal and mismatched
/// pipelines: weight(dn) = p_ideal (1-eps) p_RL(dn) + p_mm eps p_3x1(dn),
/// with both prefactors taken from the pipelines themselves. `total` is
/// the summed success probability.
struct MixedCircular {
  std::map<int, double> weights;
  double total_probability = 0.0;
};

MixedCircular mixed_circular_distribution(double epsilon, int bad_port = 0);

}  // namespace pbsim
