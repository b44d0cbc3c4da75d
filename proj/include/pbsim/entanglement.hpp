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

#include <optional>
#include <vector>

#include "pbsim/fock.hpp"

namespace pbsim {

/// Weighted ensemble of (possibly unnormalized) pure states standing in
/// for rho = sum w_i |psi_i><psi_i|, kept unnormalized on purpose.
struct PureEnsemble {
  struct Component {
    double weight = 1.0;
    FockState state;
  };
  std::vector<Component> components;
};

/// (|R..R> - (-1)^n |L..L>)/sqrt(2) over n channels, one photon each.
/// The relative sign tracks the bottleneck cat, so redistribution maps the
/// cat onto this state for every n; for n = 4 it is the familiar
/// (|RRRR> - |LLLL>)/sqrt(2).
FockState ghz_state(int n);

/// Splits an n-photon single-line state into n channels and keeps exactly
/// one photon per channel. When `ghost` is set, the state's ghost line at
/// spatial `*ghost` rides the ghost copy of the splitter fan-out and the
/// per-channel photon count includes the ghost copy c + *ghost.
/// Unnormalized output.
FockState redistribute(const FockState& s, int n,
                       std::optional<int> ghost = std::nullopt);

/// Sum over ghost placements of |<GHZ, placement|s>|^2: overlaps are
/// coherent within one placement of ghost photons and incoherent across
/// placements (the detectors resolve polarization, not the temporal
/// mode). With no ghost photons present this is plain |<GHZ|s>|^2.
double ghz_overlap_sq(const FockState& s, int n,
                      std::optional<int> ghost = std::nullopt);

/// sum_i w_i |<GHZ|psi_i>|^2 / sum_i w_i <psi_i|psi_i>; in [0, 1] and
/// invariant under rescaling all weights. Throws on zero trace.
double ghz_fraction(const PureEnsemble& e, int n,
                    std::optional<int> ghost = std::nullopt);

/// Fidelity witness threshold: fraction >= 1/2 certifies genuine
/// n-particle entanglement.
bool witness_passes(double fraction);

/// GHZ fraction of the bottleneck output mixed with a one-photon mismatch
/// at rate epsilon, weighted by the respective post-selection
/// probabilities and evaluated through the full redistribution pipeline.
/// For n = 4 this is (12 - 9 eps) / (12 - 4 eps).
double ghz_mixture_fraction(int n, double epsilon, int bad_port = 0);

/// First-order expansion of the n = 4 mixture curve: 1 - (5/12) eps.
double ghz_mixture_first_order(double epsilon);

}  // namespace pbsim
