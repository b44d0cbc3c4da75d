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

#include <string>
#include <utility>
#include <vector>

#include "pbsim/fock.hpp"

namespace pbsim {

enum class DetectKind { Zero, ExactlyOne };

/// One detector condition on the total photon count (both polarizations)
/// over a group of spatial ports. Plain channels are single-port groups;
/// a channel with a ghost copy lists both spatial indices.
struct PortConstraint {
  std::vector<int> spatials;
  DetectKind kind = DetectKind::Zero;
};

/// Conjunction of detector conditions; ports not mentioned are
/// unconstrained. Projection is exact (ideal detectors, lossless model),
/// not sampled.
using PostSelectionRule = std::vector<PortConstraint>;

/// Keeps exactly the amplitudes whose occupations satisfy every
/// constraint. The result is unnormalized; its norm^2 is the
/// post-selection success probability. Idempotent, never increases norm.
FockState project(const FockState& s, const PostSelectionRule& rule);

/// Full bottleneck pipeline: build_input(n) -> merge_cascade(n) -> expand
/// -> zero photons on every port but the line. Returns the unnormalized
/// output state and its success probability.
std::pair<FockState, double> bottleneck_output(int n);

/// The closed-form pipeline result, used as an oracle against
/// bottleneck_output: sqrt(n!/(2n)^n) (|n;0> - (-1)^n |0;n>) on the line.
FockState closed_form_output(int n);

/// p(n) = 2 n! / (2n)^n.
double closed_form_probability(int n);

/// JSON form of a rule: [{"ports": [..], "kind": "zero"|"one"}, ...].
std::string to_json(const PostSelectionRule& rule);
PostSelectionRule rule_from_json(const std::string& text);

}  // namespace pbsim
