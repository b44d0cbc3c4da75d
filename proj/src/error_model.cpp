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

#include "pbsim/error_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pbsim/network.hpp"
#include "pbsim/postselect.hpp"

namespace pbsim {

FockState mismatch_output(const MismatchScenario& sc) {
  const int n = sc.photons;
  if (n < 1) throw std::invalid_argument("mismatch scenario needs n >= 1");
  if (sc.bad_port < 0 || sc.bad_port >= n) {
    throw std::invalid_argument("bad_port must lie in [0, n)");
  }
  if (!(sc.epsilon >= 0.0 && sc.epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
  const int offset = ghost_offset(n);

  ProductPhotonState input;
  input.modes = polarization_modes(2 * n);
  for (int l = 0; l < n; ++l) {
    const double theta = (l == sc.bad_port && sc.bad_angle)
                             ? *sc.bad_angle
                             : std::numbers::pi * l / n;
    const int port = l == sc.bad_port ? l + offset : l;
    input.photons.push_back(linear_photon(theta, port, input.modes));
  }

  const ModeMap cascade =
      direct_sum(merge_cascade(n), shift_spatial(merge_cascade(n), offset));
  PostSelectionRule rule;
  for (int port = 1; port < n; ++port) {
    rule.push_back({{port}, DetectKind::Zero});
    rule.push_back({{port + offset}, DetectKind::Zero});
  }
  FockState out = expand_product(apply_mode_map(input, cascade));
  return rule.empty() ? out : project(out, rule);
}

PolarDistribution error_circular_distribution(int bad_port) {
  return circular_distribution(mismatch_output({.photons = 4, .bad_port = bad_port}));
}

PolarDistribution error_hv_distribution(int bad_port) {
  return linear_distribution(mismatch_output({.photons = 4, .bad_port = bad_port}),
                             0.0);
}

MixedCircular mixed_circular_distribution(double epsilon, int bad_port) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
  const auto [ideal, p_ideal] = bottleneck_output(4);
  const FockState mm = mismatch_output({.photons = 4, .bad_port = bad_port});
  const double p_mm = norm_sq(mm);
  const PolarDistribution ideal_dist = circular_distribution(ideal);
  const PolarDistribution mm_dist = circular_distribution(mm);

  MixedCircular mix;
  mix.total_probability = (1.0 - epsilon) * p_ideal + epsilon * p_mm;
  for (int dn = -4; dn <= 4; dn += 2) {
    mix.weights[dn] = (1.0 - epsilon) * p_ideal * ideal_dist.probability(dn) +
                      epsilon * p_mm * mm_dist.probability(dn);
  }
  return mix;
}

}  // namespace pbsim
