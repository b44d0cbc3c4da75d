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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pbsim/entanglement.hpp"
#include "pbsim/error_model.hpp"
#include "pbsim/postselect.hpp"

using namespace pbsim;

TEST_CASE("ghz_state amplitudes and sign convention") {
  const FockState ghz4 = ghz_state(4);
  OccupationVector all_r;
  OccupationVector all_l;
  for (int c = 0; c < 4; ++c) {
    all_r = all_r.with_added(mode_r(c));
    all_l = all_l.with_added(mode_l(c));
  }
  const double s = 1.0 / std::numbers::sqrt2;
  CHECK(std::abs(ghz4.amplitude(all_r) - s) < 1e-15);
  CHECK(std::abs(ghz4.amplitude(all_l) + s) < 1e-15);
  CHECK(norm_sq(ghz4) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(norm_sq(ghz_state(1)) == doctest::Approx(1.0).epsilon(1e-14));

  // Orthogonal to any mixed-polarization one-per-channel ket.
  const FockState mixed = basis_state(OccupationVector::of(
      {{mode_r(0), 1}, {mode_r(1), 1}, {mode_l(2), 1}, {mode_l(3), 1}}));
  CHECK(std::abs(inner_product(ghz4, mixed)) < 1e-15);

  CHECK_THROWS_AS(ghz_state(0), std::invalid_argument);
}

TEST_CASE("redistributing the cat yields the GHZ state") {
  const FockState cat = bottleneck_output(4).first;
  const FockState out = redistribute(cat, 4);
  CHECK(phase_equal(normalize(out).first, ghz_state(4), 1e-10));
  // Redistribution has its own post-selection cost: 9/8192 overall.
  CHECK(norm_sq(out) == doctest::Approx(9.0 / 8192.0).epsilon(1e-12));

  for (int n = 2; n <= 4; ++n) {
    const FockState redist = redistribute(closed_form_output(n), n);
    CHECK(phase_equal(normalize(redist).first, ghz_state(n), 1e-10));
  }
}

TEST_CASE("redistribute with a single channel is the identity") {
  const FockState one = scaled(basis_state(OccupationVector::of({{mode_r(0), 1}})),
                               Complex{0.6, 0.0});
  const FockState out = redistribute(one, 1);
  CHECK(std::abs(out.amplitude(OccupationVector::of({{mode_r(0), 1}})) - 0.6) < 1e-14);
}

TEST_CASE("redistribute validates its input") {
  const FockState cat3 = bottleneck_output(3).first;
  CHECK_THROWS_AS(redistribute(cat3, 4), std::invalid_argument);
  const FockState off_line = basis_state(OccupationVector::of({{mode_r(2), 2}}));
  CHECK_THROWS_AS(redistribute(off_line, 2), std::invalid_argument);
}

TEST_CASE("mismatch state redistributes to a 3/8 GHZ fraction") {
  const FockState mm = mismatch_output({.photons = 4, .bad_port = 0});
  const FockState redist = redistribute(mm, 4, ghost_offset(4));
  // Redistribution keeps 3/32 of the weight, same as for the ideal cat:
  // (1/128) * (3/32) = 3/4096.
  CHECK(norm_sq(redist) == doctest::Approx(3.0 / 4096.0).epsilon(1e-12));

  PureEnsemble only_error;
  only_error.components.push_back({1.0, redist});
  const double fraction = ghz_fraction(only_error, 4, ghost_offset(4));
  CHECK(fraction == doctest::Approx(3.0 / 8.0).epsilon(1e-12));

  // Same number from the raw overlap ratio.
  CHECK(ghz_overlap_sq(redist, 4, ghost_offset(4)) / norm_sq(redist) ==
        doctest::Approx(3.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("ghz_fraction is scale invariant and guards the zero trace") {
  const FockState ideal = normalize(redistribute(bottleneck_output(4).first, 4)).first;
  PureEnsemble e;
  e.components.push_back({0.123, ideal});
  CHECK(ghz_fraction(e, 4) == doctest::Approx(1.0).epsilon(1e-12));
  e.components[0].weight = 77.0;
  CHECK(ghz_fraction(e, 4) == doctest::Approx(1.0).epsilon(1e-12));

  PureEnsemble empty;
  CHECK_THROWS_AS(ghz_fraction(empty, 4), std::runtime_error);
  PureEnsemble zero_weight;
  zero_weight.components.push_back({0.0, ideal});
  CHECK_THROWS_AS(ghz_fraction(zero_weight, 4), std::runtime_error);
}

TEST_CASE("mixture curve matches (12 - 9 eps)/(12 - 4 eps)") {
  for (const double eps : {0.0, 0.2, 0.5, 1.0}) {
    const double fraction = ghz_mixture_fraction(4, eps);
    CHECK(fraction == doctest::Approx((12.0 - 9.0 * eps) / (12.0 - 4.0 * eps))
                          .epsilon(1e-10));
  }
  CHECK(ghz_mixture_fraction(4, 0.2) == doctest::Approx(10.2 / 11.2).epsilon(1e-10));
}

TEST_CASE("first-order curve agrees to O(eps^2)") {
  for (const double eps : {0.05, 0.1, 0.2}) {
    const double gap = std::abs(ghz_mixture_fraction(4, eps) -
                                ghz_mixture_first_order(eps));
    CHECK(gap <= 0.25 * eps * eps);
  }
}

TEST_CASE("witness verdicts and the eps = 6/7 boundary") {
  CHECK(witness_passes(1.0));
  CHECK(!witness_passes(3.0 / 8.0));
  // (12 - 9 eps)/(12 - 4 eps) = 1/2 exactly at eps = 6/7.
  const double boundary = 6.0 / 7.0;
  CHECK(ghz_mixture_fraction(4, boundary) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(witness_passes(ghz_mixture_fraction(4, boundary - 0.01)));
  CHECK(!witness_passes(ghz_mixture_fraction(4, boundary + 0.01)));
}
