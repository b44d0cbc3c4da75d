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
#include "pbsim/polarization.hpp"
#include "pbsim/postselect.hpp"

using namespace pbsim;

namespace {

constexpr double kPi = std::numbers::pi;

FockState cat4() { return bottleneck_output(4).first; }

FockState ket_4r() { return basis_state(OccupationVector::of({{mode_r(0), 4}})); }
FockState ket_4l() { return basis_state(OccupationVector::of({{mode_l(0), 4}})); }

}  // namespace

TEST_CASE("phi = 0 anchors the H/V pair") {
  const ModeMap u = linear_basis_map(0.0);
  const double s = 1.0 / std::numbers::sqrt2;
  CHECK(std::abs(u.matrix(0, 0) - s) < 1e-15);
  CHECK(std::abs(u.matrix(1, 0) - s) < 1e-15);
  CHECK(std::abs(u.matrix(0, 1) - s) < 1e-15);
  CHECK(std::abs(u.matrix(1, 1) + s) < 1e-15);
  CHECK(isometry_defect(u) < 1e-14);
  CHECK(isometry_defect(linear_basis_map(0.77)) < 1e-14);
}

TEST_CASE("overlap amplitudes of |4R> and |4L> with the rotated basis") {
  for (const double phi : {0.0, 0.3, 1.1}) {
    const ModeMap u = linear_basis_map(phi);
    // <dn = 0 | 4R> = sqrt(6)/4 exp(-i 4 phi)
    const FockState r = apply_mode_map(ket_4r(), u);
    const Complex a0 = r.amplitude(OccupationVector::of({{mode_r(0), 2}, {mode_l(0), 2}}));
    CHECK(std::abs(a0 - std::sqrt(6.0) / 4.0 * std::exp(Complex{0.0, -4.0 * phi})) < 1e-13);
    // <dn = +2 | 4L> = -1/2 exp(+i 4 phi)
    const FockState l = apply_mode_map(ket_4l(), u);
    const Complex a2 = l.amplitude(OccupationVector::of({{mode_r(0), 3}, {mode_l(0), 1}}));
    CHECK(std::abs(a2 + 0.5 * std::exp(Complex{0.0, 4.0 * phi})) < 1e-13);
  }
}

TEST_CASE("circular statistics of the four-photon cat") {
  const PolarDistribution dist = circular_distribution(cat4());
  CHECK(dist.photons == 4);
  CHECK(dist.probability(4) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dist.probability(-4) == doctest::Approx(0.5).epsilon(1e-12));
  for (int dn : {-2, 0, 2}) CHECK(std::abs(dist.probability(dn)) < 1e-12);

  const PolarDistribution point = circular_distribution(ket_4r());
  CHECK(point.probability(4) == doctest::Approx(1.0));
}

TEST_CASE("linear statistics of the cat at the three landmark angles") {
  const FockState cat = cat4();

  const PolarDistribution hv = linear_distribution(cat, 0.0);
  CHECK(hv.probability(2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(hv.probability(-2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(hv.probability(0)) < 1e-12);
  CHECK(std::abs(hv.probability(4)) < 1e-12);

  const PolarDistribution mid = linear_distribution(cat, kPi / 8.0);
  CHECK(mid.probability(0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(mid.probability(4) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(mid.probability(-4) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(std::abs(mid.probability(2)) < 1e-12);

  const PolarDistribution binom = linear_distribution(cat, kPi / 16.0);
  CHECK(binom.probability(4) == doctest::Approx(1.0 / 16).epsilon(1e-12));
  CHECK(binom.probability(2) == doctest::Approx(4.0 / 16).epsilon(1e-12));
  CHECK(binom.probability(0) == doctest::Approx(6.0 / 16).epsilon(1e-12));
}

TEST_CASE("distributions normalize and respect the pi/4 period") {
  const FockState cat = cat4();
  for (int j = 0; j < 16; ++j) {
    const double phi = kPi * j / 16.0;
    const PolarDistribution d = linear_distribution(cat, phi);
    double sum = 0.0;
    for (const auto& [dn, p] : d.probs) {
      CHECK(p >= -1e-15);
      sum += p;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    const PolarDistribution shifted = linear_distribution(cat, phi + kPi / 4.0);
    for (int dn = -4; dn <= 4; dn += 2) {
      CHECK(std::abs(shifted.probability(dn) - d.probability(dn)) < 1e-10);
    }
  }
}

TEST_CASE("circular marginal agrees with the basis-rotation route") {
  const FockState s = bottleneck_output(3).first;
  const PolarDistribution direct = circular_distribution(s);

  // Route through the generic rotation machinery: rotate away and back,
  // then count. The two code paths must agree.
  const ModeMap u = linear_basis_map(0.4, spatial_support(s));
  const FockState round_trip = apply_mode_map(apply_mode_map(s, u), adjoint(u));
  const PolarDistribution via_rotation = circular_distribution(round_trip);
  for (int dn = -3; dn <= 3; dn += 2) {
    CHECK(std::abs(via_rotation.probability(dn) - direct.probability(dn)) < 1e-12);
  }
}

TEST_CASE("stokes expectations") {
  const StokesExpectations cat = stokes_expectations(cat4());
  CHECK(std::abs(cat.s1) < 1e-12);
  CHECK(std::abs(cat.s2) < 1e-12);
  CHECK(std::abs(cat.s3) < 1e-12);

  const StokesExpectations right = stokes_expectations(ket_4r());
  CHECK(std::abs(right.s1) < 1e-12);
  CHECK(std::abs(right.s2) < 1e-12);
  CHECK(right.s3 == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("rotation symmetry defect") {
  CHECK(rotation_symmetry_defect(cat4(), 4) < 1e-12);
  CHECK(rotation_symmetry_defect(cat4(), 1) < 1e-15);
  CHECK(rotation_symmetry_defect(ket_4r(), 7) < 1e-15);  // eigenstate, any k

  // |3;1> in the H/V basis breaks the fourfold symmetry: defect 3/4.
  const FockState broken = apply_mode_map(
      basis_state(OccupationVector::of({{mode_r(0), 3}, {mode_l(0), 1}})),
      adjoint(linear_basis_map(0.0)));
  CHECK(rotation_symmetry_defect(broken, 4) == doctest::Approx(0.75).epsilon(1e-12));

  CHECK_THROWS_AS(rotation_symmetry_defect(cat4(), 0), std::invalid_argument);
}

TEST_CASE("zero states cannot be turned into distributions") {
  const FockState zero(2, {});
  CHECK_THROWS_AS(circular_distribution(zero), std::runtime_error);
  CHECK_THROWS_AS(linear_distribution(zero, 0.1), std::runtime_error);
}
