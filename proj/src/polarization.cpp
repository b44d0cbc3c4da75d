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

#include "pbsim/polarization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pbsim {

namespace {

int delta_n(const OccupationVector& occ) {
  int d = 0;
  for (const auto& [mode, count] : occ.entries()) {
    d += mode.pol == Pol::R ? count : -count;
  }
  return d;
}

PolarDistribution marginal(const FockState& s, PolarBasis basis, double phi) {
  const auto [unit, n2] = normalize(s);
  PolarDistribution dist;
  dist.photons = unit.photons();
  dist.basis = basis;
  dist.phi = phi;
  for (int dn = -unit.photons(); dn <= unit.photons(); dn += 2) {
    dist.probs[dn] = 0.0;
  }
  for (const auto& [occ, amp] : unit.terms()) {
    dist.probs[delta_n(occ)] += std::norm(amp);
  }
  return dist;
}

}  // namespace

ModeMap linear_basis_map(double phi, const std::vector<int>& spatials) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const Complex em = inv_sqrt2 * std::exp(Complex{0.0, -phi});
  const Complex ep = inv_sqrt2 * std::exp(Complex{0.0, +phi});
  std::vector<ModeId> modes;
  for (int s : spatials) {
    modes.push_back(mode_r(s));
    modes.push_back(mode_l(s));
  }
  ModeMap u = identity_map(modes);
  for (size_t k = 0; k < spatials.size(); ++k) {
    const auto row = static_cast<Eigen::Index>(2 * k);
    // Columns are the images of a^dag_R and a^dag_L in the phi basis.
    u.matrix(row, row) = em;
    u.matrix(row + 1, row) = em;
    u.matrix(row, row + 1) = ep;
    u.matrix(row + 1, row + 1) = -ep;
  }
  return u;
}

PolarDistribution circular_distribution(const FockState& s) {
  return marginal(s, PolarBasis::Circular, 0.0);
}

PolarDistribution linear_distribution(const FockState& s, double phi) {
  const FockState rotated =
      apply_mode_map(s, linear_basis_map(phi, spatial_support(s)));
  return marginal(rotated, PolarBasis::Linear, phi);
}

StokesExpectations stokes_expectations(const FockState& s) {
  StokesExpectations st;
  st.s1 = linear_distribution(s, 0.0).mean();
  st.s2 = linear_distribution(s, std::numbers::pi / 4.0).mean();
  st.s3 = circular_distribution(s).mean();
  return st;
}

double rotation_symmetry_defect(const FockState& s, int k) {
  if (k < 1) throw std::invalid_argument("rotation order k must be >= 1");
  const double n2 = norm_sq(s);
  if (n2 == 0.0) return 0.0;
  Complex overlap{0.0, 0.0};
  for (const auto& [occ, amp] : s.terms()) {
    int n_left = 0;
    for (const auto& [mode, count] : occ.entries()) {
      if (mode.pol == Pol::L) n_left += count;
    }
    overlap += std::norm(amp) *
               std::exp(Complex{0.0, -2.0 * std::numbers::pi * n_left / k});
  }
  return 1.0 - std::norm(overlap) / (n2 * n2);
}

}  // namespace pbsim
