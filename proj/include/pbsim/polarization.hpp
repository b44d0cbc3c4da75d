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
#include <vector>

#include "pbsim/fock.hpp"
#include "pbsim/network.hpp"

namespace pbsim {

enum class PolarBasis { Circular, Linear };

/// Probability mass over the photon-number difference between a pair of
/// orthogonal polarizations. Delta-n runs over {-n, -n+2, ..., n} (full
/// support stored, zeros included); probabilities sum to 1.
struct PolarDistribution {
  int photons = 0;
  PolarBasis basis = PolarBasis::Circular;
  double phi = 0.0;  // measurement angle; meaningful for Linear only
  std::map<int, double> probs;

  double probability(int delta_n) const {
    auto it = probs.find(delta_n);
    return it == probs.end() ? 0.0 : it->second;
  }

  double mean() const {
    double m = 0.0;
    for (const auto& [dn, p] : probs) m += dn * p;
    return m;
  }
};

/// Basis change from circular storage to the linear pair at angle phi,
/// phi measured from the horizontal axis. Convention (fixed so that the
/// phi-dependence of the |4R>/|4L> overlap amplitudes comes out as
/// exp(-/+ i 4 phi) with a +sqrt(6)/4 coefficient on the balanced ket):
///   a^dag_phi        = (e^{+i phi} a^dag_R + e^{-i phi} a^dag_L)/sqrt(2)
///   a^dag_{phi+pi/2} = (e^{+i phi} a^dag_R - e^{-i phi} a^dag_L)/sqrt(2)
/// At phi = 0 this is the H/V pair with a^dag_H = (a^dag_R + a^dag_L)/sqrt(2).
/// In the returned map the R slot of each out mode means "phi" and the L
/// slot means "phi + pi/2".
ModeMap linear_basis_map(double phi, const std::vector<int>& spatials = {0});

/// Marginal of n_R - n_L over every spatial channel of the state
/// (normalizes internally; throws on the zero state).
PolarDistribution circular_distribution(const FockState& s);

/// Rotates into the phi basis and takes the n_phi - n_{phi+pi/2} marginal.
PolarDistribution linear_distribution(const FockState& s, double phi);

struct StokesExpectations {
  double s1 = 0.0;  // <delta n (phi = 0)>
  double s2 = 0.0;  // <delta n (phi = pi/4)>
  double s3 = 0.0;  // <n_R - n_L>
};

StokesExpectations stokes_expectations(const FockState& s);

/// Residual of the k-fold Stokes-rotation symmetry test:
/// 1 - |<s|R_k|s>|^2 / norm^4, where R_k puts a phase exp(-i 2 pi / k) on
/// L relative to R per photon. Zero means invariant up to global phase.
double rotation_symmetry_defect(const FockState& s, int k);

}  // namespace pbsim
