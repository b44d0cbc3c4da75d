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

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "pbsim/fock.hpp"
#include "pbsim/modes.hpp"

namespace pbsim {

/// Linear-optical mode transform. matrix(out, in) is the coefficient of
/// a^dag_out in the image of a^dag_in, so a single photon prepared in
/// column vector v leaves the network as matrix * v. Isometric by
/// construction for everything built here.
struct ModeMap {
  std::vector<ModeId> in_modes;
  std::vector<ModeId> out_modes;
  Eigen::MatrixXcd matrix;
};

/// Canonical mode ordering for spatial channels [first, first+count):
/// (s,R),(s,L) pairs in increasing s.
std::vector<ModeId> polarization_modes(int count, int first = 0);

ModeMap identity_map(const std::vector<ModeId>& modes);

/// u1 then u2; requires u1.out_modes == u2.in_modes.
ModeMap compose(const ModeMap& u1, const ModeMap& u2);

ModeMap adjoint(const ModeMap& u);

/// Block-diagonal sum; mode sets must be disjoint.
ModeMap direct_sum(const ModeMap& a, const ModeMap& b);

/// Same map acting on spatial channels shifted by `offset`.
ModeMap shift_spatial(const ModeMap& u, int offset);

/// Max deviation of U^dag U from the identity on the input space.
double isometry_defect(const ModeMap& u);

/// Two-port coupler, polarization neutral. On ports (a, b) the block is
///   [[ t, r ],
///    [ r, -t ]],  t = sqrt(1-R), r = sqrt(R),
/// identical for the R and L blocks. The -t sign sits on the port_b row:
/// cascades put the bus line on port_a and the fresh (later discarded)
/// input on port_b, which keeps all bus coefficients on a common phase.
struct BeamSplitter {
  int port_a = 0;
  int port_b = 1;
  double reflectivity = 0.5;
};

ModeMap beam_splitter_map(const BeamSplitter& bs, int total_spatial);

enum class CascadeDirection { Merge, Split };

/// Beam-splitter line that funnels n input channels into channel 0 (Merge)
/// or fans channel 0 out into n channels (Split). Splitter k (1-indexed)
/// couples port k to the line with R = 1/(k+1); Split applies the same
/// couplers in reverse order, which realizes the adjoint map since each
/// block is real-symmetric.
struct CascadeSpec {
  int photons = 1;
  CascadeDirection direction = CascadeDirection::Merge;
  std::vector<BeamSplitter> splitters;
};

CascadeSpec cascade_spec(int n, CascadeDirection direction);
ModeMap cascade_mode_map(const CascadeSpec& spec);

/// Funnel: the bus row of the result is (1/sqrt(n), ..., 1/sqrt(n)) with a
/// single common phase, so per-port input phases survive verbatim.
ModeMap merge_cascade(int n);

/// Entrywise adjoint of merge_cascade(n): one line feeds n channels with
/// amplitude 1/sqrt(n) each.
ModeMap split_cascade(int n);

/// The n-photon source array: photon l (l = 0..n-1) enters spatial port l
/// linearly polarized at angle pi*l/n, i.e. amplitudes 2^{-1/2} on (l,R)
/// and 2^{-1/2} exp(-i 2 pi l / n) on (l,L). Unit norm.
ProductPhotonState build_input(int n);

/// Single photon at spatial `port`, linear polarization angle `theta`
/// (radians): amplitudes (1, exp(-2 i theta)) / sqrt(2) on (R, L).
Eigen::VectorXcd linear_photon(double theta, int port,
                               const std::vector<ModeId>& modes);

/// Photon-wise application: each single-photon vector picks up the matrix.
/// Norm is preserved for isometries. The state's modes must all appear in
/// u.in_modes.
ProductPhotonState apply_mode_map(const ProductPhotonState& p, const ModeMap& u);

/// Fock-basis application of the same transform: each occupation is
/// re-expanded through the matrix columns with the bosonic factorial
/// weights. Agrees with expand_product(apply_mode_map(p, u)).
FockState apply_mode_map(const FockState& s, const ModeMap& u);

/// JSON wire format: the two mode-order lists plus the row-major matrix as
/// [re, im] pairs (CLI --dump-unitary).
std::string to_json(const ModeMap& u);

}  // namespace pbsim
