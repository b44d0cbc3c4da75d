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

#include "pbsim/network.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nlohmann/json.hpp"

namespace pbsim {

namespace {

int mode_index(const std::vector<ModeId>& modes, ModeId mode) {
  for (int i = 0; i < static_cast<int>(modes.size()); ++i) {
    if (modes[i] == mode) return i;
  }
  return -1;
}

void check_disjoint(const std::vector<ModeId>& a, const std::vector<ModeId>& b) {
  for (const ModeId& m : b) {
    if (mode_index(a, m) >= 0) {
      throw std::invalid_argument("mode sets are not disjoint at spatial " +
                                  std::to_string(m.spatial));
    }
  }
}

}  // namespace

std::vector<ModeId> polarization_modes(int count, int first) {
  std::vector<ModeId> modes;
  modes.reserve(2 * count);
  for (int s = first; s < first + count; ++s) {
    modes.push_back(mode_r(s));
    modes.push_back(mode_l(s));
  }
  return modes;
}

ModeMap identity_map(const std::vector<ModeId>& modes) {
  const auto n = static_cast<Eigen::Index>(modes.size());
  return {modes, modes, Eigen::MatrixXcd::Identity(n, n)};
}

ModeMap compose(const ModeMap& u1, const ModeMap& u2) {
  if (u1.out_modes != u2.in_modes) {
    throw std::invalid_argument("compose: u1.out_modes != u2.in_modes");
  }
  return {u1.in_modes, u2.out_modes, u2.matrix * u1.matrix};
}

ModeMap adjoint(const ModeMap& u) {
  return {u.out_modes, u.in_modes, u.matrix.adjoint()};
}

ModeMap direct_sum(const ModeMap& a, const ModeMap& b) {
  check_disjoint(a.in_modes, b.in_modes);
  check_disjoint(a.out_modes, b.out_modes);
  std::vector<ModeId> in_modes = a.in_modes;
  in_modes.insert(in_modes.end(), b.in_modes.begin(), b.in_modes.end());
  std::vector<ModeId> out_modes = a.out_modes;
  out_modes.insert(out_modes.end(), b.out_modes.begin(), b.out_modes.end());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(out_modes.size()),
      static_cast<Eigen::Index>(in_modes.size()));
  m.topLeftCorner(a.matrix.rows(), a.matrix.cols()) = a.matrix;
  m.bottomRightCorner(b.matrix.rows(), b.matrix.cols()) = b.matrix;
  return {std::move(in_modes), std::move(out_modes), std::move(m)};
}

ModeMap shift_spatial(const ModeMap& u, int offset) {
  ModeMap out = u;
  for (ModeId& m : out.in_modes) m.spatial += offset;
  for (ModeId& m : out.out_modes) m.spatial += offset;
  return out;
}

double isometry_defect(const ModeMap& u) {
  const Eigen::MatrixXcd gram = u.matrix.adjoint() * u.matrix;
  const auto n = gram.rows();
  return (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

ModeMap beam_splitter_map(const BeamSplitter& bs, int total_spatial) {
  if (bs.port_a == bs.port_b) {
    throw std::invalid_argument("beam splitter ports must be distinct");
  }
  if (bs.port_a < 0 || bs.port_b < 0 || bs.port_a >= total_spatial ||
      bs.port_b >= total_spatial) {
    throw std::invalid_argument("beam splitter port out of range");
  }
  if (!(bs.reflectivity >= 0.0 && bs.reflectivity <= 1.0)) {
    throw std::invalid_argument("reflectivity must lie in [0, 1]");
  }
  const double t = std::sqrt(1.0 - bs.reflectivity);
  const double r = std::sqrt(bs.reflectivity);
  ModeMap u = identity_map(polarization_modes(total_spatial));
  for (const Pol pol : {Pol::R, Pol::L}) {
    const int ia = mode_index(u.in_modes, {bs.port_a, pol});
    const int ib = mode_index(u.in_modes, {bs.port_b, pol});
    u.matrix(ia, ia) = t;
    u.matrix(ia, ib) = r;
    u.matrix(ib, ia) = r;
    u.matrix(ib, ib) = -t;
  }
  return u;
}

CascadeSpec cascade_spec(int n, CascadeDirection direction) {
  if (n < 1) throw std::invalid_argument("cascade needs n >= 1");
  CascadeSpec spec{n, direction, {}};
  for (int k = 1; k < n; ++k) {
    spec.splitters.push_back({0, k, 1.0 / (k + 1)});
  }
  if (direction == CascadeDirection::Split) {
    std::reverse(spec.splitters.begin(), spec.splitters.end());
  }
  return spec;
}

ModeMap cascade_mode_map(const CascadeSpec& spec) {
  ModeMap u = identity_map(polarization_modes(spec.photons));
  for (const BeamSplitter& bs : spec.splitters) {
    u = compose(u, beam_splitter_map(bs, spec.photons));
  }
  return u;
}

ModeMap merge_cascade(int n) {
  return cascade_mode_map(cascade_spec(n, CascadeDirection::Merge));
}

ModeMap split_cascade(int n) {
  return cascade_mode_map(cascade_spec(n, CascadeDirection::Split));
}

Eigen::VectorXcd linear_photon(double theta, int port,
                               const std::vector<ModeId>& modes) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(modes.size()));
  const int ir = mode_index(modes, mode_r(port));
  const int il = mode_index(modes, mode_l(port));
  if (ir < 0 || il < 0) {
    throw std::invalid_argument("port " + std::to_string(port) +
                                " not present in mode list");
  }
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  v(ir) = inv_sqrt2;
  v(il) = inv_sqrt2 * std::exp(Complex{0.0, -2.0 * theta});
  return v;
}

ProductPhotonState build_input(int n) {
  if (n < 1) throw std::invalid_argument("build_input needs n >= 1");
  ProductPhotonState p;
  p.modes = polarization_modes(n);
  for (int l = 0; l < n; ++l) {
    p.photons.push_back(linear_photon(std::numbers::pi * l / n, l, p.modes));
  }
  return p;
}

ProductPhotonState apply_mode_map(const ProductPhotonState& p, const ModeMap& u) {
  std::vector<int> embed(p.modes.size());
  for (size_t j = 0; j < p.modes.size(); ++j) {
    const int idx = mode_index(u.in_modes, p.modes[j]);
    if (idx < 0) {
      throw std::invalid_argument("state mode (spatial " +
                                  std::to_string(p.modes[j].spatial) +
                                  ") missing from map input modes");
    }
    embed[j] = idx;
  }
  ProductPhotonState out;
  out.modes = u.out_modes;
  out.scale = p.scale;
  for (const auto& v : p.photons) {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(u.matrix.rows());
    for (size_t j = 0; j < p.modes.size(); ++j) {
      if (v(static_cast<Eigen::Index>(j)) != Complex{0.0, 0.0}) {
        w += v(static_cast<Eigen::Index>(j)) * u.matrix.col(embed[j]);
      }
    }
    out.photons.push_back(std::move(w));
  }
  return out;
}

FockState apply_mode_map(const FockState& s, const ModeMap& u) {
  FockState::TermMap acc;
  for (const auto& [occ, amp] : s.terms()) {
    // |occ> = prod_m (a^dag_m)^{n_m} / sqrt(n_m!) |vac>; feed the matrix
    // columns through the product expansion with that normalization.
    ProductPhotonState p;
    p.modes = u.out_modes;
    double inv_fact = 1.0;
    for (const auto& [mode, count] : occ.entries()) {
      const int col = mode_index(u.in_modes, mode);
      if (col < 0) {
        throw std::invalid_argument("state mode (spatial " +
                                    std::to_string(mode.spatial) +
                                    ") missing from map input modes");
      }
      for (int k = 1; k <= count; ++k) {
        p.photons.push_back(u.matrix.col(col));
        inv_fact /= std::sqrt(static_cast<double>(k));
      }
    }
    p.scale = amp * inv_fact;
    if (p.photons.empty()) {
      acc[OccupationVector{}] += p.scale;
      continue;
    }
    const FockState expanded = expand_product(p);
    for (const auto& [occ_out, amp_out] : expanded.terms()) {
      acc[occ_out] += amp_out;
    }
  }
  return FockState(s.photons(), std::move(acc));
}

std::string to_json(const ModeMap& u) {
  auto modes_json = [](const std::vector<ModeId>& modes) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ModeId& m : modes) {
      arr.push_back({m.spatial, std::string(1, pol_char(m.pol))});
    }
    return arr;
  };
  nlohmann::json j;
  j["in_modes"] = modes_json(u.in_modes);
  j["out_modes"] = modes_json(u.out_modes);
  nlohmann::json mat = nlohmann::json::array();
  for (Eigen::Index row = 0; row < u.matrix.rows(); ++row) {
    for (Eigen::Index col = 0; col < u.matrix.cols(); ++col) {
      mat.push_back({u.matrix(row, col).real(), u.matrix(row, col).imag()});
    }
  }
  j["matrix"] = mat;
  return j.dump();
}

}  // namespace pbsim
