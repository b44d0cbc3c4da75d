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

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbsim/fock.hpp"
#include "pbsim/network.hpp"
#include "pbsim/postselect.hpp"

namespace pbsim {

// Line-oriented circuit description, one directive per line, `#` comments:
//
//   format 1                                   (optional, first)
//   modes <n>
//   source <port> linear <angle>deg
//   source <port> amps <re_R> <im_R> <re_L> <im_L>
//   bs <port_in> <port_line> R=<p>/<q>
//   detect <port> (zero|one)
//   output <port>
//
// Reflectivities are exact fractions so files round-trip without float
// drift. `source <port> linear <theta>` prepares R/L amplitudes
// (1, exp(-2 i theta))/sqrt(2).

struct SourceSpec {
  int port = 0;
  bool is_linear = true;
  double angle_deg = 0.0;                     // when is_linear
  std::array<double, 4> amps{0, 0, 0, 0};     // re_R, im_R, re_L, im_L otherwise

  friend bool operator==(const SourceSpec&, const SourceSpec&) = default;
};

struct SplitterSpec {
  int port_in = 0;
  int port_line = 0;
  int refl_num = 1;
  int refl_den = 2;

  friend bool operator==(const SplitterSpec&, const SplitterSpec&) = default;
};

struct DetectSpec {
  int port = 0;
  DetectKind kind = DetectKind::Zero;

  friend bool operator==(const DetectSpec&, const DetectSpec&) = default;
};

struct CircuitSpec {
  int n_spatial = 0;
  std::vector<SourceSpec> sources;
  std::vector<SplitterSpec> elements;  // evaluation order
  std::vector<DetectSpec> detections;
  std::vector<int> outputs;

  friend bool operator==(const CircuitSpec&, const CircuitSpec&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Throws ParseError with line/column on any malformed input; never
/// crashes on garbage.
CircuitSpec parse_circuit(std::string_view text);

/// Canonical text form; parse(serialize(spec)) == spec.
std::string serialize(const CircuitSpec& spec);

enum class BuiltinKind { Merge, Ghz };

/// Merge: the n-to-1 funnel with zero-detects on the discard ports.
/// Ghz: funnel plus fan-out onto fresh ports (2n-1 spatial modes total, so
/// discarded merge amplitudes cannot re-enter the line) with one-photon
/// detects on the n output channels {0, n, ..., 2n-2}.
CircuitSpec builtin_circuit(BuiltinKind kind, int n);

ProductPhotonState circuit_input(const CircuitSpec& spec);
ModeMap circuit_mode_map(const CircuitSpec& spec);
PostSelectionRule circuit_rule(const CircuitSpec& spec);

/// Expand, apply, project. Returns the unnormalized post-selected state
/// and its success probability.
std::pair<FockState, double> run_circuit(const CircuitSpec& spec);

}  // namespace pbsim
