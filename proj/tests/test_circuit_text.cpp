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

#include "doctest.h"
#include "pbsim/circuit_text.hpp"
#include "pbsim/entanglement.hpp"
#include "pbsim/postselect.hpp"

using namespace pbsim;

namespace {

const char* kFig1 =
    "modes 4\n"
    "source 0 linear 0deg\n"
    "source 1 linear 45deg\n"
    "source 2 linear 90deg\n"
    "source 3 linear 135deg\n"
    "bs 1 0 R=1/2\n"
    "bs 2 0 R=1/3\n"
    "bs 3 0 R=1/4\n"
    "detect 1 zero\n"
    "detect 2 zero\n"
    "detect 3 zero\n"
    "output 0\n";

}  // namespace

TEST_CASE("the funnel circuit text parses to the builtin") {
  const CircuitSpec spec = parse_circuit(kFig1);
  CHECK(spec == builtin_circuit(BuiltinKind::Merge, 4));
}

TEST_CASE("running the funnel circuit reproduces the pipeline") {
  const auto [state, prob] = run_circuit(parse_circuit(kFig1));
  const auto [expected, expected_prob] = bottleneck_output(4);
  CHECK(prob == doctest::Approx(expected_prob).epsilon(1e-12));
  CHECK(phase_equal(state, expected, 1e-10));
}

TEST_CASE("comments, blank lines, and the format header are accepted") {
  const CircuitSpec spec = parse_circuit(
      "# a comment\n\nformat 1\nmodes 2\nsource 0 linear 0deg # trailing\n"
      "bs 1 0 R=1/2\ndetect 1 zero\noutput 0\n");
  CHECK(spec.n_spatial == 2);
  CHECK(spec.sources.size() == 1);
}

TEST_CASE("parse errors carry line and column") {
  CHECK_THROWS_WITH_AS(parse_circuit(""), "line 1, col 1: no modes directive",
                       ParseError);

  try {
    parse_circuit("modes 4\nbs 5 0 R=1/2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("port 5 out of range (modes 4)") !=
          std::string::npos);
  }

  CHECK_THROWS_AS(parse_circuit("modes 2\nwibble 1\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("modes 2\nbs 1 0 R=0.5\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("modes 2\nbs 1 0 R=3/2\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("modes 2\nsource 0 linear 45\n"), ParseError);
  CHECK_THROWS_AS(
      parse_circuit("modes 2\nsource 0 linear 0deg\nsource 0 linear 45deg\n"),
      ParseError);
  CHECK_THROWS_AS(parse_circuit("modes 2\nmodes 3\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("modes 2\nformat 1\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("format 2\nmodes 2\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("source 0 linear 0deg\nmodes 2\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("modes 2\ndetect 0 maybe\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("modes 2\nbs 1 1 R=1/2\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("modes 2\noutput 0\noutput 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("modes 2\nsource 0 amps 0 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("modes 2\nbs 1 0 R=1/2 junk\n"), ParseError);
}

TEST_CASE("builtins round-trip through serialize/parse") {
  for (int n = 1; n <= 5; ++n) {
    const CircuitSpec merge = builtin_circuit(BuiltinKind::Merge, n);
    CHECK(parse_circuit(serialize(merge)) == merge);
    const CircuitSpec ghz = builtin_circuit(BuiltinKind::Ghz, n);
    CHECK(parse_circuit(serialize(ghz)) == ghz);
  }

  CircuitSpec amps;
  amps.n_spatial = 3;
  amps.sources.push_back({1, false, 0.0, {0.25, -0.5, 1.0 / 3.0, 0.0}});
  amps.elements.push_back({2, 1, 2, 5});
  amps.detections.push_back({2, DetectKind::ExactlyOne});
  amps.outputs = {1};
  CHECK(parse_circuit(serialize(amps)) == amps);
}

TEST_CASE("merge builtin for one photon is a bare passthrough") {
  const CircuitSpec spec = builtin_circuit(BuiltinKind::Merge, 1);
  CHECK(spec.n_spatial == 1);
  CHECK(spec.elements.empty());
  CHECK(spec.detections.empty());
  const auto [state, prob] = run_circuit(spec);
  CHECK(prob == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("ghz builtin holds both cascades and one-photon detections") {
  const CircuitSpec spec = builtin_circuit(BuiltinKind::Ghz, 4);
  CHECK(spec.n_spatial == 7);
  CHECK(spec.elements.size() == 6);
  int ones = 0;
  for (const DetectSpec& det : spec.detections) {
    if (det.kind == DetectKind::ExactlyOne) ++ones;
  }
  CHECK(ones == 4);
  CHECK(spec.outputs == std::vector<int>{0, 4, 5, 6});

  const auto [state, prob] = run_circuit(spec);
  CHECK(prob == doctest::Approx(9.0 / 8192.0).epsilon(1e-12));

  // Relabel the output channels {0,4,5,6} onto {0,1,2,3} and compare with
  // the GHZ state.
  FockState::TermMap relabeled;
  for (const auto& [occ, amp] : state.terms()) {
    OccupationVector out;
    for (const auto& [mode, count] : occ.entries()) {
      const int channel = mode.spatial == 0 ? 0 : mode.spatial - 3;
      out = out.with_added({channel, mode.pol}, count);
    }
    relabeled[out] = amp;
  }
  CHECK(phase_equal(normalize(FockState(4, relabeled)).first, ghz_state(4), 1e-10));
}

TEST_CASE("fuzzing garbage lines yields diagnostics, not crashes") {
  const char* cases[] = {
      "modes\n",          "modes -3\n",     "modes 2\nsource\n",
      "modes 2\nbs 0\n",  "modes 2\nbs 0 1\n", "modes 2\nbs 0 1 R=\n",
      "modes 2\nbs 0 1 R=1/\n", "modes 2\nbs 0 1 R=/2\n",
      "modes 2\nsource 0 linear deg\n", "modes 2\nsource 0 amps 1 2 3\n",
      "modes two\n",      "\x01\x02\x03\n", "modes 2\ndetect -1 zero\n"};
  for (const char* text : cases) {
    CHECK_THROWS_AS(parse_circuit(text), ParseError);
  }
}
