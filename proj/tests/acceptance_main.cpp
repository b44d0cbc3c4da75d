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

// Release gate: one line per criterion, nonzero exit if anything fails.

#include <cstdio>
#include <random>
#include <string>

#include "pbsim/circuit_text.hpp"
#include "pbsim/validate.hpp"

namespace {

using namespace pbsim;

std::string random_garbage(std::mt19937_64& rng) {
  static const char* vocab[] = {"modes",  "source", "bs",     "detect", "output",
                                "format", "linear", "amps",   "zero",   "one",
                                "R=1/2",  "R=9/4",  "R=x/y",  "45deg",  "deg",
                                "0",      "1",      "5",      "-3",     "2.5e9",
                                "#",      "\t",     "\xff\xfe", "|",     "R=1/0"};
  std::string text;
  const int lines = static_cast<int>(rng() % 8);
  for (int i = 0; i < lines; ++i) {
    const int words = static_cast<int>(rng() % 6);
    for (int w = 0; w < words; ++w) {
      if (rng() % 7 == 0) {
        text += static_cast<char>(rng() % 256);
      } else {
        text += vocab[rng() % (sizeof(vocab) / sizeof(vocab[0]))];
      }
      text += ' ';
    }
    text += '\n';
  }
  return text;
}

std::string mutated_circuit(std::mt19937_64& rng) {
  std::string text = serialize(builtin_circuit(
      rng() % 2 == 0 ? BuiltinKind::Merge : BuiltinKind::Ghz,
      1 + static_cast<int>(rng() % 5)));
  const int edits = 1 + static_cast<int>(rng() % 4);
  for (int e = 0; e < edits && !text.empty(); ++e) {
    const size_t pos = rng() % text.size();
    switch (rng() % 3) {
      case 0:
        text[pos] = static_cast<char>(rng() % 128);
        break;
      case 1:
        text.erase(pos, 1);
        break;
      default:
        text.insert(pos, 1, static_cast<char>('0' + rng() % 10));
        break;
    }
  }
  return text;
}

CriterionResult criterion_parser() {
  bool passed = true;
  std::string detail;
  auto fail = [&](const std::string& why) {
    if (passed) {
      passed = false;
      detail = why;
    }
  };

  const CircuitSpec merge = builtin_circuit(BuiltinKind::Merge, 4);
  if (!(parse_circuit(serialize(merge)) == merge)) {
    fail("funnel circuit does not round-trip");
  }
  const CircuitSpec ghz = builtin_circuit(BuiltinKind::Ghz, 4);
  if (!(parse_circuit(serialize(ghz)) == ghz)) {
    fail("fan-out circuit does not round-trip");
  }

  std::mt19937_64 rng(0xF00DF00Dull);
  int diagnostics = 0;
  int accepted = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string text = i % 2 == 0 ? random_garbage(rng) : mutated_circuit(rng);
    try {
      (void)parse_circuit(text);
      ++accepted;
    } catch (const ParseError& e) {
      ++diagnostics;
      if (e.line() < 1 || e.column() < 1 || std::string(e.what()).empty()) {
        fail("diagnostic without position info on fuzz case " + std::to_string(i));
      }
    } catch (const std::exception& e) {
      fail("non-diagnostic exception on fuzz case " + std::to_string(i) + ": " +
           e.what());
    }
  }
  if (diagnostics == 0) fail("fuzzer never produced a diagnostic");

  return {10, "parser round-trip, 1000-case fuzz, criteria aggregation", passed,
          passed ? "round-trips hold; " + std::to_string(diagnostics) +
                       " diagnostics, " + std::to_string(accepted) +
                       " accepted, 0 crashes"
                 : detail};
}

}  // namespace

int main() {
  auto results = run_acceptance_criteria();
  const bool numeric_ok = all_passed(results);

  CriterionResult parser = criterion_parser();
  if (parser.passed && !numeric_ok) {
    parser.passed = false;
    parser.detail = "a numeric criterion failed, validate would exit nonzero";
  }
  results.push_back(parser);

  int failures = 0;
  for (const CriterionResult& r : results) {
    std::printf("criterion %2d %s %s: %s\n", r.index, r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.detail.c_str());
    if (!r.passed) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
