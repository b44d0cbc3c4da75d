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

#include "pbsim/circuit_text.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace pbsim {

namespace {

struct Token {
  std::string_view text;
  int column = 1;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    tokens.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(int line_no, std::string_view line)
      : line_no_(line_no), line_(line), tokens_(tokenize(line)) {}

  bool empty() const { return tokens_.empty(); }

  const Token& directive() const { return tokens_.front(); }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(line_no_, at.column, message);
  }

  const Token& next(const std::string& what) {
    if (pos_ >= tokens_.size()) {
      throw ParseError(line_no_, static_cast<int>(line_.size()) + 1,
                       "expected " + what);
    }
    return tokens_[pos_++];
  }

  void finish() const {
    if (pos_ < tokens_.size()) {
      fail(tokens_[pos_], "unexpected trailing token '" +
                              std::string(tokens_[pos_].text) + "'");
    }
  }

  int parse_int(const std::string& what, int min_value = 0) {
    const Token& tok = next(what);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size() ||
        value < min_value) {
      fail(tok, "malformed " + what + " '" + std::string(tok.text) + "'");
    }
    return value;
  }

  double parse_double(const std::string& what) {
    const Token& tok = next(what);
    return to_double(tok, tok.text, what);
  }

  double to_double(const Token& tok, std::string_view text,
                   const std::string& what) const {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() ||
        !std::isfinite(value)) {
      fail(tok, "malformed " + what + " '" + std::string(tok.text) + "'");
    }
    return value;
  }

 private:
  int line_no_;
  std::string_view line_;
  std::vector<Token> tokens_;
  size_t pos_ = 1;  // directive consumed
};

std::string fmt_double(double v) {
  std::array<char, 64> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace

CircuitSpec parse_circuit(std::string_view text) {
  CircuitSpec spec;
  bool have_modes = false;
  bool any_directive = false;
  int line_no = 0;
  size_t start = 0;

  while (start <= text.size()) {
    const size_t eol = text.find('\n', start);
    std::string_view line = text.substr(
        start, eol == std::string_view::npos ? text.size() - start : eol - start);
    start = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    LineParser lp(line_no, line);
    if (lp.empty()) continue;

    const Token& directive = lp.directive();
    const std::string_view name = directive.text;

    if (name == "format") {
      if (any_directive) lp.fail(directive, "format must be the first directive");
      any_directive = true;
      const Token& version = lp.next("format version");
      if (version.text != "1") {
        lp.fail(version, "unsupported format version '" +
                             std::string(version.text) + "'");
      }
      lp.finish();
      continue;
    }
    any_directive = true;

    if (name == "modes") {
      if (have_modes) lp.fail(directive, "duplicate modes directive");
      spec.n_spatial = lp.parse_int("mode count", 1);
      lp.finish();
      have_modes = true;
      continue;
    }
    if (!have_modes) lp.fail(directive, "no modes directive");

    auto parse_port = [&](const std::string& what) {
      const Token& tok = lp.next(what);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(
          tok.text.data(), tok.text.data() + tok.text.size(), value);
      if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size() ||
          value < 0) {
        lp.fail(tok, "malformed " + what + " '" + std::string(tok.text) + "'");
      }
      if (value >= spec.n_spatial) {
        lp.fail(tok, "port " + std::to_string(value) + " out of range (modes " +
                         std::to_string(spec.n_spatial) + ")");
      }
      return value;
    };

    if (name == "source") {
      SourceSpec src;
      src.port = parse_port("port");
      for (const SourceSpec& existing : spec.sources) {
        if (existing.port == src.port) {
          lp.fail(directive,
                  "duplicate source for port " + std::to_string(src.port));
        }
      }
      const Token& kind = lp.next("'linear' or 'amps'");
      if (kind.text == "linear") {
        const Token& ang = lp.next("angle like 45deg");
        if (ang.text.size() < 4 || ang.text.substr(ang.text.size() - 3) != "deg") {
          lp.fail(ang, "malformed angle '" + std::string(ang.text) +
                           "', expected e.g. 45deg");
        }
        src.is_linear = true;
        src.angle_deg =
            lp.to_double(ang, ang.text.substr(0, ang.text.size() - 3), "angle");
      } else if (kind.text == "amps") {
        src.is_linear = false;
        for (double& a : src.amps) a = lp.parse_double("amplitude");
        if (src.amps == std::array<double, 4>{0, 0, 0, 0}) {
          lp.fail(kind, "source amplitudes are all zero");
        }
      } else {
        lp.fail(kind, "expected 'linear' or 'amps', got '" +
                          std::string(kind.text) + "'");
      }
      lp.finish();
      spec.sources.push_back(src);
    } else if (name == "bs") {
      SplitterSpec bs;
      bs.port_in = parse_port("input port");
      bs.port_line = parse_port("line port");
      if (bs.port_in == bs.port_line) {
        lp.fail(directive, "beam splitter ports must be distinct");
      }
      const Token& refl = lp.next("reflectivity like R=1/2");
      const std::string_view body = refl.text;
      bool ok = body.size() > 2 && body.substr(0, 2) == "R=";
      if (ok) {
        const std::string_view frac = body.substr(2);
        const size_t slash = frac.find('/');
        ok = slash != std::string_view::npos;
        if (ok) {
          const auto num = frac.substr(0, slash);
          const auto den = frac.substr(slash + 1);
          auto read_int = [&](std::string_view s, int& out) {
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            return ec == std::errc{} && ptr == s.data() + s.size();
          };
          ok = read_int(num, bs.refl_num) && read_int(den, bs.refl_den) &&
               bs.refl_den > 0 && bs.refl_num >= 0;
        }
      }
      if (!ok) {
        lp.fail(refl, "malformed reflectivity '" + std::string(body) +
                          "', expected R=<p>/<q>");
      }
      if (bs.refl_num > bs.refl_den) {
        lp.fail(refl, "reflectivity " + std::to_string(bs.refl_num) + "/" +
                          std::to_string(bs.refl_den) + " exceeds 1");
      }
      lp.finish();
      spec.elements.push_back(bs);
    } else if (name == "detect") {
      DetectSpec det;
      det.port = parse_port("port");
      const Token& kind = lp.next("'zero' or 'one'");
      if (kind.text == "zero") {
        det.kind = DetectKind::Zero;
      } else if (kind.text == "one") {
        det.kind = DetectKind::ExactlyOne;
      } else {
        lp.fail(kind,
                "expected 'zero' or 'one', got '" + std::string(kind.text) + "'");
      }
      for (const DetectSpec& existing : spec.detections) {
        if (existing.port == det.port) {
          lp.fail(directive,
                  "duplicate detect for port " + std::to_string(det.port));
        }
      }
      lp.finish();
      spec.detections.push_back(det);
    } else if (name == "output") {
      const int port = parse_port("port");
      if (std::find(spec.outputs.begin(), spec.outputs.end(), port) !=
          spec.outputs.end()) {
        lp.fail(directive, "duplicate output port " + std::to_string(port));
      }
      lp.finish();
      spec.outputs.push_back(port);
    } else {
      lp.fail(directive, "unknown directive '" + std::string(name) + "'");
    }
  }

  if (!have_modes) throw ParseError(1, 1, "no modes directive");
  return spec;
}

std::string serialize(const CircuitSpec& spec) {
  std::string out = "format 1\n";
  out += "modes " + std::to_string(spec.n_spatial) + "\n";
  for (const SourceSpec& src : spec.sources) {
    out += "source " + std::to_string(src.port);
    if (src.is_linear) {
      out += " linear " + fmt_double(src.angle_deg) + "deg";
    } else {
      out += " amps";
      for (double a : src.amps) out += " " + fmt_double(a);
    }
    out += "\n";
  }
  for (const SplitterSpec& bs : spec.elements) {
    out += "bs " + std::to_string(bs.port_in) + " " +
           std::to_string(bs.port_line) + " R=" + std::to_string(bs.refl_num) +
           "/" + std::to_string(bs.refl_den) + "\n";
  }
  for (const DetectSpec& det : spec.detections) {
    out += "detect " + std::to_string(det.port) +
           (det.kind == DetectKind::Zero ? " zero\n" : " one\n");
  }
  for (int port : spec.outputs) {
    out += "output " + std::to_string(port) + "\n";
  }
  return out;
}

CircuitSpec builtin_circuit(BuiltinKind kind, int n) {
  if (n < 1) throw std::invalid_argument("builtin circuit needs n >= 1");
  CircuitSpec spec;
  spec.n_spatial = kind == BuiltinKind::Merge ? n : 2 * n - 1;
  for (int l = 0; l < n; ++l) {
    spec.sources.push_back({l, true, 180.0 * l / n, {}});
  }
  for (int k = 1; k < n; ++k) {
    spec.elements.push_back({k, 0, 1, k + 1});
  }
  if (kind == BuiltinKind::Merge) {
    for (int k = 1; k < n; ++k) spec.detections.push_back({k, DetectKind::Zero});
    spec.outputs.push_back(0);
    return spec;
  }
  // Fan-out onto fresh ports n..2n-2, couplers in reverse order (each
  // block is real-symmetric, so this realizes the adjoint of the funnel).
  for (int k = n - 1; k >= 1; --k) {
    spec.elements.push_back({n - 1 + k, 0, 1, k + 1});
  }
  for (int k = 1; k < n; ++k) spec.detections.push_back({k, DetectKind::Zero});
  spec.detections.push_back({0, DetectKind::ExactlyOne});
  spec.outputs.push_back(0);
  for (int c = n; c <= 2 * n - 2; ++c) {
    spec.detections.push_back({c, DetectKind::ExactlyOne});
    spec.outputs.push_back(c);
  }
  return spec;
}

ProductPhotonState circuit_input(const CircuitSpec& spec) {
  ProductPhotonState p;
  p.modes = polarization_modes(spec.n_spatial);
  for (const SourceSpec& src : spec.sources) {
    if (src.is_linear) {
      p.photons.push_back(linear_photon(src.angle_deg * std::numbers::pi / 180.0,
                                        src.port, p.modes));
    } else {
      Eigen::VectorXcd v =
          Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(p.modes.size()));
      v(2 * src.port) = Complex{src.amps[0], src.amps[1]};
      v(2 * src.port + 1) = Complex{src.amps[2], src.amps[3]};
      p.photons.push_back(std::move(v));
    }
  }
  return p;
}

ModeMap circuit_mode_map(const CircuitSpec& spec) {
  ModeMap u = identity_map(polarization_modes(spec.n_spatial));
  for (const SplitterSpec& bs : spec.elements) {
    const double reflectivity =
        static_cast<double>(bs.refl_num) / static_cast<double>(bs.refl_den);
    u = compose(u, beam_splitter_map({bs.port_line, bs.port_in, reflectivity},
                                     spec.n_spatial));
  }
  return u;
}

PostSelectionRule circuit_rule(const CircuitSpec& spec) {
  PostSelectionRule rule;
  for (const DetectSpec& det : spec.detections) {
    rule.push_back({{det.port}, det.kind});
  }
  return rule;
}

std::pair<FockState, double> run_circuit(const CircuitSpec& spec) {
  const FockState expanded =
      expand_product(apply_mode_map(circuit_input(spec), circuit_mode_map(spec)));
  const FockState out = project(expanded, circuit_rule(spec));
  return {out, norm_sq(out)};
}

}  // namespace pbsim
