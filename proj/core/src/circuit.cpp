#include "qkit/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qkit/errors.hpp"

namespace qkit {

bool CircuitFile::has_measure() const {
  return std::any_of(ops.begin(), ops.end(), [](const CircuitOp& op) {
    return op.kind == CircuitOp::Kind::MeasureAll ||
           op.kind == CircuitOp::Kind::MeasureQubit;
  });
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

int parse_index(const std::string& tok, int n, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a qubit index, got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ParseError(line, "expected a qubit index, got '" + tok + "'");
  }
  if (v < 0 || v >= n) {
    throw ParseError(line, "qubit index out of range");
  }
  return v;
}

double parse_param(const std::string& tok, int line) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a real parameter, got '" + tok + "'");
  }
  if (used != tok.size() || !std::isfinite(v)) {
    throw ParseError(line, "parameter must be a finite real, got '" + tok + "'");
  }
  return v;
}

void expect_tokens(const std::vector<std::string>& tokens, std::size_t want,
                   int line) {
  if (tokens.size() != want) {
    throw ParseError(line, "wrong number of arguments for '" + tokens[0] + "'");
  }
}

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

CircuitFile parse_circuit(std::string_view text) {
  CircuitFile c;
  bool have_header = false;
  bool have_measure_all = false;

  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::istringstream is{std::string(raw)};
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    const std::string head = lower(tokens[0]);
    if (!have_header) {
      if (head != "qubits") {
        throw ParseError(line_number, "missing 'qubits N' header");
      }
      expect_tokens(tokens, 2, line_number);
      try {
        c.n = std::stoi(tokens[1]);
      } catch (const std::exception&) {
        throw ParseError(line_number, "qubit count must be an integer");
      }
      if (c.n < 1) {
        throw ParseError(line_number, "qubit count must be positive");
      }
      have_header = true;
      continue;
    }

    if (have_measure_all) {
      throw ParseError(line_number, "'measure all' must be the last operation");
    }

    CircuitOp op;
    if (head == "h" || head == "s" || head == "t" || head == "x" ||
        head == "y" || head == "z") {
      expect_tokens(tokens, 2, line_number);
      op.kind = head == "h"   ? CircuitOp::Kind::H
                : head == "s" ? CircuitOp::Kind::S
                : head == "t" ? CircuitOp::Kind::T
                : head == "x" ? CircuitOp::Kind::X
                : head == "y" ? CircuitOp::Kind::Y
                              : CircuitOp::Kind::Z;
      op.q0 = parse_index(tokens[1], c.n, line_number);
    } else if (head == "u") {
      expect_tokens(tokens, 6, line_number);
      op.kind = CircuitOp::Kind::U;
      op.q0 = parse_index(tokens[1], c.n, line_number);
      op.params.a = parse_param(tokens[2], line_number);
      op.params.b = parse_param(tokens[3], line_number);
      op.params.c = parse_param(tokens[4], line_number);
      op.params.d = parse_param(tokens[5], line_number);
    } else if (head == "cnot") {
      expect_tokens(tokens, 3, line_number);
      op.kind = CircuitOp::Kind::Cnot;
      op.q0 = parse_index(tokens[1], c.n, line_number);
      op.q1 = parse_index(tokens[2], c.n, line_number);
      if (op.q0 == op.q1) {
        throw ParseError(line_number, "cnot control equals target");
      }
    } else if (head == "toffoli") {
      expect_tokens(tokens, 4, line_number);
      op.kind = CircuitOp::Kind::Toffoli;
      op.q0 = parse_index(tokens[1], c.n, line_number);
      op.q1 = parse_index(tokens[2], c.n, line_number);
      op.q2 = parse_index(tokens[3], c.n, line_number);
      if (op.q0 == op.q1 || op.q0 == op.q2 || op.q1 == op.q2) {
        throw ParseError(line_number, "toffoli qubit indices must be distinct");
      }
    } else if (head == "measure") {
      expect_tokens(tokens, 2, line_number);
      if (lower(tokens[1]) == "all") {
        op.kind = CircuitOp::Kind::MeasureAll;
        have_measure_all = true;
      } else {
        op.kind = CircuitOp::Kind::MeasureQubit;
        op.q0 = parse_index(tokens[1], c.n, line_number);
      }
    } else {
      throw ParseError(line_number, "unknown operation '" + tokens[0] + "'");
    }
    c.ops.push_back(op);
  }
  if (!have_header) {
    throw ParseError(line_number, "missing 'qubits N' header");
  }
  return c;
}

std::string render_circuit(const CircuitFile& c) {
  std::ostringstream os;
  os << "qubits " << c.n << "\n";
  for (const CircuitOp& op : c.ops) {
    switch (op.kind) {
      case CircuitOp::Kind::H: os << "h " << op.q0; break;
      case CircuitOp::Kind::S: os << "s " << op.q0; break;
      case CircuitOp::Kind::T: os << "t " << op.q0; break;
      case CircuitOp::Kind::X: os << "x " << op.q0; break;
      case CircuitOp::Kind::Y: os << "y " << op.q0; break;
      case CircuitOp::Kind::Z: os << "z " << op.q0; break;
      case CircuitOp::Kind::U:
        os << "u " << op.q0 << ' ' << format17(op.params.a) << ' '
           << format17(op.params.b) << ' ' << format17(op.params.c) << ' '
           << format17(op.params.d);
        break;
      case CircuitOp::Kind::Cnot: os << "cnot " << op.q0 << ' ' << op.q1; break;
      case CircuitOp::Kind::Toffoli:
        os << "toffoli " << op.q0 << ' ' << op.q1 << ' ' << op.q2;
        break;
      case CircuitOp::Kind::MeasureAll: os << "measure all"; break;
      case CircuitOp::Kind::MeasureQubit: os << "measure " << op.q0; break;
    }
    os << "\n";
  }
  return os.str();
}

RunReport run_circuit(const CircuitFile& c, long long shots,
                      std::uint64_t seed) {
  if (c.n > QRegister::kMaxQubits) {
    throw std::length_error("run_circuit: qubit count exceeds the resource cap");
  }
  const bool measuring = c.has_measure();
  if (measuring && shots < 1) {
    throw std::invalid_argument(
        "run_circuit: shots must be at least 1 when measuring");
  }

  // Resolve gates once; per-shot work is pure kernel application.
  std::vector<Gate1> gates;
  gates.reserve(c.ops.size());
  for (const CircuitOp& op : c.ops) {
    switch (op.kind) {
      case CircuitOp::Kind::H: gates.push_back(named_gate(GateName::H)); break;
      case CircuitOp::Kind::S: gates.push_back(named_gate(GateName::S)); break;
      case CircuitOp::Kind::T: gates.push_back(named_gate(GateName::T)); break;
      case CircuitOp::Kind::X: gates.push_back(named_gate(GateName::X)); break;
      case CircuitOp::Kind::Y: gates.push_back(named_gate(GateName::Y)); break;
      case CircuitOp::Kind::Z: gates.push_back(named_gate(GateName::Z)); break;
      case CircuitOp::Kind::U: gates.push_back(gate_from_params(op.params)); break;
      default: gates.push_back(named_gate(GateName::H));  // placeholder, unused
    }
  }

  RunReport report;
  report.shots = shots;
  report.seed = seed;

  const Rng root(seed);
  if (!measuring) {
    QRegister reg(c.n);
    for (std::size_t i = 0; i < c.ops.size(); ++i) {
      const CircuitOp& op = c.ops[i];
      switch (op.kind) {
        case CircuitOp::Kind::Cnot: apply_cnot(reg, op.q0, op.q1); break;
        case CircuitOp::Kind::Toffoli:
          apply_toffoli(reg, op.q0, op.q1, op.q2);
          break;
        default: apply_gate(reg, gates[i], op.q0); break;
      }
    }
    if (c.n <= 12) {
      std::vector<RunReport::Amplitude> amps;
      amps.reserve(reg.dim());
      for (std::size_t k = 0; k < reg.dim(); ++k) {
        amps.push_back({word_to_string(word_from_index(k, c.n)),
                        reg.state[k].real(), reg.state[k].imag()});
      }
      report.amplitudes = std::move(amps);
    }
    return report;
  }

  for (long long shot = 0; shot < shots; ++shot) {
    Rng rng = root.substream(static_cast<std::uint64_t>(shot));
    QRegister reg(c.n);
    std::string outcome;
    for (std::size_t i = 0; i < c.ops.size(); ++i) {
      const CircuitOp& op = c.ops[i];
      switch (op.kind) {
        case CircuitOp::Kind::Cnot: apply_cnot(reg, op.q0, op.q1); break;
        case CircuitOp::Kind::Toffoli:
          apply_toffoli(reg, op.q0, op.q1, op.q2);
          break;
        case CircuitOp::Kind::MeasureAll:
          outcome += word_to_string(measure_all(reg, rng).outcome);
          break;
        case CircuitOp::Kind::MeasureQubit:
          outcome += measure_qubit(reg, op.q0, rng).bit ? '1' : '0';
          break;
        default: apply_gate(reg, gates[i], op.q0); break;
      }
    }
    ++report.counts[outcome];
  }
  return report;
}

namespace {

void append_json_string(std::string& out, const std::string& s) {
  out.push_back('"');
  out += s;  // words and fixed keys only: nothing needs escaping
  out.push_back('"');
}

}  // namespace

std::string report_to_json(const RunReport& r) {
  std::string out = "{\"counts\":{";
  bool first = true;
  for (const auto& [word, count] : r.counts) {
    if (!first) out.push_back(',');
    first = false;
    append_json_string(out, word);
    out.push_back(':');
    out += std::to_string(count);
  }
  out += "},\"shots\":" + std::to_string(r.shots);
  out += ",\"seed\":" + std::to_string(r.seed);
  if (r.amplitudes.has_value()) {
    out += ",\"amplitudes\":[";
    first = true;
    for (const RunReport::Amplitude& amp : *r.amplitudes) {
      if (!first) out.push_back(',');
      first = false;
      out.push_back('[');
      append_json_string(out, amp.word);
      out.push_back(',');
      out += format17(amp.re);
      out.push_back(',');
      out += format17(amp.im);
      out.push_back(']');
    }
    out.push_back(']');
  }
  out += "}";
  return out;
}

std::string report_to_text(const RunReport& r) {
  std::ostringstream os;
  os << "shots: " << r.shots << "\n";
  os << "seed: " << r.seed << "\n";
  if (!r.counts.empty()) {
    os << "counts:\n";
    for (const auto& [word, count] : r.counts) {
      os << "  " << word << ' ' << count << "\n";
    }
  }
  if (r.amplitudes.has_value()) {
    os << "amplitudes:\n";
    for (const RunReport::Amplitude& amp : *r.amplitudes) {
      os << "  " << amp.word << ' ' << format17(amp.re) << ' '
         << format17(amp.im) << "\n";
    }
  }
  return os.str();
}

}  // namespace qkit
