#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qkit/qreg.hpp"

namespace qkit {

struct CircuitOp {
  enum class Kind {
    H,
    S,
    T,
    X,
    Y,
    Z,
    U,
    Cnot,
    Toffoli,
    MeasureAll,
    MeasureQubit,
  };

  Kind kind = Kind::H;
  int q0 = -1;
  int q1 = -1;
  int q2 = -1;
  SingleQubitParams params;  // Kind::U only

  bool operator==(const CircuitOp&) const = default;
};

struct CircuitFile {
  int n = 0;
  std::vector<CircuitOp> ops;

  bool has_measure() const;

  bool operator==(const CircuitFile&) const = default;
};

/// Text format: `#` comments, first content line `qubits N`, then one op
/// per line. Mnemonics are case-insensitive; indices are 0-based with
/// qubit 0 the leftmost/most significant.
///
///   h|s|t|x|y|z Q
///   u Q A B C D
///   cnot CONTROL TARGET
///   toffoli C1 C2 TARGET
///   measure all | measure Q
///
/// `measure all` may appear at most once and must be the last op.
/// Throws ParseError naming the offending line.
CircuitFile parse_circuit(std::string_view text);

/// Canonical text form; parse_circuit(render_circuit(c)) == c.
std::string render_circuit(const CircuitFile& c);

struct RunReport {
  std::map<std::string, long long> counts;  // bit word -> occurrences
  long long shots = 0;
  std::uint64_t seed = 0;

  struct Amplitude {
    std::string word;
    double re = 0;
    double im = 0;
  };
  // Present only when the circuit has no measurement and n <= 12.
  std::optional<std::vector<Amplitude>> amplitudes;
};

/// Executes the circuit per shot; shot s uses the rng substream (seed, s),
/// so reports are identical across runs regardless of execution order. A
/// shot's outcome word is the concatenation of its measurement results in
/// op order.
RunReport run_circuit(const CircuitFile& c, long long shots,
                      std::uint64_t seed);

/// JSON document with keys counts, shots, seed and optionally amplitudes;
/// floating-point numbers carry 17 significant digits so doubles round-trip
/// losslessly. Counts are ordered by bit word; output is byte-stable.
std::string report_to_json(const RunReport& r);

std::string report_to_text(const RunReport& r);

}  // namespace qkit
