#pragma once

#include <string>
#include <vector>

#include "qkit/bitword.hpp"
#include "qkit/qreg.hpp"
#include "qkit/rng.hpp"

namespace qkit {

/// Boolean function f: {0,1}^n -> {0,1} as an explicit table in
/// lexicographic input order.
struct OracleSpec {
  int n = 0;
  std::vector<Bit> table;  // size 2^n
};

OracleSpec constant_oracle(int n, int value);
/// ones[x] = 1 marks f(x) = 1; exactly 2^{n-1} entries must be set.
OracleSpec balanced_oracle(int n, const std::vector<Bit>& ones);
OracleSpec oracle_from_table(int n, std::vector<Bit> table);
/// Balanced oracle whose ones-set is drawn by a seeded shuffle.
OracleSpec random_balanced_oracle(int n, Rng& rng);

/// |x>|y> -> |x>|f(x) xor y> on an (n+1)-qubit register whose last qubit is
/// the target; a self-inverse permutation of the amplitudes.
void oracle_apply(QRegister& reg, const OracleSpec& f);

/// diag(1,-1) on the last qubit: negates every amplitude whose target bit
/// is 1.
void phase_mark(QRegister& reg);

enum class DJVerdict { Constant, Balanced };

const char* verdict_name(DJVerdict v);

struct DJOutcome {
  DJVerdict verdict = DJVerdict::Constant;
  BitWord readout;  // first-register measurement; 0^n iff Constant
  int oracle_queries = 0;
  int gate_count = 0;

  bool operator==(const DJOutcome&) const = default;
};

struct DJTraceEntry {
  std::string label;
  CVector state;
};

/// Deutsch-Jozsa: prepare |0^n>|0>, Walsh-Hadamard on the first register,
/// oracle, diag(1,-1) on the target, oracle again, Walsh-Hadamard on the
/// first register, read the first register. The final first register is
/// +-|0^n> for a constant oracle and orthogonal to it for a balanced one,
/// so the readout -- and hence the verdict -- is deterministic. When trace
/// is given it receives the state after each of the six steps.
DJOutcome deutsch_jozsa(const OracleSpec& f,
                        std::vector<DJTraceEntry>* trace = nullptr);

struct ClassicalDJResult {
  DJVerdict verdict = DJVerdict::Constant;
  long long queries = 0;
};

/// Deterministic baseline under the constant-0-or-balanced promise:
/// queries f in lexicographic order, answering Balanced at the first 1 and
/// Constant after 2^{n-1}+1 zeros. Worst case exactly 2^{n-1}+1 queries.
ClassicalDJResult classical_dj(const OracleSpec& f);

enum class PromiseClass { Constant0, Constant1, Balanced, Invalid };

PromiseClass validate_promise(const OracleSpec& f);

struct CoinFlipCounts {
  long long plus_half = 0;
  long long minus_half = 0;
};

/// Per shot: prepare |0>, apply the coin-flip unitary, measure the spin
/// observable with eigenvalues +-1/2 on |0>, |1>. Shot s draws from the
/// substream for (seed, s).
CoinFlipCounts coin_flip(long long shots, const Rng& rng);

}  // namespace qkit
