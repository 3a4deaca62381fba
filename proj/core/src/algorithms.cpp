#include "qkit/algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qkit {

namespace {

void check_arity(int n, const char* who) {
  if (n < 1 || n >= QRegister::kMaxQubits) {
    throw std::invalid_argument(std::string(who) + ": oracle arity out of range");
  }
}

}  // namespace

OracleSpec constant_oracle(int n, int value) {
  check_arity(n, "constant_oracle");
  if (value != 0 && value != 1) {
    throw std::invalid_argument("constant_oracle: value must be 0 or 1");
  }
  return OracleSpec{n, std::vector<Bit>(std::size_t{1} << n,
                                        static_cast<Bit>(value))};
}

OracleSpec balanced_oracle(int n, const std::vector<Bit>& ones) {
  check_arity(n, "balanced_oracle");
  const std::size_t dim = std::size_t{1} << n;
  if (ones.size() != dim) {
    throw std::invalid_argument("balanced_oracle: mask must cover all 2^n inputs");
  }
  const auto count = static_cast<std::size_t>(
      std::count(ones.begin(), ones.end(), Bit{1}));
  if (count != dim / 2) {
    throw std::invalid_argument(
        "balanced_oracle: mask must select exactly 2^{n-1} inputs");
  }
  return OracleSpec{n, ones};
}

OracleSpec oracle_from_table(int n, std::vector<Bit> table) {
  check_arity(n, "oracle_from_table");
  if (table.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("oracle_from_table: table must have 2^n entries");
  }
  for (Bit& b : table) b &= 1;
  return OracleSpec{n, std::move(table)};
}

OracleSpec random_balanced_oracle(int n, Rng& rng) {
  check_arity(n, "random_balanced_oracle");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Fisher-Yates with the seeded stream; the first half becomes the ones-set.
  for (std::size_t k = dim - 1; k > 0; --k) {
    const std::size_t j = rng.next_below(k + 1);
    std::swap(order[k], order[j]);
  }
  std::vector<Bit> ones(dim, 0);
  for (std::size_t k = 0; k < dim / 2; ++k) ones[order[k]] = 1;
  return OracleSpec{n, std::move(ones)};
}

void oracle_apply(QRegister& reg, const OracleSpec& f) {
  if (reg.n != f.n + 1) {
    throw std::invalid_argument(
        "oracle_apply: register must have oracle arity plus one qubits");
  }
  CVector& s = reg.state;
  const std::size_t inputs = std::size_t{1} << f.n;
  for (std::size_t x = 0; x < inputs; ++x) {
    if (f.table[x]) std::swap(s[2 * x], s[2 * x + 1]);
  }
}

void phase_mark(QRegister& reg) {
  CVector& s = reg.state;
  for (std::size_t k = 1; k < s.size(); k += 2) s[k] = -s[k];
}

const char* verdict_name(DJVerdict v) {
  return v == DJVerdict::Constant ? "Constant" : "Balanced";
}

DJOutcome deutsch_jozsa(const OracleSpec& f, std::vector<DJTraceEntry>* trace) {
  const int n = f.n;
  QRegister reg(n + 1);  // |0^n>|0>
  auto record = [&](const char* label) {
    if (trace != nullptr) trace->push_back({label, reg.state});
  };
  std::vector<int> first_register(n);
  std::iota(first_register.begin(), first_register.end(), 0);

  record("prepare");
  apply_walsh_hadamard(reg, first_register);
  record("walsh-hadamard");
  oracle_apply(reg, f);
  record("oracle");
  phase_mark(reg);
  record("phase");
  oracle_apply(reg, f);
  record("oracle");
  apply_walsh_hadamard(reg, first_register);
  record("walsh-hadamard");

  // The first register ends in +-|0^n> (constant) or orthogonal to it
  // (balanced), so the most probable word is the deterministic readout.
  const CVector& s = reg.state;
  std::size_t best = 0;
  double best_p = -1.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double p = std::norm(s[k]);
    if (p > best_p) {
      best_p = p;
      best = k;
    }
  }
  DJOutcome out;
  out.readout = word_from_index(best >> 1, n);
  out.verdict =
      word_all_zero(out.readout) ? DJVerdict::Constant : DJVerdict::Balanced;
  out.oracle_queries = 2;
  out.gate_count = 2 * n + 3;  // two Walsh-Hadamard sweeps, two oracles, one phase
  return out;
}

ClassicalDJResult classical_dj(const OracleSpec& f) {
  const long long budget = (1ll << (f.n - 1)) + 1;
  ClassicalDJResult res;
  for (std::size_t x = 0; x < f.table.size(); ++x) {
    ++res.queries;
    if (f.table[x]) {
      res.verdict = DJVerdict::Balanced;
      return res;
    }
    if (res.queries == budget) {
      res.verdict = DJVerdict::Constant;
      return res;
    }
  }
  res.verdict = DJVerdict::Constant;  // n = 0 cannot happen; table exhausted
  return res;
}

PromiseClass validate_promise(const OracleSpec& f) {
  const auto ones = static_cast<std::size_t>(
      std::count(f.table.begin(), f.table.end(), Bit{1}));
  const std::size_t dim = f.table.size();
  if (ones == 0) return PromiseClass::Constant0;
  if (ones == dim) return PromiseClass::Constant1;
  if (ones == dim / 2) return PromiseClass::Balanced;
  return PromiseClass::Invalid;
}

CoinFlipCounts coin_flip(long long shots, const Rng& rng) {
  if (shots < 1) {
    throw std::invalid_argument("coin_flip: shots must be at least 1");
  }
  const Gate1 u = named_gate(GateName::UCoin);
  const Observable spin = Observable::from_eigensystem(
      {0.5, -0.5}, {CVector{1.0, 0.0}, CVector{0.0, 1.0}});
  CoinFlipCounts counts;
  for (long long s = 0; s < shots; ++s) {
    Rng sub = rng.substream(static_cast<std::uint64_t>(s));
    const CVector state{u.at(0, 0), u.at(1, 0)};  // U|0>
    const ObservableMeasurement m = measure_observable(state, spin, sub);
    if (m.eigenvalue > 0) {
      ++counts.plus_half;
    } else {
      ++counts.minus_half;
    }
  }
  return counts;
}

}  // namespace qkit
