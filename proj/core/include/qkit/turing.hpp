#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qkit/bitword.hpp"
#include "qkit/rng.hpp"

namespace qkit::tm {

enum class Symbol : std::uint8_t { Zero = 0, One = 1, Blank = 2 };

char symbol_char(Symbol s);

struct Action {
  enum class Kind { Write, MoveLeft, MoveRight };
  Kind kind = Kind::Write;
  Symbol write = Symbol::Blank;  // used by Kind::Write only

  bool operator==(const Action&) const = default;
};

/// Quadruple instruction: in `state` reading `read`, perform `action` and
/// enter `next`.
struct Instruction {
  int state = 0;
  Symbol read = Symbol::Blank;
  Action action;
  int next = 0;

  bool operator==(const Instruction&) const = default;
};

/// Deterministic program: at most one instruction per (state, read) pair.
struct TMProgram {
  std::vector<Instruction> instructions;
  int start = 0;
  std::vector<std::string> state_names;  // id -> name as written in the source

  const Instruction* find(int state, Symbol read) const;
};

/// Sparse tape over {0, 1, blank}; cells never written read as blank.
class Tape {
 public:
  Symbol read(std::int64_t cell) const;
  void write(std::int64_t cell, Symbol s);
  std::optional<std::int64_t> leftmost_nonblank() const;
  /// The maximal run of non-blank symbols starting at the leftmost
  /// non-blank cell; empty when the tape is blank.
  BitWord contiguous_string() const;

  static Tape from_word(const BitWord& input);  // symbols at cells 0..len-1

 private:
  std::map<std::int64_t, Symbol> cells_;  // non-blank cells only
};

struct TMConfig {
  int state = 0;
  std::int64_t head = 0;
  Tape tape;
  long long steps = 0;
};

/// One step of the machine; nullopt when no instruction matches (the
/// machine halts -- halting is a value, not an error).
std::optional<TMConfig> tm_step(const TMProgram& p, TMConfig c);

struct RunResult {
  bool halted = false;
  long long steps = 0;
  BitWord output;

  bool operator==(const RunResult&) const = default;
};

inline constexpr long long kDefaultMaxSteps = 1'000'000;

/// Runs from the leftmost non-blank cell (cell 0 on an empty input) in the
/// start state. On halt, output is the tape's contiguous string; when the
/// step budget runs out first, halted is false.
RunResult tm_run(const TMProgram& p, const BitWord& input,
                 long long max_steps = kDefaultMaxSteps);

/// One probabilistic rule. Weights are positive rationals, relative to the
/// other rules for the same (state, read) key; they are normalised per key.
struct WeightedRule {
  Action action;
  int next = 0;
  long long num = 1;
  long long den = 1;
};

struct PTMProgram {
  std::map<std::pair<int, Symbol>, std::vector<WeightedRule>> rules;
  int start = 0;
  std::vector<std::string> state_names;
};

/// As tm_run, but each step samples its rule from the (state, read)
/// distribution. Deterministic given the rng seed; a reached key with no
/// rules halts the machine.
RunResult ptm_run(const PTMProgram& p, const BitWord& input, Rng& rng,
                  long long max_steps = kDefaultMaxSteps);

/// Plurality output over `repeats` independent runs (substreams of rng);
/// repeats must be odd. Ties between distinct outputs break lexicographically.
BitWord ptm_majority(const PTMProgram& p, const BitWord& input, int repeats,
                     const Rng& rng, long long max_steps = kDefaultMaxSteps);

/// Program text: one instruction per line, `q_i sym action q_next`, with
/// sym in {0,1,b} and action in {0,1,b,R,L}; `#` starts a comment. The start
/// state is the state of the first instruction. PTM lines may append a
/// rational weight (`1/2`, `3`, ...), default 1.
TMProgram parse_tm_program(std::string_view text);
PTMProgram parse_ptm_program(std::string_view text);

}  // namespace qkit::tm
