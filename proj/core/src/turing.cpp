#include "qkit/turing.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "qkit/errors.hpp"

namespace qkit::tm {

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::Zero: return '0';
    case Symbol::One: return '1';
    case Symbol::Blank: return 'b';
  }
  return '?';
}

const Instruction* TMProgram::find(int state, Symbol read) const {
  for (const Instruction& ins : instructions) {
    if (ins.state == state && ins.read == read) return &ins;
  }
  return nullptr;
}

Symbol Tape::read(std::int64_t cell) const {
  const auto it = cells_.find(cell);
  return it == cells_.end() ? Symbol::Blank : it->second;
}

void Tape::write(std::int64_t cell, Symbol s) {
  if (s == Symbol::Blank) {
    cells_.erase(cell);
  } else {
    cells_[cell] = s;
  }
}

std::optional<std::int64_t> Tape::leftmost_nonblank() const {
  if (cells_.empty()) return std::nullopt;
  return cells_.begin()->first;
}

BitWord Tape::contiguous_string() const {
  BitWord out;
  if (cells_.empty()) return out;
  std::int64_t cell = cells_.begin()->first;
  for (auto it = cells_.begin(); it != cells_.end() && it->first == cell;
       ++it, ++cell) {
    out.push_back(it->second == Symbol::One ? 1 : 0);
  }
  return out;
}

Tape Tape::from_word(const BitWord& input) {
  Tape t;
  for (std::size_t i = 0; i < input.size(); ++i) {
    t.write(static_cast<std::int64_t>(i),
            input[i] ? Symbol::One : Symbol::Zero);
  }
  return t;
}

namespace {

// Applies the action in place; the caller has already matched (state, read).
void apply_action(const Action& action, int next, TMConfig& c) {
  switch (action.kind) {
    case Action::Kind::Write:
      c.tape.write(c.head, action.write);
      break;
    case Action::Kind::MoveLeft:
      --c.head;
      break;
    case Action::Kind::MoveRight:
      ++c.head;
      break;
  }
  c.state = next;
  ++c.steps;
}

TMConfig initial_config(int start, const BitWord& input) {
  TMConfig c;
  c.state = start;
  c.tape = Tape::from_word(input);
  // Head over the leftmost non-blank cell; an empty input leaves an
  // all-blank tape with the head at cell 0.
  c.head = c.tape.leftmost_nonblank().value_or(0);
  return c;
}

}  // namespace

std::optional<TMConfig> tm_step(const TMProgram& p, TMConfig c) {
  const Instruction* ins = p.find(c.state, c.tape.read(c.head));
  if (ins == nullptr) return std::nullopt;
  apply_action(ins->action, ins->next, c);
  return c;
}

RunResult tm_run(const TMProgram& p, const BitWord& input,
                 long long max_steps) {
  if (max_steps < 1) {
    throw std::invalid_argument("tm_run: max_steps must be at least 1");
  }
  TMConfig c = initial_config(p.start, input);
  RunResult res;
  while (c.steps < max_steps) {
    const Instruction* ins = p.find(c.state, c.tape.read(c.head));
    if (ins == nullptr) {
      res.halted = true;
      break;
    }
    apply_action(ins->action, ins->next, c);
  }
  if (!res.halted && p.find(c.state, c.tape.read(c.head)) == nullptr) {
    res.halted = true;  // budget expired exactly at a halting configuration
  }
  res.steps = c.steps;
  res.output = c.tape.contiguous_string();
  return res;
}

RunResult ptm_run(const PTMProgram& p, const BitWord& input, Rng& rng,
                  long long max_steps) {
  if (max_steps < 1) {
    throw std::invalid_argument("ptm_run: max_steps must be at least 1");
  }
  TMConfig c = initial_config(p.start, input);
  RunResult res;
  while (c.steps < max_steps) {
    const auto it = p.rules.find({c.state, c.tape.read(c.head)});
    if (it == p.rules.end() || it->second.empty()) {
      res.halted = true;
      break;
    }
    const std::vector<WeightedRule>& dist = it->second;
    const WeightedRule* pick = &dist.front();
    if (dist.size() > 1) {
      // Exact rational sampling over the common denominator.
      long long den = 1;
      for (const WeightedRule& r : dist) den = std::lcm(den, r.den);
      long long total = 0;
      for (const WeightedRule& r : dist) total += r.num * (den / r.den);
      std::uint64_t draw =
          rng.next_below(static_cast<std::uint64_t>(total));
      for (const WeightedRule& r : dist) {
        const auto w = static_cast<std::uint64_t>(r.num * (den / r.den));
        if (draw < w) {
          pick = &r;
          break;
        }
        draw -= w;
      }
    }
    apply_action(pick->action, pick->next, c);
  }
  if (!res.halted) {
    const auto it = p.rules.find({c.state, c.tape.read(c.head)});
    if (it == p.rules.end() || it->second.empty()) res.halted = true;
  }
  res.steps = c.steps;
  res.output = c.tape.contiguous_string();
  return res;
}

BitWord ptm_majority(const PTMProgram& p, const BitWord& input, int repeats,
                     const Rng& rng, long long max_steps) {
  if (repeats < 1 || repeats % 2 == 0) {
    throw std::invalid_argument("ptm_majority: repeats must be odd and positive");
  }
  std::map<BitWord, int> votes;  // ordered: lexicographic tie-break for free
  for (int i = 0; i < repeats; ++i) {
    Rng sub = rng.substream(static_cast<std::uint64_t>(i));
    ++votes[ptm_run(p, input, sub, max_steps).output];
  }
  const BitWord* winner = nullptr;
  int most = -1;
  for (const auto& [word, count] : votes) {
    if (count > most) {
      most = count;
      winner = &word;
    }
  }
  return *winner;
}

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize_program(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Line out;
    out.number = number;
    std::istringstream is{std::string(line)};
    std::string tok;
    while (is >> tok) out.tokens.push_back(tok);
    if (!out.tokens.empty()) lines.push_back(std::move(out));
    pos = eol + 1;
  }
  return lines;
}

Symbol parse_symbol(const std::string& tok, int line) {
  if (tok == "0") return Symbol::Zero;
  if (tok == "1") return Symbol::One;
  if (tok == "b") return Symbol::Blank;
  throw ParseError(line, "unknown symbol '" + tok + "' (expected 0, 1 or b)");
}

Action parse_action(const std::string& tok, int line) {
  if (tok == "R") return Action{Action::Kind::MoveRight, Symbol::Blank};
  if (tok == "L") return Action{Action::Kind::MoveLeft, Symbol::Blank};
  if (tok == "0" || tok == "1" || tok == "b") {
    return Action{Action::Kind::Write, parse_symbol(tok, line)};
  }
  throw ParseError(line, "unknown action '" + tok + "' (expected 0, 1, b, R or L)");
}

int state_id(const std::string& name, std::vector<std::string>& names,
             std::unordered_map<std::string, int>& index) {
  if (const auto it = index.find(name); it != index.end()) return it->second;
  const int id = static_cast<int>(names.size());
  names.push_back(name);
  index.emplace(name, id);
  return id;
}

// num/den or a bare integer.
std::pair<long long, long long> parse_weight(const std::string& tok, int line) {
  long long num = 0, den = 1;
  std::size_t used = 0;
  try {
    num = std::stoll(tok, &used);
    if (used < tok.size()) {
      if (tok[used] != '/') throw std::invalid_argument("");
      std::size_t used2 = 0;
      den = std::stoll(tok.substr(used + 1), &used2);
      if (used + 1 + used2 != tok.size()) throw std::invalid_argument("");
    }
  } catch (const std::exception&) {
    throw ParseError(line, "malformed weight '" + tok + "'");
  }
  if (num <= 0 || den <= 0) {
    throw ParseError(line, "weight must be a positive rational");
  }
  return {num, den};
}

}  // namespace

TMProgram parse_tm_program(std::string_view text) {
  TMProgram p;
  std::unordered_map<std::string, int> index;
  bool have_start = false;
  for (const Line& line : tokenize_program(text)) {
    if (line.tokens.size() != 4) {
      throw ParseError(line.number,
                       "expected 'state symbol action state' (4 tokens)");
    }
    Instruction ins;
    ins.state = state_id(line.tokens[0], p.state_names, index);
    ins.read = parse_symbol(line.tokens[1], line.number);
    ins.action = parse_action(line.tokens[2], line.number);
    ins.next = state_id(line.tokens[3], p.state_names, index);
    if (p.find(ins.state, ins.read) != nullptr) {
      throw ParseError(line.number,
                       "duplicate instruction for (" + line.tokens[0] + ", " +
                           line.tokens[1] + ")");
    }
    if (!have_start) {
      p.start = ins.state;
      have_start = true;
    }
    p.instructions.push_back(ins);
  }
  return p;
}

PTMProgram parse_ptm_program(std::string_view text) {
  PTMProgram p;
  std::unordered_map<std::string, int> index;
  bool have_start = false;
  for (const Line& line : tokenize_program(text)) {
    if (line.tokens.size() != 4 && line.tokens.size() != 5) {
      throw ParseError(
          line.number,
          "expected 'state symbol action state [weight]' (4 or 5 tokens)");
    }
    const int state = state_id(line.tokens[0], p.state_names, index);
    const Symbol read = parse_symbol(line.tokens[1], line.number);
    WeightedRule rule;
    rule.action = parse_action(line.tokens[2], line.number);
    rule.next = state_id(line.tokens[3], p.state_names, index);
    if (line.tokens.size() == 5) {
      std::tie(rule.num, rule.den) = parse_weight(line.tokens[4], line.number);
    }
    if (!have_start) {
      p.start = state;
      have_start = true;
    }
    p.rules[{state, read}].push_back(rule);
  }
  return p;
}

}  // namespace qkit::tm
