#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qkit/algorithms.hpp"
#include "qkit/circuit.hpp"
#include "qkit/errors.hpp"
#include "qkit/turing.hpp"
#include "qkit/z2.hpp"

namespace {

// Problems with flags and arguments; data and execution problems stay
// std::runtime_error and exit with a different code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string format_amp(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

qkit::OracleSpec parse_oracle_arg(const std::string& spec, int n) {
  using qkit::Bit;
  if (spec == "constant0") return qkit::constant_oracle(n, 0);
  if (spec == "constant1") return qkit::constant_oracle(n, 1);
  if (spec.rfind("balanced:", 0) == 0) {
    std::string hex = spec.substr(9);
    if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0) hex = hex.substr(2);
    if (hex.empty()) throw UsageError("empty balanced mask");
    std::vector<Bit> ones(std::size_t{1} << n, 0);
    // Bit x of the mask (LSB = input 0) marks f(x) = 1.
    for (std::size_t k = 0; k < hex.size(); ++k) {
      const char c = hex[hex.size() - 1 - k];
      int digit = 0;
      if (c >= '0' && c <= '9') {
        digit = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        digit = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        digit = c - 'A' + 10;
      } else {
        throw UsageError("balanced mask must be hexadecimal");
      }
      for (int b = 0; b < 4; ++b) {
        if (!(digit & (1 << b))) continue;
        const std::size_t x = 4 * k + static_cast<std::size_t>(b);
        if (x >= ones.size()) {
          throw UsageError("balanced mask has bits beyond 2^n inputs");
        }
        ones[x] = 1;
      }
    }
    return qkit::balanced_oracle(n, ones);
  }
  if (spec.rfind("table:", 0) == 0) {
    const std::string text = read_file(spec.substr(6));
    std::vector<Bit> table;
    for (char c : text) {
      if (c == '0' || c == '1') table.push_back(static_cast<Bit>(c - '0'));
      else if (!std::isspace(static_cast<unsigned char>(c)))
        throw std::runtime_error("oracle table file must contain only 0 and 1");
    }
    if (table.size() != (std::size_t{1} << n)) {
      throw std::runtime_error("oracle table length does not match --n");
    }
    return qkit::oracle_from_table(n, std::move(table));
  }
  throw UsageError("unknown oracle '" + spec +
                   "' (use constant0, constant1, balanced:<hex>, table:<file>)");
}

void print_trace(const std::vector<qkit::DJTraceEntry>& trace, int n) {
  for (std::size_t step = 0; step < trace.size(); ++step) {
    std::cout << "step " << (step + 1) << " " << trace[step].label << ":\n";
    const qkit::CVector& s = trace[step].state;
    for (std::size_t k = 0; k < s.size(); ++k) {
      const std::string word =
          qkit::word_to_string(qkit::word_from_index(k, n + 1));
      std::cout << "  |" << word.substr(0, static_cast<std::size_t>(n)) << ">|"
                << word.back() << ">  " << format_amp(s[k].real()) << " "
                << format_amp(s[k].imag()) << "i\n";
    }
  }
}

int run_verb(const std::string& path, long long shots, std::uint64_t seed,
             bool seed_given, const std::string& format) {
  const qkit::CircuitFile circuit = qkit::parse_circuit(read_file(path));
  if (circuit.has_measure() && !seed_given) {
    throw UsageError("--seed is required when the circuit measures");
  }
  const qkit::RunReport report = qkit::run_circuit(circuit, shots, seed);
  std::cout << (format == "json" ? qkit::report_to_json(report) + "\n"
                                 : qkit::report_to_text(report));
  return 0;
}

int dj_verb(int n, const std::string& oracle_spec, bool trace) {
  const qkit::OracleSpec oracle = parse_oracle_arg(oracle_spec, n);
  std::vector<qkit::DJTraceEntry> steps;
  const qkit::DJOutcome out =
      qkit::deutsch_jozsa(oracle, trace ? &steps : nullptr);
  std::cout << qkit::verdict_name(out.verdict) << "\n";
  std::cout << "readout: " << qkit::word_to_string(out.readout) << "\n";
  std::cout << "oracle queries: " << out.oracle_queries << "\n";
  std::cout << "gate count: " << out.gate_count << "\n";
  if (trace) print_trace(steps, n);
  return 0;
}

int coinflip_verb(long long shots, std::uint64_t seed) {
  const qkit::CoinFlipCounts counts = qkit::coin_flip(shots, qkit::Rng(seed));
  std::cout << "shots: " << shots << "\n";
  std::cout << "seed: " << seed << "\n";
  std::cout << "+1/2: " << counts.plus_half << "\n";
  std::cout << "-1/2: " << counts.minus_half << "\n";
  return 0;
}

int tm_verb(const std::string& path, const std::string& tape,
            long long max_steps) {
  const qkit::tm::TMProgram program =
      qkit::tm::parse_tm_program(read_file(path));
  const qkit::tm::RunResult res =
      qkit::tm::tm_run(program, qkit::word_from_string(tape), max_steps);
  std::cout << "halted: " << (res.halted ? "yes" : "no") << "\n";
  std::cout << "steps: " << res.steps << "\n";
  std::cout << "output: " << qkit::word_to_string(res.output) << "\n";
  return 0;
}

int ptm_verb(const std::string& path, const std::string& tape,
             std::uint64_t seed, int repeats, long long max_steps) {
  if (repeats < 1 || repeats % 2 == 0) {
    throw UsageError("--repeats must be odd and positive");
  }
  const qkit::tm::PTMProgram program =
      qkit::tm::parse_ptm_program(read_file(path));
  const qkit::BitWord input = qkit::word_from_string(tape);
  const qkit::Rng root(seed);
  std::cout << "seed: " << seed << "\n";
  if (repeats == 1) {
    qkit::Rng rng = root.substream(0);
    const qkit::tm::RunResult res =
        qkit::tm::ptm_run(program, input, rng, max_steps);
    std::cout << "halted: " << (res.halted ? "yes" : "no") << "\n";
    std::cout << "steps: " << res.steps << "\n";
    std::cout << "output: " << qkit::word_to_string(res.output) << "\n";
  } else {
    const qkit::BitWord out =
        qkit::tm::ptm_majority(program, input, repeats, root, max_steps);
    std::cout << "repeats: " << repeats << "\n";
    std::cout << "output: " << qkit::word_to_string(out) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "seedable quantum state-vector simulator with a reversible-logic and "
      "Turing-machine companion. Qubit indices are 0-based; qubit 0 is the "
      "leftmost ket symbol, i.e. the most significant bit of a basis word."};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand(
      "run", "execute a circuit file (ops: h|s|t|x|y|z Q, u Q A B C D, "
             "cnot C T, toffoli C1 C2 T, measure all|Q)");
  std::string run_path;
  long long run_shots = 1;
  std::uint64_t run_seed = 0;
  std::string run_format = "json";
  run->add_option("circuit", run_path, "circuit file")->required();
  run->add_option("--shots", run_shots, "number of shots");
  auto* run_seed_opt = run->add_option("--seed", run_seed, "rng seed");
  run->add_option("--format", run_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  // dj
  auto* dj = app.add_subcommand("dj", "decide constant-vs-balanced");
  int dj_n = 0;
  std::string dj_oracle;
  bool dj_trace = false;
  dj->add_option("--n", dj_n, "oracle arity")->required();
  dj->add_option("--oracle", dj_oracle,
                 "constant0 | constant1 | balanced:<hex mask> | table:<file>")
      ->required();
  dj->add_flag("--trace", dj_trace, "print the state after each step (n <= 4)");

  // coinflip
  auto* coin = app.add_subcommand("coinflip", "coin-flip measurement statistics");
  long long coin_shots = 1;
  std::uint64_t coin_seed = 0;
  coin->add_option("--shots", coin_shots, "number of shots");
  coin->add_option("--seed", coin_seed, "rng seed")->required();

  // z2 census
  auto* z2cmd = app.add_subcommand("z2", "reversible-logic toolkit");
  z2cmd->require_subcommand(1);
  auto* census = z2cmd->add_subcommand("census", "gate census and group table");

  // tm run
  auto* tmcmd = app.add_subcommand("tm", "Turing-machine interpreter");
  tmcmd->require_subcommand(1);
  auto* tmrun = tmcmd->add_subcommand("run", "run a machine on a tape");
  std::string tm_path, tm_tape;
  long long tm_max_steps = qkit::tm::kDefaultMaxSteps;
  tmrun->add_option("program", tm_path, "program file")->required();
  tmrun->add_option("--tape", tm_tape, "input bits (may be empty)");
  tmrun->add_option("--max-steps", tm_max_steps, "step budget");

  // ptm run
  auto* ptmcmd = app.add_subcommand("ptm", "probabilistic Turing machines");
  ptmcmd->require_subcommand(1);
  auto* ptmrun = ptmcmd->add_subcommand("run", "run with seeded sampling");
  std::string ptm_path, ptm_tape;
  std::uint64_t ptm_seed = 0;
  int ptm_repeats = 1;
  long long ptm_max_steps = qkit::tm::kDefaultMaxSteps;
  ptmrun->add_option("program", ptm_path, "program file")->required();
  ptmrun->add_option("--tape", ptm_tape, "input bits (may be empty)");
  ptmrun->add_option("--seed", ptm_seed, "rng seed")->required();
  ptmrun->add_option("--repeats", ptm_repeats, "odd majority-vote repeats");
  ptmrun->add_option("--max-steps", ptm_max_steps, "step budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      return run_verb(run_path, run_shots, run_seed, run_seed_opt->count() > 0,
                      run_format);
    }
    if (*dj) {
      if (dj_n < 1) throw UsageError("--n must be positive");
      if (dj_trace && dj_n > 4) throw UsageError("--trace requires n <= 4");
      return dj_verb(dj_n, dj_oracle, dj_trace);
    }
    if (*coin) return coinflip_verb(coin_shots, coin_seed);
    if (*census) {
      std::cout << qkit::z2::census_report();
      return 0;
    }
    if (*tmrun) return tm_verb(tm_path, tm_tape, tm_max_steps);
    if (*ptmrun) {
      return ptm_verb(ptm_path, ptm_tape, ptm_seed, ptm_repeats, ptm_max_steps);
    }
    throw UsageError("no subcommand selected");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
