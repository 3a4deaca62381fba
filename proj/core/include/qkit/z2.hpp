#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qkit/bitword.hpp"
#include "qkit/linalg.hpp"

namespace qkit::z2 {

// Scalar arithmetic over Z2: + is XOR, * is AND, and -a = a.
inline Bit add(Bit a, Bit b) { return static_cast<Bit>((a ^ b) & 1); }
inline Bit mul(Bit a, Bit b) { return static_cast<Bit>(a & b & 1); }
inline Bit neg(Bit a) { return static_cast<Bit>(a & 1); }

/// (a;b) + (c;d) = (a+d; a+c). This deliberately non-componentwise rule is
/// what the BN matrix acts with; it is not used as generic vector addition
/// anywhere else (componentwise XOR is the default).
BitWord vectorbit_add(const BitWord& p, const BitWord& q);

/// Explicit map {0,1}^m -> {0,1}^n. Input index i is the lexicographic rank
/// of the input word (00, 01, 10, 11 for m = 2); outputs are stored packed,
/// most significant bit first.
struct TruthTable {
  int m = 0;
  int n = 0;
  std::vector<std::uint32_t> out;  // size 2^m, each value < 2^n

  std::uint32_t operator()(std::uint32_t input) const { return out[input]; }
  bool operator==(const TruthTable&) const = default;
};

TruthTable not_tt();   // V1 -> V1
TruthTable and_tt();   // V2 -> V1
TruthTable or_tt();    // V2 -> V1
TruthTable nand_tt();  // V2 -> V1, the Sheffer stroke
TruthTable nor_tt();   // V2 -> V1, the dagger
/// (x;y;z) -> (x;y;z+xy).
TruthTable toffoli_tt();
/// (x;y) -> (x;y;x;y): the stacked [I;I] fan-out, kept at truth-table level
/// only (it is not a legal quantum circuit primitive).
TruthTable fanout_tt();

/// All (2^n)^(2^m) gates V_m -> V_n in lexicographic order. Guarded to
/// desk scale: requires m*2^m <= 32 and n*2^m <= 24.
std::vector<TruthTable> enumerate_gates(int m, int n);

/// True iff the table is a bijection; gates with m != n are never reversible.
bool is_reversible(const TruthTable& tt);

struct Z2Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Bit> e;  // row-major

  Z2Matrix() = default;
  Z2Matrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, 0) {}
  Z2Matrix(int r, int c, std::initializer_list<int> init);

  Bit& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
  Bit at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const Z2Matrix&) const = default;
};

Z2Matrix z2_identity(int n);
Z2Matrix z2_matmul(const Z2Matrix& x, const Z2Matrix& y);
BitWord z2_apply(const Z2Matrix& m, const BitWord& v);
Z2Matrix z2_transpose(const Z2Matrix& m);

/// True iff m is invertible over Z2 with inverse equal to its transpose
/// (equivalently, m * m^T = I).
bool z2_orthogonal(const Z2Matrix& m);

/// The unique 2x2 Z2 matrix A with A (x;y)^T = tt(x;y) for all four inputs,
/// if the gate is linear; absent otherwise. Requires m = n = 2.
std::optional<Z2Matrix> linear_matrix_of(const TruthTable& tt);

enum class SixGate { I = 0, J, K, L, M, N };

char six_gate_name(SixGate g);

/// The six invertible linear gates on V2 and their composition table;
/// table[x][y] is the gate equal to gate[x] * gate[y].
struct SixGroup {
  std::array<Z2Matrix, 6> gate;
  std::array<std::array<SixGate, 6>, 6> table;
};

SixGroup six_group();

enum class NamedMatrix { N2, BN4, BNIE4, BBNIE8 };

/// The printed matrices: N (2x2 controlled-not on scalar bits), BN (4x4 on
/// vector-bit pairs, its own inverse), BNIE (4x4 permutation swapping the
/// last two basis vectors), BBNIE (8x8 permutation swapping |110> and |111>).
Z2Matrix named_matrix(NamedMatrix which);

/// Third output of the Toffoli gate with z pinned to 1: x NAND y.
Bit nand_via_toffoli(Bit x, Bit y);

/// NAND-only expression over the two inputs x and y.
class NandExpr {
 public:
  static NandExpr input(int index);  // 0 = x, 1 = y
  static NandExpr nand(const NandExpr& lhs, const NandExpr& rhs);

  int depth() const;
  /// Packed V2 -> V1 table; bit i is the value on the rank-i input word.
  std::uint32_t table() const;
  std::string str() const;  // e.g. "(x|y)|(x|y)"

 private:
  struct Node;
  explicit NandExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Smallest-depth NAND-only expression computing the given V2 -> V1 gate.
/// All sixteen targets are reachable within depth 6; exceeding the bound
/// therefore throws (it would indicate a bug, not a mathematical limit).
NandExpr synth_from_nand(const TruthTable& target);

/// |0> = (1;0) and |1> = (0;1), the orthonormal pair used by the quantum
/// modules.
std::pair<CVector, CVector> ket_bits();

struct GateCensus {
  int total = 0;
  int reversible = 0;
  int linear = 0;
  int linear_singular = 0;
  int linear_invertible = 0;
  int orthogonal = 0;
};

/// Exhaustive census over all 256 gates V2 -> V2.
GateCensus census_v2();

/// Plain-text census and composition-table report (the `z2 census` verb).
std::string census_report();

}  // namespace qkit::z2
