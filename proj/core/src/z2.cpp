#include "qkit/z2.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qkit::z2 {

BitWord vectorbit_add(const BitWord& p, const BitWord& q) {
  if (p.size() != 2 || q.size() != 2) {
    throw std::invalid_argument("vectorbit_add: both operands must have length 2");
  }
  const Bit a = p[0], d = q[1], c = q[0];
  return BitWord{add(a, d), add(a, c)};
}

TruthTable not_tt() { return TruthTable{1, 1, {1, 0}}; }

TruthTable and_tt() { return TruthTable{2, 1, {0, 0, 0, 1}}; }

TruthTable or_tt() { return TruthTable{2, 1, {0, 1, 1, 1}}; }

TruthTable nand_tt() { return TruthTable{2, 1, {1, 1, 1, 0}}; }

TruthTable nor_tt() { return TruthTable{2, 1, {1, 0, 0, 0}}; }

TruthTable toffoli_tt() {
  TruthTable tt{3, 3, std::vector<std::uint32_t>(8)};
  for (std::uint32_t i = 0; i < 8; ++i) {
    const std::uint32_t x = (i >> 2) & 1, y = (i >> 1) & 1, z = i & 1;
    tt.out[i] = (x << 2) | (y << 1) | (z ^ (x & y));
  }
  return tt;
}

TruthTable fanout_tt() {
  TruthTable tt{2, 4, std::vector<std::uint32_t>(4)};
  for (std::uint32_t i = 0; i < 4; ++i) tt.out[i] = (i << 2) | i;
  return tt;
}

std::vector<TruthTable> enumerate_gates(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("enumerate_gates: m and n must be positive");
  }
  if (m * (1 << m) > 32 || n * (1 << m) > 24) {
    throw std::invalid_argument("enumerate_gates: size guard exceeded");
  }
  const std::uint32_t inputs = 1u << m;
  const std::uint32_t range = 1u << n;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < inputs; ++i) count *= range;

  std::vector<TruthTable> gates;
  gates.reserve(count);
  // Lexicographic over (out[0], out[1], ...): the output on input 0 is the
  // most significant digit of the table's rank, base 2^n.
  for (std::uint64_t k = 0; k < count; ++k) {
    TruthTable tt{m, n, std::vector<std::uint32_t>(inputs)};
    std::uint64_t rest = k;
    for (std::uint32_t i = inputs; i-- > 0;) {
      tt.out[i] = static_cast<std::uint32_t>(rest % range);
      rest /= range;
    }
    gates.push_back(std::move(tt));
  }
  return gates;
}

bool is_reversible(const TruthTable& tt) {
  if (tt.m != tt.n) return false;
  std::vector<bool> seen(tt.out.size(), false);
  for (std::uint32_t v : tt.out) {
    if (v >= tt.out.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Z2Matrix::Z2Matrix(int r, int c, std::initializer_list<int> init)
    : rows(r), cols(c) {
  if (static_cast<int>(init.size()) != r * c) {
    throw std::invalid_argument("Z2Matrix: initializer size mismatch");
  }
  e.reserve(init.size());
  for (int v : init) e.push_back(static_cast<Bit>(v & 1));
}

Z2Matrix z2_identity(int n) {
  Z2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Z2Matrix z2_matmul(const Z2Matrix& x, const Z2Matrix& y) {
  if (x.cols != y.rows) {
    throw std::invalid_argument("z2_matmul: inner dimensions disagree");
  }
  Z2Matrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      if (!x.at(i, k)) continue;
      for (int j = 0; j < y.cols; ++j) {
        out.at(i, j) = add(out.at(i, j), y.at(k, j));
      }
    }
  }
  return out;
}

BitWord z2_apply(const Z2Matrix& m, const BitWord& v) {
  if (m.cols != static_cast<int>(v.size())) {
    throw std::invalid_argument("z2_apply: dimension mismatch");
  }
  BitWord out(static_cast<std::size_t>(m.rows), 0);
  for (int i = 0; i < m.rows; ++i) {
    Bit sum = 0;
    for (int j = 0; j < m.cols; ++j) {
      sum = add(sum, mul(m.at(i, j), v[j]));
    }
    out[i] = sum;
  }
  return out;
}

Z2Matrix z2_transpose(const Z2Matrix& m) {
  Z2Matrix out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  }
  return out;
}

bool z2_orthogonal(const Z2Matrix& m) {
  if (m.rows != m.cols) {
    throw std::invalid_argument("z2_orthogonal: matrix must be square");
  }
  // m * m^T = I iff m is invertible with m^{-1} = m^T.
  return z2_matmul(m, z2_transpose(m)) == z2_identity(m.rows);
}

std::optional<Z2Matrix> linear_matrix_of(const TruthTable& tt) {
  if (tt.m != 2 || tt.n != 2) {
    throw std::invalid_argument("linear_matrix_of: gate must map V2 to V2");
  }
  // A linear gate is determined by its action on (1;0) and (0;1): those
  // images are the columns of A. Build the candidate, then check all four
  // inputs (this rejects affine-but-not-linear gates via the (0;0) row).
  const std::uint32_t c0 = tt(2);  // image of (1;0), input rank 2
  const std::uint32_t c1 = tt(1);  // image of (0;1), input rank 1
  Z2Matrix a(2, 2);
  a.at(0, 0) = static_cast<Bit>((c0 >> 1) & 1);
  a.at(1, 0) = static_cast<Bit>(c0 & 1);
  a.at(0, 1) = static_cast<Bit>((c1 >> 1) & 1);
  a.at(1, 1) = static_cast<Bit>(c1 & 1);
  for (std::uint32_t i = 0; i < 4; ++i) {
    const BitWord in{static_cast<Bit>((i >> 1) & 1), static_cast<Bit>(i & 1)};
    const BitWord got = z2_apply(a, in);
    const std::uint32_t want = tt(i);
    if (got[0] != ((want >> 1) & 1) || got[1] != (want & 1)) {
      return std::nullopt;
    }
  }
  return a;
}

char six_gate_name(SixGate g) { return "IJKLMN"[static_cast<int>(g)]; }

SixGroup six_group() {
  SixGroup grp;
  grp.gate[0] = Z2Matrix(2, 2, {1, 0, 0, 1});  // I
  grp.gate[1] = Z2Matrix(2, 2, {0, 1, 1, 0});  // J: (x;y) -> (y;x)
  grp.gate[2] = Z2Matrix(2, 2, {1, 1, 1, 0});  // K: (x;y) -> (x+y;x)
  grp.gate[3] = Z2Matrix(2, 2, {0, 1, 1, 1});  // L: (x;y) -> (y;x+y)
  grp.gate[4] = Z2Matrix(2, 2, {1, 1, 0, 1});  // M: (x;y) -> (x+y;y)
  grp.gate[5] = Z2Matrix(2, 2, {1, 0, 1, 1});  // N: (x;y) -> (x;x+y)
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) {
      const Z2Matrix prod = z2_matmul(grp.gate[x], grp.gate[y]);
      int found = -1;
      for (int k = 0; k < 6; ++k) {
        if (prod == grp.gate[k]) {
          found = k;
          break;
        }
      }
      if (found < 0) {
        throw std::logic_error("six_group: composition left the set");
      }
      grp.table[x][y] = static_cast<SixGate>(found);
    }
  }
  return grp;
}

Z2Matrix named_matrix(NamedMatrix which) {
  switch (which) {
    case NamedMatrix::N2:
      return Z2Matrix(2, 2, {1, 0, 1, 1});
    case NamedMatrix::BN4:
      return Z2Matrix(4, 4,
                      {1, 0, 0, 0,
                       0, 1, 0, 0,
                       1, 0, 0, 1,
                       1, 0, 1, 0});
    case NamedMatrix::BNIE4:
      return Z2Matrix(4, 4,
                      {1, 0, 0, 0,
                       0, 1, 0, 0,
                       0, 0, 0, 1,
                       0, 0, 1, 0});
    case NamedMatrix::BBNIE8: {
      Z2Matrix m(8, 8);
      for (int i = 0; i < 6; ++i) m.at(i, i) = 1;
      m.at(6, 7) = 1;  // |110> and |111> swap; everything else is fixed
      m.at(7, 6) = 1;
      return m;
    }
  }
  throw std::invalid_argument("named_matrix: unknown name");
}

Bit nand_via_toffoli(Bit x, Bit y) {
  const TruthTable tt = toffoli_tt();
  const std::uint32_t in = (static_cast<std::uint32_t>(x & 1) << 2) |
                           (static_cast<std::uint32_t>(y & 1) << 1) | 1u;
  return static_cast<Bit>(tt(in) & 1);
}

struct NandExpr::Node {
  int var = -1;  // 0 or 1 for a leaf
  std::shared_ptr<const Node> l, r;
  int depth = 0;
  std::uint32_t table = 0;
};

NandExpr NandExpr::input(int index) {
  if (index != 0 && index != 1) {
    throw std::invalid_argument("NandExpr::input: index must be 0 or 1");
  }
  auto node = std::make_shared<Node>();
  node->var = index;
  node->depth = 0;
  // Value on input rank i = (x<<1)|y, packed into bit i.
  node->table = (index == 0) ? 0b1100u : 0b1010u;
  return NandExpr(std::move(node));
}

NandExpr NandExpr::nand(const NandExpr& lhs, const NandExpr& rhs) {
  auto node = std::make_shared<Node>();
  node->l = lhs.node_;
  node->r = rhs.node_;
  node->depth = 1 + std::max(lhs.node_->depth, rhs.node_->depth);
  node->table = ~(lhs.node_->table & rhs.node_->table) & 0xFu;
  return NandExpr(std::move(node));
}

int NandExpr::depth() const { return node_->depth; }

std::uint32_t NandExpr::table() const { return node_->table; }

std::string NandExpr::str() const {
  // Leaf operands print bare; composite operands are parenthesised, so the
  // AND synthesis reads "(x|y)|(x|y)".
  struct Render {
    static void go(const Node* n, std::string& out, bool parens) {
      if (n->var >= 0) {
        out.push_back(n->var == 0 ? 'x' : 'y');
        return;
      }
      if (parens) out.push_back('(');
      go(n->l.get(), out, true);
      out.push_back('|');
      go(n->r.get(), out, true);
      if (parens) out.push_back(')');
    }
  };
  std::string out;
  Render::go(node_.get(), out, false);
  return out;
}

NandExpr synth_from_nand(const TruthTable& target) {
  if (target.m != 2 || target.n != 1) {
    throw std::invalid_argument("synth_from_nand: target must map V2 to V1");
  }
  std::uint32_t want = 0;
  for (std::uint32_t i = 0; i < 4; ++i) {
    want |= (target(i) & 1u) << i;
  }

  constexpr int kMaxDepth = 6;
  // exprs[d]: expressions of depth exactly d, first found per truth table.
  std::vector<std::vector<NandExpr>> exprs;
  std::map<std::uint32_t, NandExpr> best;
  auto consider = [&](const NandExpr& e, std::vector<NandExpr>& level) {
    if (best.contains(e.table())) return;
    best.emplace(e.table(), e);
    level.push_back(e);
  };

  std::vector<NandExpr> depth0;
  consider(NandExpr::input(0), depth0);
  consider(NandExpr::input(1), depth0);
  exprs.push_back(std::move(depth0));
  for (int d = 1; d <= kMaxDepth; ++d) {
    if (auto it = best.find(want); it != best.end()) return it->second;
    std::vector<NandExpr> level;
    // One operand must sit at depth d-1; the other may be any shallower one.
    for (const NandExpr& a : exprs[d - 1]) {
      for (const auto& shallower : exprs) {
        for (const NandExpr& b : shallower) {
          consider(NandExpr::nand(a, b), level);
          consider(NandExpr::nand(b, a), level);
        }
      }
    }
    exprs.push_back(std::move(level));
  }
  if (auto it = best.find(want); it != best.end()) return it->second;
  throw std::logic_error("synth_from_nand: depth bound exceeded");
}

std::pair<CVector, CVector> ket_bits() {
  return {CVector{1.0, 0.0}, CVector{0.0, 1.0}};
}

GateCensus census_v2() {
  GateCensus c;
  for (const TruthTable& tt : enumerate_gates(2, 2)) {
    ++c.total;
    if (is_reversible(tt)) ++c.reversible;
    if (const auto m = linear_matrix_of(tt)) {
      ++c.linear;
      const Bit det = add(mul(m->at(0, 0), m->at(1, 1)),
                          mul(m->at(0, 1), m->at(1, 0)));
      if (det) {
        ++c.linear_invertible;
        if (z2_orthogonal(*m)) ++c.orthogonal;
      } else {
        ++c.linear_singular;
      }
    }
  }
  return c;
}

std::string census_report() {
  const GateCensus c = census_v2();
  const SixGroup grp = six_group();
  std::ostringstream os;
  os << "gates V2->V2: " << c.total << "\n";
  os << "reversible: " << c.reversible << "\n";
  os << "linear: " << c.linear << "\n";
  os << "linear singular: " << c.linear_singular << "\n";
  os << "linear invertible: " << c.linear_invertible << "\n";
  os << "orthogonal: " << c.orthogonal << " (I J)\n";
  os << "\ncomposition table (row * column):\n";
  os << "  *";
  for (int y = 0; y < 6; ++y) {
    os << ' ' << six_gate_name(static_cast<SixGate>(y));
  }
  os << '\n';
  for (int x = 0; x < 6; ++x) {
    os << "  " << six_gate_name(static_cast<SixGate>(x));
    for (int y = 0; y < 6; ++y) {
      os << ' ' << six_gate_name(grp.table[x][y]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qkit::z2
