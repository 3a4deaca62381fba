#include "qkit/qreg.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qkit/z2.hpp"
#include "reference.hpp"

namespace qkit {
namespace {

const Complex kI(0.0, 1.0);
constexpr double kInvSqrt2 = 0.70710678118654752440;

void expect_state_near(const CVector& got, const CVector& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t k = 0; k < got.size(); ++k) {
    EXPECT_NEAR(std::abs(got[k] - want[k]), 0.0, tol) << "k=" << k;
  }
}

TEST(QRegBasis, IndexIdentification) {
  // 6 = 110 in binary: qubit 0 is the most significant bit.
  const QRegister reg = qreg_basis(3, word_from_string("110"));
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_EQ(reg.state[k], k == 6 ? Complex(1.0) : Complex(0.0));
  }
}

TEST(QRegBasis, SingleQubit) {
  const QRegister reg = qreg_basis(1, word_from_string("0"));
  expect_state_near(reg.state, {1.0, 0.0}, 0.0);
}

TEST(QRegBasis, MatchesTensorOracle) {
  const QRegister reg = qreg_basis(2, word_from_string("11"));
  const CVector want = tensor_vec({0.0, 1.0}, {0.0, 1.0});
  expect_state_near(reg.state, want, 0.0);
}

TEST(QRegBasis, Errors) {
  EXPECT_THROW(qreg_basis(2, word_from_string("1")), std::invalid_argument);
  EXPECT_THROW(QRegister(27), std::length_error);
  EXPECT_THROW(QRegister(0), std::invalid_argument);
}

TEST(GateFromParams, PaperQuadruples) {
  const double pi = std::numbers::pi;
  // Coin-flip unitary: a=b=d=0, c=-pi/4.
  const Gate1 coin = gate_from_params({0, 0, -pi / 4, 0});
  EXPECT_TRUE(approx_equal(coin.matrix(),
                           named_gate(GateName::UCoin).matrix(), 1e-12));
  // Hadamard: a=d=pi/2, b=0, c=pi/4.
  const Gate1 h = gate_from_params({pi / 2, 0, pi / 4, pi / 2});
  EXPECT_TRUE(approx_equal(h.matrix(), named_gate(GateName::H).matrix(), 1e-12));
  // Phase gate: a=d=pi/4, b=c=0.
  const Gate1 s = gate_from_params({pi / 4, 0, 0, pi / 4});
  EXPECT_TRUE(approx_equal(s.matrix(), named_gate(GateName::S).matrix(), 1e-12));
  // T gate: a=d=pi/8, b=c=0.
  const Gate1 t = gate_from_params({pi / 8, 0, 0, pi / 8});
  EXPECT_TRUE(approx_equal(t.matrix(), named_gate(GateName::T).matrix(), 1e-12));
}

TEST(GateFromParams, AlwaysUnitary) {
  Rng rng(21);
  for (int it = 0; it < 1000; ++it) {
    const Gate1 g = gate_from_params(test::random_params(rng));
    EXPECT_TRUE(is_unitary(g.matrix(), 1e-12));
  }
}

TEST(GateFromParams, RejectsNonFinite) {
  EXPECT_THROW(gate_from_params({std::nan(""), 0, 0, 0}), std::invalid_argument);
}

TEST(NamedGate, Matrices) {
  EXPECT_TRUE(approx_equal(
      named_gate(GateName::H).matrix(),
      CMatrix(2, 2, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}), 0.0));
  EXPECT_TRUE(approx_equal(named_gate(GateName::Z).matrix(),
                           CMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}), 0.0));
  EXPECT_TRUE(approx_equal(named_gate(GateName::X).matrix(),
                           CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}), 0.0));
  EXPECT_TRUE(approx_equal(named_gate(GateName::Y).matrix(),
                           CMatrix(2, 2, {0.0, -kI, kI, 0.0}), 0.0));
}

TEST(NamedGate, PhaseGateAction) {
  // S: alpha|0> + beta|1> -> alpha|0> + i beta|1>.
  QRegister reg(1);
  reg.state = {Complex(0.6, 0.0), Complex(0.8, 0.0)};
  apply_gate(reg, named_gate(GateName::S), 0);
  expect_state_near(reg.state, {Complex(0.6, 0.0), Complex(0.0, 0.8)}, 1e-15);
}

TEST(NamedGate, TSquaredIsSAndSSquaredIsZ) {
  const CMatrix t = named_gate(GateName::T).matrix();
  const CMatrix s = named_gate(GateName::S).matrix();
  const CMatrix z = named_gate(GateName::Z).matrix();
  EXPECT_TRUE(approx_equal(mat_mul(t, t), s, 1e-12));
  EXPECT_TRUE(approx_equal(mat_mul(s, s), z, 1e-12));
}

TEST(ApplyGate, HadamardOnKet0) {
  QRegister reg(1);
  apply_gate(reg, named_gate(GateName::H), 0);
  expect_state_near(reg.state, {kInvSqrt2, kInvSqrt2}, 1e-15);
}

TEST(ApplyGate, IdentityLeavesStateUnchanged) {
  Rng rng(22);
  QRegister reg(3);
  reg.state = test::random_state(8, rng);
  const CVector before = reg.state;
  apply_gate(reg, gate_from_params({0, 0, 0, 0}), 1);
  expect_state_near(reg.state, before, 1e-15);
}

TEST(ApplyGate, MatchesFullMatrixOracle) {
  // H on qubit 0 of |10>: the tensor-expanded matrix gives (|00>-|10>)/sqrt2.
  QRegister reg = qreg_basis(2, word_from_string("10"));
  apply_gate(reg, named_gate(GateName::H), 0);
  const CMatrix full =
      test::ref_full_1q(2, named_gate(GateName::H).matrix(), 0);
  const CVector want =
      mat_apply(full, tensor_vec({0.0, 1.0}, {1.0, 0.0}));
  expect_state_near(reg.state, want, 1e-12);
  expect_state_near(reg.state, {kInvSqrt2, 0.0, -kInvSqrt2, 0.0}, 1e-12);
}

TEST(ApplyGate, QubitOutOfRangeThrows) {
  QRegister reg(2);
  EXPECT_THROW(apply_gate(reg, named_gate(GateName::H), 2),
               std::invalid_argument);
  EXPECT_THROW(apply_gate(reg, named_gate(GateName::H), -1),
               std::invalid_argument);
}

TEST(ApplyCnot, BasisRules) {
  QRegister reg = qreg_basis(2, word_from_string("10"));
  apply_cnot(reg, 0, 1);
  expect_state_near(reg.state, qreg_basis(2, word_from_string("11")).state, 0.0);

  QRegister zero = qreg_basis(2, word_from_string("00"));
  apply_cnot(zero, 0, 1);
  expect_state_near(zero.state, qreg_basis(2, word_from_string("00")).state, 0.0);
}

TEST(ApplyCnot, LinearOverBasisRules) {
  QRegister reg(2);
  reg.state = {kInvSqrt2, 0.0, kInvSqrt2, 0.0};  // (|00> + |10>)/sqrt2
  apply_cnot(reg, 0, 1);
  expect_state_near(reg.state, {kInvSqrt2, 0.0, 0.0, kInvSqrt2}, 1e-15);
}

TEST(ApplyCnot, ControlEqualsTargetThrows) {
  QRegister reg(2);
  EXPECT_THROW(apply_cnot(reg, 1, 1), std::invalid_argument);
}

TEST(ApplyToffoli, MatchesDoublyControlledTable) {
  QRegister a = qreg_basis(3, word_from_string("110"));
  apply_toffoli(a, 0, 1, 2);
  expect_state_near(a.state, qreg_basis(3, word_from_string("111")).state, 0.0);

  QRegister b = qreg_basis(3, word_from_string("010"));
  apply_toffoli(b, 0, 1, 2);
  expect_state_near(b.state, qreg_basis(3, word_from_string("010")).state, 0.0);

  QRegister c = qreg_basis(3, word_from_string("111"));
  apply_toffoli(c, 0, 1, 2);
  expect_state_near(c.state, qreg_basis(3, word_from_string("110")).state, 0.0);

  QRegister d(3);
  EXPECT_THROW(apply_toffoli(d, 0, 0, 2), std::invalid_argument);
}

TEST(ApplyToffoli, AgreesWithBBNIEMatrix) {
  // The quantum Toffoli on 3 qubits is exactly the 8x8 permutation.
  const z2::Z2Matrix bbnie = z2::named_matrix(z2::NamedMatrix::BBNIE8);
  CMatrix complex_bbnie(8, 8);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      complex_bbnie.at(r, c) = bbnie.at(r, c) ? 1.0 : 0.0;
    }
  }
  Rng rng(23);
  QRegister reg(3);
  reg.state = test::random_state(8, rng);
  const CVector want = mat_apply(complex_bbnie, reg.state);
  apply_toffoli(reg, 0, 1, 2);
  expect_state_near(reg.state, want, 1e-15);
}

TEST(WalshHadamard, UniformSuperposition) {
  QRegister one(1);
  const int q0[] = {0};
  apply_walsh_hadamard(one, q0);
  expect_state_near(one.state, {kInvSqrt2, kInvSqrt2}, 1e-15);

  QRegister two(2);
  const int q01[] = {0, 1};
  apply_walsh_hadamard(two, q01);
  const CVector want =
      tensor_vec({kInvSqrt2, kInvSqrt2}, {kInvSqrt2, kInvSqrt2});
  expect_state_near(two.state, want, 1e-12);
  expect_state_near(two.state, {0.5, 0.5, 0.5, 0.5}, 1e-12);
}

TEST(WalshHadamard, SelfInverse) {
  Rng rng(24);
  QRegister reg(4);
  reg.state = test::random_state(16, rng);
  const CVector before = reg.state;
  const int all[] = {0, 1, 2, 3};
  apply_walsh_hadamard(reg, all);
  apply_walsh_hadamard(reg, all);
  expect_state_near(reg.state, before, 1e-12);
}

TEST(Involutions, StateLevel) {
  Rng rng(25);
  QRegister reg(3);
  reg.state = test::random_state(8, rng);
  const CVector before = reg.state;
  apply_gate(reg, named_gate(GateName::H), 1);
  apply_gate(reg, named_gate(GateName::H), 1);
  expect_state_near(reg.state, before, 1e-12);
  apply_cnot(reg, 2, 0);
  apply_cnot(reg, 2, 0);
  expect_state_near(reg.state, before, 1e-12);
  apply_toffoli(reg, 1, 2, 0);
  apply_toffoli(reg, 1, 2, 0);
  expect_state_near(reg.state, before, 1e-12);
}

TEST(NormPreservation, RandomCircuits) {
  Rng rng(26);
  for (int it = 0; it < 20; ++it) {
    const int n = 2 + static_cast<int>(rng.next_below(4));
    QRegister reg(n);
    reg.state = test::random_state(reg.dim(), rng);
    for (int g = 0; g < 30; ++g) {
      const int which = static_cast<int>(rng.next_below(3));
      const int q = static_cast<int>(rng.next_below(n));
      if (which == 0) {
        apply_gate(reg, gate_from_params(test::random_params(rng)), q);
      } else if (which == 1 && n >= 2) {
        const int t = (q + 1) % n;
        apply_cnot(reg, q, t);
      } else if (n >= 3) {
        apply_toffoli(reg, q, (q + 1) % n, (q + 2) % n);
      }
    }
    EXPECT_NEAR(norm(reg.state), 1.0, 1e-9);
  }
}

TEST(KernelEquivalence, StrideKernelsMatchDenseMatrices) {
  Rng rng(4242);
  for (int it = 0; it < 25; ++it) {
    const int n = 2 + static_cast<int>(rng.next_below(5));  // up to 6 qubits
    QRegister reg(n);
    reg.state = test::random_state(reg.dim(), rng);
    CVector dense = reg.state;
    const int gates = 1 + static_cast<int>(rng.next_below(20));
    for (int g = 0; g < gates; ++g) {
      test::random_gate_both_ways(reg, dense, rng);
    }
    ASSERT_EQ(reg.state.size(), dense.size());
    for (std::size_t k = 0; k < dense.size(); ++k) {
      ASSERT_NEAR(std::abs(reg.state[k] - dense[k]), 0.0, 1e-10);
    }
  }
}

TEST(MeasureAll, BasisStateIsCertain) {
  QRegister reg = qreg_basis(3, word_from_string("110"));
  Rng rng(1);
  const BasisMeasurement m = measure_all(reg, rng);
  EXPECT_EQ(word_to_string(m.outcome), "110");
  EXPECT_DOUBLE_EQ(m.probability, 1.0);
  expect_state_near(reg.state, qreg_basis(3, word_from_string("110")).state, 0.0);
}

TEST(MeasureAll, BellStatistics) {
  const Rng root(31337);
  int count00 = 0, count11 = 0;
  const int shots = 100000;
  for (int s = 0; s < shots; ++s) {
    QRegister reg(2);
    reg.state = {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    Rng sub = root.substream(static_cast<std::uint64_t>(s));
    const BasisMeasurement m = measure_all(reg, sub);
    const std::string word = word_to_string(m.outcome);
    if (word == "00") ++count00;
    else if (word == "11") ++count11;
    else FAIL() << "impossible outcome " << word;  // Born weight exactly 0
  }
  EXPECT_NEAR(count00 / static_cast<double>(shots), 0.5, 0.01);
  EXPECT_EQ(count00 + count11, shots);
}

TEST(MeasureAll, WeightedSingleQubit) {
  // alpha|0> + beta|1>: outcome 0 with probability |alpha|^2.
  const Rng root(8080);
  int zeros = 0;
  const int shots = 20000;
  for (int s = 0; s < shots; ++s) {
    QRegister reg(1);
    reg.state = {0.6, 0.8};
    Rng sub = root.substream(static_cast<std::uint64_t>(s));
    const BasisMeasurement m = measure_all(reg, sub);
    if (m.outcome[0] == 0) {
      ++zeros;
      EXPECT_NEAR(m.probability, 0.36, 1e-12);
    } else {
      EXPECT_NEAR(m.probability, 0.64, 1e-12);
    }
  }
  EXPECT_NEAR(zeros / static_cast<double>(shots), 0.36, 0.012);
}

TEST(MeasureAll, BornTotality) {
  Rng rng(27);
  for (int it = 0; it < 10; ++it) {
    QRegister reg(4);
    reg.state = test::random_state(16, rng);
    double total = 0;
    for (const Complex& amp : reg.state) total += std::norm(amp);
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(MeasureQubit, CollapseFormula) {
  // Measuring qubit 0 of the uniform 2-qubit state, branch 0:
  // post state (|00> + |01>)/sqrt2 with probability 1/2.
  QRegister reg(2);
  reg.state = {0.5, 0.5, 0.5, 0.5};
  const double p = project_qubit(reg, 0, 0);
  EXPECT_NEAR(p, 0.5, 1e-12);
  expect_state_near(reg.state, {kInvSqrt2, kInvSqrt2, 0.0, 0.0}, 1e-12);
}

TEST(MeasureQubit, DeterministicBit) {
  QRegister reg = qreg_basis(2, word_from_string("10"));
  Rng rng(4);
  const QubitMeasurement m = measure_qubit(reg, 0, rng);
  EXPECT_EQ(m.bit, 1);
  EXPECT_NEAR(m.probability, 1.0, 1e-12);
}

TEST(MeasureQubit, BranchProbabilitiesSumToOne) {
  Rng rng(28);
  for (int it = 0; it < 20; ++it) {
    QRegister reg(3);
    reg.state = test::random_state(8, rng);
    QRegister copy0 = reg;
    QRegister copy1 = reg;
    const double p0 = project_qubit(copy0, 1, 0);
    const double p1 = project_qubit(copy1, 1, 1);
    EXPECT_NEAR(p0 + p1, 1.0, 1e-12);
  }
}

TEST(MeasureQubit, CollapseIdempotence) {
  const Rng root(999);
  for (int s = 0; s < 200; ++s) {
    QRegister reg(2);
    reg.state = {0.5, 0.5, 0.5, 0.5};
    Rng sub = root.substream(static_cast<std::uint64_t>(s));
    const QubitMeasurement first = measure_qubit(reg, 0, sub);
    const QubitMeasurement second = measure_qubit(reg, 0, sub);
    EXPECT_EQ(second.bit, first.bit);
    EXPECT_NEAR(second.probability, 1.0, 1e-12);
  }
}

TEST(MeasureQubit, DegenerateStateThrows) {
  QRegister reg(1);
  reg.state = {0.0, 0.0};  // deliberately invalid register contents
  Rng rng(0);
  EXPECT_THROW(measure_qubit(reg, 0, rng), std::runtime_error);
}

TEST(Singlet, PreparationAndAntiCorrelation) {
  QRegister reg = prepare_singlet();
  expect_state_near(reg.state, {0.0, kInvSqrt2, -kInvSqrt2, 0.0}, 0.0);
  EXPECT_NEAR(norm(reg.state), 1.0, 1e-12);
  EXPECT_FALSE(is_product_2q(reg.state, 1e-9));

  const Rng root(606);
  for (int s = 0; s < 10000; ++s) {
    QRegister pair = prepare_singlet();
    Rng sub = root.substream(static_cast<std::uint64_t>(s));
    const int first = measure_qubit(pair, 0, sub).bit;
    const int second = measure_qubit(pair, 1, sub).bit;
    ASSERT_NE(first, second);
  }
}

TEST(ProductTest, DetCriterion) {
  EXPECT_TRUE(is_product_2q(qreg_basis(2, word_from_string("00")).state, 1e-9));
  const QRegister singlet = prepare_singlet();
  EXPECT_NEAR(std::abs(reshaped_det_2q(singlet.state)), 0.5, 1e-12);
  // v1 (x) w1 + v2 (x) w2 with independent factors is not a product.
  CVector bell{kInvSqrt2, 0.0, 0.0, kInvSqrt2};
  EXPECT_FALSE(is_product_2q(bell, 1e-9));
}

TEST(Observable, EigensystemValidation) {
  EXPECT_THROW(Observable::from_eigensystem(
                   {1.0, 2.0}, {CVector{1.0, 0.0}, CVector{1.0, 0.0}}),
               std::invalid_argument);
  EXPECT_THROW(Observable::from_eigensystem({1.0}, {CVector{1.0, 0.0}}),
               std::invalid_argument);
}

TEST(Observable, FromHermitianClosedForm) {
  // diag(1, 2): eigenpairs (1, |0>), (2, |1>).
  const Observable a =
      Observable::from_hermitian(CMatrix(2, 2, {1.0, 0.0, 0.0, 2.0}));
  EXPECT_EQ(a.eigenvalues(), (std::vector<double>{1.0, 2.0}));

  // Pauli X: eigenvalues -1, +1 with (|0> -+ |1>)/sqrt2.
  const Observable x =
      Observable::from_hermitian(CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}));
  EXPECT_NEAR(x.eigenvalues()[0], -1.0, 1e-12);
  EXPECT_NEAR(x.eigenvalues()[1], 1.0, 1e-12);
  for (int j = 0; j < 2; ++j) {
    // A |phi> = lambda |phi>.
    const CVector& v = x.eigenstate(j);
    const CVector av{v[1], v[0]};
    for (int k = 0; k < 2; ++k) {
      EXPECT_NEAR(std::abs(av[k] - x.eigenvalues()[j] * v[k]), 0.0, 1e-12);
    }
  }
  EXPECT_THROW(Observable::from_hermitian(CMatrix(2, 2, {0.0, kI, 2.0, 1.0})),
               std::invalid_argument);
}

TEST(MeasureObservable, SpinOnPlusState) {
  const Observable spin = Observable::from_eigensystem(
      {0.5, -0.5}, {CVector{1.0, 0.0}, CVector{0.0, 1.0}});
  const CVector plus{kInvSqrt2, kInvSqrt2};
  const Rng root(17);
  int up = 0;
  const int shots = 100000;
  for (int s = 0; s < shots; ++s) {
    Rng sub = root.substream(static_cast<std::uint64_t>(s));
    const ObservableMeasurement m = measure_observable(plus, spin, sub);
    EXPECT_NEAR(m.probability, 0.5, 1e-12);
    if (m.eigenvalue > 0) ++up;
  }
  EXPECT_NEAR(up / static_cast<double>(shots), 0.5, 0.01);
}

TEST(MeasureObservable, WeightedQubitExample) {
  // A|0> = |0>, A|1> = 2|1>; on a|0> + b|1> the value 1 appears w.p. |a|^2.
  const Observable a = Observable::from_eigensystem(
      {1.0, 2.0}, {CVector{1.0, 0.0}, CVector{0.0, 1.0}});
  const CVector state{0.6, 0.8};
  const Rng root(18);
  int ones = 0;
  const int shots = 20000;
  for (int s = 0; s < shots; ++s) {
    Rng sub = root.substream(static_cast<std::uint64_t>(s));
    const ObservableMeasurement m = measure_observable(state, a, sub);
    if (m.eigenvalue == 1.0) {
      ++ones;
      EXPECT_NEAR(m.probability, 0.36, 1e-12);
      expect_state_near(m.post_state, {1.0, 0.0}, 0.0);
    }
  }
  EXPECT_NEAR(ones / static_cast<double>(shots), 0.36, 0.012);
}

TEST(MeasureObservable, EigenstateIsCertain) {
  const Observable spin = Observable::from_eigensystem(
      {0.5, -0.5}, {CVector{1.0, 0.0}, CVector{0.0, 1.0}});
  Rng rng(19);
  const ObservableMeasurement m =
      measure_observable(CVector{0.0, 1.0}, spin, rng);
  EXPECT_EQ(m.eigenvalue, -0.5);
  EXPECT_NEAR(m.probability, 1.0, 1e-12);
}

TEST(Expectation, WeightedQubitExample) {
  const Observable a = Observable::from_eigensystem(
      {1.0, 2.0}, {CVector{1.0, 0.0}, CVector{0.0, 1.0}});
  // |a|^2 + 2 |b|^2 on a|0> + b|1>.
  EXPECT_NEAR(expectation(CVector{0.6, 0.8}, a), 0.36 + 2 * 0.64, 1e-12);
  EXPECT_NEAR(expectation(CVector{0.0, 1.0}, a), 2.0, 1e-12);

  const Observable spin = Observable::from_eigensystem(
      {0.5, -0.5}, {CVector{1.0, 0.0}, CVector{0.0, 1.0}});
  EXPECT_NEAR(expectation(CVector{kInvSqrt2, kInvSqrt2}, spin), 0.0, 1e-10);

  EXPECT_THROW(expectation(CVector{1.0, 1.0}, a), std::invalid_argument);
}

TEST(ConjugateObservable, IdentityLeavesObservableAlone) {
  const Observable spin = Observable::from_eigensystem(
      {0.5, -0.5}, {CVector{1.0, 0.0}, CVector{0.0, 1.0}});
  const Observable same =
      conjugate_observable(gate_from_params({0, 0, 0, 0}), spin);
  EXPECT_EQ(same.eigenvalues(), spin.eigenvalues());
  expect_state_near(same.eigenstate(0), spin.eigenstate(0), 1e-15);
}

TEST(ConjugateObservable, CoinConjugationKeepsFairStatistics) {
  const Observable spin = Observable::from_eigensystem(
      {0.5, -0.5}, {CVector{1.0, 0.0}, CVector{0.0, 1.0}});
  const Observable s1 =
      conjugate_observable(named_gate(GateName::UCoin), spin);
  // Eigenvalues unchanged.
  EXPECT_EQ(s1.eigenvalues(), (std::vector<double>{0.5, -0.5}));
  // Measured in |0>: outcomes +-1/2 each with probability 1/2.
  const CVector ket0{1.0, 0.0};
  for (int j = 0; j < 2; ++j) {
    const double p = std::norm(inner_product(s1.eigenstate(j), ket0));
    EXPECT_NEAR(p, 0.5, 1e-12);
  }
}

TEST(SpinStates, EquationsOneThroughThree) {
  const CVector up_z = spin_state(SpinAxis::Z, SpinSign::Up);
  const CVector down_z = spin_state(SpinAxis::Z, SpinSign::Down);
  const CVector up_x = spin_state(SpinAxis::X, SpinSign::Up);
  const CVector down_x = spin_state(SpinAxis::X, SpinSign::Down);

  // up_x and down_x are the +-superpositions.
  expect_state_near(up_x, {kInvSqrt2, kInvSqrt2}, 1e-15);
  expect_state_near(down_x, {kInvSqrt2, -kInvSqrt2}, 1e-15);
  EXPECT_NEAR(std::abs(inner_product(up_x, down_x)), 0.0, 1e-12);

  // (up_x + down_x)/sqrt2 is exactly up_z: quantum interference.
  CVector combined(2);
  for (int k = 0; k < 2; ++k) {
    combined[k] = kInvSqrt2 * (up_x[k] + down_x[k]);
  }
  expect_state_near(combined, up_z, 1e-12);
  (void)down_z;

  // Measuring up_x along z gives either outcome with probability 1/2.
  QRegister reg(1);
  reg.state = up_x;
  QRegister reg2 = reg;
  EXPECT_NEAR(project_qubit(reg, 0, 0), 0.5, 1e-12);
  EXPECT_NEAR(project_qubit(reg2, 0, 1), 0.5, 1e-12);
}

TEST(PauliDecompose, NamedMatrices) {
  const PauliDecomposition x =
      pauli_decompose(CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}));
  EXPECT_NEAR(std::abs(x.c0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(x.c1 - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(x.c2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(x.c3), 0.0, 1e-15);

  const PauliDecomposition eye = pauli_decompose(CMatrix::identity(2));
  EXPECT_NEAR(std::abs(eye.c0 - 1.0), 0.0, 1e-15);

  // H = (X + Z)/sqrt2, via the trace inner product.
  const PauliDecomposition h = pauli_decompose(named_gate(GateName::H).matrix());
  EXPECT_NEAR(std::abs(h.c0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h.c1 - kInvSqrt2), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(h.c2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h.c3 - kInvSqrt2), 0.0, 1e-12);
}

TEST(PauliDecompose, ReconstructionOnRandomMatrices) {
  Rng rng(29);
  for (int it = 0; it < 1000; ++it) {
    const CMatrix m = test::random_matrix(2, 2, rng);
    const CMatrix back = pauli_reconstruct(pauli_decompose(m));
    EXPECT_TRUE(approx_equal(back, m, 1e-12));
  }
}

TEST(CloneAttempt, BasisStatesCopyExactly) {
  EXPECT_DOUBLE_EQ(clone_attempt_fidelity(CVector{1.0, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(clone_attempt_fidelity(CVector{0.0, 1.0}), 1.0);
}

TEST(CloneAttempt, SuperpositionFails) {
  EXPECT_NEAR(clone_attempt_fidelity(CVector{kInvSqrt2, kInvSqrt2}), 0.5,
              1e-12);
  // Any superposition copies imperfectly.
  Rng rng(30);
  for (int it = 0; it < 50; ++it) {
    const CVector psi = test::random_state(2, rng);
    const double f = clone_attempt_fidelity(psi);
    EXPECT_LE(f, 1.0 + 1e-12);
    if (std::norm(psi[0]) > 1e-3 && std::norm(psi[1]) > 1e-3) {
      EXPECT_LT(f, 1.0);
    }
  }
}

}  // namespace
}  // namespace qkit
