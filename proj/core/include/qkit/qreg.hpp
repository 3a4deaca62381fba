#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "qkit/bitword.hpp"
#include "qkit/linalg.hpp"
#include "qkit/rng.hpp"

namespace qkit {

/// Quantum register of n qubits held as 2^n amplitudes. Qubit 0 is the
/// leftmost ket symbol and therefore the most significant bit of the basis
/// index: |110> lives at index 6. Gate application and measurement mutate
/// the register; the norm stays 1 within 1e-9 after every operation.
struct QRegister {
  static constexpr int kMaxQubits = 26;

  int n = 0;
  CVector state;

  explicit QRegister(int n_qubits);  // |0...0>

  std::size_t dim() const { return state.size(); }
};

QRegister qreg_basis(int n, const BitWord& word);

/// Single-qubit gate; construction rejects matrices that are not unitary
/// within 1e-10.
class Gate1 {
 public:
  explicit Gate1(const std::array<Complex, 4>& m);  // row-major

  const Complex& at(int r, int c) const { return m_[r * 2 + c]; }
  CMatrix matrix() const;

 private:
  std::array<Complex, 4> m_;
};

struct SingleQubitParams {
  double a = 0;
  double b = 0;
  double c = 0;
  double d = 0;

  bool operator==(const SingleQubitParams&) const = default;
};

/// e^{ia} [[cos b, -i sin b], [-i sin b, cos b]]
///        [[cos c, -sin c], [sin c, cos c]]
///        [[e^{-id}, 0], [0, e^{id}]].
/// Every single-qubit unitary has this form for some real a, b, c, d.
Gate1 gate_from_params(const SingleQubitParams& p);

enum class GateName { H, S, T, X, Y, Z, UCoin };

Gate1 named_gate(GateName name);

/// In-place kernel over 2^{n-1} amplitude pairs with stride 2^{n-1-q};
/// no 2^n x 2^n matrix is ever built.
void apply_gate(QRegister& reg, const Gate1& g, int qubit);
void apply_cnot(QRegister& reg, int control, int target);
void apply_toffoli(QRegister& reg, int control1, int control2, int target);
/// H on each listed qubit; on |0^n> this yields the uniform superposition.
void apply_walsh_hadamard(QRegister& reg, std::span<const int> qubits);

struct BasisMeasurement {
  BitWord outcome;
  double probability = 0;
};

/// Born-rule measurement of all qubits: outcome x with probability
/// |amp_x|^2, sampled by inverse CDF over ascending basis index with one
/// rng draw. Collapses the register to |x>.
BasisMeasurement measure_all(QRegister& reg, Rng& rng);

struct QubitMeasurement {
  int bit = 0;
  double probability = 0;
};

/// Measures one qubit; zeroes the inconsistent amplitudes and renormalises.
/// An immediate re-measurement returns the same bit with probability 1.
QubitMeasurement measure_qubit(QRegister& reg, int qubit, Rng& rng);

/// Conditions the register on `qubit` reading `bit` and returns that
/// branch's probability. Collapsing onto a branch of probability < 1e-12
/// is an error.
double project_qubit(QRegister& reg, int qubit, int bit);

/// Observable in eigensystem form: real eigenvalues with an orthonormal
/// eigenbasis. 2x2 Hermitian matrices are eigendecomposed in closed form.
class Observable {
 public:
  static Observable from_eigensystem(std::vector<double> eigenvalues,
                                     std::vector<CVector> eigenbasis);
  static Observable from_hermitian(const CMatrix& m);  // 2x2 only

  std::size_t dim() const { return basis_.empty() ? 0 : basis_[0].size(); }
  const std::vector<double>& eigenvalues() const { return values_; }
  const CVector& eigenstate(std::size_t j) const { return basis_[j]; }

 private:
  Observable() = default;
  std::vector<double> values_;
  std::vector<CVector> basis_;
};

struct ObservableMeasurement {
  double eigenvalue = 0;
  double probability = 0;
  CVector post_state;
};

/// Expands the state in the eigenbasis and samples eigenvalue lambda_j with
/// probability |a_j|^2; the post state is the eigenstate |phi_j>.
ObservableMeasurement measure_observable(const CVector& state,
                                         const Observable& obs, Rng& rng);

/// Sum_j lambda_j |a_j|^2 for a normalized state.
double expectation(const CVector& state, const Observable& obs);

/// U obs U^dag: same eigenvalues, eigenbasis mapped through U.
Observable conjugate_observable(const Gate1& u, const Observable& obs);

enum class SpinAxis { Z, X };
enum class SpinSign { Up, Down };

/// Spin eigenstates: up_z = (1;0), down_z = (0;1),
/// up_x = (up_z + down_z)/sqrt(2), down_x = (up_z - down_z)/sqrt(2).
CVector spin_state(SpinAxis axis, SpinSign sign);

/// (|01> - |10>)/sqrt(2): measured bits of the two qubits are always
/// opposite.
QRegister prepare_singlet();

/// Amplitudes of a 2-qubit state reshaped to [[a00, a01], [a10, a11]]; the
/// determinant vanishes exactly on product states.
Complex reshaped_det_2q(const CVector& state);

/// True iff |det| <= tol for the reshaped amplitude matrix (rank 1 <=>
/// product state).
bool is_product_2q(const CVector& state, double tol);

/// Coefficients of M = c0 I + c1 X + c2 Y + c3 Z; c_k = trace(P_k M)/2.
struct PauliDecomposition {
  Complex c0, c1, c2, c3;
};

PauliDecomposition pauli_decompose(const CMatrix& m);
CMatrix pauli_reconstruct(const PauliDecomposition& d);

/// |<psi psi| CNOT (psi tensor |0>)|^2: exactly 1 on basis states, < 1 on
/// every superposition -- the basis copier fails off-basis.
double clone_attempt_fidelity(const CVector& psi);

}  // namespace qkit
