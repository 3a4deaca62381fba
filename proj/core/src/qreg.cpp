#include "qkit/qreg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qkit {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_qubit(const QRegister& reg, int qubit, const char* who) {
  if (qubit < 0 || qubit >= reg.n) {
    throw std::invalid_argument(std::string(who) + ": qubit index out of range");
  }
}

// Bit mask of `qubit` within the basis index; qubit 0 is the MSB.
std::size_t qubit_mask(const QRegister& reg, int qubit) {
  return std::size_t{1} << (reg.n - 1 - qubit);
}

void check_finite(double v, const char* who) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(who) + ": parameter must be finite");
  }
}

}  // namespace

QRegister::QRegister(int n_qubits) : n(n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("QRegister: need at least one qubit");
  }
  if (n_qubits > kMaxQubits) {
    throw std::length_error("QRegister: qubit count exceeds the resource cap");
  }
  state.assign(std::size_t{1} << n_qubits, Complex(0.0));
  state[0] = 1.0;
}

QRegister qreg_basis(int n, const BitWord& word) {
  if (static_cast<int>(word.size()) != n) {
    throw std::invalid_argument("qreg_basis: word length must equal qubit count");
  }
  QRegister reg(n);
  reg.state[0] = 0.0;
  reg.state[word_to_index(word)] = 1.0;
  return reg;
}

Gate1::Gate1(const std::array<Complex, 4>& m) : m_(m) {
  for (const Complex& z : m_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("Gate1: entries must be finite");
    }
  }
  CMatrix check(2, 2, {m_[0], m_[1], m_[2], m_[3]});
  if (!is_unitary(check, 1e-10)) {
    throw std::invalid_argument("Gate1: matrix is not unitary");
  }
}

CMatrix Gate1::matrix() const {
  return CMatrix(2, 2, {m_[0], m_[1], m_[2], m_[3]});
}

Gate1 gate_from_params(const SingleQubitParams& p) {
  check_finite(p.a, "gate_from_params");
  check_finite(p.b, "gate_from_params");
  check_finite(p.c, "gate_from_params");
  check_finite(p.d, "gate_from_params");

  const Complex phase = std::polar(1.0, p.a);
  const Complex mi(0.0, -1.0);
  const double cb = std::cos(p.b), sb = std::sin(p.b);
  const double cc = std::cos(p.c), sc = std::sin(p.c);
  // [[cb, -i sb], [-i sb, cb]] * [[cc, -sc], [sc, cc]]
  const Complex r00 = cb * cc + mi * sb * sc;
  const Complex r01 = -cb * sc + mi * sb * cc;
  const Complex r10 = mi * sb * cc + cb * sc;
  const Complex r11 = mi * sb * -sc + cb * cc;
  const Complex dm = std::polar(1.0, -p.d);
  const Complex dp = std::polar(1.0, p.d);
  return Gate1({phase * r00 * dm, phase * r01 * dp,
                phase * r10 * dm, phase * r11 * dp});
}

Gate1 named_gate(GateName name) {
  const Complex i(0.0, 1.0);
  switch (name) {
    case GateName::H:
      return Gate1({kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
    case GateName::S:
      return Gate1({1.0, 0.0, 0.0, i});
    case GateName::T:
      return Gate1({1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)});
    case GateName::X:
      return Gate1({0.0, 1.0, 1.0, 0.0});
    case GateName::Y:
      return Gate1({0.0, -i, i, 0.0});
    case GateName::Z:
      return Gate1({1.0, 0.0, 0.0, -1.0});
    case GateName::UCoin:
      return Gate1({kInvSqrt2, kInvSqrt2, -kInvSqrt2, kInvSqrt2});
  }
  throw std::invalid_argument("named_gate: unknown gate");
}

void apply_gate(QRegister& reg, const Gate1& g, int qubit) {
  check_qubit(reg, qubit, "apply_gate");
  const std::size_t stride = qubit_mask(reg, qubit);
  const Complex m00 = g.at(0, 0), m01 = g.at(0, 1);
  const Complex m10 = g.at(1, 0), m11 = g.at(1, 1);
  CVector& s = reg.state;
  const std::size_t dim = s.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t k = base; k < base + stride; ++k) {
      const Complex a0 = s[k];
      const Complex a1 = s[k + stride];
      s[k] = m00 * a0 + m01 * a1;
      s[k + stride] = m10 * a0 + m11 * a1;
    }
  }
}

void apply_cnot(QRegister& reg, int control, int target) {
  check_qubit(reg, control, "apply_cnot");
  check_qubit(reg, target, "apply_cnot");
  if (control == target) {
    throw std::invalid_argument("apply_cnot: control equals target");
  }
  const std::size_t cbit = qubit_mask(reg, control);
  const std::size_t tbit = qubit_mask(reg, target);
  CVector& s = reg.state;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if ((k & cbit) && !(k & tbit)) std::swap(s[k], s[k | tbit]);
  }
}

void apply_toffoli(QRegister& reg, int control1, int control2, int target) {
  check_qubit(reg, control1, "apply_toffoli");
  check_qubit(reg, control2, "apply_toffoli");
  check_qubit(reg, target, "apply_toffoli");
  if (control1 == control2 || control1 == target || control2 == target) {
    throw std::invalid_argument("apply_toffoli: qubit indices must be distinct");
  }
  const std::size_t c1 = qubit_mask(reg, control1);
  const std::size_t c2 = qubit_mask(reg, control2);
  const std::size_t tbit = qubit_mask(reg, target);
  CVector& s = reg.state;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if ((k & c1) && (k & c2) && !(k & tbit)) std::swap(s[k], s[k | tbit]);
  }
}

void apply_walsh_hadamard(QRegister& reg, std::span<const int> qubits) {
  const Gate1 h = named_gate(GateName::H);
  for (int q : qubits) apply_gate(reg, h, q);
}

BasisMeasurement measure_all(QRegister& reg, Rng& rng) {
  const double r = rng.next_unit();
  CVector& s = reg.state;
  double cum = 0.0;
  std::size_t pick = 0;
  double pick_p = 0.0;
  bool found = false;
  std::size_t last_nonzero = 0;
  double last_p = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double p = std::norm(s[k]);
    if (p > 0.0) {
      last_nonzero = k;
      last_p = p;
    }
    cum += p;
    if (r < cum) {
      pick = k;
      pick_p = p;
      found = true;
      break;
    }
  }
  if (!found) {  // rounding left cum slightly below 1
    pick = last_nonzero;
    pick_p = last_p;
  }
  std::fill(s.begin(), s.end(), Complex(0.0));
  s[pick] = 1.0;
  return BasisMeasurement{word_from_index(pick, reg.n), pick_p};
}

double project_qubit(QRegister& reg, int qubit, int bit) {
  check_qubit(reg, qubit, "project_qubit");
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("project_qubit: bit must be 0 or 1");
  }
  const std::size_t mask = qubit_mask(reg, qubit);
  CVector& s = reg.state;
  double p = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (((k & mask) != 0) == (bit == 1)) p += std::norm(s[k]);
  }
  if (p < 1e-12) {
    throw std::runtime_error("project_qubit: branch probability vanishes");
  }
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (((k & mask) != 0) == (bit == 1)) {
      s[k] *= scale;
    } else {
      s[k] = 0.0;
    }
  }
  return p;
}

QubitMeasurement measure_qubit(QRegister& reg, int qubit, Rng& rng) {
  check_qubit(reg, qubit, "measure_qubit");
  const std::size_t mask = qubit_mask(reg, qubit);
  const CVector& s = reg.state;
  double p0 = 0.0, p1 = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    ((k & mask) ? p1 : p0) += std::norm(s[k]);
  }
  if (p0 < 1e-12 && p1 < 1e-12) {
    throw std::runtime_error("measure_qubit: state is not normalized");
  }
  p0 = std::max(p0, 0.0);  // clamp away -0 style noise
  const int bit = rng.next_unit() < p0 ? 0 : 1;
  const double p = project_qubit(reg, qubit, bit);
  return QubitMeasurement{bit, p};
}

Observable Observable::from_eigensystem(std::vector<double> eigenvalues,
                                        std::vector<CVector> eigenbasis) {
  if (eigenvalues.size() != eigenbasis.size() || eigenbasis.empty()) {
    throw std::invalid_argument(
        "Observable: eigenvalue and eigenvector counts must match");
  }
  const std::size_t dim = eigenbasis[0].size();
  if (eigenbasis.size() != dim) {
    throw std::invalid_argument("Observable: eigenbasis must span the space");
  }
  for (std::size_t i = 0; i < eigenbasis.size(); ++i) {
    if (eigenbasis[i].size() != dim) {
      throw std::invalid_argument("Observable: eigenvector dimension mismatch");
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex ip = inner_product(eigenbasis[i], eigenbasis[j]);
      const Complex want = (i == j) ? Complex(1.0) : Complex(0.0);
      if (std::abs(ip - want) > 1e-10) {
        throw std::invalid_argument("Observable: eigenbasis is not orthonormal");
      }
    }
  }
  Observable obs;
  obs.values_ = std::move(eigenvalues);
  obs.basis_ = std::move(eigenbasis);
  return obs;
}

Observable Observable::from_hermitian(const CMatrix& m) {
  if (m.rows != 2 || m.cols != 2) {
    throw std::invalid_argument("Observable::from_hermitian: matrix must be 2x2");
  }
  if (!is_hermitian(m, 1e-10)) {
    throw std::invalid_argument("Observable::from_hermitian: matrix must be Hermitian");
  }
  const double p = m.at(0, 0).real();
  const double r = m.at(1, 1).real();
  const Complex q = 0.5 * (m.at(0, 1) + std::conj(m.at(1, 0)));
  if (std::abs(q) < 1e-14) {
    return from_eigensystem({p, r}, {CVector{1.0, 0.0}, CVector{0.0, 1.0}});
  }
  const double mean = 0.5 * (p + r);
  const double d = 0.5 * (p - r);
  const double s = std::hypot(d, std::abs(q));
  const double lo = mean - s, hi = mean + s;
  auto eigvec = [&](double lambda) {
    CVector v{q, Complex(lambda - p)};
    const double inv = 1.0 / norm(v);
    v[0] *= inv;
    v[1] *= inv;
    return v;
  };
  return from_eigensystem({lo, hi}, {eigvec(lo), eigvec(hi)});
}

ObservableMeasurement measure_observable(const CVector& state,
                                         const Observable& obs, Rng& rng) {
  if (state.size() != obs.dim()) {
    throw std::invalid_argument("measure_observable: dimension mismatch");
  }
  const std::size_t count = obs.eigenvalues().size();
  std::vector<double> probs(count);
  double total = 0.0;
  for (std::size_t j = 0; j < count; ++j) {
    probs[j] = std::norm(inner_product(obs.eigenstate(j), state));
    total += probs[j];
  }
  if (std::abs(total - 1.0) > 1e-8) {
    throw std::invalid_argument("measure_observable: state is not normalized");
  }
  const double r = rng.next_unit();
  double cum = 0.0;
  std::size_t pick = count - 1;
  for (std::size_t j = 0; j < count; ++j) {
    cum += probs[j];
    if (r < cum) {
      pick = j;
      break;
    }
  }
  return ObservableMeasurement{obs.eigenvalues()[pick], probs[pick],
                               obs.eigenstate(pick)};
}

double expectation(const CVector& state, const Observable& obs) {
  if (state.size() != obs.dim()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  if (std::abs(norm(state) - 1.0) > 1e-9) {
    throw std::invalid_argument("expectation: state is not normalized");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < obs.eigenvalues().size(); ++j) {
    sum += obs.eigenvalues()[j] *
           std::norm(inner_product(obs.eigenstate(j), state));
  }
  return sum;
}

Observable conjugate_observable(const Gate1& u, const Observable& obs) {
  if (obs.dim() != 2) {
    throw std::invalid_argument(
        "conjugate_observable: observable must act on one qubit");
  }
  std::vector<CVector> mapped;
  mapped.reserve(obs.eigenvalues().size());
  for (std::size_t j = 0; j < obs.eigenvalues().size(); ++j) {
    const CVector& v = obs.eigenstate(j);
    mapped.push_back(CVector{u.at(0, 0) * v[0] + u.at(0, 1) * v[1],
                             u.at(1, 0) * v[0] + u.at(1, 1) * v[1]});
  }
  return Observable::from_eigensystem(obs.eigenvalues(), std::move(mapped));
}

CVector spin_state(SpinAxis axis, SpinSign sign) {
  if (axis == SpinAxis::Z) {
    return sign == SpinSign::Up ? CVector{1.0, 0.0} : CVector{0.0, 1.0};
  }
  return sign == SpinSign::Up ? CVector{kInvSqrt2, kInvSqrt2}
                              : CVector{kInvSqrt2, -kInvSqrt2};
}

QRegister prepare_singlet() {
  QRegister reg(2);
  reg.state = {0.0, kInvSqrt2, -kInvSqrt2, 0.0};
  return reg;
}

Complex reshaped_det_2q(const CVector& state) {
  if (state.size() != 4) {
    throw std::invalid_argument("reshaped_det_2q: state must have 4 amplitudes");
  }
  return state[0] * state[3] - state[1] * state[2];
}

bool is_product_2q(const CVector& state, double tol) {
  return std::abs(reshaped_det_2q(state)) <= tol;
}

namespace {

CMatrix pauli_matrix(int k) {
  const Complex i(0.0, 1.0);
  switch (k) {
    case 0: return CMatrix(2, 2, {1.0, 0.0, 0.0, 1.0});
    case 1: return CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0});
    case 2: return CMatrix(2, 2, {0.0, -i, i, 0.0});
    default: return CMatrix(2, 2, {1.0, 0.0, 0.0, -1.0});
  }
}

}  // namespace

PauliDecomposition pauli_decompose(const CMatrix& m) {
  if (m.rows != 2 || m.cols != 2) {
    throw std::invalid_argument("pauli_decompose: matrix must be 2x2");
  }
  PauliDecomposition d{};
  Complex* coeff[4] = {&d.c0, &d.c1, &d.c2, &d.c3};
  for (int k = 0; k < 4; ++k) {
    const CMatrix prod = mat_mul(pauli_matrix(k), m);
    *coeff[k] = 0.5 * (prod.at(0, 0) + prod.at(1, 1));
  }
  return d;
}

CMatrix pauli_reconstruct(const PauliDecomposition& d) {
  CMatrix out(2, 2);
  const Complex coeff[4] = {d.c0, d.c1, d.c2, d.c3};
  for (int k = 0; k < 4; ++k) {
    const CMatrix p = pauli_matrix(k);
    for (std::size_t idx = 0; idx < 4; ++idx) {
      out.a[idx] += coeff[k] * p.a[idx];
    }
  }
  return out;
}

double clone_attempt_fidelity(const CVector& psi) {
  if (psi.size() != 2) {
    throw std::invalid_argument("clone_attempt_fidelity: psi must be a qubit");
  }
  if (std::abs(norm(psi) - 1.0) > 1e-9) {
    throw std::invalid_argument("clone_attempt_fidelity: psi must be normalized");
  }
  // CNOT(psi tensor |0>): the would-be copier.
  CVector copied = tensor_vec(psi, CVector{1.0, 0.0});
  std::swap(copied[2], copied[3]);
  const CVector target = tensor_vec(psi, psi);
  return std::norm(inner_product(target, copied));
}

}  // namespace qkit
