#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qkit {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense row-major complex matrix.
struct CMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> a;  // rows*cols entries, row-major

  CMatrix() = default;
  CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  CMatrix(std::size_t r, std::size_t c, std::initializer_list<Complex> init);

  Complex& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Complex& at(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }

  bool square() const { return rows == cols; }

  static CMatrix identity(std::size_t n);
};

bool approx_equal(const CVector& x, const CVector& y, double tol);
bool approx_equal(const CMatrix& x, const CMatrix& y, double tol);

/// <a|b> = sum_k conj(a_k) b_k. Conjugate-linear in the first argument,
/// linear in the second; this convention is fixed project-wide.
Complex inner_product(const CVector& a, const CVector& b);

double norm(const CVector& v);

/// Kronecker product; entry i*b.size()+j of the result is a_i * b_j. This
/// index convention is the single source of truth for qubit ordering.
CVector tensor_vec(const CVector& a, const CVector& b);
CMatrix tensor_mat(const CMatrix& x, const CMatrix& y);

/// Conjugate transpose.
CMatrix adjoint(const CMatrix& m);

/// Max-entry |M^dag M - I| <= tol. Throws on non-square input.
bool is_unitary(const CMatrix& m, double tol);
/// Max-entry |M - M^dag| <= tol. Throws on non-square input.
bool is_hermitian(const CMatrix& m, double tol);

CMatrix mat_mul(const CMatrix& x, const CMatrix& y);
CVector mat_apply(const CMatrix& m, const CVector& v);

/// U(t) = exp(-i t g) for a 2x2 Hermitian generator, in closed form.
/// Satisfies U(0) = I and U(t) U(s) = U(t+s); always unitary.
CMatrix evolve_family(const CMatrix& g, double t);

}  // namespace qkit
