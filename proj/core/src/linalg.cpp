#include "qkit/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qkit {

CMatrix::CMatrix(std::size_t r, std::size_t c,
                 std::initializer_list<Complex> init)
    : rows(r), cols(c), a(init) {
  if (a.size() != r * c) {
    throw std::invalid_argument("CMatrix: initializer size mismatch");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

bool approx_equal(const CVector& x, const CVector& y, double tol) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > tol) return false;
  }
  return true;
}

bool approx_equal(const CMatrix& x, const CMatrix& y, double tol) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    if (std::abs(x.a[i] - y.a[i]) > tol) return false;
  }
  return true;
}

Complex inner_product(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  Complex sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sum += std::conj(a[k]) * b[k];
  }
  return sum;
}

double norm(const CVector& v) {
  double sum = 0.0;
  for (const Complex& z : v) sum += std::norm(z);
  return std::sqrt(sum);
}

CVector tensor_vec(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

CMatrix tensor_mat(const CMatrix& x, const CMatrix& y) {
  CMatrix out(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t i1 = 0; i1 < x.rows; ++i1) {
    for (std::size_t j1 = 0; j1 < x.cols; ++j1) {
      const Complex xv = x.at(i1, j1);
      for (std::size_t i2 = 0; i2 < y.rows; ++i2) {
        for (std::size_t j2 = 0; j2 < y.cols; ++j2) {
          out.at(i1 * y.rows + i2, j1 * y.cols + j2) = xv * y.at(i2, j2);
        }
      }
    }
  }
  return out;
}

CMatrix adjoint(const CMatrix& m) {
  CMatrix out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      out.at(j, i) = std::conj(m.at(i, j));
    }
  }
  return out;
}

bool is_unitary(const CMatrix& m, double tol) {
  if (!m.square()) {
    throw std::invalid_argument("is_unitary: matrix must be square");
  }
  const CMatrix prod = mat_mul(adjoint(m), m);
  for (std::size_t i = 0; i < prod.rows; ++i) {
    for (std::size_t j = 0; j < prod.cols; ++j) {
      const Complex want = (i == j) ? Complex(1.0) : Complex(0.0);
      if (std::abs(prod.at(i, j) - want) > tol) return false;
    }
  }
  return true;
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (!m.square()) {
    throw std::invalid_argument("is_hermitian: matrix must be square");
  }
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > tol) return false;
    }
  }
  return true;
}

CMatrix mat_mul(const CMatrix& x, const CMatrix& y) {
  if (x.cols != y.rows) {
    throw std::invalid_argument("mat_mul: inner dimensions disagree");
  }
  CMatrix out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Complex xv = x.at(i, k);
      if (xv == Complex(0.0)) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        out.at(i, j) += xv * y.at(k, j);
      }
    }
  }
  return out;
}

CVector mat_apply(const CMatrix& m, const CVector& v) {
  if (m.cols != v.size()) {
    throw std::invalid_argument("mat_apply: dimension mismatch");
  }
  CVector out(m.rows, Complex(0.0));
  for (std::size_t i = 0; i < m.rows; ++i) {
    Complex sum = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j) {
      sum += m.at(i, j) * v[j];
    }
    out[i] = sum;
  }
  return out;
}

CMatrix evolve_family(const CMatrix& g, double t) {
  if (g.rows != 2 || g.cols != 2) {
    throw std::invalid_argument("evolve_family: generator must be 2x2");
  }
  if (!is_hermitian(g, 1e-10)) {
    throw std::invalid_argument("evolve_family: generator must be Hermitian");
  }

  // g = mean*I + B with B traceless Hermitian; B^2 = b^2 I, so
  // exp(-i t g) = e^{-i t mean} (cos(b t) I - i sin(b t)/b B).
  const double p = g.at(0, 0).real();
  const double r = g.at(1, 1).real();
  const Complex q = 0.5 * (g.at(0, 1) + std::conj(g.at(1, 0)));
  const double mean = 0.5 * (p + r);
  const double d = 0.5 * (p - r);
  const double b = std::hypot(d, std::abs(q));

  const Complex phase = std::polar(1.0, -mean * t);
  CMatrix u(2, 2);
  if (b < 1e-300) {
    u.at(0, 0) = phase;
    u.at(1, 1) = phase;
    return u;
  }
  const double cbt = std::cos(b * t);
  const Complex isf = Complex(0.0, -1.0) * (std::sin(b * t) / b);
  u.at(0, 0) = phase * (cbt + isf * d);
  u.at(0, 1) = phase * (isf * q);
  u.at(1, 0) = phase * (isf * std::conj(q));
  u.at(1, 1) = phase * (cbt - isf * d);
  return u;
}

}  // namespace qkit
