#pragma once

#include <complex>
#include <vector>

#include "coexkit/errors.hpp"

namespace coexkit {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense complex square matrix, row-major. The workhorse carrier for all
/// operator arithmetic; hermiticity is layered on top by HermitianMatrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, Complex{0.0, 0.0}) {}
  Matrix(int n, std::vector<Complex> entries);

  static Matrix identity(int n);

  int dim() const { return n_; }

  Complex& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const Complex& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  const std::vector<Complex>& entries() const { return e_; }
  std::vector<Complex>& entries() { return e_; }

  Matrix adjoint() const;
  Complex trace() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double s);
  Matrix& operator*=(Complex s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(double s, Matrix m) { return m *= s; }
  friend Matrix operator*(Complex s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  bool all_finite() const;

 private:
  int n_ = 0;
  std::vector<Complex> e_;
};

/// max_ij |a_ij|
double max_abs(const Matrix& a);
/// sqrt(sum |a_ij|^2)
double frobenius_norm(const Matrix& a);
/// Re tr(a* b) — the real Frobenius inner product on Hermitian matrices.
double frobenius_inner(const Matrix& a, const Matrix& b);

/// Outer product x x* of a complex vector.
Matrix outer(const CVector& x);

Complex dot(const CVector& x, const CVector& y);  // conjugate-linear in x
double norm2(const CVector& x);
CVector mat_vec(const Matrix& a, const CVector& x);

void require_same_dim(const Matrix& a, const Matrix& b);

}  // namespace coexkit
