#pragma once

#include <functional>
#include <vector>

#include "coexkit/matrix.hpp"

namespace coexkit {

/// Complex square matrix constrained to equal its conjugate transpose.
/// Construction symmetrizes and validates; the stored form is exactly
/// Hermitian (entries[i][j] == conj(entries[j][i]) bitwise).
class HermitianMatrix {
 public:
  /// Accepts `raw` if max_ij |raw_ij - conj(raw_ji)| <= tau_herm(raw) and
  /// stores (raw + raw*)/2. The measured deviation is kept for diagnostics.
  static HermitianMatrix symmetrize_validate(const Matrix& raw);

  static HermitianMatrix zero(int n) { return HermitianMatrix(Matrix(n), 0.0); }
  static HermitianMatrix identity(int n) { return HermitianMatrix(Matrix::identity(n), 0.0); }
  static HermitianMatrix diagonal(const std::vector<double>& d);

  /// For matrices that are Hermitian by construction (sums, real scalings,
  /// V f(L) V* rebuilds). Symmetrizes without the deviation gate.
  static HermitianMatrix from_hermitian_expr(const Matrix& m);

  int dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  Complex at(int i, int j) const { return m_.at(i, j); }
  double herm_deviation() const { return herm_deviation_; }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(a.m_ + b.m_, 0.0);
  }
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(a.m_ - b.m_, 0.0);
  }
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    return HermitianMatrix(s * a.m_, 0.0);
  }

 private:
  HermitianMatrix(Matrix m, double deviation) : m_(std::move(m)), herm_deviation_(deviation) {}

  Matrix m_;
  double herm_deviation_ = 0.0;
};

/// Hermiticity acceptance threshold: 1e-9 * max(1, |raw|_max).
double tau_herm(const Matrix& raw);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // unitary, columns; phase-fixed

  CVector column(int j) const;
};

/// Cyclic Jacobi diagonalization with complex 2x2 rotations. Sweep cap 100;
/// converges when the off-diagonal Frobenius norm drops below 1e-14 * |A|_F.
/// Eigenvalues ascend; each eigenvector column is scaled so its
/// largest-magnitude component is real and positive.
EigenDecomposition eig_hermitian(const HermitianMatrix& a);

double min_eigenvalue(const HermitianMatrix& a);
double max_eigenvalue(const HermitianMatrix& a);
/// Largest |eigenvalue| — the operator norm for Hermitian matrices.
double opnorm(const HermitianMatrix& a);

/// A <= B in the Loewner order: min eig(B - A) >= -tol.
bool loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b, double tol);

/// Frobenius-nearest positive semidefinite matrix: negative eigenvalues
/// clipped to zero.
HermitianMatrix psd_project(const HermitianMatrix& a);

/// Functional calculus V diag(f(lambda)) V*.
HermitianMatrix apply_fn(const HermitianMatrix& a, const std::function<double(double)>& f);
HermitianMatrix reconstruct(const EigenDecomposition& eig, const std::vector<double>& eigenvalues);

}  // namespace coexkit
