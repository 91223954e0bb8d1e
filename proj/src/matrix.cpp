#include "coexkit/matrix.hpp"

#include <cmath>

namespace coexkit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonSquare: return "non_square";
    case Errc::NonFinite: return "non_finite";
    case Errc::NotHermitian: return "not_hermitian";
    case Errc::ConvergenceFailure: return "convergence_failure";
    case Errc::DimMismatch: return "dim_mismatch";
    case Errc::SpectrumOutOfRange: return "spectrum_out_of_range";
    case Errc::NonUnitary: return "non_unitary";
    case Errc::NotBlockDiagonal: return "not_block_diagonal";
    case Errc::DegenerateProbe: return "degenerate_probe";
    case Errc::BadInput: return "bad_input";
  }
  return "unknown";
}

Matrix::Matrix(int n, std::vector<Complex> entries) : n_(n), e_(std::move(entries)) {
  if (n < 1 || e_.size() != static_cast<size_t>(n) * n) {
    throw CoexError(Errc::NonSquare, "entry count does not match dim*dim");
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Complex{1.0, 0.0};
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

Complex Matrix::trace() const {
  Complex t{0.0, 0.0};
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_dim(*this, rhs);
  for (size_t k = 0; k < e_.size(); ++k) e_[k] += rhs.e_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_dim(*this, rhs);
  for (size_t k = 0; k < e_.size(); ++k) e_[k] -= rhs.e_[k];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (auto& v : e_) v *= s;
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (auto& v : e_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  Matrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  }
  return r;
}

bool Matrix::all_finite() const {
  for (const auto& v : e_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const auto& v : a.entries()) m = std::max(m, std::abs(v));
  return m;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const auto& v : a.entries()) s += std::norm(v);
  return std::sqrt(s);
}

double frobenius_inner(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  double s = 0.0;
  const auto& ae = a.entries();
  const auto& be = b.entries();
  for (size_t k = 0; k < ae.size(); ++k) {
    s += ae[k].real() * be[k].real() + ae[k].imag() * be[k].imag();
  }
  return s;
}

Matrix outer(const CVector& x) {
  const int n = static_cast<int>(x.size());
  Matrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = x[i] * std::conj(x[j]);
  return r;
}

Complex dot(const CVector& x, const CVector& y) {
  Complex s{0.0, 0.0};
  for (size_t k = 0; k < x.size(); ++k) s += std::conj(x[k]) * y[k];
  return s;
}

double norm2(const CVector& x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

CVector mat_vec(const Matrix& a, const CVector& x) {
  const int n = a.dim();
  CVector r(n, Complex{0.0, 0.0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += a.at(i, j) * x[j];
  return r;
}

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) {
    throw CoexError(Errc::DimMismatch, "matrix dims " + std::to_string(a.dim()) + " vs " +
                                           std::to_string(b.dim()));
  }
}

}  // namespace coexkit
