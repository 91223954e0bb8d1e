#include "coexkit/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace coexkit {

double tau_herm(const Matrix& raw) { return 1e-9 * std::max(1.0, max_abs(raw)); }

HermitianMatrix HermitianMatrix::symmetrize_validate(const Matrix& raw) {
  if (!raw.all_finite()) {
    throw CoexError(Errc::NonFinite, "matrix has NaN or Inf entries");
  }
  const int n = raw.dim();
  double deviation = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      deviation = std::max(deviation, std::abs(raw.at(i, j) - std::conj(raw.at(j, i))));
  if (deviation > tau_herm(raw)) {
    throw CoexError(Errc::NotHermitian,
                    "deviation " + std::to_string(deviation) + " exceeds tolerance");
  }
  Matrix sym(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym.at(i, j) = 0.5 * (raw.at(i, j) + std::conj(raw.at(j, i)));
  return HermitianMatrix(std::move(sym), deviation);
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  Matrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = Complex{d[static_cast<size_t>(i)], 0.0};
  return HermitianMatrix(std::move(m), 0.0);
}

HermitianMatrix HermitianMatrix::from_hermitian_expr(const Matrix& m) {
  const int n = m.dim();
  Matrix sym(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
  return HermitianMatrix(std::move(sym), 0.0);
}

CVector EigenDecomposition::column(int j) const {
  const int n = eigenvectors.dim();
  CVector v(n);
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = eigenvectors.at(i, j);
  return v;
}

namespace {

constexpr int kSweepCap = 100;

// One complex Jacobi rotation zeroing a[p][q]. The rotation is
//   U = [[c, -s e^{i phi}], [s e^{-i phi}, c]]  on coordinates (p, q)
// with phi = arg(a_pq), applied as U* A U.
void jacobi_rotate(Matrix& a, Matrix& v, int p, int q) {
  const Complex apq = a.at(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{i phi}
  const double app = a.at(p, p).real();
  const double aqq = a.at(q, q).real();
  const double diff = app - aqq;
  double t;  // tan(theta), smaller-magnitude root of r t^2 + diff t - r = 0
  if (diff == 0.0) {
    t = 1.0;
  } else {
    const double disc = std::sqrt(diff * diff + 4.0 * r * r);
    t = (diff > 0.0) ? 2.0 * r / (diff + disc) : 2.0 * r / (diff - disc);
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.dim();
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a.at(k, p);
    const Complex akq = a.at(k, q);
    const Complex nkp = c * akp + s * std::conj(phase) * akq;
    const Complex nkq = -s * phase * akp + c * akq;
    a.at(k, p) = nkp;
    a.at(p, k) = std::conj(nkp);
    a.at(k, q) = nkq;
    a.at(q, k) = std::conj(nkq);
  }
  const double napp = app * c * c + 2.0 * r * c * s + aqq * s * s;
  const double naqq = app * s * s - 2.0 * r * c * s + aqq * c * c;
  a.at(p, p) = Complex{napp, 0.0};
  a.at(q, q) = Complex{naqq, 0.0};
  a.at(p, q) = Complex{0.0, 0.0};
  a.at(q, p) = Complex{0.0, 0.0};

  for (int k = 0; k < n; ++k) {
    const Complex vkp = v.at(k, p);
    const Complex vkq = v.at(k, q);
    v.at(k, p) = c * vkp + s * std::conj(phase) * vkq;
    v.at(k, q) = -s * phase * vkp + c * vkq;
  }
}

double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(a.at(i, j));
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition eig_hermitian(const HermitianMatrix& input) {
  const int n = input.dim();
  Matrix a = input.matrix();
  Matrix v = Matrix::identity(n);

  if (n > 1) {
    const double scale = frobenius_norm(a);
    const double target = 1e-14 * std::max(scale, 1e-300);
    int sweep = 0;
    while (offdiag_norm(a) > target) {
      if (++sweep > kSweepCap) {
        throw CoexError(Errc::ConvergenceFailure,
                        "Jacobi sweeps exceeded cap at dim " + std::to_string(n));
      }
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](int i, int j) { return a.at(i, i).real() < a.at(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(static_cast<size_t>(n));
  out.eigenvectors = Matrix(n);
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<size_t>(j)];
    out.eigenvalues[static_cast<size_t>(j)] = a.at(src, src).real();
    // Deterministic column phase: largest-magnitude component real-positive.
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double m = std::abs(v.at(i, src));
      if (m > best) {
        best = m;
        imax = i;
      }
    }
    Complex phase{1.0, 0.0};
    if (best > 0.0) phase = std::conj(v.at(imax, src)) / best;
    for (int i = 0; i < n; ++i) out.eigenvectors.at(i, j) = phase * v.at(i, src);
  }
  return out;
}

double min_eigenvalue(const HermitianMatrix& a) {
  return eig_hermitian(a).eigenvalues.front();
}

double max_eigenvalue(const HermitianMatrix& a) {
  return eig_hermitian(a).eigenvalues.back();
}

double opnorm(const HermitianMatrix& a) {
  const auto ev = eig_hermitian(a).eigenvalues;
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

bool loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  require_same_dim(a.matrix(), b.matrix());
  return min_eigenvalue(b - a) >= -tol;
}

HermitianMatrix reconstruct(const EigenDecomposition& eig, const std::vector<double>& eigenvalues) {
  const int n = eig.eigenvectors.dim();
  Matrix m(n);
  for (int k = 0; k < n; ++k) {
    const double lam = eigenvalues[static_cast<size_t>(k)];
    if (lam == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const Complex vik = eig.eigenvectors.at(i, k);
      for (int j = 0; j < n; ++j) m.at(i, j) += lam * vik * std::conj(eig.eigenvectors.at(j, k));
    }
  }
  return HermitianMatrix::from_hermitian_expr(m);
}

HermitianMatrix psd_project(const HermitianMatrix& a) {
  auto eig = eig_hermitian(a);
  bool clean = true;
  for (auto& lam : eig.eigenvalues) {
    if (lam < 0.0) {
      lam = 0.0;
      clean = false;
    }
  }
  if (clean) return a;
  return reconstruct(eig, eig.eigenvalues);
}

HermitianMatrix apply_fn(const HermitianMatrix& a, const std::function<double(double)>& f) {
  auto eig = eig_hermitian(a);
  std::vector<double> mapped(eig.eigenvalues.size());
  for (size_t k = 0; k < mapped.size(); ++k) mapped[k] = f(eig.eigenvalues[k]);
  return reconstruct(eig, mapped);
}

}  // namespace coexkit
