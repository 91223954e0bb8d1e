#include "coexkit/effect.hpp"

#include <algorithm>
#include <cmath>

namespace coexkit {

Effect::Effect(const HermitianMatrix& m, double tol) : m_(m), eig_(eig_hermitian(m)) {
  const double lo = eig_.eigenvalues.front();
  const double hi = eig_.eigenvalues.back();
  if (lo < -tol || hi > 1.0 + tol) {
    throw CoexError(Errc::SpectrumOutOfRange, "spectrum [" + std::to_string(lo) + ", " +
                                                  std::to_string(hi) + "] outside [0,1]");
  }
  bool rewrite = lo < -1e-12 || hi > 1.0 + 1e-12;
  for (auto& lam : eig_.eigenvalues) lam = std::clamp(lam, 0.0, 1.0);
  if (rewrite) m_ = reconstruct(eig_, eig_.eigenvalues);
}

Effect Effect::scalar(int n, double t) {
  if (t < 0.0 || t > 1.0) throw CoexError(Errc::SpectrumOutOfRange, "scalar outside [0,1]");
  return Effect(t * HermitianMatrix::identity(n));
}

Effect Effect::diagonal(const std::vector<double>& d) {
  return Effect(HermitianMatrix::diagonal(d));
}

Effect ortho_complement(const Effect& a) {
  const int n = a.dim();
  HermitianMatrix comp = HermitianMatrix::identity(n) - a.hermitian();
  // Complement spectrum is 1 - lambda with the eigenvector order reversed;
  // reuse the cached basis instead of re-diagonalizing.
  EigenDecomposition eig;
  eig.eigenvalues.resize(static_cast<size_t>(n));
  eig.eigenvectors = Matrix(n);
  for (int j = 0; j < n; ++j) {
    const int src = n - 1 - j;
    eig.eigenvalues[static_cast<size_t>(j)] =
        std::clamp(1.0 - a.eigen().eigenvalues[static_cast<size_t>(src)], 0.0, 1.0);
    for (int i = 0; i < n; ++i) eig.eigenvectors.at(i, j) = a.eigen().eigenvectors.at(i, src);
  }
  return Effect(std::move(comp), std::move(eig));
}

RankOneProjection RankOneProjection::from_vector(CVector x) {
  const double n = norm2(x);
  if (!(std::abs(n - 1.0) <= 1e-6)) {
    throw CoexError(Errc::BadInput, "direction norm " + std::to_string(n) + " not within 1e-6 of 1");
  }
  for (auto& c : x) c /= n;
  return RankOneProjection(std::move(x));
}

RankOneProjection RankOneProjection::qubit(double theta, double mu) {
  CVector x{Complex{std::cos(theta), 0.0},
            Complex{std::cos(mu) * std::sin(theta), std::sin(mu) * std::sin(theta)}};
  const double n = norm2(x);
  for (auto& c : x) c /= n;
  return RankOneProjection(std::move(x));
}

Effect RankOneProjection::as_effect() const {
  return Effect(HermitianMatrix::from_hermitian_expr(matrix()));
}

RankOneProjection RankOneProjection::complement_qubit() const {
  if (dim() != 2) throw CoexError(Errc::DimMismatch, "qubit complement needs dim 2");
  // (a, b) -> (-conj(b), conj(a)) spans the orthogonal line.
  CVector y{-std::conj(x_[1]), std::conj(x_[0])};
  return RankOneProjection(std::move(y));
}

Effect RankOneEffect::as_effect() const {
  if (!(t > 0.0 && t <= 1.0)) throw CoexError(Errc::BadInput, "rank-one coefficient outside (0,1]");
  return Effect(HermitianMatrix::from_hermitian_expr(t * projection.matrix()));
}

const char* kind_name(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::Scalar: return "scalar";
    case Classification::Kind::Projection: return "projection";
    case Classification::Kind::RankOneLike: return "rank_one";
    case Classification::Kind::General: return "general";
  }
  return "general";
}

namespace {

std::optional<Classification> match_rank_one(const Effect& a, bool complemented) {
  const auto& ev = a.eigenvalues();
  const int n = a.dim();
  const double top = ev.back();
  if (top <= 1e-9) return std::nullopt;
  for (int k = 0; k + 1 < n; ++k) {
    if (ev[static_cast<size_t>(k)] > 1e-9) return std::nullopt;
  }
  auto x = a.eigen().column(n - 1);
  Classification c;
  c.kind = Classification::Kind::RankOneLike;
  c.t = top;
  c.projection = RankOneProjection::from_vector(std::move(x));
  c.complemented = complemented;
  if (max_abs(a.matrix() - c.t * c.projection->matrix()) > 1e-9) return std::nullopt;
  return c;
}

}  // namespace

Classification classify(const Effect& a) {
  const int n = a.dim();
  const double t = a.matrix().trace().real() / n;
  if (max_abs(a.matrix() - (t * Matrix::identity(n))) <= 1e-9) {
    Classification c;
    c.kind = Classification::Kind::Scalar;
    c.scalar = std::clamp(t, 0.0, 1.0);
    return c;
  }
  bool projection = true;
  for (double lam : a.eigenvalues()) {
    if (std::min(std::abs(lam), std::abs(lam - 1.0)) > 1e-9) projection = false;
  }
  if (projection) {
    Classification c;
    c.kind = Classification::Kind::Projection;
    return c;
  }
  if (auto c = match_rank_one(a, false)) return *c;
  if (auto c = match_rank_one(ortho_complement(a), true)) return *c;
  return Classification{};
}

std::optional<Classification> as_rank_one(const Effect& a) {
  if (a.dim() == 1) return std::nullopt;
  if (auto c = match_rank_one(a, false)) return c;
  if (auto c = match_rank_one(ortho_complement(a), true)) return c;
  return std::nullopt;
}

bool commutes(const Effect& a, const Effect& b) {
  require_same_dim(a.matrix(), b.matrix());
  return max_abs(a.matrix() * b.matrix() - b.matrix() * a.matrix()) <= 1e-9;
}

StrengthValue strength(const Effect& a, const RankOneProjection& p) {
  if (a.dim() != p.dim()) throw CoexError(Errc::DimMismatch, "strength dims differ");
  const auto& eig = a.eigen();
  const int n = a.dim();
  StrengthValue out;
  double inv_sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double lam = eig.eigenvalues[static_cast<size_t>(k)];
    Complex overlap{0.0, 0.0};
    for (int i = 0; i < n; ++i) overlap += std::conj(eig.eigenvectors.at(i, k)) * p.vector()[static_cast<size_t>(i)];
    const double w = std::norm(overlap);
    if (lam <= kRangeTol) {
      out.leakage += w;
    } else {
      inv_sum += w / lam;
    }
  }
  out.in_range = out.leakage <= kRangeTol;
  out.value = (out.in_range && inv_sum > 0.0) ? std::clamp(1.0 / inv_sum, 0.0, 1.0) : 0.0;
  return out;
}

double strength_bisect(const Effect& a, const RankOneProjection& p) {
  if (a.dim() != p.dim()) throw CoexError(Errc::DimMismatch, "strength dims differ");
  const HermitianMatrix pm = HermitianMatrix::from_hermitian_expr(p.matrix());
  const auto feasible = [&](double lam) {
    return min_eigenvalue(a.hermitian() - lam * pm) >= -1e-12;
  };
  if (feasible(1.0)) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-11) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double diag_strength(double lambda1, double lambda2, double alpha) {
  double c = std::cos(alpha);
  double s = std::sin(alpha);
  // Exact endpoint semantics: a vanishing weight kills its term outright.
  if (std::abs(c) < 1e-12) c = 0.0;
  if (std::abs(s) < 1e-12) s = 0.0;
  const double w1 = c * c;
  const double w2 = s * s;
  double denom = 0.0;
  if (w1 > 0.0) {
    if (lambda1 == 0.0) return 0.0;  // (1/0) * w1 = inf
    denom += w1 / lambda1;
  }
  if (w2 > 0.0) {
    if (lambda2 == 0.0) return 0.0;
    denom += w2 / lambda2;
  }
  return 1.0 / denom;
}

}  // namespace coexkit
