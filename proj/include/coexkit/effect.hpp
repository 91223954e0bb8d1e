#pragma once

#include <optional>
#include <string>

#include "coexkit/hermitian.hpp"

namespace coexkit {

/// Null-space leakage threshold for the range test x in Im(A^{1/2}).
/// Leakage inside [kRangeTol/10, 10*kRangeTol] is the WARN band where the
/// closed form and the bisection oracle may legitimately disagree.
constexpr double kRangeTol = 1e-10;

/// Spectrum acceptance slack for effects: sigma(A) in [-1e-9, 1+1e-9].
constexpr double kEffectTol = 1e-9;

/// A Hermitian matrix with 0 <= A <= I. Carries its eigendecomposition;
/// the cached eigenvalues are clamped into [0,1]. The stored matrix is
/// rewritten from the clamped spectrum only when the raw spectrum strays
/// more than 1e-12 outside [0,1], so round-trips of valid inputs are exact.
class Effect {
 public:
  explicit Effect(const HermitianMatrix& m, double tol = kEffectTol);

  static Effect zero(int n) { return Effect(HermitianMatrix::zero(n)); }
  static Effect identity(int n) { return Effect(HermitianMatrix::identity(n)); }
  static Effect scalar(int n, double t);
  static Effect diagonal(const std::vector<double>& d);

  int dim() const { return m_.dim(); }
  const HermitianMatrix& hermitian() const { return m_; }
  const Matrix& matrix() const { return m_.matrix(); }
  const EigenDecomposition& eigen() const { return eig_; }
  const std::vector<double>& eigenvalues() const { return eig_.eigenvalues; }

 private:
  Effect(HermitianMatrix m, EigenDecomposition eig) : m_(std::move(m)), eig_(std::move(eig)) {}

  HermitianMatrix m_;
  EigenDecomposition eig_;

  friend Effect ortho_complement(const Effect& a);
};

/// I - A. Complementing twice restores the original entries whenever the
/// per-entry subtractions are exact.
Effect ortho_complement(const Effect& a);

/// P_x = x x* for a unit vector x.
class RankOneProjection {
 public:
  /// Normalizes `x`; rejects vectors with norm further than 1e-6 from 1
  /// (or zero).
  static RankOneProjection from_vector(CVector x);
  /// Qubit projection with range spanned by (cos theta, e^{i mu} sin theta).
  static RankOneProjection qubit(double theta, double mu = 0.0);

  const CVector& vector() const { return x_; }
  int dim() const { return static_cast<int>(x_.size()); }
  Matrix matrix() const { return outer(x_); }
  Effect as_effect() const;
  RankOneProjection complement_qubit() const;  // dim 2 only

 private:
  explicit RankOneProjection(CVector x) : x_(std::move(x)) {}
  CVector x_;
};

/// tP with 0 < t <= 1.
struct RankOneEffect {
  double t;
  RankOneProjection projection;

  Effect as_effect() const;
};

struct StrengthValue {
  double value = 0.0;   // Lambda(A, P)
  bool in_range = true; // x in Im(A^{1/2}); value is 0 when false
  double leakage = 0.0; // null-space weight used for the range test
  bool warn_band() const { return leakage >= kRangeTol / 10.0 && leakage <= 10.0 * kRangeTol; }
};

struct Classification {
  enum class Kind { Scalar, Projection, RankOneLike, General };
  Kind kind = Kind::General;
  double scalar = 0.0;                          // Scalar: the t of tI
  double t = 0.0;                               // RankOneLike: coefficient
  std::optional<RankOneProjection> projection;  // RankOneLike: P
  bool complemented = false;                    // RankOneLike matched via A-perp
};

const char* kind_name(Classification::Kind k);

/// Categories checked in order Scalar, Projection, RankOneLike, General;
/// 0 and I land in Scalar.
Classification classify(const Effect& a);

/// Detects A ~ tP or A-perp ~ tP (t in (0,1]) regardless of the Scalar /
/// Projection precedence in classify; rank-one projections qualify with t=1.
std::optional<Classification> as_rank_one(const Effect& a);

/// |AB - BA|_max <= 1e-9.
bool commutes(const Effect& a, const Effect& b);

/// Busch-Gudder closed form: 1 / |A^{-1/2} x|^2 when x is in Im(A^{1/2}),
/// else 0. Range membership via the null-space leakage test at kRangeTol.
StrengthValue strength(const Effect& a, const RankOneProjection& p);

/// Independent oracle: bisection on lambda in [0,1] of
/// min_eig(A - lambda P) >= -1e-12, to absolute width 1e-11.
double strength_bisect(const Effect& a, const RankOneProjection& p);

/// Strength of diag(l1, l2) along P_(cos a, sin a):
/// 1 / ((1/l1) cos^2 a + (1/l2) sin^2 a) with 1/0 = inf conventions.
double diag_strength(double lambda1, double lambda2, double alpha);

}  // namespace coexkit
