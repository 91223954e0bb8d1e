#include "coexkit/bloch.hpp"

#include <cmath>

namespace coexkit {

namespace {

Matrix pauli(int k) {
  Matrix s(2);
  switch (k) {
    case 0:
      s.at(0, 0) = Complex{1.0, 0.0};
      s.at(1, 1) = Complex{1.0, 0.0};
      break;
    case 1:
      s.at(0, 1) = Complex{1.0, 0.0};
      s.at(1, 0) = Complex{1.0, 0.0};
      break;
    case 2:
      s.at(0, 1) = Complex{0.0, -1.0};
      s.at(1, 0) = Complex{0.0, 1.0};
      break;
    default:
      s.at(0, 0) = Complex{1.0, 0.0};
      s.at(1, 1) = Complex{-1.0, 0.0};
      break;
  }
  return s;
}

}  // namespace

BlochVector rho(const HermitianMatrix& a) {
  if (a.dim() != 2) throw CoexError(Errc::DimMismatch, "Bloch map needs dim 2");
  BlochVector v;
  v.x0 = 0.5 * (a.at(0, 0).real() + a.at(1, 1).real());
  v.x1 = 0.5 * (a.at(0, 1).real() + a.at(1, 0).real());
  v.x2 = 0.5 * (a.at(1, 0).imag() - a.at(0, 1).imag());
  v.x3 = 0.5 * (a.at(0, 0).real() - a.at(1, 1).real());
  return v;
}

HermitianMatrix rho_inv(const BlochVector& v) {
  Matrix m = v.x0 * pauli(0);
  m += v.x1 * pauli(1);
  m += v.x2 * pauli(2);
  m += v.x3 * pauli(3);
  return HermitianMatrix::from_hermitian_expr(m);
}

AngleDoubling angle_doubling_check(const RankOneProjection& p, const RankOneProjection& q) {
  if (p.dim() != 2 || q.dim() != 2) throw CoexError(Errc::DimMismatch, "Bloch angle needs dim 2");
  const HermitianMatrix diff =
      HermitianMatrix::from_hermitian_expr(p.matrix() - q.matrix());
  AngleDoubling out;
  out.opnorm_dist = opnorm(diff);
  const BlochVector vp = rho(HermitianMatrix::from_hermitian_expr(p.matrix()));
  const BlochVector vq = rho(HermitianMatrix::from_hermitian_expr(q.matrix()));
  const double dot = vp.x1 * vq.x1 + vp.x2 * vq.x2 + vp.x3 * vq.x3;
  const double np = std::sqrt(vp.x1 * vp.x1 + vp.x2 * vp.x2 + vp.x3 * vp.x3);
  const double nq = std::sqrt(vq.x1 * vq.x1 + vq.x2 * vq.x2 + vq.x3 * vq.x3);
  double c = dot / (np * nq);
  c = std::clamp(c, -1.0, 1.0);
  out.bloch_angle = std::acos(c);
  return out;
}

RankOneProjection midpoint_projection(const RankOneProjection& p, const RankOneProjection& q) {
  if (p.dim() != 2 || q.dim() != 2) throw CoexError(Errc::DimMismatch, "midpoint needs dim 2");
  // Basis change W sending x_P to (1,0); in that frame Q spans
  // (cos v, e^{i mu} sin v) and R = (1, i e^{i mu})/sqrt(2) works.
  const CVector& xp = p.vector();
  const CVector xp_perp{-std::conj(xp[1]), std::conj(xp[0])};
  const CVector& xq = q.vector();
  const Complex q0 = std::conj(xp[0]) * xq[0] + std::conj(xp[1]) * xq[1];
  const Complex q1 = std::conj(xp_perp[0]) * xq[0] + std::conj(xp_perp[1]) * xq[1];
  Complex phase{1.0, 0.0};  // e^{i mu}
  const double c0 = std::abs(q0);
  const double c1 = std::abs(q1);
  if (c0 > 1e-12 && c1 > 1e-12) {
    // arg(q1) - arg(q0) is the relative phase mu of Q in the rotated frame.
    phase = (q1 / c1) * std::conj(q0 / c0);
  }
  const Complex z = Complex{0.0, 1.0} * phase;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CVector r{inv_sqrt2 * (xp[0] + z * xp_perp[0]), inv_sqrt2 * (xp[1] + z * xp_perp[1])};
  return RankOneProjection::from_vector(std::move(r));
}

ConeSection export_coex_section(double t, double mu, const std::vector<double>& thetas) {
  if (!(t > 0.0 && t < 1.0)) throw CoexError(Errc::BadInput, "t must lie in (0,1)");
  ConeSection out;
  out.t = t;
  out.mu = mu;
  out.normal_u = {2.0 - t, 0.0, 0.0, t};

  for (const double theta : thetas) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double coeff = 1.0 / ((ct * ct) / (1.0 - t) + st * st);
    SectionPoint pt;
    pt.theta = theta;
    pt.coeff = coeff;
    // rho(P_theta) = (e0 + sin(2 theta) e_mu + cos(2 theta) e3) / 2 in S_mu.
    pt.x0 = 0.5 * coeff;
    pt.xmu = 0.5 * coeff * std::sin(2.0 * theta);
    pt.x3 = 0.5 * coeff * std::cos(2.0 * theta);
    pt.tag = "boundary";
    out.points.push_back(pt);
  }
  for (const double theta : thetas) {
    SectionPoint pt;
    pt.theta = theta;
    pt.coeff = 1.0;
    pt.x0 = 0.5;
    pt.xmu = 0.5 * std::sin(2.0 * theta);
    pt.x3 = 0.5 * std::cos(2.0 * theta);
    pt.tag = "sphere";
    out.points.push_back(pt);
  }
  for (const double s : {0.0, 1.0}) {
    SectionPoint pt;
    pt.theta = s;
    pt.coeff = s;
    pt.x0 = 0.5 * s;
    pt.xmu = 0.0;
    pt.x3 = 0.5 * s;
    pt.tag = "segment";
    out.points.push_back(pt);
  }
  {
    SectionPoint pt;
    pt.theta = 0.0;
    pt.coeff = 1.0 - t;
    pt.x0 = 0.5 * (1.0 - t);
    pt.xmu = 0.0;
    pt.x3 = 0.5 * (1.0 - t);
    pt.tag = "puncture";
    out.points.push_back(pt);
  }
  return out;
}

}  // namespace coexkit
