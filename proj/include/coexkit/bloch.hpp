#pragma once

#include <array>
#include <string>

#include "coexkit/effect.hpp"

namespace coexkit {

/// Pauli coefficients of a 2x2 Hermitian matrix: A = x0 s0 + x1 s1 + x2 s2
/// + x3 s3. Rank-one projections sit on the sphere |v - e0/2| = 1/2.
struct BlochVector {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

BlochVector rho(const HermitianMatrix& a);
HermitianMatrix rho_inv(const BlochVector& v);

struct AngleDoubling {
  double opnorm_dist = 0.0;  // |P - Q|
  double bloch_angle = 0.0;  // angle between rho(P)-e0/2 and rho(Q)-e0/2
};

/// Contract: opnorm_dist = sin(bloch_angle / 2).
AngleDoubling angle_doubling_check(const RankOneProjection& p, const RankOneProjection& q);

/// An R with |P-R| = |Q-R| = sin(pi/4), built by rotating P to the standard
/// position and taking the (1, z)/sqrt(2) direction with z = i e^{i mu}.
RankOneProjection midpoint_projection(const RankOneProjection& p, const RankOneProjection& q);

/// One row of the exported cross-section geometry, in (e0, e_mu, e3)
/// coordinates of the section plane S_mu.
struct SectionPoint {
  double theta = 0.0;  // boundary/sphere: the angle; segment: the parameter s
  double coeff = 0.0;
  double x0 = 0.0;
  double xmu = 0.0;
  double x3 = 0.0;
  std::string tag;  // boundary | segment | puncture | sphere
};

struct ConeSection {
  double t = 0.0;
  double mu = 0.0;
  std::array<double, 4> normal_u{};  // (2-t) e0 + t e3
  std::vector<SectionPoint> points;
};

/// The coexistence-region cross-section for the subject t P_(1,0) in the
/// plane S_mu: boundary coefficients c(theta) = 1/((1/(1-t)) cos^2 theta +
/// sin^2 theta), the segment {s rho(P)}, the puncture (1-t) rho(P), and the
/// projection-sphere circle.
ConeSection export_coex_section(double t, double mu, const std::vector<double>& thetas);

}  // namespace coexkit
