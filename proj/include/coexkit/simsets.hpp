#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "coexkit/coexistence.hpp"
#include "coexkit/rng.hpp"

namespace coexkit {

/// Deterministic sample of rank-one effects standing in for F1(H).
/// Coefficients are stratified: half uniform on (0,1], a quarter pushed
/// toward 0 (t = u^2), a quarter toward 1.
struct ProbeSet {
  std::vector<RankOneEffect> probes;
  uint64_t seed = 0;
  std::string scheme = "sphere-stratified-v1";

  static ProbeSet sample(int dim, int count, uint64_t seed);
};

/// Sampled indicator of membership in subject~, always decided through the
/// exact rank-one criterion.
struct SimProfile {
  uint64_t probe_seed = 0;
  std::string scheme;
  std::vector<bool> membership;
  std::vector<double> slack;  // Lambda(A,Q) + Lambda(A-perp,Q) - t per probe

  static SimProfile build(const Effect& subject, const ProbeSet& probes);
};

struct TProfile {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::vector<double> alphas;
  std::vector<double> values;
};

/// T(alpha) = diag_strength(l1,l2,alpha) + diag_strength(1-l1,1-l2,alpha).
TProfile t_profile(double lambda1, double lambda2, const std::vector<double>& alphas);

/// Boundary coefficient of the rank-one coexistence region of tP along Q:
/// c = 1 / ((1/(1-t)) |P'-Q|^2 + |P-Q|^2); cQ is the largest rank-one
/// effect along Q coexistent with tP.
double ellipsoid_coeff(double t, const RankOneProjection& p, const RankOneProjection& q);

/// s(t, r) = sqrt((t/(1-t)) / (t/(1-t) + r/(1-r))), the |P-Q| radius where
/// the tP and rP-perp boundary families intersect; equals sqrt(1/2) iff t = r.
double intersection_angle(double t, double r);

struct ProfileEqual {
  int compared = 0;
  int excluded = 0;  // probes within the boundary margin on either side
};
struct ProfileDiffers {
  int probe_index = 0;
  RankOneEffect probe;
  bool in_lhs = false;
};
using ProfileComparison = std::variant<ProfileEqual, ProfileDiffers>;

/// Membership comparison over a probe set; probes with strength-sum slack
/// within `margin` of the boundary on either subject are excluded.
ProfileComparison profile_compare(const Effect& a, const Effect& b, const ProbeSet& probes,
                                  double margin = 1e-6);

struct SubsetConsistent {
  int checked = 0;
};
struct SubsetViolation {
  int probe_index = 0;
  RankOneEffect probe;
};
using SubsetCheck = std::variant<SubsetConsistent, SubsetViolation>;

/// Refutation-only inclusion test: every probe clearly coexistent with lhs
/// (slack >= margin) must be coexistent with rhs.
SubsetCheck subset_check(const Effect& lhs, const Effect& rhs, const ProbeSet& probes,
                         double margin = 1e-6);

}  // namespace coexkit
