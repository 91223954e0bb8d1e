#include "coexkit/simsets.hpp"

#include <cmath>

#include "coexkit/parallel.hpp"

namespace coexkit {

ProbeSet ProbeSet::sample(int dim, int count, uint64_t seed) {
  ProbeSet out;
  out.seed = seed;
  const SplitMix64 master(seed);
  out.probes.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    SplitMix64 rng = master.fork(static_cast<uint64_t>(i));
    auto p = RankOneProjection::from_vector(random_unit_vector(rng, dim));
    const double u = rng.uniform_pos();
    const uint64_t strat = rng.next() & 3u;
    double t;
    if (strat < 2) {
      t = u;  // uniform on (0,1]
    } else if (strat == 2) {
      t = u * u;  // concentrate near 0
    } else {
      t = 1.0 - (1.0 - u) * (1.0 - u);  // concentrate near 1
    }
    if (t <= 0.0) t = u;
    out.probes.push_back(RankOneEffect{t, std::move(p)});
  }
  return out;
}

namespace {

double strength_sum_slack(const Effect& subject, const Effect& subject_perp,
                          const RankOneEffect& probe) {
  const double sum =
      strength(subject, probe.projection).value + strength(subject_perp, probe.projection).value;
  return sum - probe.t;
}

}  // namespace

SimProfile SimProfile::build(const Effect& subject, const ProbeSet& probes) {
  SimProfile out;
  out.probe_seed = probes.seed;
  out.scheme = probes.scheme;
  const size_t n = probes.probes.size();
  out.membership.assign(n, false);
  out.slack.assign(n, 0.0);
  const Effect perp = ortho_complement(subject);
  parallel_for(n, [&](size_t i) {
    const double slack = strength_sum_slack(subject, perp, probes.probes[i]);
    out.slack[i] = slack;
    out.membership[i] = slack >= -1e-9;
  });
  return out;
}

TProfile t_profile(double lambda1, double lambda2, const std::vector<double>& alphas) {
  if (lambda1 < 0.0 || lambda1 > 1.0 || lambda2 < 0.0 || lambda2 > 1.0) {
    throw CoexError(Errc::BadInput, "eigenvalues must lie in [0,1]");
  }
  TProfile out;
  out.lambda1 = lambda1;
  out.lambda2 = lambda2;
  out.alphas = alphas;
  out.values.reserve(alphas.size());
  for (const double alpha : alphas) {
    out.values.push_back(diag_strength(lambda1, lambda2, alpha) +
                         diag_strength(1.0 - lambda1, 1.0 - lambda2, alpha));
  }
  return out;
}

double ellipsoid_coeff(double t, const RankOneProjection& p, const RankOneProjection& q) {
  if (p.dim() != 2 || q.dim() != 2) throw CoexError(Errc::DimMismatch, "qubit geometry needs dim 2");
  if (!(t > 0.0 && t < 1.0)) throw CoexError(Errc::BadInput, "coefficient must lie in (0,1)");
  const Matrix pm = p.matrix();
  const Matrix qm = q.matrix();
  if (max_abs(pm - qm) <= 1e-9 || max_abs((Matrix::identity(2) - pm) - qm) <= 1e-9) {
    throw CoexError(Errc::DegenerateProbe, "probe coincides with P or P-perp");
  }
  const double tau = std::clamp((pm * qm).trace().real(), 0.0, 1.0);  // |P'-Q|^2
  return 1.0 / (tau / (1.0 - t) + (1.0 - tau));
}

double intersection_angle(double t, double r) {
  if (!(t > 0.0 && t < 1.0 && r > 0.0 && r < 1.0)) {
    throw CoexError(Errc::BadInput, "parameters must lie in (0,1)");
  }
  const double wt = t / (1.0 - t);
  const double wr = r / (1.0 - r);
  return std::sqrt(wt / (wt + wr));
}

ProfileComparison profile_compare(const Effect& a, const Effect& b, const ProbeSet& probes,
                                  double margin) {
  require_same_dim(a.matrix(), b.matrix());
  const SimProfile pa = SimProfile::build(a, probes);
  const SimProfile pb = SimProfile::build(b, probes);
  ProfileEqual eq;
  for (size_t i = 0; i < probes.probes.size(); ++i) {
    if (std::abs(pa.slack[i]) <= margin || std::abs(pb.slack[i]) <= margin) {
      ++eq.excluded;
      continue;
    }
    ++eq.compared;
    if (pa.membership[i] != pb.membership[i]) {
      return ProfileDiffers{static_cast<int>(i), probes.probes[i], pa.membership[i]};
    }
  }
  return eq;
}

SubsetCheck subset_check(const Effect& lhs, const Effect& rhs, const ProbeSet& probes,
                         double margin) {
  require_same_dim(lhs.matrix(), rhs.matrix());
  const Effect lhs_perp = ortho_complement(lhs);
  const Effect rhs_perp = ortho_complement(rhs);
  SubsetConsistent ok;
  for (size_t i = 0; i < probes.probes.size(); ++i) {
    const auto& probe = probes.probes[i];
    if (strength_sum_slack(lhs, lhs_perp, probe) < margin) continue;
    ++ok.checked;
    if (strength_sum_slack(rhs, rhs_perp, probe) < -1e-9) {
      return SubsetViolation{static_cast<int>(i), probe};
    }
  }
  return ok;
}

}  // namespace coexkit
