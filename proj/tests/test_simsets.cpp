#include <doctest.h>

#include <cmath>

#include "coexkit/simsets.hpp"
#include "coexkit/verify.hpp"

using namespace coexkit;

TEST_SUITE("simsets") {

TEST_CASE("probe sets are deterministic in the seed") {
  const ProbeSet a = ProbeSet::sample(3, 32, 99);
  const ProbeSet b = ProbeSet::sample(3, 32, 99);
  REQUIRE(a.probes.size() == b.probes.size());
  for (size_t i = 0; i < a.probes.size(); ++i) {
    CHECK(a.probes[i].t == b.probes[i].t);
    CHECK(a.probes[i].projection.vector() == b.probes[i].projection.vector());
    CHECK(a.probes[i].t > 0.0);
    CHECK(a.probes[i].t <= 1.0);
  }
  const ProbeSet c = ProbeSet::sample(3, 32, 100);
  CHECK(a.probes[0].t != c.probes[0].t);
}

TEST_CASE("t profile of equal eigenvalues is constant 1") {
  std::vector<double> alphas;
  for (int i = 0; i <= 32; ++i) alphas.push_back(1.5707963267948966 * i / 32.0);
  const TProfile prof = t_profile(0.37, 0.37, alphas);
  for (double v : prof.values) CHECK(std::abs(v - 1.0) <= 1e-12);
}

TEST_CASE("t profile of a projection is the endpoint indicator") {
  const TProfile prof = t_profile(0.0, 1.0, {0.0, 0.3, 0.9, 1.3, 1.5707963267948966});
  CHECK(prof.values.front() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(prof.values.back() == doctest::Approx(1.0).epsilon(1e-14));
  for (size_t i = 1; i + 1 < prof.values.size(); ++i) CHECK(prof.values[i] == 0.0);
}

TEST_CASE("t profile dips below 1 for distinct interior eigenvalues") {
  std::vector<double> alphas;
  for (int i = 1; i < 32; ++i) alphas.push_back(0.01 + (1.5707963267948966 - 0.02) * i / 32.0);
  const TProfile prof = t_profile(0.7, 0.2, alphas);
  for (double v : prof.values) CHECK(v < 1.0 - 1e-9);
  // jump at pi/2 when one eigenvalue is 0: limit 1 - l2, value 1 at pi/2
  const TProfile jump = t_profile(0.0, 0.6, {1.57, 1.5707963267948966});
  CHECK(jump.values[0] == doctest::Approx(0.4).epsilon(1e-3));
  CHECK(jump.values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("ellipsoid coefficient") {
  const auto p = RankOneProjection::qubit(0.0);

  SUBCASE("limit toward P is 1 - t") {
    const auto q = RankOneProjection::qubit(1e-5);
    CHECK(ellipsoid_coeff(0.3, p, q) == doctest::Approx(0.7).epsilon(1e-8));
  }

  SUBCASE("frozen value 2/3") {
    const auto q = RankOneProjection::qubit(0.78539816339744831);
    CHECK(ellipsoid_coeff(0.5, p, q) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  }

  SUBCASE("boundary flip against the rank-one criterion") {
    SplitMix64 rng(61);
    for (int k = 0; k < 25; ++k) {
      const double t = rng.uniform(0.05, 0.95);
      const auto q = RankOneProjection::from_vector(random_unit_vector(rng, 2));
      if (max_abs(q.matrix() - p.matrix()) < 1e-3 ||
          max_abs(q.matrix() - (Matrix::identity(2) - p.matrix())) < 1e-3) {
        continue;
      }
      const double c = ellipsoid_coeff(t, p, q);
      const Effect subject = RankOneEffect{t, p}.as_effect();
      CHECK(coexist_rank_one(subject, c, q).decision == CoexDecision::Coexistent);
      if (c + 1e-4 <= 1.0) {
        CHECK(coexist_rank_one(subject, c + 1e-4, q).decision == CoexDecision::NotCoexistent);
      }
    }
  }

  SUBCASE("degenerate probes are rejected") {
    CHECK_THROWS_AS(ellipsoid_coeff(0.5, p, p), CoexError);
    CHECK_THROWS_AS(ellipsoid_coeff(0.5, p, p.complement_qubit()), CoexError);
  }
}

TEST_CASE("intersection angle") {
  for (double t : {0.1, 0.33, 0.5, 0.77, 0.9}) {
    CHECK(std::abs(intersection_angle(t, t) - std::sqrt(0.5)) <= 1e-15);
  }
  CHECK(intersection_angle(0.5, 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(intersection_angle(1.0 / 3.0, 2.0 / 3.0) ==
        doctest::Approx(0.44721359549995793).epsilon(1e-14));
}

TEST_CASE("intersection angle matches the ellipsoid families") {
  // Q at distance s(t,r) from P lies on both boundary families: the maximal
  // coefficient along Q coexistent with tP equals the one for rP-perp.
  const auto p = RankOneProjection::qubit(0.0);
  for (auto [t, r] : std::vector<std::pair<double, double>>{{0.3, 0.6}, {0.5, 0.5}, {0.8, 0.2}}) {
    const double s = intersection_angle(t, r);
    const auto q = RankOneProjection::qubit(std::asin(s));
    const double from_p = ellipsoid_coeff(t, p, q);
    const double from_perp = ellipsoid_coeff(r, p.complement_qubit(), q);
    CHECK(from_p == doctest::Approx(from_perp).epsilon(1e-12));
    CHECK(from_p == doctest::Approx((1.0 - t) / (1.0 - t * s * s)).epsilon(1e-12));
  }
}

TEST_CASE("profiles of complements are equal") {
  SplitMix64 rng(67);
  for (int k = 0; k < 10; ++k) {
    const int n = 2 + k % 3;
    const Effect a = random_effect(rng, n);
    const ProbeSet probes = ProbeSet::sample(n, 64, rng.next());
    CHECK(std::holds_alternative<ProfileEqual>(profile_compare(a, ortho_complement(a), probes)));
  }
}

TEST_CASE("scalars have identical profiles") {
  const ProbeSet probes = ProbeSet::sample(2, 64, 5);
  CHECK(std::holds_alternative<ProfileEqual>(
      profile_compare(Effect::scalar(2, 0.3), Effect::scalar(2, 0.8), probes)));
}

TEST_CASE("nearby diagonal effects are separated") {
  const Effect a = Effect::diagonal({0.7, 0.2});
  const Effect b = Effect::diagonal({0.6, 0.2});
  bool found = false;
  for (uint64_t seed = 0; seed < 16 && !found; ++seed) {
    const auto cmp = profile_compare(a, b, ProbeSet::sample(2, 256, seed));
    if (const auto* diff = std::get_if<ProfileDiffers>(&cmp)) {
      found = true;
      // the separating probe itself certifies the difference
      const double slack_a = strength(a, diff->probe.projection).value +
                             strength(ortho_complement(a), diff->probe.projection).value -
                             diff->probe.t;
      const double slack_b = strength(b, diff->probe.projection).value +
                             strength(ortho_complement(b), diff->probe.projection).value -
                             diff->probe.t;
      CHECK(slack_a * slack_b < 0.0);
    }
  }
  CHECK(found);
}

TEST_CASE("subset consistency along a fixed direction") {
  const auto p = RankOneProjection::qubit(0.4);
  const ProbeSet probes = ProbeSet::sample(2, 256, 17);

  // (sP)~ inside (tP)~ iff t <= s
  const Effect small = RankOneEffect{0.3, p}.as_effect();
  const Effect large = RankOneEffect{0.8, p}.as_effect();
  CHECK(std::holds_alternative<SubsetConsistent>(subset_check(large, small, probes)));

  bool violated = false;
  for (uint64_t seed = 0; seed < 16 && !violated; ++seed) {
    violated = std::holds_alternative<SubsetViolation>(
        subset_check(small, large, ProbeSet::sample(2, 256, seed)));
  }
  CHECK(violated);
}

TEST_CASE("convex combinations with the identity only enlarge the set") {
  SplitMix64 rng(71);
  for (int k = 0; k < 10; ++k) {
    const int n = 2 + k % 2;
    const Effect a = random_effect(rng, n);
    const double theta = rng.uniform(0.2, 0.8);
    const Effect mix(HermitianMatrix::from_hermitian_expr(
        theta * a.matrix() + (1.0 - theta) * Matrix::identity(n)));
    const ProbeSet probes = ProbeSet::sample(n, 128, rng.next());
    CHECK(std::holds_alternative<SubsetConsistent>(subset_check(a, mix, probes)));
  }
}

TEST_CASE("sim profile membership matches the rank-one criterion") {
  SplitMix64 rng(73);
  const Effect a = random_effect(rng, 3);
  const ProbeSet probes = ProbeSet::sample(3, 64, 123);
  const SimProfile prof = SimProfile::build(a, probes);
  REQUIRE(prof.membership.size() == probes.probes.size());
  for (size_t i = 0; i < probes.probes.size(); ++i) {
    const auto& probe = probes.probes[i];
    const CoexDecision expected =
        coexist_rank_one(a, probe.t, probe.projection).decision;
    CHECK(prof.membership[i] == (expected == CoexDecision::Coexistent));
  }
}

}  // TEST_SUITE
