#include <doctest.h>

#include <cmath>

#include "coexkit/effect.hpp"
#include "coexkit/rng.hpp"

using namespace coexkit;

TEST_SUITE("effects") {

TEST_CASE("effect validation clamps rounding noise and rejects real violations") {
  CHECK_NOTHROW(Effect::diagonal({0.0, 1.0, 0.5}));
  const Effect near(HermitianMatrix::diagonal({1.0 + 5e-10, -5e-10}));
  CHECK(near.eigenvalues().front() == 0.0);
  CHECK(near.eigenvalues().back() == 1.0);
  CHECK_THROWS_AS(Effect(HermitianMatrix::diagonal({1.2, 0.0})), CoexError);
  try {
    Effect bad(HermitianMatrix::diagonal({-0.1}));
  } catch (const CoexError& e) {
    CHECK(e.code() == Errc::SpectrumOutOfRange);
  }
}

TEST_CASE("valid effects keep their stored entries") {
  const Effect a = Effect::diagonal({0.25, 0.75});
  CHECK(a.matrix().at(0, 0) == Complex{0.25, 0.0});
  CHECK(a.matrix().at(1, 1) == Complex{0.75, 0.0});
}

TEST_CASE("ortho complement") {
  const Effect zero = Effect::zero(3);
  CHECK(max_abs(ortho_complement(zero).matrix() - Matrix::identity(3)) == 0.0);
  const Effect scalar = Effect::scalar(2, 0.25);
  CHECK(ortho_complement(scalar).matrix().at(0, 0) == Complex{0.75, 0.0});
  const Effect d = Effect::diagonal({0.7, 0.2});
  const Effect dp = ortho_complement(d);
  CHECK(dp.matrix().at(0, 0).real() == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(dp.matrix().at(1, 1).real() == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("ortho complement is an involution") {
  // Bitwise on entries whose subtraction from 1 is exact.
  const Effect dyadic = Effect::diagonal({0.5, 0.75, 0.0});
  CHECK(ortho_complement(ortho_complement(dyadic)).matrix().entries() ==
        dyadic.matrix().entries());
  SplitMix64 rng(5);
  for (int k = 0; k < 50; ++k) {
    CVector x = random_unit_vector(rng, 3);
    const Effect e(HermitianMatrix::from_hermitian_expr(
        0.5 * Matrix::identity(3) + 0.4 * outer(x) - 0.2 * Matrix::identity(3)));
    const Effect back = ortho_complement(ortho_complement(e));
    CHECK(max_abs(back.matrix() - e.matrix()) <= 3e-16);
  }
}

TEST_CASE("classify order and categories") {
  const auto scalar = classify(Effect::scalar(3, 0.5));
  CHECK(scalar.kind == Classification::Kind::Scalar);
  CHECK(scalar.scalar == doctest::Approx(0.5));

  // 0 and I are both scalar and projection; scalar wins by order
  CHECK(classify(Effect::zero(2)).kind == Classification::Kind::Scalar);
  CHECK(classify(Effect::identity(2)).kind == Classification::Kind::Scalar);

  CHECK(classify(Effect::diagonal({1.0, 0.0, 0.0})).kind == Classification::Kind::Projection);

  SplitMix64 rng(11);
  const auto p = RankOneProjection::from_vector(random_unit_vector(rng, 3));
  const Effect tp = RankOneEffect{0.3, p}.as_effect();
  const auto cls = classify(tp);
  CHECK(cls.kind == Classification::Kind::RankOneLike);
  CHECK(cls.t == doctest::Approx(0.3).epsilon(1e-12));
  CHECK_FALSE(cls.complemented);
  CHECK(max_abs(cls.projection->matrix() - p.matrix()) < 1e-9);

  const auto comp = classify(ortho_complement(tp));
  CHECK(comp.kind == Classification::Kind::RankOneLike);
  CHECK(comp.complemented);

  CHECK(classify(Effect::diagonal({0.9, 0.5, 0.1})).kind == Classification::Kind::General);
}

TEST_CASE("commutes") {
  const Effect a = Effect::diagonal({0.9, 0.4});
  CHECK(commutes(a, ortho_complement(a)));
  CHECK(commutes(a, Effect::diagonal({0.1, 0.7})));
  const Effect p = RankOneProjection::qubit(0.0).as_effect();
  const Effect q = RankOneProjection::qubit(0.78539816339744831).as_effect();
  CHECK_FALSE(commutes(p, q));
  CHECK_THROWS_AS(commutes(p, Effect::identity(3)), CoexError);
}

TEST_CASE("rank one projections are unit rank projections") {
  SplitMix64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const auto p = RankOneProjection::from_vector(random_unit_vector(rng, 4));
    const Matrix pm = p.matrix();
    CHECK(max_abs(pm * pm - pm) < 1e-12);
    CHECK(pm.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(RankOneProjection::from_vector(CVector{Complex{2.0, 0.0}}), CoexError);
}

TEST_CASE("strength of the identity is 1 along every direction") {
  SplitMix64 rng(17);
  for (int k = 0; k < 10; ++k) {
    const auto p = RankOneProjection::from_vector(random_unit_vector(rng, 3));
    const auto sv = strength(Effect::identity(3), p);
    CHECK(sv.in_range);
    CHECK(sv.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(strength_bisect(Effect::identity(3), p) == doctest::Approx(1.0).epsilon(1e-11));
  }
}

TEST_CASE("strength vanishes outside the range of a projection") {
  const Effect p = RankOneProjection::qubit(0.0).as_effect();
  const auto q = RankOneProjection::qubit(0.78539816339744831);
  const auto sv = strength(p, q);
  CHECK_FALSE(sv.in_range);
  CHECK(sv.value == 0.0);
  CHECK(strength_bisect(p, q) <= 1e-10);
}

TEST_CASE("strength 1/3 for diag(1/2,1/4) at angle pi/4") {
  const Effect a = Effect::diagonal({0.5, 0.25});
  const auto p = RankOneProjection::qubit(0.78539816339744831);
  const auto sv = strength(a, p);
  CHECK(sv.in_range);
  CHECK(sv.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(strength_bisect(a, p) - 1.0 / 3.0) < 1e-10);
  CHECK(diag_strength(0.5, 0.25, 0.78539816339744831) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("strength of the zero effect is zero") {
  const auto p = RankOneProjection::qubit(0.3);
  CHECK(strength(Effect::zero(2), p).value == 0.0);
  CHECK(strength_bisect(Effect::zero(2), p) <= 1e-10);
}

TEST_CASE("diag strength infinity conventions") {
  for (double alpha : {0.1, 0.5, 1.0, 1.5}) {
    CHECK(diag_strength(0.0, 0.8, alpha) == 0.0);
  }
  // at alpha = pi/2 the first weight vanishes, leaving lambda2
  CHECK(diag_strength(0.0, 0.8, 1.5707963267948966) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(diag_strength(0.7, 0.3, 0.0) == doctest::Approx(0.7).epsilon(1e-14));
  for (double alpha : {0.0, 0.4, 0.9, 1.5707963267948966}) {
    CHECK(diag_strength(0.6, 0.6, alpha) == doctest::Approx(0.6).epsilon(1e-14));
  }
  CHECK(diag_strength(0.0, 0.0, 0.3) == 0.0);
}

TEST_CASE("bg and bisect agree off the warn band") {
  SplitMix64 rng(23);
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 3;
    Matrix g(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = Complex{rng.gaussian(), rng.gaussian()};
    auto eig = eig_hermitian(HermitianMatrix::from_hermitian_expr(g));
    std::vector<double> ev(static_cast<size_t>(n));
    for (auto& lam : ev) lam = rng.uniform();
    const Effect a(reconstruct(eig, ev));
    const auto p = RankOneProjection::from_vector(random_unit_vector(rng, n));
    const auto sv = strength(a, p);
    if (sv.warn_band()) continue;
    CHECK(std::abs(sv.value - strength_bisect(a, p)) <= 1e-8);
  }
}

}  // TEST_SUITE
