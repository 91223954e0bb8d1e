#include <doctest.h>

#include <cmath>

#include "coexkit/json_io.hpp"
#include "coexkit/symmetry.hpp"
#include "coexkit/verify.hpp"

using namespace coexkit;

TEST_SUITE("symmetry") {

TEST_CASE("identity spec acts as the identity") {
  const AutomorphismSpec spec = AutomorphismSpec::identity(2);
  SplitMix64 rng(81);
  const Effect a = random_effect(rng, 2);
  const Effect image = apply_automorphism(spec, a);
  CHECK(max_abs(image.matrix() - a.matrix()) <= 1e-15);
  const Effect s = Effect::scalar(2, 0.42);
  CHECK(max_abs(apply_automorphism(spec, s).matrix() - s.matrix()) == 0.0);
}

TEST_CASE("coordinatewise conjugation transposes qubit effects") {
  const AutomorphismSpec k = AutomorphismSpec::conjugation(2);
  SplitMix64 rng(83);
  for (int i = 0; i < 5; ++i) {
    Effect a = random_effect(rng, 2);
    if (classify(a).kind == Classification::Kind::Scalar) continue;
    const Effect image = apply_automorphism(k, a);
    Matrix transpose(2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) transpose.at(r, c) = a.matrix().at(c, r);
    CHECK(max_abs(image.matrix() - transpose) <= 1e-15);
  }
}

TEST_CASE("flip-all with reversed scalars is the ortho-complementation") {
  const AutomorphismSpec spec(Matrix::identity(2), false, FlipPolicy::All, GDefault::Reverse);
  SplitMix64 rng(87);
  for (int i = 0; i < 5; ++i) {
    const Effect a = random_effect(rng, 2);
    const Effect expected = ortho_complement(a);
    CHECK(max_abs(apply_automorphism(spec, a).matrix() - expected.matrix()) <= 1e-15);
  }
  CHECK(apply_automorphism(spec, Effect::scalar(2, 0.2)).matrix().at(0, 0).real() ==
        doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("standard automorphism basics") {
  SplitMix64 rng(91);
  const Effect d = Effect::diagonal({0.7, 0.1});
  Matrix swap(2);
  swap.at(0, 1) = Complex{1.0, 0.0};
  swap.at(1, 0) = Complex{1.0, 0.0};
  const Effect swapped = standard_automorphism(swap, false, d);
  CHECK(swapped.matrix().at(0, 0).real() == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(swapped.matrix().at(1, 1).real() == doctest::Approx(0.7).epsilon(1e-15));

  for (int k = 0; k < 10; ++k) {
    const int n = 2 + k % 3;
    const Matrix u = random_unitary(rng, n);
    const Effect a = random_effect(rng, n);
    const Effect image = standard_automorphism(u, (rng.next() & 1u) != 0, a);
    for (size_t i = 0; i < a.eigenvalues().size(); ++i) {
      CHECK(std::abs(a.eigenvalues()[i] - image.eigenvalues()[i]) <= 1e-10);
    }
  }
}

TEST_CASE("non-unitary conjugators are rejected") {
  Matrix u = Matrix::identity(2);
  u.at(0, 0) = Complex{1.5, 0.0};
  CHECK_THROWS_AS(AutomorphismSpec(u, false), CoexError);
  SplitMix64 rng(93);
  CHECK_THROWS_AS(standard_automorphism(u, false, random_effect(rng, 2)), CoexError);
}

TEST_CASE("g lookup and defaults") {
  const AutomorphismSpec spec(Matrix::identity(2), false, FlipPolicy::None, GDefault::Reverse,
                              {{0.25, 0.9}, {0.9, 0.25}});
  CHECK(spec.g(0.25) == 0.9);
  CHECK(spec.g(0.9) == 0.25);
  CHECK(spec.g(0.5) == doctest::Approx(0.5));
  CHECK(spec.g(0.1) == doctest::Approx(0.9));
  CHECK_THROWS_AS(AutomorphismSpec(Matrix::identity(2), false, FlipPolicy::None,
                                   GDefault::Identity, {{0.1, 0.5}, {0.2, 0.5}}),
                  CoexError);
}

TEST_CASE("unordered pair law") {
  SplitMix64 rng(95);
  for (int k = 0; k < 25; ++k) {
    const AutomorphismSpec spec(random_unitary(rng, 2), (rng.next() & 1u) != 0, FlipPolicy::Hash);
    Effect a = random_effect(rng, 2);
    if (classify(a).kind == Classification::Kind::Scalar) continue;
    const Effect pa = apply_automorphism(spec, a);
    const Effect pap = apply_automorphism(spec, ortho_complement(a));
    const Effect ua = standard_automorphism(spec.unitary(), spec.antiunitary(), a);
    const Effect uap =
        standard_automorphism(spec.unitary(), spec.antiunitary(), ortho_complement(a));
    const double direct =
        std::max(max_abs(pa.matrix() - ua.matrix()), max_abs(pap.matrix() - uap.matrix()));
    const double crossed =
        std::max(max_abs(pa.matrix() - uap.matrix()), max_abs(pap.matrix() - ua.matrix()));
    CHECK(std::min(direct, crossed) <= 1e-10);
  }
}

TEST_CASE("preservation holds for the theorem's map family") {
  SplitMix64 rng(97);
  std::vector<std::pair<Effect, Effect>> pairs;
  for (int k = 0; k < 60; ++k) pairs.push_back(random_exact_decidable_qubit_pair(rng));

  const AutomorphismSpec unitary_spec(random_unitary(rng, 2), false, FlipPolicy::Hash);
  const PreservationReport r1 = verify_preservation(unitary_spec, pairs);
  CHECK(r1.pairs_tested == 60);
  CHECK(r1.agreements + r1.undecided + static_cast<int>(r1.failures.size()) == r1.pairs_tested);
  CHECK(r1.clean());

  const PreservationReport r2 = verify_preservation(AutomorphismSpec::conjugation(2), pairs);
  CHECK(r2.clean());
}

TEST_CASE("the squaring map flips a known verdict") {
  // t=0.9 P vs s=0.2 Q at pi/4: not coexistent (threshold 1/(0.5/0.1+0.5) ~ 0.182),
  // but squaring sends it to 0.81 P vs 0.04 Q which is coexistent.
  const auto p = RankOneProjection::qubit(0.0);
  const auto q = RankOneProjection::qubit(0.78539816339744831);
  const Effect a = RankOneEffect{0.9, p}.as_effect();
  const Effect b = RankOneEffect{0.2, q}.as_effect();
  CHECK(coexist(a, b).decision == CoexDecision::NotCoexistent);

  const auto squared = [](const Effect& e) {
    return Effect(HermitianMatrix::from_hermitian_expr(e.matrix() * e.matrix()));
  };
  CHECK(coexist(squared(a), squared(b)).decision == CoexDecision::Coexistent);

  const PreservationReport report =
      verify_preservation_fn(squared, {{a, b}});
  CHECK(report.failures.size() == 1);
}

TEST_CASE("automorphism specs round-trip through JSON") {
  SplitMix64 rng(101);
  const AutomorphismSpec spec(random_unitary(rng, 2), true, FlipPolicy::Hash, GDefault::Reverse,
                              {{0.5, 0.5}, {0.25, 0.75}, {0.75, 0.25}});
  const AutomorphismSpec back = automorphism_from_json(automorphism_to_json(spec));
  CHECK(back.antiunitary() == spec.antiunitary());
  CHECK(back.flip_policy() == spec.flip_policy());
  CHECK(back.g_default() == spec.g_default());
  CHECK(max_abs(back.unitary() - spec.unitary()) == 0.0);
  CHECK(back.g(0.25) == 0.75);
  SplitMix64 rng2(103);
  const Effect a = random_effect(rng2, 2);
  CHECK(max_abs(apply_automorphism(back, a).matrix() - apply_automorphism(spec, a).matrix()) ==
        0.0);
}

}  // TEST_SUITE
