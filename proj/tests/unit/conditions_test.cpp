#include <gtest/gtest.h>

#include <cmath>

#include "lqspec/conditions.hpp"
#include "lqspec/systems.hpp"
#include "support.hpp"

namespace lqspec {
namespace {

MapSpec affine(double a, double t, double c, double u, double p) {
  return {Poly2({{1, 0, a}, {0, 0, t}}), Poly2({{0, 1, c}, {0, 0, u}}), p};
}

TEST(Contraction, PolynomialSystemCertified) {
  const ContractionReport r = check_contraction(systems::polynomial_example(), 1e-9);
  EXPECT_TRUE(r.self_map);
  EXPECT_LT(r.c_bound, 1.0);
  EXPECT_TRUE(r.pass());
  ASSERT_EQ(r.lipschitz_bound.size(), 3u);
  // Map 3 at (0, 1): fx = 3/5, gx = 0, gy = 8/15.
  EXPECT_GE(r.lipschitz_bound[2], std::hypot(0.6, 8.0 / 15));
}

TEST(Contraction, IsometryFails) {
  const Ifs ifs({{Poly2::monomial(1, 0, 1.0), Poly2::monomial(0, 1, 0.5), 0.5},
                 affine(0.5, 0.0, 0.5, 0.5, 0.5)});
  const ContractionReport r = check_contraction(ifs, 1e-9);
  EXPECT_GE(r.c_bound, 1.0);
  EXPECT_FALSE(r.pass());
}

TEST(Contraction, ImageOutsideSquareFails) {
  const Ifs ifs({{Poly2::monomial(1, 0, 0.5), Poly2::constant(1.2), 0.5},
                 affine(0.5, 0.5, 0.5, 0.0, 0.5)});
  const ContractionReport r = check_contraction(ifs, 1e-9);
  EXPECT_FALSE(r.self_map);
  EXPECT_FALSE(r.pass());
}

TEST(Domination, PolynomialSystemTable) {
  const DominationReport r = check_domination(systems::polynomial_example(), 1e-10);
  const double inf_fx[] = {3.0 / 5, 2.0 / 5, 3.0 / 5};
  const double sup_gy[] = {1.0 / 6, 1.0 / 4, 8.0 / 15};
  const double inf_gy[] = {1.0 / 6, 1.0 / 4, 1.0 / 5};
  ASSERT_EQ(r.maps.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(r.maps[i].inf_fx, inf_fx[i], 1e-9) << "map " << i;
    EXPECT_NEAR(r.maps[i].sup_gy, sup_gy[i], 1e-9) << "map " << i;
    EXPECT_NEAR(r.maps[i].inf_gy, inf_gy[i], 1e-9) << "map " << i;
  }
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.similarity);
  EXPECT_NEAR(r.d, 1.0 / 6, 1e-9);
  // max of (1/6)/(3/5), (1/4)/(2/5), (8/15)/(3/5)
  EXPECT_NEAR(r.eta, std::max({5.0 / 18, 5.0 / 8, 8.0 / 9}), 1e-9);
  EXPECT_LT(r.eta, 1.0);
  EXPECT_GT(r.alpha_min, 0.0);
  EXPECT_LE(r.alpha_min, r.alpha_max);
  EXPECT_LT(r.alpha_max, 1.0);
  EXPECT_DOUBLE_EQ(r.p_min, 1.0 / 3);
  EXPECT_DOUBLE_EQ(r.p_max, 1.0 / 3);
}

TEST(Domination, EqualityIsNotStrict) {
  const DominationReport r = check_domination(systems::square_tiling(), 1e-10);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.similarity);
  EXPECT_TRUE(r.admissible());

  // fx = gy = 1/2 on one map but the other map is not a similarity.
  const Ifs mixed({affine(0.5, 0.0, 0.5, 0.0, 0.5), affine(0.5, 0.5, 0.3, 0.5, 0.5)});
  const DominationReport m = check_domination(mixed, 1e-10);
  EXPECT_FALSE(m.pass);
  EXPECT_FALSE(m.similarity);
  EXPECT_FALSE(m.admissible());
}

TEST(Domination, EnclosuresContainSampledDerivatives) {
  const Ifs ifs = systems::polynomial_example();
  const DominationReport r = check_domination(ifs, 1e-10);
  Rng rng(31);
  for (int n = 0; n < 10000; ++n) {
    const std::size_t i = rng.index(ifs.size());
    const Point a = test::random_point(rng);
    const Point b = test::random_point(rng);
    const JacobianEntries j = ifs.jacobian_letter(static_cast<Letter>(i), a);
    ASSERT_GE(j.fx, r.maps[i].inf_fx);
    ASSERT_LE(j.fx, r.maps[i].sup_fx);
    ASSERT_GE(j.gy, r.maps[i].inf_gy);
    ASSERT_LE(j.gy, r.maps[i].sup_gy);
    const SingularPair sv = singular_values(j);
    ASSERT_GE(sv.a2, r.alpha_min);
    ASSERT_LE(sv.a1, r.alpha_max);
    const double ratio = j.gy / ifs.jacobian_letter(static_cast<Letter>(i), b).fx;
    ASSERT_LE(ratio, r.eta);
  }
}

TEST(Domination, LipschitzConstantBoundsSampledNorms) {
  const Ifs ifs = systems::polynomial_example();
  const double c = lipschitz_constant(ifs);
  EXPECT_LT(c, 1.0);
  Rng rng(32);
  for (int n = 0; n < 5000; ++n) {
    const Letter i = static_cast<Letter>(rng.index(ifs.size()));
    EXPECT_LE(singular_values(ifs.jacobian_letter(i, test::random_point(rng))).a1, c);
  }
}

TEST(Rosc, PolynomialSystemVerified) {
  const RoscVerdict v = check_rosc(systems::polynomial_example(), 12, 1e-9);
  EXPECT_EQ(v.status, RoscStatus::Verified);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(Rosc, DuplicatedMapViolated) {
  const Ifs ifs({affine(0.5, 0.0, 0.4, 0.0, 0.4), affine(0.5, 0.0, 0.4, 0.0, 0.3),
                 affine(0.5, 0.5, 0.4, 0.5, 0.3)});
  const RoscVerdict v = check_rosc(ifs, 12, 1e-9);
  ASSERT_EQ(v.status, RoscStatus::Violated);
  ASSERT_TRUE(v.witness.has_value());
  const RoscWitness& w = *v.witness;
  EXPECT_NE(w.i, w.j);
  EXPECT_TRUE(invert_map(ifs, w.i, w.point, 1e-12).has_value());
  EXPECT_TRUE(invert_map(ifs, w.j, w.point, 1e-12).has_value());
}

TEST(Rosc, PartialOverlapViolated) {
  const Ifs ifs({affine(0.5, 0.0, 0.4, 0.0, 0.5), affine(0.5, 0.25, 0.4, 0.1, 0.5)});
  EXPECT_EQ(check_rosc(ifs, 12, 1e-9).status, RoscStatus::Violated);
}

TEST(Rosc, TangentImagesNeverViolated) {
  for (const Ifs& ifs : {systems::square_tiling(), systems::diagonal_carpet()}) {
    for (int depth = 0; depth <= 12; ++depth)
      EXPECT_NE(check_rosc(ifs, depth, 1e-9).status, RoscStatus::Violated) << depth;
  }
  // Stacked images sharing the curved edge y = 1/4 + x^2/4 (domain x).
  const Poly2 x = Poly2::monomial(1, 0, 1.0);
  const Ifs curved({{0.5 * x, Poly2({{0, 1, 0.25}, {2, 0, 0.25}}), 0.5},
                    {0.5 * x, Poly2({{0, 1, 0.25}, {2, 0, 0.25}, {0, 0, 0.25}}), 0.5}});
  EXPECT_NE(check_rosc(curved, 12, 1e-9).status, RoscStatus::Violated);
}

TEST(Rosc, MonotoneInDepth) {
  const Ifs ifs = systems::polynomial_example();
  bool verified = false;
  for (int depth = 0; depth <= 14; ++depth) {
    const RoscStatus s = check_rosc(ifs, depth, 1e-9).status;
    EXPECT_NE(s, RoscStatus::Violated);
    if (verified) EXPECT_EQ(s, RoscStatus::Verified) << depth;
    verified = s == RoscStatus::Verified;
  }
  EXPECT_TRUE(verified);
}

TEST(Distortion, SimilaritiesAreExactlyMultiplicative) {
  const DistortionReport r = distortion_diagnostics(systems::quarter_similarities(), 8, 500, 1);
  EXPECT_NEAR(r.R_hat, 1.0, 1e-12);
  EXPECT_NEAR(r.C_hat, 0.0, 1e-12);
  EXPECT_NEAR(r.K1_hat, 1.0, 1e-12);
  EXPECT_NEAR(r.K2_hat, 1.0, 1e-12);
}

TEST(Distortion, PolynomialSystemConstants) {
  const Ifs ifs = systems::polynomial_example();
  const DominationReport dom = check_domination(ifs, 1e-10);
  const DistortionReport r10 = distortion_diagnostics(ifs, 10, 2000, 5);
  const DistortionReport r12 = distortion_diagnostics(ifs, 12, 2000, 5);
  for (const DistortionReport& r : {r10, r12}) {
    EXPECT_TRUE(std::isfinite(r.R_hat));
    EXPECT_TRUE(std::isfinite(r.C_hat));
    EXPECT_GE(r.R_hat, 1.0);
    EXPECT_LE(r.K1_hat, r.K2_hat);
    EXPECT_LE(r.C_hat, r.R_hat * dom.eta / (1.0 - dom.eta));
  }
  // Saturated by k_max = 10: further growth stays small.
  EXPECT_LE(r12.R_hat, 1.05 * r10.R_hat);
}

TEST(Distortion, DeterministicGivenSeed) {
  const Ifs ifs = systems::polynomial_example();
  const DistortionReport a = distortion_diagnostics(ifs, 8, 300, 9);
  const DistortionReport b = distortion_diagnostics(ifs, 8, 300, 9);
  EXPECT_EQ(a.R_hat, b.R_hat);
  EXPECT_EQ(a.C_hat, b.C_hat);
  EXPECT_EQ(a.K1_hat, b.K1_hat);
  EXPECT_EQ(a.K2_hat, b.K2_hat);
}

TEST(Distortion, SingularValueRatiosWithinDistortionBand) {
  const Ifs ifs = systems::polynomial_example();
  const DistortionReport r = distortion_diagnostics(ifs, 12, 2000, 3);
  const double band = 2.0 * r.R_hat * std::sqrt(2.0 + r.C_hat * r.C_hat);
  Rng rng(33);
  for (int n = 0; n < 3000; ++n) {
    const Word w = test::random_word(rng, ifs.size(), 1 + rng.index(12));
    const SingularPair a = singular_values(jacobian(ifs, w, test::random_point(rng)));
    const SingularPair b = singular_values(jacobian(ifs, w, test::random_point(rng)));
    EXPECT_LE(a.a1 / b.a1, band);
    EXPECT_GE(a.a1 / b.a1, 1.0 / band);
    EXPECT_LE(a.a2 / b.a2, band);
    EXPECT_GE(a.a2 / b.a2, 1.0 / band);
  }
}

TEST(Distortion, RejectsBadArguments) {
  const Ifs ifs = systems::polynomial_example();
  EXPECT_THROW(distortion_diagnostics(ifs, 1, 10, 1), std::invalid_argument);
  EXPECT_THROW(distortion_diagnostics(ifs, 4, 0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace lqspec
