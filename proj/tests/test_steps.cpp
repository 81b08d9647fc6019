#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace bring;
using bring::testing::draw;
using bring::testing::draw_rational;

namespace {

/// Printed closed form of the cubic's b-condition (monic).
UniPoly closed_form_b_quadratic(const Scalar& m, const Scalar& n, const Scalar& p) {
  const Scalar den = Scalar(3) * n - m * m;
  const Scalar lin = (Scalar(-7) * m * n + Scalar(9) * p + Scalar(2) * m * m * m) / den;
  const Scalar con = (-n * n - Scalar(6) * m * p - m * m * m * m + Scalar(4) * m * m * n) / den;
  return UniPoly{con, lin, Scalar(1)};
}

/// The step's output agrees with both elimination routes.
void expect_consistent(const TransformStep& s, double tol) {
  const UniPoly by_transport = transform_by_power_sums(s.input, s.subsidiary.map());
  const UniPoly by_resultant = sylvester_resultant_in_z(s.input, s.subsidiary.equation());
  const double scale = std::max(1.0, max_coeff_magnitude(s.output));
  for (std::size_t k = 0; k < s.output.size(); ++k) {
    EXPECT_LE((s.output.coeff(k) - by_transport.coeff(k)).magnitude(), tol * scale) << s.kind << " y^" << k;
    EXPECT_LE((s.output.coeff(k) - by_resultant.coeff(k)).magnitude(), tol * scale) << s.kind << " y^" << k;
  }
}

}  // namespace

TEST(Subsidiary, SignConventions) {
  const Subsidiary lin = Subsidiary::linear(Scalar(2));
  EXPECT_TRUE(lin.map() == make_poly({2, 1}));
  EXPECT_TRUE(lin.at(Scalar(5)) == make_poly({-3, 1}));  // z + 2 - 5
  const Subsidiary quad = Subsidiary::polynomial({Scalar(3), Scalar(4)});
  EXPECT_TRUE(quad.map() == make_poly({-3, -4, -1}));
  EXPECT_TRUE(quad.at(Scalar(1)) == make_poly({4, 4, 1}));  // z^2 + 4z + 3 + 1
  EXPECT_EQ(quad.k(), 2);
  EXPECT_TRUE(Subsidiary::linear(Scalar(0)).is_identity());
  EXPECT_THROW(Subsidiary::polynomial({Scalar(1)}), std::invalid_argument);
}

TEST(Depress, CubicWithPureResult) {
  const TransformStep s = depress(make_poly({5, 3, 3, 1}));
  EXPECT_TRUE(s.output == make_poly({4, 0, 0, 1}));
  EXPECT_TRUE(s.subsidiary.coeff(0) == Scalar(1));
  EXPECT_EQ(s.aux.size(), 1u);
  EXPECT_EQ(s.aux[0].kind(), "linear");
}

TEST(Depress, Quadratic) { EXPECT_TRUE(depress(make_poly({-3, 2, 1})).output == make_poly({-4, 0, 1})); }

TEST(Depress, AlreadyDepressedIsIdentity) {
  const TransformStep s = depress(make_poly({0, 0, 0, 0, 0, 1}));
  EXPECT_TRUE(s.identity);
  EXPECT_TRUE(s.subsidiary.is_identity());
  EXPECT_TRUE(s.output == s.input);
}

TEST(Depress, RandomExactInputsGiveExactZero) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(draw(rng, 2, 6));
    const TransformStep s = depress(bring::testing::random_monic(rng, n));
    EXPECT_TRUE(s.output.coeff(static_cast<std::size_t>(n - 1)).is_zero());
    EXPECT_TRUE(all_rational(s.output));
    if (!s.identity) expect_consistent(s, 0.0);
  }
}

TEST(CubicBQuadratic, Examples) {
  EXPECT_TRUE(cubic_b_quadratic(Scalar(0), Scalar(1), Scalar(0)) == UniPoly({Scalar::rational(-1, 3), Scalar(0), Scalar(1)}));
  EXPECT_TRUE(cubic_b_quadratic(Scalar(1), Scalar(1), Scalar(1)) == make_poly({-2, 2, 1}));
}

TEST(CubicBQuadratic, DegenerateFamilyRaises) {
  try {
    cubic_b_quadratic(Scalar(3), Scalar(3), Scalar(7));
    FAIL() << "expected DegenerateDenominator";
  } catch (const DegenerateDenominator& e) {
    EXPECT_EQ(e.denominator(), "3n - m^2");
  }
}

TEST(CubicBQuadratic, DerivedConditionEqualsClosedForm) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Scalar m = draw_rational(rng), n = draw_rational(rng), p = draw_rational(rng);
    if ((Scalar(3) * n - m * m).is_zero()) continue;
    EXPECT_TRUE(cubic_b_quadratic(m, n, p) == closed_form_b_quadratic(m, n, p)) << trial;
  }
}

TEST(CubicToPure, ZCubedPlusZ) {
  const TransformStep s = cubic_to_pure(make_poly({0, 1, 0, 1}));
  EXPECT_EQ(s.kind, "cubic_pure");
  EXPECT_TRUE(s.subsidiary.coeff(0) == Scalar::rational(2, 3));
  EXPECT_TRUE(close(s.subsidiary.coeff(1) * s.subsidiary.coeff(1), Scalar::rational(1, 3), 1e-70));
  EXPECT_TRUE(close(s.output.coeff(0), Scalar::rational(8, 27), 1e-30));
  EXPECT_TRUE(s.output.coeff(1).is_zero());
  EXPECT_TRUE(s.output.coeff(2).is_zero());
  expect_consistent(s, 1e-60);
}

TEST(CubicToPure, SpecialFamilyFallsBackToShift) {
  const TransformStep s = cubic_to_pure(make_poly({5, 3, 3, 1}));
  EXPECT_EQ(s.kind, "depress");
  EXPECT_TRUE(s.output == make_poly({4, 0, 0, 1}));
}

TEST(CubicToPure, BackSolveRecoversIntegerRoots) {
  const UniPoly a = make_poly({-6, 11, -6, 1});
  const TransformStep s = cubic_to_pure(a);
  EXPECT_LE(relative_coeff(s.output, 2), 1e-30);
  EXPECT_LE(relative_coeff(s.output, 1), 1e-30);
  const std::vector<Scalar> ys = solve_cubic_cardano(s.output.coeff(1), s.output.coeff(0)).roots;
  const std::vector<Scalar> zs = back_solve_roots(s, ys);
  EXPECT_LE(match_distance(zs, {Scalar(1), Scalar(2), Scalar(3)}), 1e-50);
}

TEST(ToPrincipal, CubicAgreesWithCubicToPure) {
  for (const UniPoly& a : {make_poly({0, 1, 0, 1}), make_poly({1, 1, 1, 1}), make_poly({-6, 11, -6, 1})}) {
    const TransformStep x = to_principal(a), y = cubic_to_pure(a);
    EXPECT_TRUE(close(x.subsidiary.coeff(0), y.subsidiary.coeff(0), 1e-60));
    EXPECT_TRUE(close(x.subsidiary.coeff(1), y.subsidiary.coeff(1), 1e-60));
    EXPECT_LE(coeff_distance(x.output, y.output), 1e-60);
  }
}

TEST(ToPrincipal, SexticLikeQuintic) {
  const TransformStep s = to_principal(make_poly({1, 1, 1, 1, 1, 1}));
  EXPECT_LE(relative_coeff(s.output, 4), 1e-30);
  EXPECT_LE(relative_coeff(s.output, 3), 1e-30);
  expect_consistent(s, 1e-50);
  const VerifyReport r = verify_transform(s);
  EXPECT_TRUE(r.matched);
}

TEST(ToPrincipal, AlreadyPrincipalIsIdentity) {
  const TransformStep s = to_principal(make_poly({1, 0, 1, 0, 0, 1}));
  EXPECT_TRUE(s.identity);
}

TEST(ToPrincipal, RandomDegreesThreeToSix) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(draw(rng, 3, 6));
    const UniPoly a = bring::testing::random_monic(rng, n);
    const TransformStep s = to_principal(depress(a).output);
    if (s.identity) continue;
    EXPECT_TRUE(s.output.coeff(static_cast<std::size_t>(n - 1)).is_zero());
    EXPECT_TRUE(s.output.coeff(static_cast<std::size_t>(n - 2)).is_zero());
    expect_consistent(s, 1e-50);
    for (const auto& aux : s.aux) EXPECT_LE(aux.degree(), 2);
  }
}

TEST(Reciprocal, ReversesAndNormalizes) {
  EXPECT_TRUE(reciprocal_transform(make_poly({2, 1, 0, 0, 1})) ==
              UniPoly({Scalar::rational(1, 2), Scalar(0), Scalar(0), Scalar::rational(1, 2), Scalar(1)}));
  EXPECT_TRUE(reciprocal_transform(make_poly({1, 3, 1})) == make_poly({1, 3, 1}));
  EXPECT_THROW(reciprocal_transform(make_poly({0, 1, 0, 0, 1})), std::domain_error);
}

TEST(Reciprocal, PrincipalFormOfReversalRemovesLowTerms) {
  // removing terms 2 and 3 of the reversal removes the z^1 and z^2 terms of the original
  const UniPoly a = make_poly({3, 1, -2, 5, 1});
  const TransformStep s = to_principal(reciprocal_transform(a));
  const UniPoly back = reciprocal_transform(s.output);
  EXPECT_LE(relative_coeff(back, 1), 1e-30);
  EXPECT_LE(relative_coeff(back, 2), 1e-30);
}

TEST(BackSolve, LinearStepHasOneCandidate) {
  const TransformStep s = depress(make_poly({5, 3, 3, 1}));
  const Scalar y = cbrt(Scalar(-4));
  const auto zs = back_solve(s, y);
  ASSERT_EQ(zs.size(), 1u);
  EXPECT_TRUE(close(zs[0], y - Scalar(1), 1e-70));
}

TEST(BackSolve, CubicToPureRecoversZero) {
  const TransformStep s = cubic_to_pure(make_poly({0, 1, 0, 1}));
  const auto zs = back_solve(s, Scalar::rational(-2, 3));
  ASSERT_EQ(zs.size(), 1u);
  EXPECT_LE(zs[0].magnitude(), 1e-60);
}

TEST(BackSolve, RejectsValuesThatAreNotRoots) {
  const TransformStep s = cubic_to_pure(make_poly({0, 1, 0, 1}));
  EXPECT_THROW(back_solve(s, Scalar(5)), ConsistencyError);
}

TEST(MakeStep, RefusesToSnapLargeCoefficients) {
  // shift by 1 does not depress z^2 + 4z + 1
  std::vector<AuxSolve> none;
  EXPECT_THROW(make_step("bogus", make_poly({1, 4, 1}), Subsidiary::linear(Scalar(1)), none, {1}, Config{}),
               ConsistencyError);
}

TEST(BackSolve, ResidualIsNotInflatedNearZeroRoot) {
  const UniPoly a = make_poly({0, -23, 27, -10, 0, 1});
  EXPECT_LE(relative_residual(a, bring::testing::complex_value(1e-70, 0)), 1e-60);
  EXPECT_GT(relative_residual(a, Scalar(1)), 1e-3);
}

TEST(BackSolve, ShortfallFollowsMultiplicityInInput) {
  // T = -(z + 3)(z - 1) sends every root of (z + 3)(z - 1)^3 to 0
  const UniPoly a = bring::testing::from_roots({Scalar(-3), Scalar(1), Scalar(1), Scalar(1)});
  const TransformStep s = quartic_remove_2_3(a.coeff(2), a.coeff(1), a.coeff(0));
  const auto zs = back_solve_roots(s, std::vector<Scalar>(4, Scalar(0)));
  EXPECT_LE(match_distance(zs, {Scalar(-3), Scalar(1), Scalar(1), Scalar(1)}), 1e-60);
  EXPECT_EQ(apparent_multiplicity(a, Scalar(1), 1e-12), 3);
  EXPECT_EQ(apparent_multiplicity(a, Scalar(-3), 1e-12), 1);
}

TEST(SolveAux, MultipleRootIsPolishedToWorkingPrecision) {
  // (d - r)^3 with irrational r: radicals alone give a spread of ~eps^(1/3)
  const Scalar r = sqrt(Scalar(2)) - Scalar::rational(1, 3);
  const UniPoly eq = UniPoly{-r, Scalar(1)} * UniPoly{-r, Scalar(1)} * UniPoly{-r, Scalar(1)} * Scalar(7);
  const AuxSolve s = solve_aux("d", eq, Config{});
  ASSERT_EQ(s.roots.size(), 3u);
  for (const auto& x : s.roots) EXPECT_LE((x - r).magnitude(), 1e-60);
}

TEST(MakeStep, SnapsRoundingLevelLowerCoefficients) {
  // y = z^2 sends the roots of z^4 - 2 to +-sqrt(2), each twice
  const UniPoly a = make_poly({-2, 0, 0, 0, 1});
  const Scalar c = Scalar::rational(1, 2) * sqrt(Scalar(2)) * sqrt(Scalar(2)) - Scalar(1);  // rounding-level zero
  const TransformStep s = make_step("test", a, Subsidiary::polynomial({c, Scalar(0)}), {}, {}, Config{});
  for (const auto& x : s.output.coeffs()) EXPECT_TRUE(x.is_zero() || x.magnitude() > 1e-30);
}
