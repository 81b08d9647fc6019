#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace bring;
using bring::testing::draw;
using bring::testing::draw_rational;
using bring::testing::unit;

namespace {

/// a * q == b for some nonzero constant a (exact rationals).
bool proportional(const UniPoly& p, const UniPoly& q) {
  if (p.degree() != q.degree() || p.is_zero()) return false;
  const Scalar ratio = p.leading() / q.leading();
  return p == q * ratio;
}

UniPoly printed_g(const Scalar& p, const Scalar& q) {
  auto pw = [](const Scalar& x, int k) {
    Scalar r(1);
    for (int i = 0; i < k; ++i) r *= x;
    return r;
  };
  const Scalar c24(24), c16(16), c32(32);
  return UniPoly{
      Scalar(7) * pw(c32, 2) * pw(p, 3) * pw(q, 3) - Scalar(27) * pw(p, 7),
      Scalar(15 * 32 * 36) * pw(q, 2) * pw(p, 4) + Scalar(4) * pw(c32, 3) * pw(q, 5),
      Scalar(945 * 16) * pw(p, 5) * q + Scalar(400) * pw(c32, 2) * p * pw(q, 4),
      Scalar(180 * 24) * pw(p, 6) + Scalar(500) * pw(c32, 2) * pw(p, 2) * pw(q, 3),
      Scalar(540) * pw(c24, 2) * pw(p, 3) * pw(q, 2),
      Scalar(7) * pw(c24, 3) * pw(p, 4) * q - Scalar(8) * pw(c16, 3) * pw(q, 4),
      pw(c24, 3) * pw(p, 5) - Scalar(5) * pw(c16, 3) * p * pw(q, 3),
  };
}

/// E(b, c) = 24pbc + 16qc^2 + 32qb - 3p^2 as a polynomial in b over Q[c].
BCPoly closed_form_e(const Scalar& p, const Scalar& q) {
  return BCPoly{UniPoly{Scalar(-3) * p * p, Scalar(0), Scalar(16) * q}, UniPoly{Scalar(32) * q, Scalar(24) * p}};
}

/// The y^1 coefficient re-derived by hand, times 8:
/// -8pb^3 - 32qb^2c + 12p^2bc + 8pqb + 8p^2c^3 + 32pqc^2 + 32q^2c + p^3.
BCPoly hand_derived_8f(const Scalar& p, const Scalar& q) {
  return BCPoly{UniPoly{p * p * p, Scalar(32) * q * q, Scalar(32) * p * q, Scalar(8) * p * p},
                UniPoly{Scalar(8) * p * q, Scalar(12) * p * p},
                UniPoly{Scalar(0), Scalar(-32) * q},
                UniPoly(Scalar(-8) * p)};
}

/// -2pb^3 - 8qb^2c + 2p^2c^3 - 3p^2bc + 4pqc^2 - 6pqb + 8q^2c + p^3 as printed.
BCPoly printed_f(const Scalar& p, const Scalar& q) {
  return BCPoly{UniPoly{p * p * p, Scalar(8) * q * q, Scalar(4) * p * q, Scalar(2) * p * p},
                UniPoly{Scalar(-6) * p * q, Scalar(-3) * p * p},
                UniPoly{Scalar(0), Scalar(-8) * q},
                UniPoly(Scalar(-2) * p)};
}

BCPoly scaled(const BCPoly& f, const Scalar& k) {
  std::vector<UniPoly> cs;
  for (const auto& c : f.coeffs()) cs.push_back(c * k);
  return BCPoly(std::move(cs));
}

}  // namespace

TEST(QuarticRemove23, NZeroGivesLinearB) {
  const TransformStep s = quartic_remove_2_3(Scalar(0), Scalar(3), Scalar(5));
  EXPECT_TRUE(s.subsidiary.coeff(0) == Scalar(0));
  EXPECT_TRUE(s.subsidiary.coeff(1) == Scalar::rational(-10, 9));
  EXPECT_TRUE(s.output.coeff(3).is_zero());
  EXPECT_TRUE(s.output.coeff(2).is_zero());
}

TEST(QuarticRemove23, ShiftIsHalfOfN) {
  const TransformStep s = quartic_remove_2_3(Scalar(-5), Scalar(0), Scalar(4));
  EXPECT_TRUE(s.subsidiary.coeff(0) == Scalar::rational(-5, 2));
  EXPECT_LE(relative_coeff(s.output, 3), 1e-30);
  EXPECT_LE(relative_coeff(s.output, 2), 1e-30);
  EXPECT_TRUE(verify_transform(s).matched);
}

TEST(QuarticRemove23, ConditionOnBMatchesClosedForm) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Scalar n = draw_rational(rng), p = draw_rational(rng), q = draw_rational(rng);
    if (n.is_zero()) continue;
    const TransformStep s = quartic_remove_2_3(n, p, q);
    EXPECT_TRUE(s.subsidiary.coeff(0) == n / Scalar(2)) << trial;
    const UniPoly closed{n * n + Scalar(2) * q - Scalar::rational(3, 2) * n * n, Scalar(3) * p, n};
    ASSERT_EQ(s.aux[0].unknown, "b");
    EXPECT_TRUE(proportional(s.aux[0].equation, closed)) << trial;
  }
}

TEST(QuarticRemove23, NoValidBRaises) {
  EXPECT_THROW(quartic_remove_2_3(Scalar(0), Scalar(0), Scalar(1)), DegenerateDenominator);
}

TEST(QuarticRemove24, PEqualsOne) {
  const TransformStep s = quartic_remove_2_4(Scalar(1), Scalar(0));
  EXPECT_TRUE(s.subsidiary.coeff(1) == Scalar(1));
  EXPECT_TRUE(s.subsidiary.coeff(0) == Scalar(0));
  EXPECT_TRUE(s.output == make_poly({0, 0, 3, 0, 1}));
}

TEST(QuarticRemove24, PZeroUsesBZero) {
  const TransformStep s = quartic_remove_2_4(Scalar(0), Scalar(3));
  EXPECT_TRUE(s.identity || s.subsidiary.coeff(1) == Scalar(0));
  const TransformStep t = quartic_remove_2_4(Scalar(0), Scalar(0));
  EXPECT_TRUE(t.identity);
}

TEST(QuarticRemove24, PZeroExplicitSquareForm) {
  // with T = -z^2 every root gives y^2 = z^4 = -q
  const UniPoly a = depressed_quartic(Scalar(0), Scalar(0), Scalar(3));
  const UniPoly c = transform_by_power_sums(a, make_poly({0, 0, -1}));
  EXPECT_TRUE(c == make_poly({9, 0, 6, 0, 1}));
}

TEST(QuarticRemove24, CubicConditionMatchesClosedForm) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Scalar p = draw_rational(rng), q = draw_rational(rng);
    if (p.is_zero()) continue;
    PrecisionGuard guard(256);
    const PowerSums s = power_sums(depressed_quartic(Scalar(0), p, q), 6);
    const UniPoly b = UniPoly::x();
    const Poly<UniPoly> t{UniPoly{}, -b, UniPoly(Scalar(-1))};
    EXPECT_TRUE(transformed_top_coeffs(s, t, 1)[1].is_zero());  // a = 0 is forced
    const UniPoly derived = transformed_top_coeffs(s, t, 3)[3];
    EXPECT_TRUE(proportional(derived, UniPoly{p * p, Scalar(0), Scalar(-4) * q, -p})) << trial;
  }
}

TEST(QuarticRemove24, BackSolvePicksTheRightRoot) {
  const TransformStep s = quartic_remove_2_4(Scalar(1), Scalar(0));
  const Scalar y = -sqrt(Scalar(-3));
  const auto zs = back_solve(s, y);
  ASSERT_EQ(zs.size(), 1u);
  EXPECT_TRUE(close(zs[0], unit(1, 3), 1e-60));
}

TEST(QuarticRemove24, BackSolveRecoversAllRoots) {
  const TransformStep s = quartic_remove_2_4(Scalar(1), Scalar(0));
  const std::vector<Scalar> ys{Scalar(0), Scalar(0), sqrt(Scalar(-3)), -sqrt(Scalar(-3))};
  const auto zs = back_solve_roots(s, ys);
  EXPECT_LE(match_distance(zs, {Scalar(0), Scalar(-1), unit(1, 3), unit(-1, 3)}), 1e-25);
}

TEST(Obstruction, GenericDegreeSix) {
  for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 1}, {1, 0}}) {
    const ObstructionResult r = quartic_obstruction_G(Scalar(p), Scalar(q));
    EXPECT_EQ(r.g.degree(), 6);
    EXPECT_FALSE(r.degenerate);
    EXPECT_TRUE(r.a == Scalar::rational(3 * p, 4));
  }
}

TEST(Obstruction, RootsExtendToSolutionsOfEAndF) {
  for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 1}, {1, 0}, {-2, 3}}) {
    const ObstructionResult r = quartic_obstruction_G(Scalar(p), Scalar(q));
    const auto pts = obstruction_points(r);
    ASSERT_EQ(pts.size(), 6u);
    for (const auto& pt : pts) {
      EXPECT_LE(pt.e_residual, 1e-25);
      EXPECT_LE(pt.f_residual, 1e-25);
    }
  }
}

TEST(Obstruction, PZeroIsDegenerate) {
  const ObstructionResult r = quartic_obstruction_G(Scalar(0), Scalar(1));
  EXPECT_TRUE(r.degenerate);
  EXPECT_LT(r.g.degree(), 6);
  // E reduces to (16c^2 + 32b) / 8, i.e. b = -c^2/2
  EXPECT_TRUE(r.e.coeff(1) == UniPoly(Scalar(4)));
  EXPECT_TRUE(r.e.coeff(0) == make_poly({0, 0, 2}));
}

TEST(Obstruction, EIsAnEighthOfClosedForm) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const Scalar p = draw_rational(rng), q = draw_rational(rng);
    const ObstructionResult r = quartic_obstruction_G(p, q);
    EXPECT_TRUE(scaled(r.e, Scalar(8)) == closed_form_e(p, q)) << trial;
  }
}

TEST(Obstruction, FMatchesHandDerivationNotClosedForm) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const Scalar p = draw_rational(rng), q = draw_rational(rng);
    if (p.is_zero()) continue;
    const ObstructionResult r = quartic_obstruction_G(p, q);
    EXPECT_TRUE(scaled(r.f, Scalar(8)) == hand_derived_8f(p, q)) << trial;
    EXPECT_FALSE(scaled(r.f, Scalar(8)) == printed_f(p, q)) << trial;
  }
}

TEST(Obstruction, GIsProportionalToClosedForm) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    const Scalar p = draw_rational(rng), q = draw_rational(rng);
    if (p.is_zero()) continue;
    const ObstructionResult r = quartic_obstruction_G(p, q);
    const UniPoly closed = printed_g(p, q);
    if (closed.degree() != 6) continue;
    EXPECT_TRUE(proportional(r.g, closed)) << trial;
  }
}

TEST(Obstruction, DegreeSixOnRandomInputs) {
  std::mt19937_64 rng(18);
  int checked = 0;
  while (checked < 50) {
    const Scalar p = draw_rational(rng), q = draw_rational(rng);
    if (p.is_zero()) continue;
    EXPECT_EQ(quartic_obstruction_G(p, q).g.degree(), 6) << p.to_string() << " " << q.to_string();
    ++checked;
  }
}
