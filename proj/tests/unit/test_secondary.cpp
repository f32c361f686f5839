#include <gtest/gtest.h>

#include <cmath>

#include "hadamard/errors.hpp"
#include "hadamard/jumpset.hpp"
#include "hadamard/secondary.hpp"
#include "verify.hpp"

using namespace hadamard;

namespace {

const MaterialParams kP1(1.0, 1.0, 3.0);

// Sup over the branch of |y0 - y0_asym(x0)| at equal x0.
double geometric_error(double mu) {
  const MaterialParams p(mu, 1.0, 3.0);
  const SecondaryCurve c = secondary_curve(p);
  double worst = 0.0;
  for (const SecondaryPoint& s : c.branch) {
    try {
      worst = std::max(worst, std::abs(s.y0 - asymptotic_secondary_y(s.x0, p)));
    } catch (const OutsideWindow&) {
    }
  }
  return worst;
}

} // namespace

TEST(SecondaryWindow, Values) {
  const auto [lo, hi] = secondary_eps0_range(kP1);
  EXPECT_NEAR(lo, std::pow(5.0, 0.25), 1e-15);
  EXPECT_NEAR(hi, std::sqrt(3.0), 1e-15);
  const auto [a, b] = secondary_eps0_range(MaterialParams(0.0, 2.0, 2.0 + 1e-9));
  EXPECT_NEAR(a, b, 1e-8);
  EXPECT_DOUBLE_EQ(hi, w_point(kP1.with_mu(0.0)).eps0);
}

TEST(AsymptoticSecondary, UpperEnd) {
  const StrainPoint s = asymptotic_secondary(std::sqrt(3.0), kP1);
  // The map has a square-root edge here: one ulp in eps0 moves x0 by ~1e-8.
  EXPECT_NEAR(s.x0, std::sqrt(3.0), 1e-7);
  EXPECT_NEAR(s.y0, (1.0 + 1.0 / 24.0) / std::sqrt(3.0), 1e-7);
  EXPECT_NEAR(s.y0, 0.60140, 1e-5);
}

TEST(AsymptoticSecondary, LiquidCurveIsHyperbola) {
  const MaterialParams liquid(0.0, 1.0, 3.0);
  const auto [lo, hi] = secondary_eps0_range(liquid);
  for (int i = 0; i <= 20; ++i) {
    const double e = lo + (hi - lo) * i / 20.0;
    const StrainPoint s = asymptotic_secondary(e, liquid);
    EXPECT_NEAR(s.x0 * s.y0, 1.0, 1e-12);
  }
  EXPECT_NEAR(asymptotic_secondary(lo, liquid).x0, 1.0 / lo, 1e-12);
}

TEST(AsymptoticSecondary, Window) {
  EXPECT_THROW(asymptotic_secondary(1.3, kP1), OutsideWindow);
  EXPECT_THROW(asymptotic_secondary(1.8, kP1), OutsideWindow);
  const StrainPoint s = asymptotic_secondary(1.6, kP1);
  EXPECT_NEAR(asymptotic_secondary_y(s.x0, kP1), s.y0, 1e-10);
  EXPECT_THROW(asymptotic_secondary_y(0.1, kP1), OutsideWindow);
}

TEST(SecondaryResiduals, TrivialLaminatesSolve) {
  // Both degenerate roots (F0 equal to F+ or F-) satisfy the system for any eps0.
  for (double e0 : {1.5, 1.6, 1.7}) {
    const JumpPair jp = jump_pair(e0, kP1);
    EXPECT_NEAR(traction_residual(e0, jp.eps_plus, jp.d_plus, kP1), 0.0, 1e-12);
    EXPECT_NEAR(maxwell_residual(e0, jp.eps_plus, jp.d_plus, kP1), 0.0, 1e-12);
    EXPECT_NEAR(traction_residual(e0, jp.eps_minus, jp.d_minus, kP1), 0.0, 1e-12);
    EXPECT_NEAR(maxwell_residual(e0, jp.eps_minus, jp.d_minus, kP1), 0.0, 1e-12);
  }
}

TEST(SecondaryResiduals, DomainAndSmoothness) {
  EXPECT_THROW(traction_residual(1.6, -1.0, 1.0, kP1), DomainError);
  EXPECT_THROW(maxwell_residual(1.6, 1.0, 0.0, kP1), DomainError);
  EXPECT_THROW(traction_residual(1.6, 1.0, 1.0, kP1.with_mu(0.0)), DomainError);
  const SecondaryPoint s = solve_secondary(1.65, kP1);
  const double t = traction_residual(1.65, s.eps_bar + 1e-3, s.d0, kP1);
  EXPECT_GT(std::abs(t), 1e-5);
  EXPECT_LT(std::abs(t), 1e-1);
}

TEST(SolveSecondary, Residuals) {
  const MaterialParams p = kP1.with_mu(0.1);
  const SecondaryPoint s = solve_secondary(1.7, p);
  EXPECT_LE(std::abs(traction_residual(1.7, s.eps_bar, s.d0, p)), 1e-9);
  EXPECT_LE(std::abs(maxwell_residual(1.7, s.eps_bar, s.d0, p)), 1e-9);
  EXPECT_DOUBLE_EQ(s.x0 * s.y0, s.d0);
  EXPECT_GE(s.lambda, 0.0);
  EXPECT_LE(s.lambda, 1.0);
  EXPECT_LE(hadamard::testing::verify_secondary(s, p).max(), 1e-9);
}

TEST(SolveSecondary, OffBranchRejected) {
  EXPECT_THROW(solve_secondary(1.3, kP1.with_mu(0.1)), LambdaOutOfRange);
  EXPECT_THROW(solve_secondary(1.6, kP1.with_mu(0.0)), DomainError);
}

TEST(SecondaryCurve, Endpoints) {
  const SecondaryCurve c = secondary_curve(kP1);
  const WPoint w = w_point(kP1);
  ASSERT_GT(c.full.size(), 100u);
  EXPECT_EQ(c.full.front().lambda, 1.0);
  EXPECT_DOUBLE_EQ(c.full.front().x0, w.eps0);
  EXPECT_DOUBLE_EQ(c.full.front().y0, w.eps_minus);
  // Continuation approaches the W-point from below.
  EXPECT_GT(c.full[1].lambda, 0.8);
  EXPECT_LT(c.full[1].eps0, w.eps0);
  EXPECT_LT(c.full.back().lambda, 0.2);
  EXPECT_NEAR(c.far_end_eps0, c.full.back().eps0, 0.0);
}

TEST(SecondaryCurve, LambdaMonotone) {
  for (double mu : {0.1, 0.5, 1.0}) {
    const SecondaryCurve c = secondary_curve(kP1.with_mu(mu));
    for (std::size_t i = 1; i < c.full.size(); ++i) EXPECT_LT(c.full[i].lambda, c.full[i - 1].lambda) << mu << " " << i;
  }
}

TEST(SecondaryCurve, MirrorAndBisector) {
  const SecondaryCurve c = secondary_curve(kP1);
  ASSERT_TRUE(c.bisector.has_value());
  EXPECT_NEAR(c.bisector->x0, c.bisector->y0, 1e-10);
  EXPECT_NEAR(c.bisector->x0, 1.0355067, 2e-6);
  ASSERT_EQ(c.mirror.size(), c.branch.size());
  for (std::size_t i = 0; i < c.branch.size(); ++i) {
    EXPECT_EQ(c.mirror[i].eps1, c.branch[i].y0);
    EXPECT_EQ(c.mirror[i].eps2, c.branch[i].x0);
  }
  for (std::size_t i = 0; i + 1 < c.branch.size(); ++i) EXPECT_GT(c.branch[i].x0, c.branch[i].y0);
}

TEST(SecondaryCurve, EveryPointVerifies) {
  for (double mu : {0.1, 0.5, 1.0}) {
    const MaterialParams p = kP1.with_mu(mu);
    const SecondaryCurve c = secondary_curve(p);
    for (std::size_t i = 1; i < c.full.size(); ++i) {
      EXPECT_LE(hadamard::testing::verify_secondary(c.full[i], p).max(), 1e-9) << mu << " " << c.full[i].eps0;
    }
  }
}

TEST(SecondaryCurve, GeometricSecondOrder) {
  const double ratio = geometric_error(0.2) / geometric_error(0.1);
  EXPECT_GE(ratio, 3.5);
  EXPECT_LE(ratio, 4.5);
}

TEST(SecondaryCurve, DeterminantTendsToLowerWell) {
  // Inside the open window d0 -> d1 linearly in mu.
  double prev = 1e300;
  for (double mu : {0.2, 0.1, 0.05}) {
    const SecondaryPoint s = solve_secondary(1.62, kP1.with_mu(mu));
    const double gap = std::abs(s.d0 - 1.0);
    EXPECT_LT(gap, prev);
    EXPECT_LT(gap, 2.0 * mu);
    prev = gap;
  }
}

TEST(SecondaryCurve, RequiresSolid) {
  EXPECT_THROW(secondary_curve(kP1.with_mu(0.0)), DomainError);
  EXPECT_THROW(secondary_curve(kP1.with_mu(9.0)), NoWPoint);
}
