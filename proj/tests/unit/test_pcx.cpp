#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "hadamard/errors.hpp"
#include "hadamard/jumpset.hpp"
#include "hadamard/material.hpp"
#include "hadamard/pcx.hpp"

using namespace hadamard;

namespace {

const MaterialParams kP1(1.0, 1.0, 3.0);

char code(PcxStatus s) {
  switch (s) {
    case PcxStatus::Polyconvex: return 'P';
    case PcxStatus::NotPolyconvex: return 'N';
    default: return 'I';
  }
}

} // namespace

TEST(MStar, AtWellBottom) {
  for (double mu : {0.1, 1.0, 3.0}) {
    const MaterialParams p = kP1.with_mu(mu);
    const MStar m = m_star(1.0, p);
    EXPECT_NEAR(m.value, mu, 1e-9);
    // Two tied minimizers, (1 + theta/2)^2 = d2 on either side of zero.
    const double t1 = 2.0 * std::sqrt(3.0) - 2.0, t2 = -2.0 * std::sqrt(3.0) - 2.0;
    EXPECT_LE(std::min(std::abs(m.theta - t1), std::abs(m.theta - t2)), 1e-4) << m.theta;
  }
}

TEST(MStar, BelowShearPlusSlope) {
  for (int i = 0; i <= 40; ++i) {
    const double e = 0.6 + 1.4 * i / 40.0;
    EXPECT_LE(m_star(e, kP1).value, kP1.mu + h_prime(e * e, kP1) + 1e-10) << e;
  }
}

TEST(MStar, AgainstDenseScan) {
  for (double e : {0.9, 1.02, 1.3}) {
    const double e2 = e * e;
    double best = 1e300;
    for (int i = -400000; i <= 400000; ++i) {
      const double t = i * 2.0e-5;
      const double s = e + 0.5 * t;
      if (i == 0 || s == 0.0) continue;
      best = std::min(best, (h_value(s * s, kP1) - h_value(e2, kP1) - e * h_prime(e2, kP1) * t) / (t * t));
    }
    EXPECT_LE(m_star(e, kP1).value, kP1.mu + 4.0 * best + 1e-9);
    EXPECT_NEAR(m_star(e, kP1).value, kP1.mu + 4.0 * best, 1e-6);
  }
}

TEST(PcxClassify, Examples) {
  EXPECT_EQ(pcx_classify_hydro(1.0, kP1).status, PcxStatus::Polyconvex);
  EXPECT_EQ(pcx_classify_hydro(1.01, kP1).status, PcxStatus::Polyconvex);
  const PcxVerdict bad = pcx_classify_hydro(1.05, kP1);
  EXPECT_EQ(bad.status, PcxStatus::NotPolyconvex);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_LT(pcx_reduced_f(*bad.witness, 1.05, kP1), 0.0);
  EXPECT_THROW(pcx_classify_hydro(1.0, kP1.with_mu(0.0)), DomainError);
}

TEST(PcxClassify, WitnessIsAdmissible) {
  for (double e : {1.04, 1.1, 1.2}) {
    const PcxVerdict v = pcx_classify_hydro(e, kP1);
    if (v.status != PcxStatus::NotPolyconvex) continue;
    const double e2 = e * e;
    const double lever = h_prime(e2, kP1) + kP1.mu - v.m_star;
    const double bound = e2 * lever * lever / (4.0 * kP1.mu * kP1.mu);
    EXPECT_LE(*v.witness, bound);
    EXPECT_LT(pcx_reduced_f(*v.witness, e, kP1), -1e-12);
  }
}

TEST(PcxClassify, MonotoneAlongBisector) {
  for (double mu : {0.25, 0.5, 1.0}) {
    const MaterialParams p = kP1.with_mu(mu);
    std::string pattern;
    for (int i = 0; i < 50; ++i) pattern += code(pcx_classify_hydro(1.0 + 0.2 * i / 49.0, p).status);
    // P...P I...I N...N
    const auto first_not_p = pattern.find_first_not_of('P');
    ASSERT_NE(first_not_p, std::string::npos) << pattern;
    const auto first_n = pattern.find('N');
    ASSERT_NE(first_n, std::string::npos) << pattern;
    EXPECT_EQ(pattern.find_first_not_of('I', first_not_p), first_n) << pattern;
    EXPECT_EQ(pattern.find_first_not_of('N', first_n), std::string::npos) << pattern;
  }
}

TEST(PcxClassify, CertificateHoldsOnRandomIncrements) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 0.6);
  for (double e : {1.0, 1.01, 1.02}) {
    const PcxVerdict v = pcx_classify_hydro(e, kP1);
    ASSERT_EQ(v.status, PcxStatus::Polyconvex) << e;
    const Matrix2 F = Matrix2::diag(e, e);
    int n = 0;
    double worst = 0.0;
    while (n < 10000) {
      const Matrix2 H{g(rng), g(rng), g(rng), g(rng)};
      if ((F + H).det() <= 0.0) continue;
      worst = std::min(worst, excess(F, H, kP1) - v.m_star * H.det());
      ++n;
    }
    EXPECT_GE(worst, -1e-10) << e;
  }
}

TEST(PcxBound, Asymptotic) {
  EXPECT_DOUBLE_EQ(pcx_bound_hydro_asymptotic(kP1.with_mu(0.0)), 1.0);
  const double r3 = std::sqrt(3.0);
  EXPECT_NEAR(pcx_bound_hydro_asymptotic(kP1), 1.0 + (r3 - 1.0) / (8.0 * (r3 + 1.0)), 1e-15);
  EXPECT_NEAR(pcx_bound_hydro_asymptotic(kP1), 1.03349, 1e-5);
}

TEST(PcxBound, NumericNearAsymptotic) {
  const HydroPcxBound b = pcx_bound_hydro_numeric(kP1.with_mu(0.1));
  EXPECT_NEAR(b.polyconvex_up_to, 1.0033494, 2e-4);
  EXPECT_GE(b.polyconvex_up_to, 1.0);
  EXPECT_LE(b.polyconvex_up_to, b.not_polyconvex_from);
  EXPECT_THROW(pcx_bound_hydro_numeric(kP1.with_mu(0.0)), DomainError);
}

TEST(PcxBound, SecondOrder) {
  auto err = [](double mu) {
    const MaterialParams p(mu, 1.0, 3.0);
    return std::abs(pcx_bound_hydro_numeric(p).polyconvex_up_to - pcx_bound_hydro_asymptotic(p));
  };
  const double ratio = err(0.2) / err(0.1);
  EXPECT_GE(ratio, 3.5);
  EXPECT_LE(ratio, 4.5);
}

TEST(PcxBound, IncreasingInMu) {
  double prev = 0.0;
  for (double mu : {0.05, 0.2875, 0.525, 0.7625, 1.0}) {
    const double b = pcx_bound_hydro_numeric(kP1.with_mu(mu)).polyconvex_up_to;
    EXPECT_GT(b, prev);
    prev = b;
  }
}

TEST(MJump, Examples) {
  EXPECT_NEAR(m_jump(jump_pair(1.5, kP1.with_mu(0.0)), kP1.with_mu(0.0)), 0.0, 1e-15);
  EXPECT_NEAR(m_jump(jump_pair(std::sqrt(3.0), kP1), kP1), -2.0 / 3.0, 1e-12);
  for (double e0 : {1.2, 1.6, 2.2}) {
    const JumpPair jp = jump_pair(e0, kP1);
    const double diag = -kP1.mu * (jp.eps_plus + jp.eps_minus) / (2.0 * e0);
    const double general = (h_prime(jp.d_plus, kP1) * jp.d_plus - h_prime(jp.d_minus, kP1) * jp.d_minus) /
                           (jp.d_plus - jp.d_minus);
    EXPECT_NEAR(m_jump(jp, kP1), diag, 1e-12);
    EXPECT_NEAR(general, diag, 1e-12);
  }
}
