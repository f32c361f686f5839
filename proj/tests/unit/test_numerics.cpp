#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hadamard/errors.hpp"
#include "hadamard/numerics.hpp"

using namespace hadamard;
using namespace hadamard::numerics;

namespace {

// Plain bisection, the independent oracle for bracketed roots.
double bisect(const std::function<double(double)>& f, double a, double b, double tol = 1e-13) {
  double fa = f(a);
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

double w_cubic(double d) { return -4.0 * d * (d - 1.0) * (d - 3.0) - 1.0; }

} // namespace

TEST(FindRoot, Examples) {
  EXPECT_NEAR(find_root([](double x) { return x * x - 2.0; }, {1.0, 2.0}), std::sqrt(2.0), 1e-12);
  const double oracle = bisect(w_cubic, 2.5, 3.0);
  EXPECT_NEAR(find_root(w_cubic, {2.5, 3.0}), oracle, 1e-10);
  EXPECT_NEAR(oracle, 2.95679, 1e-5);
  EXPECT_THROW(find_root([](double x) { return x; }, {1.0, 2.0}), NoSignChange);
}

TEST(FindRoot, ResidualWithinTenTimesAbs) {
  const std::vector<std::pair<std::function<double(double)>, Bracket>> cases = {
      {[](double x) { return std::cos(x) - x; }, {0.0, 1.0}},
      {[](double x) { return std::exp(x) - 3.0; }, {0.0, 2.0}},
      {[](double x) { return x * x * x - x - 1.0; }, {1.0, 2.0}},
      {w_cubic, {2.5, 3.0}},
      {[](double x) { return std::tanh(5 * (x - 0.3)); }, {-1.0, 1.0}},
  };
  const Tolerance tol;
  for (const auto& [f, b] : cases) EXPECT_LE(std::abs(f(find_root(f, b, tol))), 10 * tol.abs);
}

TEST(MinimizeBounded, Examples) {
  const Minimum m = minimize_bounded([](double x) { return (x - 1.0) * (x - 1.0); }, 0.0, 3.0);
  EXPECT_NEAR(m.argmin, 1.0, 1e-7);
  EXPECT_NEAR(m.value, 0.0, 1e-14);

  // Dense-grid oracle for sin(5x) on [0, 2].
  double best = 0.0, best_v = 1e300;
  for (int i = 0; i <= 2'000'000; ++i) {
    const double x = 2.0 * i / 2'000'000;
    if (std::sin(5 * x) < best_v) {
      best_v = std::sin(5 * x);
      best = x;
    }
  }
  const Minimum s = minimize_bounded([](double x) { return std::sin(5 * x); }, 0.0, 2.0);
  EXPECT_NEAR(s.argmin, best, 1e-5);
  EXPECT_NEAR(s.argmin, 3 * M_PI / 10, 1e-6);

  const Minimum c = minimize_bounded([](double) { return 4.0; }, -1.0, 5.0);
  EXPECT_EQ(c.argmin, -1.0);
  EXPECT_EQ(c.value, 4.0);
}

TEST(Newton2, Examples) {
  const Point2 a = newton2([](const Point2& z) { return Point2{z[0] - 1.0, z[1] - 2.0}; }, {0.0, 0.0});
  EXPECT_NEAR(a[0], 1.0, 1e-12);
  EXPECT_NEAR(a[1], 2.0, 1e-12);

  const Point2 b = newton2([](const Point2& z) { return Point2{z[0] * z[0] + z[1] * z[1] - 1.0, z[0] - z[1]}; },
                           {1.0, 0.0});
  EXPECT_NEAR(b[0], std::sqrt(0.5), 1e-11);
  EXPECT_NEAR(b[1], std::sqrt(0.5), 1e-11);

  // Double root: Newton still converges, only linearly.
  const Point2 c = newton2([](const Point2& z) { return Point2{z[0] * z[0], z[1] * z[1]}; }, {1.0, 1.0});
  EXPECT_LE(std::abs(c[0]) + std::abs(c[1]), 1e-5);
  EXPECT_THROW(newton2([](const Point2& z) { return Point2{z[0] * z[0] + 1.0, z[1]}; }, {1.0, 1.0}),
               NumericalError);
}

TEST(Newton2, ResidualWithinAbs) {
  const Tolerance tol;
  auto F = [](const Point2& z) { return Point2{std::exp(z[0]) + z[1] - 2.0, z[0] * z[1] - 0.1}; };
  const Point2 r = newton2(F, {0.5, 0.5}, tol);
  const Point2 v = F(r);
  EXPECT_LE(std::max(std::abs(v[0]), std::abs(v[1])), tol.abs);
}

TEST(IntegrateOde, Exponential) {
  const auto path = integrate_ode([](double, const State& y, State& dy) { dy[0] = y[0]; }, 0.0, 1.0, {1.0},
                                  {1e-13, 1e-12, 0});
  EXPECT_EQ(path.front().x, 0.0);
  EXPECT_EQ(path.back().x, 1.0);
  EXPECT_NEAR(path.back().y[0] / M_E - 1.0, 0.0, 1e-8);
}

TEST(IntegrateOde, Oscillator) {
  const auto path = integrate_ode(
      [](double, const State& y, State& dy) {
        dy[0] = y[1];
        dy[1] = -y[0];
      },
      0.0, M_PI, {0.0, 1.0}, {1e-12, 1e-11, 0});
  EXPECT_NEAR(path.back().y[0], 0.0, 1e-7);
  EXPECT_NEAR(path.back().y[1], -1.0, 1e-7);
}

TEST(IntegrateOde, LinearFamily) {
  for (int k = -10; k <= 10; ++k) {
    const double lam = k;
    const auto path = integrate_ode([lam](double, const State& y, State& dy) { dy[0] = lam * y[0]; }, 0.0, 1.0,
                                    {1.0}, {1e-13, 1e-11, 0});
    EXPECT_NEAR(path.back().y[0] / std::exp(lam) - 1.0, 0.0, 1e-8) << lam;
  }
}

TEST(IntegrateOde, BackwardsWithOutputs) {
  // Liquid-limit nucleus profile v = sqrt(1 + 2x) solves v'' = -v'^2 / v.
  const std::vector<double> xs{0.0, 0.25, 0.5, 0.75};
  const auto path = integrate_ode(
      [](double, const State& y, State& dy) {
        dy[0] = y[1];
        dy[1] = -y[1] * y[1] / y[0];
      },
      1.0, 0.0, {std::sqrt(3.0), 1.0 / std::sqrt(3.0)}, {1e-13, 1e-12, 0}, xs);
  ASSERT_EQ(path.size(), 5u);
  EXPECT_EQ(path.front().x, 1.0);
  EXPECT_EQ(path[1].x, 0.75);
  EXPECT_EQ(path.back().x, 0.0);
  for (const auto& s : path) EXPECT_NEAR(s.y[0], std::sqrt(1.0 + 2.0 * s.x), 1e-9);
}

TEST(IntegrateOde, SingularRhsUnderflows) {
  // The right-hand side is undefined below x = 0.5.
  EXPECT_THROW(integrate_ode(
                   [](double x, const State& y, State& dy) {
                     dy[0] = x < 0.5 ? NAN : y[0];
                   },
                   1.0, 0.0, {1.0}),
               StepUnderflow);
}

TEST(RealRootsCubic, Examples) {
  const auto r = real_roots_cubic(1, -6, 11, -6);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0].value, 1.0, 1e-12);
  EXPECT_NEAR(r[1].value, 2.0, 1e-12);
  EXPECT_NEAR(r[2].value, 3.0, 1e-12);

  const auto w = real_roots_cubic(-4, 16, -12, -1);
  EXPECT_NEAR(w.back().value, bisect(w_cubic, 2.5, 3.0), 1e-10);

  const auto s = real_roots_cubic(1, 0, 1, 0);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s[0].value, 0.0, 1e-14);

  EXPECT_THROW(real_roots_cubic(0, 1, 1, 1), DegenerateLeadingCoefficient);
}

TEST(RealRootsCubic, Multiplicities) {
  const auto d = real_roots_cubic(1, -4, 5, -2);  // (x-1)^2 (x-2)
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NEAR(d[0].value, 1.0, 1e-7);
  EXPECT_EQ(d[0].multiplicity, 2);
  EXPECT_EQ(d[1].multiplicity, 1);
  const auto t = real_roots_cubic(2, -6, 6, -2);  // 2 (x-1)^3
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].multiplicity, 3);
  EXPECT_NEAR(t[0].value, 1.0, 1e-5);
}

TEST(RealRootsCubic, ResidualsSmall) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 500; ++i) {
    const double c3 = u(rng) + (i % 2 ? 6 : -6), c2 = u(rng), c1 = u(rng), c0 = u(rng);
    const double scale = std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
    for (const auto& r : real_roots_cubic(c3, c2, c1, c0)) {
      const double x = r.value;
      const double mag = scale * std::max(1.0, std::abs(x * x * x));
      EXPECT_LE(std::abs(((c3 * x + c2) * x + c1) * x + c0), 1e-9 * mag);
    }
  }
}
