#include "hadamard/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "hadamard/errors.hpp"

namespace hadamard::numerics {

double find_root(const ScalarFunction& f, Bracket b, const Tolerance& tol) {
  if (!(b.lo < b.hi)) throw std::invalid_argument("find_root: bracket requires lo < hi");

  // Values within the absolute tolerance count as exact zeros, which stops
  // TOMS 748 immediately.
  auto g = [&](double x) {
    const double v = f(x);
    return std::abs(v) <= tol.abs ? 0.0 : v;
  };
  const double flo = g(b.lo);
  const double fhi = g(b.hi);
  if (flo == 0.0) return b.lo;
  if (fhi == 0.0) return b.hi;
  if (!std::isfinite(flo) || !std::isfinite(fhi) || flo * fhi > 0.0) {
    std::ostringstream os;
    os << "find_root: no sign change on [" << b.lo << ", " << b.hi << "] (f=" << flo << ", " << fhi
       << ")";
    throw NoSignChange(os.str());
  }

  auto converged = [&](double lo, double hi) {
    const double x = 0.5 * (lo + hi);
    return std::abs(hi - lo) <= tol.rel * std::abs(x) + tol.abs;
  };
  std::uintmax_t iters = static_cast<std::uintmax_t>(tol.max_iter);
  const auto [lo, hi] = boost::math::tools::toms748_solve(g, b.lo, b.hi, flo, fhi, converged, iters);

  const double glo = g(lo);
  const double ghi = g(hi);
  if (glo != 0.0 && ghi != 0.0 && !converged(lo, hi)) {
    std::ostringstream os;
    os << "find_root: no convergence after " << iters << " iterations; bracket [" << lo << ", " << hi
       << "]";
    throw MaxIterations(os.str());
  }
  return std::abs(glo) <= std::abs(ghi) ? lo : hi;
}

Minimum minimize_bounded(const ScalarFunction& f, double lo, double hi, const Tolerance& tol,
                         int grid_points) {
  if (!(lo < hi)) throw std::invalid_argument("minimize_bounded: requires lo < hi");
  const int n = std::max(grid_points, 3);
  const double h = (hi - lo) / (n - 1);

  int best = 0;
  double best_val = f(lo);
  for (int i = 1; i < n; ++i) {
    const double x = (i == n - 1) ? hi : lo + i * h;
    const double v = f(x);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double best_x = (best == n - 1) ? hi : lo + best * h;

  const double a = best == 0 ? lo : lo + (best - 1) * h;
  const double b = best == n - 1 ? hi : std::min(hi, lo + (best + 1) * h);
  std::uintmax_t iters = static_cast<std::uintmax_t>(tol.max_iter);
  const int bits = std::numeric_limits<double>::digits / 2;
  const auto [x, v] = boost::math::tools::brent_find_minima(f, a, b, bits, iters);

  if (v < best_val) return {x, v};
  return {best_x, best_val};
}

Point2 newton2(const System2& F, Point2 seed, const Tolerance& tol) {
  auto norm = [](const Point2& r) { return std::max(std::abs(r[0]), std::abs(r[1])); };
  auto finite = [](const Point2& r) { return std::isfinite(r[0]) && std::isfinite(r[1]); };

  Point2 z = seed;
  Point2 r = F(z);
  if (!finite(r)) throw NoConvergence("newton2: residual is not finite at the seed");

  const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());
  for (int it = 0; it < tol.max_iter; ++it) {
    if (norm(r) <= tol.abs) return z;

    // Forward-difference Jacobian, columns J(:, j) = dF/dz_j.
    double J[2][2];
    for (int j = 0; j < 2; ++j) {
      Point2 zp = z;
      const double step = sqrt_eps * std::max(1.0, std::abs(z[static_cast<std::size_t>(j)]));
      zp[static_cast<std::size_t>(j)] += step;
      const Point2 rp = F(zp);
      J[0][j] = (rp[0] - r[0]) / step;
      J[1][j] = (rp[1] - r[1]) / step;
    }
    const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    const double jn = std::max(std::abs(J[0][0]) + std::abs(J[0][1]),
                               std::abs(J[1][0]) + std::abs(J[1][1]));
    const double inv_n = std::max(std::abs(J[1][1]) + std::abs(J[0][1]),
                                  std::abs(J[1][0]) + std::abs(J[0][0])) /
                         std::abs(det);
    if (det == 0.0 || !std::isfinite(det) || jn * inv_n > 1e14) {
      throw SingularJacobian("newton2: Jacobian is singular or ill-conditioned");
    }
    const Point2 dz{(-r[0] * J[1][1] + r[1] * J[0][1]) / det,
                    (-r[1] * J[0][0] + r[0] * J[1][0]) / det};

    // Backtracking: halve while the residual does not decrease.
    double t = 1.0;
    Point2 zn{};
    Point2 rn{};
    bool improved = false;
    for (int k = 0; k <= 30; ++k) {
      zn = {z[0] + t * dz[0], z[1] + t * dz[1]};
      rn = F(zn);
      if (finite(rn) && norm(rn) < norm(r)) {
        improved = true;
        break;
      }
      t *= 0.5;
    }
    if (!improved) {
      if (norm(r) <= 10.0 * tol.abs) return z;
      throw NoConvergence("newton2: line search failed to reduce the residual");
    }
    z = zn;
    r = rn;
  }
  if (norm(r) <= tol.abs) return z;
  throw MaxIterations("newton2: iteration limit reached");
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Stepper {
  const OdeRhs& rhs;
  std::size_t n;
  State k1, k2, k3, k4, k5, k6, k7, tmp;

  Stepper(const OdeRhs& f, std::size_t dim)
      : rhs(f), n(dim), k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim), tmp(dim) {}

  // One trial step from (x, y) with k1 = f(x, y) already loaded. Writes the
  // fifth-order solution to y_out and returns the scaled error norm (NaN when
  // the right-hand side produced non-finite values).
  double trial(double x, const State& y, double h, State& y_out, const Tolerance& tol) {
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    rhs(x + c2 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(x + c3 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(x + c4 * h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(x + c5 * h, tmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs(x + h, tmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      y_out[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    rhs(x + h, y_out, k7);

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e =
          h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale = tol.abs + tol.rel * std::max(std::abs(y[i]), std::abs(y_out[i]));
      const double r = std::abs(e) / scale;
      if (!std::isfinite(r) || !std::isfinite(y_out[i])) return std::numeric_limits<double>::quiet_NaN();
      err = std::max(err, r);
    }
    return err;
  }
};

} // namespace

std::vector<OdeSample> integrate_ode(const OdeRhs& rhs, double x0, double x1, State y0,
                                     const Tolerance& tol, std::span<const double> outputs) {
  const std::size_t n = y0.size();
  if (n == 0) throw std::invalid_argument("integrate_ode: empty state");
  std::vector<OdeSample> result;
  result.push_back({x0, y0});
  if (x0 == x1) return result;

  const double dir = x1 > x0 ? 1.0 : -1.0;
  const double span = std::abs(x1 - x0);
  const double h_floor = 1e-14 * span;

  // Output abscissae ordered along the direction of integration, ending at x1.
  std::vector<double> targets;
  if (outputs.empty()) {
    targets.push_back(x1);
  } else {
    const double lo = std::min(x0, x1), hi = std::max(x0, x1);
    for (double t : outputs) {
      if (t < lo || t > hi) throw std::invalid_argument("integrate_ode: output point outside range");
      if (t != x0) targets.push_back(t);
    }
    targets.push_back(x1);
    std::sort(targets.begin(), targets.end(), [dir](double a, double b) { return dir * a < dir * b; });
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  }

  Stepper st(rhs, n);
  State y = std::move(y0);
  State y_new(n);
  double x = x0;
  rhs(x, y, st.k1);
  double h = dir * std::min(1e-2 * span, 1e-2);
  constexpr long kMaxSteps = 1'000'000;
  long steps = 0;

  for (double target : targets) {
    while (dir * (target - x) > 0.0) {
      if (++steps > kMaxSteps) throw MaxIterations("integrate_ode: step budget exhausted");
      bool landing = false;
      double step = h;
      if (dir * (x + step - target) >= 0.0) {
        step = target - x;
        landing = true;
      }
      const double err = st.trial(x, y, step, y_new, tol);
      if (std::isnan(err) || err > 1.0) {
        const double factor = std::isnan(err) ? 0.25 : std::max(0.2, 0.9 * std::pow(err, -0.2));
        h = step * factor;
        if (std::abs(h) < h_floor) {
          std::ostringstream os;
          os << "integrate_ode: step size underflow at x=" << x;
          throw StepUnderflow(os.str());
        }
        continue;
      }
      x = landing ? target : x + step;
      y.swap(y_new);
      st.k1 = st.k7;  // first-same-as-last
      const double grow = err == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(err, -0.2));
      // A short landing step does not shrink the working step size.
      h = landing ? dir * std::max(std::abs(h), std::abs(step * grow)) : step * grow;
      if (outputs.empty() && !landing) result.push_back({x, y});
    }
    result.push_back({x, y});
  }
  return result;
}

namespace {

double poly3(double c3, double c2, double c1, double c0, double x) {
  return ((c3 * x + c2) * x + c1) * x + c0;
}

double polish(double c3, double c2, double c1, double c0, double x) {
  for (int it = 0; it < 8; ++it) {
    const double f = poly3(c3, c2, c1, c0, x);
    const double df = (3.0 * c3 * x + 2.0 * c2) * x + c1;
    if (df == 0.0 || !std::isfinite(df)) break;
    const double dx = f / df;
    const double xn = x - dx;
    if (std::abs(poly3(c3, c2, c1, c0, xn)) > std::abs(f)) break;
    x = xn;
    if (std::abs(dx) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) break;
  }
  return x;
}

} // namespace

std::vector<RealRoot> real_roots_cubic(double c3, double c2, double c1, double c0) {
  const double scale = std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
  if (c3 == 0.0 || std::abs(c3) <= 1e-14 * scale) {
    throw DegenerateLeadingCoefficient("real_roots_cubic: leading coefficient vanishes");
  }
  const double a = c2 / c3, b = c1 / c3, c = c0 / c3;
  // Depressed cubic t^3 + p t + q with x = t - a/3.
  const double shift = a / 3.0;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;
  const double disc_scale = half_q * half_q + std::abs(third_p * third_p * third_p);
  const double disc_tol = 1e-12 * disc_scale;

  std::vector<RealRoot> roots;
  if (std::abs(disc) <= disc_tol) {
    if (std::abs(p) <= 1e-12 * std::max(1.0, a * a)) {
      roots.push_back({-shift, 3});
    } else {
      const double simple = 3.0 * q / p;
      const double dbl = -1.5 * q / p;
      roots.push_back({polish(c3, c2, c1, c0, simple - shift), 1});
      // Double roots are roots of the derivative; polish there instead.
      double xd = dbl - shift;
      const double d2c = 6.0 * c3 * xd + 2.0 * c2;
      if (d2c != 0.0) xd -= ((3.0 * c3 * xd + 2.0 * c2) * xd + c1) / d2c;
      roots.push_back({xd, 2});
    }
  } else if (disc > 0.0) {
    const double s = std::sqrt(disc);
    const double t = std::cbrt(-half_q + s) + std::cbrt(-half_q - s);
    roots.push_back({polish(c3, c2, c1, c0, t - shift), 1});
  } else {
    const double r = std::sqrt(-third_p);
    const double arg = std::clamp(-half_q / (r * r * r), -1.0, 1.0);
    const double phi = std::acos(arg);
    constexpr double two_pi_3 = 2.0943951023931954923;
    for (int k = 0; k < 3; ++k) {
      const double t = 2.0 * r * std::cos(phi / 3.0 - k * two_pi_3);
      roots.push_back({polish(c3, c2, c1, c0, t - shift), 1});
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& l, const RealRoot& r) { return l.value < r.value; });
  return roots;
}

} // namespace hadamard::numerics
