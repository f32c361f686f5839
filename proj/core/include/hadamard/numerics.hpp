#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace hadamard::numerics {

struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-10;
  int max_iter = 200;
};

/// Closed interval [lo, hi] with lo < hi.
struct Bracket {
  double lo;
  double hi;
};

using ScalarFunction = std::function<double(double)>;

/**
 * Bracketed root of f on [lo, hi] (TOMS 748). Terminates when |f(x)| <= tol.abs
 * or the bracket width drops below tol.rel |x| + tol.abs.
 *
 * Throws NoSignChange when f(lo) f(hi) > 0, MaxIterations on non-convergence.
 */
double find_root(const ScalarFunction& f, Bracket b, const Tolerance& tol = {});

struct Minimum {
  double argmin;
  double value;
};

/**
 * Minimum of f over [lo, hi]: a uniform scan of `grid_points` samples followed
 * by Brent refinement around the best sample. Global only in the heuristic
 * sense of the scan; exact locally. Ties go to the leftmost sample.
 */
Minimum minimize_bounded(const ScalarFunction& f, double lo, double hi, const Tolerance& tol = {},
                         int grid_points = 256);

using Point2 = std::array<double, 2>;
using System2 = std::function<Point2(const Point2&)>;

/// Damped Newton for two equations in two unknowns with a forward-difference
/// Jacobian. Returns a point with max-norm residual <= tol.abs.
Point2 newton2(const System2& F, Point2 seed, const Tolerance& tol = {});

using State = std::vector<double>;
using OdeRhs = std::function<void(double x, const State& y, State& dydx)>;

struct OdeSample {
  double x;
  State y;
};

/**
 * Adaptive Dormand-Prince 5(4) integration from x0 to x1 (either direction).
 *
 * Local error per component is held below tol.abs + tol.rel |y_i|. When
 * `outputs` is empty the accepted step points are returned; otherwise the
 * integrator lands exactly on each requested abscissa (which must lie within
 * [min(x0,x1), max(x0,x1)]) and returns those, ordered along the direction of
 * integration. The initial point is always included, and so is x1.
 *
 * Throws StepUnderflow when the step falls below 1e-14 |x1 - x0|, which is how
 * singular right-hand sides surface. tol.max_iter is ignored; the step budget is
 * fixed at one million.
 */
std::vector<OdeSample> integrate_ode(const OdeRhs& rhs, double x0, double x1, State y0,
                                     const Tolerance& tol = {},
                                     std::span<const double> outputs = {});

struct RealRoot {
  double value;
  int multiplicity;
};

/// Real roots of c3 x^3 + c2 x^2 + c1 x + c0, ascending, Newton-polished.
std::vector<RealRoot> real_roots_cubic(double c3, double c2, double c1, double c0);

} // namespace hadamard::numerics
