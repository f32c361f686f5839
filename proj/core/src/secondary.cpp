#include "hadamard/secondary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hadamard/errors.hpp"
#include "hadamard/numerics.hpp"

namespace hadamard {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    std::ostringstream os;
    os << what << " must be positive (got " << v << ")";
    throw DomainError(os.str());
  }
}

void require_solid(const MaterialParams& p, const char* what) {
  if (!(p.mu > 0.0)) {
    throw DomainError(std::string(what) + ": the secondary system divides by mu; requires mu > 0");
  }
}

// Bracketed term eps0 + (eps+ eps- - <eps> eps_bar) / eps0 shared by both equations.
double lever(const JumpPair& jp, double eps_bar) {
  return jp.eps0 + (jp.eps_plus * jp.eps_minus - jp.mean_eps() * eps_bar) / jp.eps0;
}

constexpr double kLambdaSlack = 1e-9;
constexpr double kCollapse = 1e-6;

} // namespace

double traction_residual(double eps0, double eps_bar, double d0, const MaterialParams& p) {
  require_solid(p, "traction_residual");
  require_positive(eps0, "traction_residual: eps0");
  require_positive(eps_bar, "traction_residual: eps_bar");
  require_positive(d0, "traction_residual: d0");
  const JumpPair jp = jump_pair(eps0, p);
  const double hp = DoubleWell(p).prime(d0);
  return d0 / eps_bar - (lever(jp, eps_bar) - hp * eps_bar / p.mu);
}

double maxwell_residual(double eps0, double eps_bar, double d0, const MaterialParams& p) {
  require_solid(p, "maxwell_residual");
  require_positive(eps0, "maxwell_residual: eps0");
  require_positive(eps_bar, "maxwell_residual: eps_bar");
  require_positive(d0, "maxwell_residual: d0");
  const JumpPair jp = jump_pair(eps0, p);
  const double h0 = DoubleWell(p).value(d0);
  const double e4 = eps0 * eps0 * eps0 * eps0;
  const double y0 = d0 / eps_bar;
  const double lhs = 0.5 * (eps_bar * eps_bar + y0 * y0) + h0 / p.mu -
                     (eps_bar - jp.eps_minus) * jp.mean_eps() -
                     0.5 * (jp.eps_minus * jp.eps_minus + eps0 * eps0) - p.mu / (16.0 * e4);
  const double rhs = (y0 - eps0) * lever(jp, eps_bar);
  return lhs - rhs;
}

std::pair<double, double> secondary_eps0_range(const MaterialParams& p) {
  const double g = p.d2 - p.d1;
  return {std::pow(p.d2 * p.d2 - g * g, 0.25), std::sqrt(p.d2)};
}

StrainPoint asymptotic_secondary(double eps0, const MaterialParams& p) {
  const auto [lo, hi] = secondary_eps0_range(p);
  const double slack = 1e-12 * hi;
  if (eps0 < lo - slack || eps0 > hi + slack) {
    std::ostringstream os;
    os << "asymptotic_secondary: eps0=" << eps0 << " outside window [" << lo << ", " << hi << "]";
    throw OutsideWindow(os.str());
  }
  const double e2 = eps0 * eps0;
  const double e4 = e2 * e2;
  const double s = std::sqrt(std::max(0.0, p.d2 * p.d2 - e4));
  const double dbar = p.d2 - s;
  const double g = p.d2 - p.d1;
  const double delta = (e4 * g - 2.0 * (p.d2 * p.d2 - e4) * dbar) / (4.0 * e2 * g * g * dbar * dbar);
  const double x0 = dbar / eps0;
  return {x0, (p.d1 + p.mu * delta) / x0};
}

double asymptotic_secondary_y(double x0, const MaterialParams& p) {
  const auto [lo, hi] = secondary_eps0_range(p);
  const double x_lo = asymptotic_secondary(lo, p).x0;
  const double x_hi = asymptotic_secondary(hi, p).x0;
  if (x0 < x_lo || x0 > x_hi) {
    std::ostringstream os;
    os << "asymptotic_secondary_y: x0=" << x0 << " outside [" << x_lo << ", " << x_hi << "]";
    throw OutsideWindow(os.str());
  }
  if (x0 == x_hi) return asymptotic_secondary(hi, p).y0;
  if (x0 == x_lo) return asymptotic_secondary(lo, p).y0;
  const double e = numerics::find_root(
      [&](double t) { return asymptotic_secondary(t, p).x0 - x0; }, {lo, hi},
      {1e-15, 1e-15, 200});
  return asymptotic_secondary(e, p).y0;
}

SecondaryPoint solve_secondary(double eps0, const MaterialParams& p,
                               std::optional<std::pair<double, double>> seed) {
  require_solid(p, "solve_secondary");
  require_positive(eps0, "solve_secondary: eps0");
  const JumpPair jp = jump_pair(eps0, p);

  numerics::Point2 z0{};
  if (seed) {
    z0 = {seed->first, seed->second};
  } else {
    const auto [lo, hi] = secondary_eps0_range(p);
    const StrainPoint a = asymptotic_secondary(std::clamp(eps0, lo, hi), p);
    z0 = {a.x0, a.x0 * a.y0};
  }

  auto system = [&](const numerics::Point2& z) -> numerics::Point2 {
    if (!(z[0] > 0.0) || !(z[1] > 0.0)) return {NAN, NAN};
    return {traction_residual(eps0, z[0], z[1], p), maxwell_residual(eps0, z[0], z[1], p)};
  };

  numerics::Point2 z{};
  try {
    z = numerics::newton2(system, z0, {1e-12, 1e-10, 100});
  } catch (const NumericalError& e) {
    std::ostringstream os;
    os << "solve_secondary: eps0=" << eps0 << ": " << e.what();
    throw NoConvergence(os.str());
  }

  SecondaryPoint sp;
  sp.eps0 = eps0;
  sp.eps_bar = z[0];
  sp.d0 = z[1];
  sp.lambda = (sp.eps_bar - jp.eps_minus) / jp.jump_eps();
  sp.x0 = sp.eps_bar;
  sp.y0 = sp.d0 / sp.eps_bar;

  if (sp.lambda < -kLambdaSlack || sp.lambda > 1.0 + kLambdaSlack) {
    std::ostringstream os;
    os << "solve_secondary: eps0=" << eps0 << " gives lambda=" << sp.lambda;
    throw LambdaOutOfRange(os.str());
  }
  if (std::abs(sp.y0 - eps0) <= kCollapse * eps0) {
    std::ostringstream os;
    os << "solve_secondary: eps0=" << eps0 << " collapsed onto the primary jump set (lambda="
       << sp.lambda << ")";
    throw LambdaOutOfRange(os.str());
  }
  return sp;
}

namespace {

SecondaryPoint w_point_end(const WPoint& w) {
  SecondaryPoint sp;
  sp.eps0 = w.eps0;
  sp.eps_bar = w.eps0;
  sp.d0 = w.d_minus();
  sp.lambda = 1.0;
  sp.x0 = w.eps0;
  sp.y0 = w.eps_minus;
  return sp;
}

std::optional<SecondaryPoint> try_solve(double eps0, const MaterialParams& p,
                                        std::optional<std::pair<double, double>> seed) {
  try {
    return solve_secondary(eps0, p, seed);
  } catch (const NumericalError&) {
    return std::nullopt;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

} // namespace

SecondaryCurve secondary_curve(const MaterialParams& p, std::size_t n_samples) {
  require_solid(p, "secondary_curve");
  if (n_samples < 2) throw std::invalid_argument("secondary_curve: need at least two samples");
  const WPoint w = w_point(p);
  const auto [lo, hi] = secondary_eps0_range(p);
  const double step = (hi - lo) / static_cast<double>(n_samples - 1);
  const double floor_eps0 = jump_domain_lower_bound(p);

  SecondaryCurve curve;
  curve.full.push_back(w_point_end(w));

  // Grid points lo + k step strictly below the W-point, walking downwards.
  long k = static_cast<long>(std::floor((w.eps0 - 0.25 * step - lo) / step));
  int failures = 0;
  bool first = true;
  while (failures < 2) {
    const double e = lo + static_cast<double>(k) * step;
    --k;
    if (!(e > floor_eps0)) break;

    std::optional<SecondaryPoint> sp;
    if (first) {
      // The nontrivial branch leaves the W-point endpoint; fall back to the asymptotic seed.
      const SecondaryPoint& endp = curve.full.front();
      sp = try_solve(e, p, std::make_pair(endp.eps_bar, endp.d0));
      if (!sp) sp = try_solve(e, p, std::nullopt);
    } else {
      const std::size_t n = curve.full.size();
      const SecondaryPoint& a = curve.full[n - 1];
      std::pair<double, double> seed{a.eps_bar, a.d0};
      if (n >= 3) {
        // Secant extrapolation; the exact endpoint is skipped since the branch is steep there.
        const SecondaryPoint& b = curve.full[n - 2];
        const double t = (e - a.eps0) / (a.eps0 - b.eps0);
        seed = {a.eps_bar + t * (a.eps_bar - b.eps_bar), a.d0 + t * (a.d0 - b.d0)};
      }
      sp = try_solve(e, p, seed);
      if (!sp && n >= 3) sp = try_solve(e, p, std::make_pair(a.eps_bar, a.d0));
    }

    if (sp) {
      curve.full.push_back(*sp);
      failures = 0;
      first = false;
    } else if (!first) {
      ++failures;
    } else if (e < lo) {
      break;
    }
  }
  curve.far_end_eps0 = curve.full.back().eps0;

  // Bisector crossing: first sign change of x0 - y0 walking away from the W-point.
  std::size_t cut = curve.full.size();
  for (std::size_t i = 0; i + 1 < curve.full.size(); ++i) {
    const SecondaryPoint& a = curve.full[i];
    const SecondaryPoint& b = curve.full[i + 1];
    if ((a.x0 - a.y0) > 0.0 && (b.x0 - b.y0) <= 0.0) {
      auto seed_at = [&](double e) {
        const double t = (e - a.eps0) / (b.eps0 - a.eps0);
        return std::make_pair(a.eps_bar + t * (b.eps_bar - a.eps_bar), a.d0 + t * (b.d0 - a.d0));
      };
      auto gap = [&](double e) {
        const SecondaryPoint s = solve_secondary(e, p, seed_at(e));
        return s.x0 - s.y0;
      };
      const double e_cross = (b.x0 == b.y0)
                                 ? b.eps0
                                 : numerics::find_root(gap, {b.eps0, a.eps0}, {1e-14, 1e-13, 200});
      curve.bisector = solve_secondary(e_cross, p, seed_at(e_cross));
      cut = i + 1;
      break;
    }
  }
  curve.branch.assign(curve.full.begin(), curve.full.begin() + static_cast<long>(cut));
  if (curve.bisector) curve.branch.push_back(*curve.bisector);
  curve.mirror.reserve(curve.branch.size());
  for (const SecondaryPoint& sp : curve.branch) curve.mirror.push_back(sp.strain().swapped());
  return curve;
}

} // namespace hadamard
