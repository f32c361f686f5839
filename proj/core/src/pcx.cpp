#include "hadamard/pcx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hadamard/errors.hpp"
#include "hadamard/numerics.hpp"

namespace hadamard {

namespace {

constexpr int kThetaGrid = 1024;
constexpr int kDeltaGrid = 2048;
constexpr double kThetaExclusion = 1e-6;
constexpr double kNegativeF = -1e-12;

} // namespace

MStar m_star(double eps, const MaterialParams& p) {
  if (!(eps > 0.0)) throw DomainError("m_star: eps must be positive");
  const DoubleWell h(p);
  const double e2 = eps * eps;
  const double h0 = h.value(e2);
  const double h1 = h.prime(e2);
  auto quotient = [&](double t) {
    const double s = eps + 0.5 * t;
    return (h.value(s * s) - h0 - eps * h1 * t) / (t * t);
  };

  const double span = 8.0 * eps + 4.0 * std::sqrt(p.d2);
  const double step = 2.0 * span / (kThetaGrid - 1);
  double best_t = 0.0;
  double best = std::numeric_limits<double>::infinity();
  int best_i = -1;
  for (int i = 0; i < kThetaGrid; ++i) {
    const double t = -span + i * step;
    if (std::abs(t) < kThetaExclusion) continue;
    const double v = quotient(t);
    if (v < best) {
      best = v;
      best_t = t;
      best_i = i;
    }
  }
  // Refine on the neighbouring cells without crossing theta = 0.
  double a = std::max(-span, -span + (best_i - 1) * step);
  double b = std::min(span, -span + (best_i + 1) * step);
  if (best_t < 0.0) b = std::min(b, -kThetaExclusion);
  if (best_t > 0.0) a = std::max(a, kThetaExclusion);
  if (a < b) {
    const numerics::Minimum refined = numerics::minimize_bounded(quotient, a, b, {}, 16);
    if (refined.value < best) {
      best = refined.value;
      best_t = refined.argmin;
    }
  }

  const double limit_at_zero = 0.25 * h1 + 0.5 * e2 * h.second(e2);
  if (limit_at_zero < best) {
    best = limit_at_zero;
    best_t = 0.0;
  }
  return {p.mu + 4.0 * best, best_t};
}

double pcx_reduced_f(double delta, double eps, const MaterialParams& p) {
  const DoubleWell h(p);
  const double e2 = eps * eps;
  const double dh = h.prime(delta) - h.prime(e2);
  return h.value(delta) - h.value(e2) - h.prime(delta) * (delta - e2) - e2 * dh * dh / (2.0 * p.mu);
}

PcxVerdict pcx_classify_hydro(double eps, const MaterialParams& p) {
  if (!(p.mu > 0.0)) {
    throw DomainError("pcx_classify_hydro: requires mu > 0 (the liquid limit divides by mu)");
  }
  if (!(eps > 0.0)) throw DomainError("pcx_classify_hydro: eps must be positive");

  const DoubleWell h(p);
  const double e2 = eps * eps;
  const MStar ms = m_star(eps, p);
  const double target = ms.value + p.mu;

  // h'(delta) = 4 d^3 - 6 s d^2 + 2 (s^2 + 2 P) d - 2 s P with s = d1+d2, P = d1 d2.
  const double s = p.d1 + p.d2;
  const double P = p.d1 * p.d2;
  const auto roots =
      numerics::real_roots_cubic(4.0, -6.0 * s, 2.0 * (s * s + 2.0 * P), -2.0 * s * P - target);
  const double lever = h.prime(e2) + p.mu - ms.value;
  const double bound = e2 * lever * lever / (4.0 * p.mu * p.mu);

  PcxVerdict v;
  v.m_star = ms.value;
  const double smallest = roots.front().value;
  if (smallest > bound) {
    v.status = PcxStatus::Polyconvex;
    v.gap = smallest - bound;
    return v;
  }

  // Smallest critical point is admissible: scan the reduced function below it.
  const double delta_star = smallest;
  const double lo = std::min(0.25 * p.d1, 0.5 * delta_star);
  const double step = (delta_star - lo) / (kDeltaGrid - 1);
  double f_max = -std::numeric_limits<double>::infinity();
  double f_min = std::numeric_limits<double>::infinity();
  double arg_max = delta_star;
  for (int i = 0; i < kDeltaGrid; ++i) {
    const double d = (i == kDeltaGrid - 1) ? delta_star : lo + i * step;
    const double f = pcx_reduced_f(d, eps, p);
    if (f > f_max) {
      f_max = f;
      arg_max = d;
    }
    f_min = std::min(f_min, f);
  }
  v.gap = f_max;
  if (f_max < kNegativeF) {
    v.status = PcxStatus::NotPolyconvex;
    v.witness = arg_max;
  } else {
    v.status = PcxStatus::Indeterminate;
    if (f_min < kNegativeF) v.gap = f_min;
  }
  return v;
}

double pcx_bound_hydro_asymptotic(const MaterialParams& p) {
  const double r1 = std::sqrt(p.d1);
  const double r2 = std::sqrt(p.d2);
  const double h2 = DoubleWell(p).second(p.d1);
  return r1 + p.mu / (h2 * r1) * (r2 - r1) / (r2 + r1);
}

HydroPcxBound pcx_bound_hydro_numeric(const MaterialParams& p, double tol) {
  if (!(p.mu > 0.0)) throw DomainError("pcx_bound_hydro_numeric: requires mu > 0");
  const double lo0 = std::sqrt(p.d1);
  const double hi0 = std::sqrt(p.d2);
  constexpr int kScan = 128;
  const double step = (hi0 - lo0) / kScan;

  auto status_at = [&](double e) { return pcx_classify_hydro(e, p).status; };

  // First grid point above sqrt(d1) that is not Polyconvex.
  int first_bad = -1;
  for (int k = 1; k <= kScan; ++k) {
    if (status_at(lo0 + k * step) != PcxStatus::Polyconvex) {
      first_bad = k;
      break;
    }
  }
  if (first_bad < 0) return {hi0, hi0};

  double a = lo0 + (first_bad - 1) * step;
  double b = lo0 + first_bad * step;
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    if (status_at(m) == PcxStatus::Polyconvex) a = m;
    else b = m;
  }
  const double pcx_end = a;

  // Locate the onset of NotPolyconvex past the Indeterminate stretch, if any.
  double c = b;
  double d = b;
  if (status_at(b) != PcxStatus::NotPolyconvex) {
    int k = first_bad;
    for (; k <= kScan; ++k) {
      if (status_at(lo0 + k * step) == PcxStatus::NotPolyconvex) break;
    }
    if (k > kScan) return {pcx_end, hi0};
    c = std::max(b, lo0 + (k - 1) * step);
    d = lo0 + k * step;
    while (d - c > tol) {
      const double m = 0.5 * (c + d);
      if (status_at(m) == PcxStatus::NotPolyconvex) d = m;
      else c = m;
    }
  }
  return {pcx_end, d};
}

double m_jump(const JumpPair& pair, const MaterialParams& p) {
  const Matrix2 Fp = pair.plus().matrix();
  const Matrix2 Fm = pair.minus().matrix();
  const Matrix2 jF = Fp - Fm;
  const Matrix2 jP = piola(Fp, p) - piola(Fm, p);
  return inner(jP, jF.cofactor()) / jF.norm2();
}

} // namespace hadamard
