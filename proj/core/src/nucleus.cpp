#include "hadamard/nucleus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "hadamard/errors.hpp"

namespace hadamard {

double ProfileSample::r() const { return x > 0.0 ? 1.0 / std::sqrt(x) : HUGE_VAL; }

double ProfileSample::eta() const { return v * r(); }

double nucleus_rhs(double x, double v, double v_prime, const MaterialParams& p) {
  const DoubleWell h(p);
  const double a = v * v - 2.0 * x * v * v_prime;
  const double h2 = h.second(a);
  const double den = p.mu + v * v * h2;
  if (!(den > 0.0) || !std::isfinite(den)) return NAN;
  return -v_prime * v_prime * v * h2 / den;
}

NucleusSolution solve_nucleus(const MaterialParams& p, const NucleusOptions& opts) {
  if (opts.uniform_samples < 2) throw std::invalid_argument("solve_nucleus: need >= 2 uniform samples");
  const WPoint w = w_point(p);

  std::vector<double> xs;
  xs.reserve(opts.uniform_samples + opts.tail_samples);
  const double nu = static_cast<double>(opts.uniform_samples - 1);
  for (std::size_t i = 0; i < opts.uniform_samples; ++i) xs.push_back(static_cast<double>(i) / nu);
  if (opts.tail_samples >= 2) {
    const double dr = (opts.tail_r_max - opts.tail_r_min) / static_cast<double>(opts.tail_samples - 1);
    for (std::size_t i = 0; i < opts.tail_samples; ++i) {
      const double r = opts.tail_r_min + static_cast<double>(i) * dr;
      xs.push_back(1.0 / (r * r));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto rhs = [&p](double x, const numerics::State& y, numerics::State& dy) {
    dy[0] = y[1];
    dy[1] = nucleus_rhs(x, y[0], y[1], p);
  };
  const numerics::State y1{w.eps0, 0.5 * (w.eps0 - w.eps_minus)};
  std::vector<numerics::OdeSample> path;
  try {
    path = numerics::integrate_ode(rhs, 1.0, 0.0, y1, opts.tol, xs);
  } catch (const StepUnderflow& e) {
    std::ostringstream os;
    os << "solve_nucleus: mu + v^2 h'' vanished along the profile (mu=" << p.mu << "): " << e.what();
    throw StepUnderflow(os.str());
  }

  NucleusSolution sol;
  sol.mu = p.mu;
  sol.w_point = w;
  sol.samples.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) sol.samples.push_back({it->x, it->y[0], it->y[1]});
  sol.eps_inf = sol.samples.front().v;
  return sol;
}

double eps_inf_asymptotic(const MaterialParams& p) {
  const double r1 = std::sqrt(p.d1);
  const double h2 = DoubleWell(p).second(p.d1);
  return r1 + p.mu / (2.0 * h2 * r1) * std::log(std::sqrt(p.d2) / r1);
}

std::pair<double, double> eta_correction(double r, const MaterialParams& p) {
  if (!(r >= 1.0)) throw DomainError("eta_correction: requires r >= 1");
  const DoubleWell h(p);
  const double c0 = p.d2 - p.d1;
  const double c1 = 0.5 * std::log(std::sqrt(p.d2));
  const double c2 = -(p.d2 - p.d1) * h.second(p.d1) / (4.0 * p.d2 * h.second(p.d2));
  const double S = std::sqrt(p.d1 * r * r + c0);
  const double dS = p.d1 * r / S;
  const double L = std::log(S / r);
  const double dL = dS / S - 1.0 / r;

  const double A = (c1 * r * r + c2) / S;
  const double dA = 2.0 * c1 * r / S - (c1 * r * r + c2) * dS / (S * S);
  const double B = r * r / (2.0 * S) * L;
  const double dB = (r / S - r * r * dS / (2.0 * S * S)) * L + r * r / (2.0 * S) * dL;
  const double h2 = h.second(p.d1);
  return {(A - B) / h2, (dA - dB) / h2};
}

std::pair<double, double> eta_profile_asymptotic(double r, const MaterialParams& p) {
  if (!(r >= 1.0)) throw DomainError("eta_profile_asymptotic: requires r >= 1");
  const double S = std::sqrt(p.d1 * r * r + p.d2 - p.d1);
  if (p.mu == 0.0) return {S, p.d1 * r / S};
  const auto [t, dt] = eta_correction(r, p);
  return {S + p.mu * t, p.d1 * r / S + p.mu * dt};
}

double nondegeneracy(const MaterialParams& p, const NucleusSolution& sol) {
  (void)p;
  constexpr double r_lo = 20.0, r_hi = 100.0;
  const double x_lo = 1.0 / (r_hi * r_hi) * (1.0 - 1e-12);
  const double x_hi = 1.0 / (r_lo * r_lo) * (1.0 + 1e-12);

  // Normal equations for (v - v0)/x = L + M x + N x^2, with x scaled to O(1).
  const double scale = 1.0 / x_hi;
  std::array<std::array<double, 3>, 3> A{};
  std::array<double, 3> b{};
  std::size_t used = 0;
  for (const ProfileSample& s : sol.samples) {
    if (s.x < x_lo || s.x > x_hi) continue;
    const double q = (s.v - sol.eps_inf) / s.x;
    const double t = s.x * scale;
    const std::array<double, 3> phi{1.0, t, t * t};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) A[i][j] += phi[i] * phi[j];
      b[i] += phi[i] * q;
    }
    ++used;
  }
  if (used < 8) {
    std::ostringstream os;
    os << "nondegeneracy: only " << used << " samples with r in [20, 100]";
    throw TailTooShort(os.str());
  }
  // Gaussian elimination with partial pivoting.
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
    std::swap(A[c], A[piv]);
    std::swap(b[c], b[piv]);
    for (int r = c + 1; r < 3; ++r) {
      const double f = A[r][c] / A[c][c];
      for (int k = c; k < 3; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  std::array<double, 3> coef{};
  for (int c = 2; c >= 0; --c) {
    double s = b[c];
    for (int k = c + 1; k < 3; ++k) s -= A[c][k] * coef[k];
    coef[c] = s / A[c][c];
  }
  return coef[0];
}

BinodalCurves binodal_curves(const MaterialParams& p, const NucleusSolution& sol) {
  (void)p;
  BinodalCurves out;
  out.first.reserve(sol.samples.size());
  out.second.reserve(sol.samples.size());
  for (auto it = sol.samples.rbegin(); it != sol.samples.rend(); ++it) {
    const DiagonalStrain s{it->v, it->eta_prime()};
    out.first.push_back(s);
    out.second.push_back(s.swapped());
  }
  return out;
}

double qw_formula(double eps, double eta_prime, const MaterialParams& p) {
  const DoubleWell h(p);
  const double d = eta_prime * eps;
  const double hp = h.prime(d);
  return (p.mu - hp) * d - 0.5 * p.mu * eta_prime * eta_prime + (hp + 0.5 * p.mu) * eps * eps + h.value(d);
}

namespace {

HydroQWPoint qw_point(double r, double eps, double eta_prime, const MaterialParams& p) {
  return {r, eps, qw_formula(eps, eta_prime, p), p.mu * eps * eps + DoubleWell(p).value(eps * eps),
          eps * eta_prime};
}

void sort_by_eps(HydroQWCurve& c) {
  std::stable_sort(c.points.begin(), c.points.end(),
                   [](const HydroQWPoint& a, const HydroQWPoint& b) { return a.eps < b.eps; });
}

} // namespace

HydroQWCurve qw_hydrostatic(const MaterialParams& p, const NucleusSolution& sol) {
  HydroQWCurve c;
  c.points.reserve(sol.samples.size());
  for (const ProfileSample& s : sol.samples) {
    if (!(s.x > 0.0)) continue;
    c.points.push_back(qw_point(s.r(), s.v, s.eta_prime(), p));
  }
  sort_by_eps(c);
  return c;
}

HydroQWCurve qw_hydrostatic_asymptotic(const MaterialParams& p, std::size_t n_samples) {
  HydroQWCurve c;
  c.points.reserve(n_samples);
  const double n = static_cast<double>(n_samples);
  for (std::size_t k = 1; k <= n_samples; ++k) {
    const double r = std::sqrt(n / static_cast<double>(k));
    const auto [eta, deta] = eta_profile_asymptotic(std::max(r, 1.0), p);
    c.points.push_back(qw_point(r, eta / r, deta, p));
  }
  sort_by_eps(c);
  return c;
}

} // namespace hadamard
