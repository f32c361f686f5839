#include "hadamard/jumpset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hadamard/errors.hpp"
#include "hadamard/numerics.hpp"

namespace hadamard {

double jump_domain_lower_bound(const MaterialParams& p) { return std::sqrt(p.mu) / (p.d2 - p.d1); }

JumpPair jump_pair(double eps0, const MaterialParams& p) {
  if (!(eps0 > 0.0)) throw DomainError("jump_pair: eps0 must be positive");
  const double gap = p.d2 - p.d1;
  double disc = gap * gap - p.mu / (eps0 * eps0);
  if (disc < 0.0) {
    // Rounding at the double-root boundary eps0 = sqrt(mu)/(d2-d1).
    if (disc > -1e-14 * gap * gap) {
      disc = 0.0;
    } else {
      std::ostringstream os;
      os << "jump_pair: eps0=" << eps0 << " is below the jump-set domain bound "
         << jump_domain_lower_bound(p);
      throw OutsideDomain(os.str());
    }
  }
  const double root = std::sqrt(disc);
  JumpPair jp;
  jp.eps0 = eps0;
  jp.eps_plus = (p.d1 + p.d2 + root) / (2.0 * eps0);
  jp.eps_minus = (p.d1 + p.d2 - root) / (2.0 * eps0);
  jp.d_plus = eps0 * jp.eps_plus;
  jp.d_minus = eps0 * jp.eps_minus;
  jp.weierstrass_ok = weierstrass_ok(jp);
  return jp;
}

JumpPair jump_pair_asymptotic(double eps0, const MaterialParams& p) {
  if (!(eps0 > 0.0)) throw DomainError("jump_pair_asymptotic: eps0 must be positive");
  const double corr = p.mu / (4.0 * eps0 * eps0 * eps0 * (p.d2 - p.d1));
  JumpPair jp;
  jp.eps0 = eps0;
  jp.eps_plus = p.d2 / eps0 - corr;
  jp.eps_minus = p.d1 / eps0 + corr;
  jp.d_plus = eps0 * jp.eps_plus;
  jp.d_minus = eps0 * jp.eps_minus;
  jp.weierstrass_ok = weierstrass_ok(jp);
  return jp;
}

std::vector<JumpPair> jump_set_curve(const MaterialParams& p, double eps0_lo, double eps0_hi,
                                     std::size_t n_samples) {
  std::vector<JumpPair> out;
  if (n_samples == 0 || eps0_lo > eps0_hi) return out;
  out.reserve(n_samples);
  if (n_samples == 1) {
    out.push_back(jump_pair(eps0_lo, p));
    return out;
  }
  const double step = (eps0_hi - eps0_lo) / static_cast<double>(n_samples - 1);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double e = (i + 1 == n_samples) ? eps0_hi : eps0_lo + static_cast<double>(i) * step;
    out.push_back(jump_pair(e, p));
  }
  return out;
}

bool weierstrass_ok(const JumpPair& pair) {
  constexpr double slack = 1e-12;
  return pair.eps0 >= pair.eps_plus - slack && pair.eps0 >= pair.eps_minus - slack;
}

CubicMaximum w_point_existence_threshold(const MaterialParams& p) {
  // Critical points of -4 d (d-d1)(d-d2): 3 d^2 - 2 (d1+d2) d + d1 d2 = 0.
  const double s = p.d1 + p.d2;
  const double d = (s + std::sqrt(p.d1 * p.d1 - p.d1 * p.d2 + p.d2 * p.d2)) / 3.0;
  return {-4.0 * d * (d - p.d1) * (d - p.d2), d};
}

WPoint w_point(const MaterialParams& p) {
  const CubicMaximum top = w_point_existence_threshold(p);
  if (!(p.mu < top.mu)) {
    std::ostringstream os;
    os << "w_point: no W-point for mu=" << p.mu << " (existence threshold " << top.mu << ")";
    throw NoWPoint(os.str());
  }
  // -4 d^3 + 4 (d1+d2) d^2 - 4 d1 d2 d - mu = 0; W-point is the largest root.
  const auto roots =
      numerics::real_roots_cubic(-4.0, 4.0 * (p.d1 + p.d2), -4.0 * p.d1 * p.d2, -p.mu);
  const double dW = roots.back().value;
  if (!(dW >= top.d - 1e-9 && dW <= p.d2 + 1e-12)) {
    throw NoWPoint("w_point: cubic has no root in the stable branch");
  }
  WPoint w;
  w.mu = p.mu;
  w.eps0 = std::sqrt(std::min(dW, p.d2));
  w.eps_minus = (p.d1 + p.d2 - w.eps0 * w.eps0) / w.eps0;
  return w;
}

PcxVerdict w_point_pcx_check(const MaterialParams& p) {
  const WPoint w = w_point(p);
  const double a = w.alpha0();
  const double e0 = w.eps0;
  const DoubleWell h(p);
  auto phi = [&](double d) {
    return h.value(d) + p.mu * (d + a * d / (2.0 * e0) - 2.0 * a * std::sqrt(d));
  };
  const numerics::Minimum m = numerics::minimize_bounded(phi, 0.25 * a * a, a * a);
  const double rhs = phi(e0 * e0);

  PcxVerdict v;
  v.m_star = -p.mu * a / (2.0 * e0);
  v.gap = m.value - rhs;
  if (v.gap >= -1e-9) {
    v.status = PcxStatus::Polyconvex;
  } else {
    v.status = PcxStatus::NotPolyconvex;
    v.witness = m.argmin;
  }
  return v;
}

double w_point_pcx_threshold(double d1, double d2, double mu_tol) {
  const MaterialParams base(0.0, d1, d2);
  double lo = 0.0;
  double hi = w_point_existence_threshold(base).mu * (1.0 - 1e-12);
  if (w_point_pcx_check(base.with_mu(hi)).polyconvex()) return hi;
  while (hi - lo > mu_tol) {
    const double mid = 0.5 * (lo + hi);
    if (w_point_pcx_check(base.with_mu(mid)).polyconvex()) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

} // namespace hadamard
