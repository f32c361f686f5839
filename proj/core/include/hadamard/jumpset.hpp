#pragma once

#include <cstddef>
#include <vector>

#include "hadamard/material.hpp"
#include "hadamard/verdict.hpp"

namespace hadamard {

/**
 * \brief A pair F± = diag(eps±, eps0) on the primary jump set.
 *
 * Both matrices share the singular value eps0 along e2; the rank-one
 * connection is (eps+ - eps-) e1 (x) e1 with layer normal e1. By convention
 * eps_plus is the larger root.
 */
struct JumpPair {
  double eps0 = 0.0;
  double eps_plus = 0.0;
  double eps_minus = 0.0;
  double d_plus = 0.0;
  double d_minus = 0.0;
  bool weierstrass_ok = false;

  [[nodiscard]] double jump_eps() const { return eps_plus - eps_minus; }
  [[nodiscard]] double mean_eps() const { return 0.5 * (eps_plus + eps_minus); }
  [[nodiscard]] DiagonalStrain plus() const { return {eps_plus, eps0}; }
  [[nodiscard]] DiagonalStrain minus() const { return {eps_minus, eps0}; }
};

/// W-point: the jump-set point with eps+ = eps0. Coordinates in the strain
/// plane are (eps0, eps-), (eps-, eps0) and the hydrostatic partner (eps0, eps0).
struct WPoint {
  double eps0 = 0.0;
  double eps_minus = 0.0;
  double mu = 0.0;

  [[nodiscard]] double alpha0() const { return eps0 + eps_minus; }
  [[nodiscard]] double d_plus() const { return eps0 * eps0; }
  [[nodiscard]] double d_minus() const { return eps0 * eps_minus; }
};

/// Smallest eps0 for which the jump set is defined: sqrt(mu) / (d2 - d1).
double jump_domain_lower_bound(const MaterialParams& p);

/// Explicit jump-set solution for the quartic well. Throws OutsideDomain when
/// the discriminant (d2-d1)^2 - mu/eps0^2 is negative.
JumpPair jump_pair(double eps0, const MaterialParams& p);

/// First-order small-mu expansion of eps± about the liquid hyperbolas.
JumpPair jump_pair_asymptotic(double eps0, const MaterialParams& p);

/// `n_samples` pairs uniformly spaced in eps0 over [eps0_lo, eps0_hi]. An empty
/// range (eps0_lo > eps0_hi, or n_samples == 0) yields an empty list.
std::vector<JumpPair> jump_set_curve(const MaterialParams& p, double eps0_lo, double eps0_hi,
                                     std::size_t n_samples);

/// The easily checked Weierstrass corollary eps0 >= eps±.
bool weierstrass_ok(const JumpPair& pair);

struct CubicMaximum {
  double mu;  ///< max of -4 d (d - d1)(d - d2) over (d1, d2)
  double d;   ///< where it is attained
};

/// W-points exist exactly for mu below this value.
CubicMaximum w_point_existence_threshold(const MaterialParams& p);

/// Throws NoWPoint when mu is at or above the existence threshold.
WPoint w_point(const MaterialParams& p);

/**
 * Decides polyconvexity of the W-points.
 *
 * With alpha0 = eps0 + eps- the W-points are polyconvex when
 *   phi(d) = h(d) + mu (d + alpha0 d / (2 eps0) - 2 alpha0 sqrt(d))
 * has its minimum over [alpha0^2/4, alpha0^2] at d = eps0^2. The verdict
 * carries the jump-set multiplier m = -mu alpha0 / (2 eps0), the minimizing d
 * as witness when it is not attained at eps0^2, and gap = min - phi(eps0^2).
 */
PcxVerdict w_point_pcx_check(const MaterialParams& p);

/// Largest mu for which the W-points are polyconvex, by bisection on the
/// verdict over (0, existence threshold) to absolute tolerance `mu_tol`.
double w_point_pcx_threshold(double d1, double d2, double mu_tol = 1e-5);

} // namespace hadamard
