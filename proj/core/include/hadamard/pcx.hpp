#pragma once

#include "hadamard/jumpset.hpp"
#include "hadamard/material.hpp"
#include "hadamard/verdict.hpp"

namespace hadamard {

struct MStar {
  double value;  ///< m* = mu + 4 min_theta G(theta) / theta^2
  double theta;  ///< minimizing trace of the increment (0 when the removable limit wins)
};

/**
 * Upper bound m* on the multiplier m of det H for polyconvexity at eps I.
 *
 * G(theta) = h((eps + theta/2)^2) - h(eps^2) - eps h'(eps^2) theta is the
 * excess along increments with det H = theta^2/4. The quotient G/theta^2 has a
 * removable singularity at 0 with limit h'(eps^2)/4 + eps^2 h''(eps^2)/2, which
 * is included as a candidate; the scan covers |theta| <= 8 eps + 4 sqrt(d2).
 */
MStar m_star(double eps, const MaterialParams& p);

/**
 * Polyconvexity of W at eps I via the hydrostatic reduction.
 *
 * Let delta_s run over the roots of h'(delta) = m* + mu and
 * B = eps^2 (h'(eps^2) + mu - m*)^2 / (4 mu^2) the admissibility bound.
 *  - every delta_s > B: Polyconvex with m = m*, gap = min delta_s - B;
 *  - otherwise f(delta) = h(delta) - h(eps^2) - h'(delta)(delta - eps^2)
 *    - eps^2 (h'(delta) - h'(eps^2))^2 / (2 mu) is scanned on 2048 points of
 *    [min(d1/4, delta_s/2), delta_s] for the smallest root delta_s. If f < -1e-12
 *    on the whole scan every admissible m fails and the verdict is
 *    NotPolyconvex; the witness is the scan point where f is largest and gap is
 *    that value. Otherwise Indeterminate.
 *
 * Throws DomainError for mu <= 0.
 */
PcxVerdict pcx_classify_hydro(double eps, const MaterialParams& p);

/// The reduced function f(delta) used by pcx_classify_hydro.
double pcx_reduced_f(double delta, double eps, const MaterialParams& p);

/// Small-mu bound sqrt(d1) + mu / (h''(d1) sqrt(d1)) (sqrt(d2)-sqrt(d1)) / (sqrt(d2)+sqrt(d1)).
double pcx_bound_hydro_asymptotic(const MaterialParams& p);

/**
 * Hydrostatic polyconvexity bound located numerically.
 *
 * `polyconvex_up_to` is the largest eps (to `tol`) classified Polyconvex on the
 * first transition above sqrt(d1); `not_polyconvex_from` is where the first
 * NotPolyconvex verdict begins. Any strains strictly between are Indeterminate.
 */
struct HydroPcxBound {
  double polyconvex_up_to;
  double not_polyconvex_from;

  [[nodiscard]] bool has_indeterminate_gap(double tol = 1e-8) const {
    return not_polyconvex_from - polyconvex_up_to > 2.0 * tol;
  }
};

HydroPcxBound pcx_bound_hydro_numeric(const MaterialParams& p, double tol = 1e-8);

/// Unique jump-set multiplier m = <[P], cof [F]> / |[F]|^2, evaluated from the Piola stresses.
double m_jump(const JumpPair& pair, const MaterialParams& p);

} // namespace hadamard
