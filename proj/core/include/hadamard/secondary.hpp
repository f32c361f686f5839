#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hadamard/jumpset.hpp"
#include "hadamard/material.hpp"

namespace hadamard {

/**
 * \brief Diagonal nucleation strain F0 = diag(x0, y0) of a rank-two laminate.
 *
 * The inner laminate mixes F± = diag(eps±, eps0) with volume fraction lambda,
 * F_bar = diag(eps_bar, eps0), eps_bar = lambda eps+ + (1 - lambda) eps-, and
 * F0 - F_bar = (y0 - eps0) e2 (x) e2.
 */
struct SecondaryPoint {
  double eps0 = 0.0;
  double eps_bar = 0.0;
  double d0 = 0.0;
  double lambda = 0.0;
  double x0 = 0.0;  ///< = eps_bar
  double y0 = 0.0;  ///< = d0 / eps_bar

  [[nodiscard]] DiagonalStrain strain() const { return {x0, y0}; }
};

/// Traction continuity (F_bar averaged stress against P(F0), normal e2), as
/// left-minus-right of  d0/eps_bar = eps0 + (eps+ eps- - <eps> eps_bar)/eps0 - h'(d0) eps_bar / mu.
double traction_residual(double eps0, double eps_bar, double d0, const MaterialParams& p);

/// Maxwell relation W(F0) - <W> = <<P>, F0 - F_bar>, divided by mu, left minus right.
double maxwell_residual(double eps0, double eps_bar, double d0, const MaterialParams& p);

/// Asymptotic seed window [(d2^2 - (d2-d1)^2)^(1/4), sqrt(d2)].
std::pair<double, double> secondary_eps0_range(const MaterialParams& p);

struct StrainPoint {
  double x0;
  double y0;
};

/// Small-mu limit curve at parameter eps0. Throws OutsideWindow off the seed window.
StrainPoint asymptotic_secondary(double eps0, const MaterialParams& p);

/// The asymptotic curve as a graph y0(x0): inverts the monotone map eps0 -> x0.
/// Throws OutsideWindow when x0 is not covered by the window.
double asymptotic_secondary_y(double x0, const MaterialParams& p);

/**
 * Solves traction and Maxwell for (eps_bar, d0) by damped Newton.
 *
 * The default seed is the asymptotic curve at eps0 (clamped into the window).
 * Throws DomainError for mu <= 0, NoConvergence when Newton fails, and
 * LambdaOutOfRange when the root has lambda outside [0, 1] or has collapsed
 * onto the primary jump set (F0 = F_bar).
 */
SecondaryPoint solve_secondary(double eps0, const MaterialParams& p,
                               std::optional<std::pair<double, double>> seed = std::nullopt);

struct SecondaryCurve {
  /// From the W-point end (lambda = 1) down to the lambda-window boundary.
  std::vector<SecondaryPoint> full;
  /// `full` cut at the bisector x0 = y0; the last entry is the crossing itself.
  std::vector<SecondaryPoint> branch;
  /// Mirror image of `branch` under (x0, y0) -> (y0, x0), as strain points.
  std::vector<DiagonalStrain> mirror;
  /// Exact bisector crossing, the hydrostatic intersection eps I.
  std::optional<SecondaryPoint> bisector;
  /// eps0 of the last converged sample at the far (lambda -> 0) end.
  double far_end_eps0 = 0.0;
};

/// Continuation along eps0 on a uniform grid of `n_samples` across the seed window,
/// extended past the window until two consecutive solves fail.
SecondaryCurve secondary_curve(const MaterialParams& p, std::size_t n_samples = 400);

} // namespace hadamard
