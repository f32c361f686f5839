#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hadamard/jumpset.hpp"
#include "hadamard/material.hpp"
#include "hadamard/numerics.hpp"

namespace hadamard {

/// One sample of the transformed profile, x = 1/r^2 and v = eta/r.
struct ProfileSample {
  double x;
  double v;
  double v_prime;

  [[nodiscard]] double r() const;
  [[nodiscard]] double eta() const;
  /// eta'(r) = v - 2 x v'.
  [[nodiscard]] double eta_prime() const { return v - 2.0 * x * v_prime; }
  /// det of the gradient at radius r, d = eta' eta / r.
  [[nodiscard]] double det() const { return v * eta_prime(); }
};

/**
 * \brief Circular-nucleus equilibrium profile.
 *
 * Samples are ascending in x over [0, 1]: a uniform grid plus a tail cluster at
 * x = 1/r^2 for r in [20, 100]. The profile starts from the W-point at x = 1
 * and eps_inf = v(0) is the far-field strain.
 */
struct NucleusSolution {
  std::vector<ProfileSample> samples;
  double eps_inf = 0.0;
  WPoint w_point;
  double mu = 0.0;
};

struct NucleusOptions {
  std::size_t uniform_samples = 1001;
  std::size_t tail_samples = 161;
  double tail_r_min = 20.0;
  double tail_r_max = 100.0;
  numerics::Tolerance tol{1e-13, 1e-12, 0};
};

/// v'' of the transformed equation; NaN once mu + v^2 h''(v^2 - 2 x v v') <= 0.
double nucleus_rhs(double x, double v, double v_prime, const MaterialParams& p);

/**
 * Integrates v'' = -(v')^2 v h''(a) / (mu + v^2 h''(a)), a = v^2 - 2 x v v',
 * from v(1) = eps0^W, v'(1) = (eps0^W - eps-^W)/2 down to x = 0.
 *
 * Throws NoWPoint when no W-point exists and StepUnderflow when the profile
 * loses ellipticity.
 */
NucleusSolution solve_nucleus(const MaterialParams& p, const NucleusOptions& opts = {});

/// sqrt(d1) + mu / (2 h''(d1) sqrt(d1)) ln(sqrt(d2)/sqrt(d1)).
double eps_inf_asymptotic(const MaterialParams& p);

/// First-order correction eta~(r) and its derivative, so that eta = eta0 + mu eta~.
std::pair<double, double> eta_correction(double r, const MaterialParams& p);

/// eta(r) and eta'(r) to first order in mu. Throws DomainError for r < 1.
std::pair<double, double> eta_profile_asymptotic(double r, const MaterialParams& p);

/**
 * lim_{r -> inf} r (eta(r) - eps_inf r), equal to v'(0).
 *
 * Least-squares fit of (v - eps_inf)/x = L + M x + N x^2 over the samples with
 * r in [20, 100]; returns L. Throws TailTooShort with fewer than 8 such samples.
 */
double nondegeneracy(const MaterialParams& p, const NucleusSolution& sol);

struct BinodalCurves {
  /// (eta/r, eta') from r = 1 (the W-point partner) out to (eps_inf, eps_inf).
  std::vector<DiagonalStrain> first;
  /// The same points with the coordinates swapped.
  std::vector<DiagonalStrain> second;
};

BinodalCurves binodal_curves(const MaterialParams& p, const NucleusSolution& sol);

struct HydroQWPoint {
  double r;
  double eps;  ///< eta(R)/R
  double qw;
  double w;    ///< W(eps I)
  double d;    ///< eta'(R) eta(R) / R
};

/// Quasiconvex envelope on hydrostatic strains, ascending in eps.
struct HydroQWCurve {
  std::vector<HydroQWPoint> points;
};

/// QW(eps I) = (mu - h'(d)) d - mu eta'^2/2 + (h'(d) + mu/2) eps^2 + h(d), eps = eta/R, d = eta' eps.
double qw_formula(double eps, double eta_prime, const MaterialParams& p);

/// QW along the profile samples with x > 0, so eps covers (eps_inf, eps0^W].
HydroQWCurve qw_hydrostatic(const MaterialParams& p, const NucleusSolution& sol);

/// QW on the asymptotic profile at x = k/n, k = 1..n, i.e. R = sqrt(n/k).
HydroQWCurve qw_hydrostatic_asymptotic(const MaterialParams& p, std::size_t n_samples);

} // namespace hadamard
