#include "hadamard/material.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hadamard/errors.hpp"

namespace hadamard {

MaterialParams::MaterialParams(double mu_, double d1_, double d2_) : mu(mu_), d1(d1_), d2(d2_) {
  if (!(std::isfinite(mu) && std::isfinite(d1) && std::isfinite(d2))) {
    throw std::invalid_argument("material parameters must be finite");
  }
  if (!(d1 > 0.0) || !(d2 > d1)) {
    std::ostringstream os;
    os << "material parameters require d2 > d1 > 0 (got d1=" << d1 << ", d2=" << d2 << ")";
    throw std::invalid_argument(os.str());
  }
  if (mu < 0.0) throw std::invalid_argument("shear modulus mu must be nonnegative");
}

namespace {

void require_positive_det(double d, const char* what) {
  if (!(d > 0.0)) {
    std::ostringstream os;
    os << what << ": determinant must be positive (got " << d << ")";
    throw DomainError(os.str());
  }
}

} // namespace

double h_value(double d, const MaterialParams& p) {
  require_positive_det(d, "h_value");
  return DoubleWell(p).value(d);
}

double h_prime(double d, const MaterialParams& p) {
  require_positive_det(d, "h_prime");
  return DoubleWell(p).prime(d);
}

double h_second(double d, const MaterialParams& p) {
  require_positive_det(d, "h_second");
  return DoubleWell(p).second(d);
}

double energy(const Matrix2& F, const MaterialParams& p) {
  const double d = F.det();
  require_positive_det(d, "energy");
  return 0.5 * p.mu * F.norm2() + DoubleWell(p).value(d);
}

Matrix2 piola(const Matrix2& F, const MaterialParams& p) {
  const double d = F.det();
  require_positive_det(d, "piola");
  return p.mu * F + DoubleWell(p).prime(d) * F.cofactor();
}

Matrix2 eshelby(const Matrix2& F, const MaterialParams& p) {
  return energy(F, p) * Matrix2::identity() - F.transpose() * piola(F, p);
}

double excess(const Matrix2& F, const Matrix2& H, const MaterialParams& p) {
  const Matrix2 G = F + H;
  require_positive_det(F.det(), "excess");
  require_positive_det(G.det(), "excess");
  return energy(G, p) - energy(F, p) - inner(piola(F, p), H);
}

std::pair<double, double> h_convexification_interval(const MaterialParams& p) { return {p.d1, p.d2}; }

double hydrostatic_energy(double eps, const MaterialParams& p) {
  return energy(Matrix2::diag(eps, eps), p);
}

} // namespace hadamard
