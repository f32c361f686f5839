#pragma once

#include <array>
#include <cmath>
#include <utility>

namespace hadamard {

/**
 * \brief Parameters of the two-dimensional Hadamard energy
 *
 *   W(F) = mu/2 |F|^2 + h(det F),   h(d) = (d - d1)^2 (d - d2)^2.
 *
 * mu = 0 is the liquid limit. Construction validates d2 > d1 > 0 and mu >= 0.
 */
struct MaterialParams {
  double mu = 0.0;
  double d1 = 1.0;
  double d2 = 3.0;

  MaterialParams() = default;
  MaterialParams(double mu_, double d1_, double d2_);

  [[nodiscard]] MaterialParams with_mu(double new_mu) const { return {new_mu, d1, d2}; }
};

using Vec2 = std::array<double, 2>;

/// Row-major 2x2 matrix value type.
struct Matrix2 {
  std::array<double, 4> a{0.0, 0.0, 0.0, 0.0};

  constexpr Matrix2() = default;
  constexpr Matrix2(double a11, double a12, double a21, double a22) : a{a11, a12, a21, a22} {}

  static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Matrix2 diag(double x, double y) { return {x, 0.0, 0.0, y}; }
  /// Rank-one product a (x) n.
  static constexpr Matrix2 outer(const Vec2& u, const Vec2& n) {
    return {u[0] * n[0], u[0] * n[1], u[1] * n[0], u[1] * n[1]};
  }
  static Matrix2 rotation(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c, -s, s, c};
  }

  constexpr double operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }
  constexpr double& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }

  [[nodiscard]] constexpr double det() const { return a[0] * a[3] - a[1] * a[2]; }
  [[nodiscard]] constexpr double trace() const { return a[0] + a[3]; }
  [[nodiscard]] constexpr Matrix2 transpose() const { return {a[0], a[2], a[1], a[3]}; }
  /// cof F, satisfying d(det F)/dF = cof F in two dimensions.
  [[nodiscard]] constexpr Matrix2 cofactor() const { return {a[3], -a[2], -a[1], a[0]}; }
  [[nodiscard]] constexpr double norm2() const {
    return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
  }
  [[nodiscard]] double norm() const { return std::sqrt(norm2()); }

  constexpr Matrix2& operator+=(const Matrix2& o) {
    for (std::size_t k = 0; k < 4; ++k) a[k] += o.a[k];
    return *this;
  }
  constexpr Matrix2& operator-=(const Matrix2& o) {
    for (std::size_t k = 0; k < 4; ++k) a[k] -= o.a[k];
    return *this;
  }
  constexpr Matrix2& operator*=(double s) {
    for (auto& v : a) v *= s;
    return *this;
  }

  friend constexpr Matrix2 operator+(Matrix2 l, const Matrix2& r) { return l += r; }
  friend constexpr Matrix2 operator-(Matrix2 l, const Matrix2& r) { return l -= r; }
  friend constexpr Matrix2 operator-(Matrix2 m) { return m *= -1.0; }
  friend constexpr Matrix2 operator*(Matrix2 m, double s) { return m *= s; }
  friend constexpr Matrix2 operator*(double s, Matrix2 m) { return m *= s; }
  friend constexpr Matrix2 operator*(const Matrix2& l, const Matrix2& r) {
    return {l.a[0] * r.a[0] + l.a[1] * r.a[2], l.a[0] * r.a[1] + l.a[1] * r.a[3],
            l.a[2] * r.a[0] + l.a[3] * r.a[2], l.a[2] * r.a[1] + l.a[3] * r.a[3]};
  }
  friend constexpr Vec2 operator*(const Matrix2& m, const Vec2& v) {
    return {m.a[0] * v[0] + m.a[1] * v[1], m.a[2] * v[0] + m.a[3] * v[1]};
  }
  friend constexpr bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Frobenius inner product <A, B>.
constexpr double inner(const Matrix2& l, const Matrix2& r) {
  return l.a[0] * r.a[0] + l.a[1] * r.a[1] + l.a[2] * r.a[2] + l.a[3] * r.a[3];
}

/// Principal stretches in the shared diagonal frame; the (eps1, eps2) plane of the figures.
struct DiagonalStrain {
  double eps1 = 1.0;
  double eps2 = 1.0;

  [[nodiscard]] constexpr Matrix2 matrix() const { return Matrix2::diag(eps1, eps2); }
  [[nodiscard]] constexpr double det() const { return eps1 * eps2; }
  [[nodiscard]] constexpr DiagonalStrain swapped() const { return {eps2, eps1}; }
};

/**
 * The quartic well h(d) = (d-d1)^2 (d-d2)^2 and its derivatives as plain
 * polynomials, defined on the whole real line. Internal formulas that only
 * ever evaluate h at squares or at interior points use these directly; the
 * free functions below add the d > 0 precondition.
 */
struct DoubleWell {
  double d1;
  double d2;

  explicit DoubleWell(const MaterialParams& p) : d1(p.d1), d2(p.d2) {}
  DoubleWell(double d1_, double d2_) : d1(d1_), d2(d2_) {}

  [[nodiscard]] double value(double d) const {
    const double q = (d - d1) * (d - d2);
    return q * q;
  }
  [[nodiscard]] double prime(double d) const {
    return 2.0 * (d - d1) * (d - d2) * (2.0 * d - d1 - d2);
  }
  [[nodiscard]] double second(double d) const {
    const double s = 2.0 * d - d1 - d2;
    return 2.0 * s * s + 4.0 * (d - d1) * (d - d2);
  }
  [[nodiscard]] double third(double d) const { return 12.0 * (2.0 * d - d1 - d2); }
};

double h_value(double d, const MaterialParams& p);
double h_prime(double d, const MaterialParams& p);
double h_second(double d, const MaterialParams& p);

/// W(F) = mu |F|^2 / 2 + h(det F). Requires det F > 0.
double energy(const Matrix2& F, const MaterialParams& p);

/// First Piola stress P = mu F + h'(det F) cof F.
Matrix2 piola(const Matrix2& F, const MaterialParams& p);

/// Eshelby tensor W(F) I - F^T P(F).
Matrix2 eshelby(const Matrix2& F, const MaterialParams& p);

/// Weierstrass excess W(F+H) - W(F) - <P(F), H>. Requires det F > 0 and det(F+H) > 0.
double excess(const Matrix2& F, const Matrix2& H, const MaterialParams& p);

/// Interval on which h differs from its convex hull. For the equal-depth
/// quartic the common tangent is h = 0, so this is exactly (d1, d2).
std::pair<double, double> h_convexification_interval(const MaterialParams& p);

/// Hydrostatic energy W(eps I) = mu eps^2 + h(eps^2).
double hydrostatic_energy(double eps, const MaterialParams& p);

} // namespace hadamard
