#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hadamard::testing {

namespace {

double norm(const Vec2& v) { return std::hypot(v[0], v[1]); }

} // namespace

double JumpResiduals::max() const { return std::max({traction, cotraction, std::abs(maxwell)}); }

JumpResiduals verify_jump(const JumpPair& jp, const MaterialParams& p) {
  const Matrix2 Fp = Matrix2::diag(jp.eps_plus, jp.eps0);
  const Matrix2 Fm = Matrix2::diag(jp.eps_minus, jp.eps0);
  const Matrix2 Pp = piola(Fp, p);
  const Matrix2 Pm = piola(Fm, p);
  const Matrix2 jP = Pp - Pm;
  const Matrix2 jF = Fp - Fm;
  const Vec2 n{1.0, 0.0};
  const Vec2 a{jp.eps_plus - jp.eps_minus, 0.0};
  JumpResiduals r;
  r.traction = norm(jP * n);
  r.cotraction = norm(jP.transpose() * a);
  r.maxwell = energy(Fp, p) - energy(Fm, p) - inner(0.5 * (Pp + Pm), jF);
  return r;
}

double SecondaryResiduals::max() const {
  return std::max({inner_traction, traction, cotraction, std::abs(maxwell), lambda_excess});
}

SecondaryResiduals verify_secondary(const SecondaryPoint& s, const MaterialParams& p) {
  const JumpPair jp = jump_pair(s.eps0, p);
  const double lam = (s.eps_bar - jp.eps_minus) / (jp.eps_plus - jp.eps_minus);
  const Matrix2 Fp = Matrix2::diag(jp.eps_plus, jp.eps0);
  const Matrix2 Fm = Matrix2::diag(jp.eps_minus, jp.eps0);
  const Matrix2 Fbar = lam * Fp + (1.0 - lam) * Fm;
  const Matrix2 F0 = Matrix2::diag(s.x0, s.y0);
  const Matrix2 Pp = piola(Fp, p), Pm = piola(Fm, p), P0 = piola(F0, p);
  const Matrix2 Pavg = lam * Pp + (1.0 - lam) * Pm;
  const double Wavg = lam * energy(Fp, p) + (1.0 - lam) * energy(Fm, p);
  const Matrix2 jump = F0 - Fbar;
  const Vec2 e1{1.0, 0.0}, e2{0.0, 1.0};

  SecondaryResiduals r;
  r.inner_traction = norm((Pp - Pm) * e1);
  r.traction = norm((P0 - Pavg) * e2);
  r.cotraction = norm((P0 - Pavg).transpose() * (jump * e2));
  r.maxwell = energy(F0, p) - Wavg - inner(Pavg, jump);
  r.lambda_excess = std::max({0.0, -s.lambda, s.lambda - 1.0});
  return r;
}

std::vector<ProfileSample> uniform_part(const NucleusSolution& sol, double h) {
  std::vector<ProfileSample> out;
  for (const ProfileSample& s : sol.samples) {
    const double k = s.x / h;
    if (std::abs(k - std::round(k)) < 1e-9) out.push_back(s);
  }
  return out;
}

OdeResidual ode_fd_residual(const NucleusSolution& sol, const MaterialParams& p) {
  const std::vector<ProfileSample> u = uniform_part(sol, 1e-3);
  if (u.size() < 5) throw std::invalid_argument("ode_fd_residual: uniform grid too short");
  OdeResidual r;
  for (std::size_t i = 2; i + 2 < u.size(); ++i) {
    const double h = u[i + 1].x - u[i].x;
    auto d1 = [&](auto get) {
      return (-get(u[i + 2]) + 8.0 * get(u[i + 1]) - 8.0 * get(u[i - 1]) + get(u[i - 2])) / (12.0 * h);
    };
    const double vpp = d1([](const ProfileSample& s) { return s.v_prime; });
    const double vp = d1([](const ProfileSample& s) { return s.v; });
    r.equation = std::max(r.equation, std::abs(vpp - nucleus_rhs(u[i].x, u[i].v, u[i].v_prime, p)));
    r.derivative = std::max(r.derivative, std::abs(vp - u[i].v_prime));
  }
  return r;
}

double binodal_eps2_at(const NucleusSolution& sol, double eps1) {
  const auto& s = sol.samples;  // v ascending with x
  if (eps1 < s.front().v || eps1 > s.back().v) throw std::out_of_range("binodal_eps2_at: outside curve");
  const auto it = std::lower_bound(s.begin(), s.end(), eps1,
                                   [](const ProfileSample& a, double v) { return a.v < v; });
  if (it == s.begin()) return it->eta_prime();
  const auto prev = it - 1;
  const double t = (eps1 - prev->v) / (it->v - prev->v);
  return prev->eta_prime() + t * (it->eta_prime() - prev->eta_prime());
}

} // namespace hadamard::testing
