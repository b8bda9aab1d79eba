#include "barutkit/spinors.hpp"

#include <cmath>

namespace barutkit {

namespace {

int pow_m1(double x) {  // (-1)^x for half-integer-derived integer exponents
  int n = static_cast<int>(std::lround(x));
  return (n % 2 == 0) ? 1 : -1;
}

Mat2 sigma_dot(const Vec3& p) {
  return p.x() * sigma_pauli(1) + p.y() * sigma_pauli(2) + p.z() * sigma_pauli(3);
}

const GammaSet& chiral_gammas() {
  static const GammaSet gs = build_gammas(Representation::Chiral, Metric::Minkowski);
  return gs;
}

Mat4 pslash(double p0, const Vec3& p) {
  const GammaSet& gs = chiral_gammas();
  return p0 * gs.g[0] - p.x() * gs.g[1] - p.y() * gs.g[2] - p.z() * gs.g[3];
}

}  // namespace

double azimuth_of(const Vec3& p) {
  if (std::abs(p.x()) < 1e-300 && std::abs(p.y()) < 1e-300) return 0.0;
  return std::atan2(p.y(), p.x());
}

Vec2 helicity_spinor(const Vec3& p, double h) {
  const double norm = p.norm();
  const double theta = norm > 0.0 ? std::acos(std::clamp(p.z() / norm, -1.0, 1.0)) : 0.0;
  const double az = azimuth_of(p);
  Vec2 s;
  if (h > 0.0)
    s << std::cos(theta / 2), std::exp(I * az) * std::sin(theta / 2);
  else
    s << -std::exp(-I * az) * std::sin(theta / 2), std::cos(theta / 2);
  return s;
}

BoostPair boost_pair(const Vec3& p, double m) {
  if (m <= 0.0) throw std::domain_error("boost_pair: mass must be positive");
  const double pn = p.norm();
  const double e = std::sqrt(pn * pn + m * m);
  const double ch = std::sqrt((e + m) / (2 * m));
  const double sh = pn / std::sqrt(2 * m * (e + m));
  Mat2 sn = pn > 0.0 ? Mat2(sigma_dot(p) / pn) : Mat2(sigma_pauli(3));
  BoostPair b;
  b.lambdaR = ch * Mat2::Identity() + sh * sn;
  b.lambdaL = ch * Mat2::Identity() - sh * sn;
  return b;
}

Vec2 rest_relation(const RestRelationParams& params, double h, const Vec2& phiR0) {
  const WignerPair w = wigner_pair(params.phi);
  const double th_h = h > 0.0 ? params.theta1 : params.theta2;
  const Vec2 conj = phiR0.conjugate();
  const cxd aterm = params.a * static_cast<double>(pow_m1(0.5 - h)) * std::exp(I * (params.theta1 + params.theta2));
  const cxd bterm = params.b * std::exp(2.0 * I * th_h);
  return aterm * (w.theta * conj) + bterm * (w.xi.inverse() * conj);
}

double branch_mass(double a, double b, double m, MassBranch branch) {
  if (a == 0.0) throw std::domain_error("branch_mass: a must be nonzero");
  return branch == MassBranch::Plus ? m * (1.0 + b) / a : m * (1.0 - b) / a;
}

SpinorState build_u_spinor(const Vec3& p, double h, double a, double b, double m, MassBranch branch) {
  if (m <= 0.0) throw std::domain_error("build_u_spinor: mass must be positive");
  const double mbr = branch_mass(a, b, m, branch);
  if (mbr <= 0.0) throw std::domain_error("build_u_spinor: requested branch is massless or tachyonic");

  const double pn = p.norm();
  const double e = std::sqrt(pn * pn + mbr * mbr);
  const double az = azimuth_of(p);

  // The helicity pair of one branch is locked by the b-coupling of the boosted relations;
  // the common null vector is real after pulling out e^{-i h az} per spinor,
  // with a relative sign 2h on the Plus branch.
  double rho = std::sqrt((e + 2 * h * pn) / (2 * mbr));
  double lam = std::sqrt((e - 2 * h * pn) / (2 * mbr));
  double sign = branch == MassBranch::Plus ? 2 * h : 1.0;
  const cxd phase = sign * std::exp(-I * h * az);

  const Vec2 hs = helicity_spinor(p, h);
  SpinorState s;
  s.components.head<2>() = phase * rho * hs;
  s.components.tail<2>() = phase * lam * hs;
  s.energy = e;
  s.momentum = p;
  s.h = h;
  s.kind = Kind::U;
  s.mass = mbr;
  return s;
}

SpinorState v_from_u(const SpinorState& u) {
  SpinorState v = u;
  v.components = charge_conjugation_matrix(Representation::Chiral) * u.components.conjugate();
  v.kind = Kind::V;
  return v;
}

double eq7_residual(const SpinorState& u_h, const SpinorState& u_minus_h, double a, double b, double m) {
  if ((u_h.momentum - u_minus_h.momentum).norm() > 1e-12 * (1.0 + u_h.momentum.norm()) ||
      std::abs(u_h.energy - u_minus_h.energy) > 1e-12 * (1.0 + u_h.energy))
    throw std::domain_error("eq7_residual: spinors must share one momentum");
  if (std::abs(u_h.h + u_minus_h.h) > 1e-12)
    throw std::domain_error("eq7_residual: helicities must be opposite");

  const GammaSet& gs = chiral_gammas();
  const Mat4 c = charge_conjugation_matrix(Representation::Chiral);
  const Mat4 op = (a / m) * pslash(u_h.energy, u_h.momentum) - Mat4::Identity();
  const Vec4 lhs = op * u_h.components +
                   I * b * static_cast<double>(pow_m1(0.5 - u_h.h)) * (gs.g5 * (c * u_minus_h.components.conjugate()));
  return lhs.norm();
}

double eq56_residual(const SpinorState& u_plus, const SpinorState& u_minus, double a, double b, double m) {
  const Vec3 p = u_plus.momentum;
  const double p0 = u_plus.energy;
  const WignerPair w = wigner_pair(azimuth_of(p));
  const Mat2 sp = sigma_dot(p);
  const Mat2 minus = (p0 * Mat2::Identity() - sp) / m;
  const Mat2 plus = (p0 * Mat2::Identity() + sp) / m;

  auto top = [](const SpinorState& s) { return Vec2(s.components.head<2>()); };
  auto bot = [](const SpinorState& s) { return Vec2(s.components.tail<2>()); };

  double worst = 0.0;
  const SpinorState* u[2] = {&u_plus, &u_minus};
  for (int i = 0; i < 2; ++i) {
    const SpinorState& uh = *u[i];
    const SpinorState& um = *u[1 - i];
    const double fac = pow_m1(0.5 + uh.h);
    Vec2 r5 = bot(uh) - (a * minus * top(uh) + b * fac * (w.theta * (w.xi * top(um))));
    Vec2 r6 = top(uh) - (a * plus * bot(uh) + b * fac * (w.theta * (w.xi * bot(um))));
    worst = std::max({worst, r5.norm(), r6.norm()});
  }
  return worst;
}

Eigen::MatrixXcd spinor_system_matrix(const Vec3& p, double p0, double a, double b, double m) {
  const WignerPair w = wigner_pair(azimuth_of(p));
  const Mat2 sp = sigma_dot(p);
  const Mat2 dm = (p0 * Mat2::Identity() - sp) * (a / m);
  const Mat2 dp = (p0 * Mat2::Identity() + sp) * (a / m);
  const Mat2 tx = b * (w.theta * w.xi);
  const Mat2 one = Mat2::Identity();

  // Unknowns stacked as (phiR^+, phiR^-, phiL^+, phiL^-).
  Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(8, 8);
  auto put = [&sys](int r, int c, const Mat2& blk) { sys.block<2, 2>(2 * r, 2 * c) = blk; };
  put(0, 0, dm), put(0, 1, -tx), put(0, 2, -one);              // eq5, h = +1/2
  put(1, 1, dm), put(1, 0, tx), put(1, 3, -one);               // eq5, h = -1/2
  put(2, 2, dp), put(2, 3, -tx), put(2, 0, -one);              // eq6, h = +1/2
  put(3, 3, dp), put(3, 2, tx), put(3, 1, -one);               // eq6, h = -1/2
  return sys;
}

Eigen::MatrixXcd normalization_check(const std::vector<SpinorState>& states) {
  for (size_t i = 1; i < states.size(); ++i)
    if ((states[i].momentum - states[0].momentum).norm() > 1e-12 * (1.0 + states[0].momentum.norm()))
      throw std::domain_error("normalization_check: states must share one momentum");
  const Mat4& g0 = chiral_gammas().g[0];
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXcd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      gram(i, j) = states[static_cast<size_t>(i)].components.adjoint() * g0 *
                   states[static_cast<size_t>(j)].components;
  return gram;
}

}  // namespace barutkit
