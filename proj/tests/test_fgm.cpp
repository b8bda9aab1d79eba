#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "barutkit/fgm.hpp"
#include "barutkit/noether.hpp"
#include "barutkit/verify.hpp"

using namespace barutkit;

namespace {
Eigen::Matrix4d sample_f() {
  Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
  f(1, 2) = 1.1;
  f(2, 1) = -1.1;   // B_z-like
  f(0, 1) = -0.35;
  f(1, 0) = 0.35;   // E_x-like
  return f;
}
}  // namespace

TEST_CASE("free operator annihilates on-shell plane waves") {
  const SpinorState u = build_u_spinor(Vec3(0.4, -0.3, 0.2), 0.5, 1.0, 0.0, 1.2);
  const PolyWave psi = PolyWave::monomial({0, 0, 0, 0}, u.components, {u.energy, 0.4, -0.3, 0.2});
  CHECK(fgm_apply(EMField::zero(), 1.2, psi).norm() < 1e-13);
}

TEST_CASE("constant A is a momentum shift") {
  const double e = 0.7;
  const Vec4 a0(cxd(0.3), cxd(-0.1), cxd(0.4), cxd(0.2));
  const EMField field = EMField::constant_a(a0, e);

  // Generic (off-shell) wave: the operator value equals the free operator at
  // the shifted momentum q - eA.
  const std::array<double, 4> q{1.7, 0.2, -0.4, 0.9};
  Vec4 w(cxd(0.3, 0.1), cxd(-0.7, 0.2), cxd(0.05, -0.6), cxd(0.4, 0.4));
  const PolyWave psi = PolyWave::monomial({0, 0, 0, 0}, w, q);
  const PolyWave shifted = PolyWave::monomial(
      {0, 0, 0, 0}, w,
      {q[0] - e * a0(0).real(), q[1] - e * a0(1).real(), q[2] - e * a0(2).real(), q[3] - e * a0(3).real()});
  const PolyWave lhs = fgm_apply(field, 1.0, psi);
  PolyWave rhs = fgm_apply(EMField::zero(), 1.0, shifted);
  rhs.p = q;  // same spinor content, compare coefficients
  CHECK((lhs - rhs).norm() < 1e-13);

  // On-shell solution with wave vector p + eA.
  const SpinorState u = build_u_spinor(Vec3(0.25, 0.1, -0.3), 0.5, 1.0, 0.0, 1.0);
  const PolyWave sol = PolyWave::monomial({0, 0, 0, 0}, u.components,
                                          {u.energy + e * a0(0).real(), 0.25 + e * a0(1).real(),
                                           0.1 + e * a0(2).real(), -0.3 + e * a0(3).real()});
  CHECK(fgm_apply(field, 1.0, sol).norm() < 1e-13);
}

TEST_CASE("constant F against a hand expansion") {
  // For A_mu = -1/2 F_{mu nu} x^nu on a plane wave, D^2 psi reduces to
  // sum_mu g^mumu (p_mu + e/2 (Fx)_mu)^2 psi with no extra trace term.
  const Eigen::Matrix4d f = sample_f();
  const double e = 0.6;
  const EMField field = EMField::linear(f, e);
  const std::array<double, 4> q{1.1, -0.3, 0.8, 0.25};
  Vec4 w(cxd(0.2, -0.4), cxd(1.0, 0.0), cxd(0.1, 0.7), cxd(-0.3, 0.2));
  const PolyWave psi = PolyWave::monomial({0, 0, 0, 0}, w, q);

  const double g[4] = {1.0, -1.0, -1.0, -1.0};
  PolyWave want;
  want.p = q;
  for (int mu = 0; mu < 4; ++mu) {
    // (p_mu + e/2 F_{mu nu} x^nu)^2 expanded into monomials, weighted by g^mumu.
    const double pmu = g[mu] * q[mu];
    for (int nu = -1; nu < 4; ++nu)
      for (int rho = -1; rho < 4; ++rho) {
        double coeff = g[mu];
        PolyWave::Key key{0, 0, 0, 0};
        coeff *= (nu < 0) ? pmu : 0.5 * e * f(mu, nu);
        if (nu >= 0) ++key[nu];
        coeff *= (rho < 0) ? pmu : 0.5 * e * f(mu, rho);
        if (rho >= 0) ++key[rho];
        if (coeff != 0.0) want.add(key, Vec4(coeff * w));
      }
  }
  const SigmaTensor sig = sigma_tensor(build_gammas(Representation::Chiral, Metric::Minkowski));
  Mat4 sf = Mat4::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) sf += sig[mu][nu] * f(mu, nu);
  const double m = 0.9;
  want = want - psi.apply(Mat4(0.5 * e * sf)) - (m * m) * psi;

  CHECK((fgm_apply(field, m, psi) - want).norm() < 1e-13);
}

TEST_CASE("squared dirac identity over the full basis") {
  const EMField fields[3] = {EMField::zero(0.8),
                             EMField::constant_a(Vec4(cxd(0.2), cxd(0.5), cxd(-0.1), cxd(0.3)), 0.8),
                             EMField::linear(sample_f(), 0.8)};
  for (const auto& field : fields)
    for (auto rep : {Representation::Chiral, Representation::DiracStandard, Representation::Majorana})
      CHECK(squared_dirac_identity(field, rep) < 1e-12);
}

TEST_CASE("gamma5 structure") {
  for (const auto& field : {EMField::zero(1.0), EMField::linear(sample_f(), 0.5)}) {
    const Gamma5Report rep = gamma5_structure(field, 1.0);
    CHECK(rep.commutant_residual < 1e-13);
  }
  const Gamma5Report free_rep = gamma5_structure(EMField::zero(1.0), 1.0);
  CHECK(free_rep.projected_solution_residual < 1e-12);
}

TEST_CASE("free lagrangian density") {
  PlaneWaveField empty;
  CHECK(std::abs(free_fgm_lagrangian_at(empty, 1.0, Vec3(1, 1, 1), 0.0)) == 0.0);

  ModeSet ms;
  ms.L = 16.0;
  ms.m = 1.1;
  ms.modes = {{{1, -1, 0}, 0.5, cxd(0.9, 0.3), cxd(0.0, 0.0)}};
  const PlaneWaveField f = build_field(ms);
  CHECK(std::abs(free_fgm_lagrangian_at(f, ms.m, Vec3(0.4, 3.0, 0.8), 0.9)) < 1e-13);

  const GammaSet gs = build_gammas(Representation::Chiral, Metric::Minkowski);
  const double mp = 1.6;
  const Vec3 x(0.4, 3.0, 0.8);
  const Vec4 psi = f.eval(x, 0.9);
  const cxd want = (ms.m * ms.m - mp * mp) * (psi.adjoint() * gs.g[0] * psi)(0);
  CHECK(std::abs(free_fgm_lagrangian_at(f, mp, x, 0.9) - want) < 1e-13);
}

TEST_CASE("barut decomposition is an exact identity") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> dis(0.01, 2.0);
  for (int i = 0; i < 200; ++i) {
    const BarutDecomposition d = barut_decomposition({dis(rng), dis(rng)}, dis(rng));
    CHECK(d.residual == 0.0);
    CHECK(d.lambda1 == 1.0);
  }
  // alpha2 = 0: pure Dirac part.
  const BarutDecomposition d0 = barut_decomposition({0.0, 0.7}, 1.3);
  CHECK(d0.lambda2 == 0.0);
  CHECK(d0.kappa_d == -0.7);
  // kappa = 0 formal limit: coefficients still reported, residual still 0.
  const BarutDecomposition dk = barut_decomposition({0.4, 0.0}, 1.3);
  CHECK(dk.residual == 0.0);
  CHECK(dk.lambda2 == -0.4 * 1.3);
}

TEST_CASE("general current and Gordon structure") {
  const SpinorState u = build_u_spinor(Vec3(0.4, -0.1, 0.6), 0.5, 1.0, 0.0, 1.0);

  const auto j = general_current({1.0, 0.0, 0.0}, u, u);
  CHECK(j[0].real() > 0.0);
  CHECK(std::abs(j[0].imag()) < 1e-13);

  const auto j3 = general_current({0.0, 0.0, 1.0}, u, u);
  for (const auto& c : j3) CHECK(std::abs(c) < 1e-14);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dis(-1.0, 1.0);
  for (int i = 0; i < 12; ++i) {
    const Vec3 k(dis(rng), dis(rng), dis(rng)), kp(dis(rng), dis(rng), dis(rng));
    CHECK(gordon_residual(k, kp, 1.0) < 1e-12);

    const SpinorState ui = build_u_spinor(k, 0.5, 1.0, 0.0, 1.0);
    const SpinorState uo = build_u_spinor(kp, -0.5, 1.0, 0.0, 1.0);
    const auto jq = general_current({0.8, 0.5, 0.3}, ui, uo);
    const double q0 = uo.energy - ui.energy;
    const Vec3 qv = uo.momentum - ui.momentum;
    CHECK(std::abs(q0 * jq[0] - qv.x() * jq[1] - qv.y() * jq[2] - qv.z() * jq[3]) < 1e-12);
  }
}

TEST_CASE("free operator on a Barut null mode") {
  const BarutParams bp{1.0, 0.4, 0, 0, 1.0};
  for (const auto& line : second_order_spectrum(bp).lines) {
    const Vec3 k(0.3, 0.2, -0.5);
    const SpinorState u = build_u_spinor(k, 0.5, 1.0, 0.0, line.mass);
    const PolyWave psi = PolyWave::monomial({0, 0, 0, 0}, u.components, {u.energy, 0.3, 0.2, -0.5});
    const double m = 1.0;
    const PolyWave res = fgm_apply(EMField::zero(), m, psi);
    const PolyWave want = cxd(-(m * m - line.mass * line.mass)) * psi;
    CHECK((res - want).norm() < 1e-12);
  }
}

TEST_CASE("verify suite aggregate") {
  for (const auto& r : verify_fgm()) {
    INFO(r.name);
    CHECK(r.pass);
  }
}
