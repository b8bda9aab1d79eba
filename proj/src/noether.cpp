#include "barutkit/noether.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "barutkit/quadrature.hpp"
#include "barutkit/spinors.hpp"

namespace barutkit {

namespace {

const GammaSet& euclid() {
  static const GammaSet gs = build_gammas(Representation::Chiral, Metric::Euclidean);
  return gs;
}

const SigmaTensor& euclid_sigma() {
  static const SigmaTensor s = sigma_tensor(euclid());
  return s;
}

size_t raw(int mu) { return mu == 4 ? 0 : static_cast<size_t>(mu); }  // Euclid index -> GammaSet slot

const Mat4& gamma_e(int mu) { return euclid().g[raw(mu)]; }
const Mat4& sigma_e(int mu, int nu) { return euclid_sigma()[raw(mu)][raw(nu)]; }

}  // namespace

void validate_modeset(const ModeSet& ms) {
  if (ms.L <= 0.0) throw std::domain_error("ModeSet: box length must be positive");
  if (ms.m <= 0.0) throw std::domain_error("ModeSet: mass must be positive");
  std::set<std::pair<std::array<int, 3>, int>> seen;
  for (const auto& mode : ms.modes) {
    if (std::abs(std::abs(mode.h) - 0.5) > 1e-12)
      throw std::domain_error("ModeSet: helicity must be +-1/2");
    auto key = std::make_pair(mode.n, mode.h > 0 ? 1 : -1);
    if (!seen.insert(key).second) throw std::domain_error("ModeSet: duplicate (n, h) mode");
  }
}

Vec3 mode_momentum(const ModeSet& ms, const Mode& mode) {
  return (2.0 * M_PI / ms.L) * Vec3(mode.n[0], mode.n[1], mode.n[2]);
}

double mode_energy(const ModeSet& ms, const Mode& mode) {
  return std::sqrt(mode_momentum(ms, mode).squaredNorm() + ms.m * ms.m);
}

PlaneWaveField build_field(const ModeSet& ms) {
  validate_modeset(ms);
  PlaneWaveField f;
  for (const auto& mode : ms.modes) {
    const Vec3 k = mode_momentum(ms, mode);
    const double e = mode_energy(ms, mode);
    const double w = std::sqrt(ms.m / (ms.L * ms.L * ms.L * e));
    const SpinorState u = build_u_spinor(k, mode.h, 1.0, 0.0, ms.m);
    const SpinorState v = v_from_u(u);

    WaveTerm tu;
    tu.amp = w * mode.a * u.components;
    tu.energy = e;
    tu.k = k;
    tu.sign = +1;
    tu.antiparticle = false;
    tu.lattice = mode.n;
    f.terms.push_back(tu);

    WaveTerm tv;
    tv.amp = w * std::conj(mode.b) * v.components;
    tv.energy = e;
    tv.k = k;
    tv.sign = -1;
    tv.antiparticle = true;
    tv.lattice = mode.n;
    f.terms.push_back(tv);
  }
  return f;
}

cxd euclid_mass_coupling(const LagrangianParams& lp, double m) {
  return -I * (lp.alpha4 - lp.alpha2 * m * m) - lp.alpha2 * m * m;
}

DensitySpec lagrangian_spec(const LagrangianParams& lp, double m) {
  DensitySpec s;
  for (int mu = 1; mu <= 4; ++mu) {
    s.push_back({lp.alpha1, gamma_e(mu), 0, mu, 1});
    s.push_back({-lp.alpha1, gamma_e(mu), mu, 0, 1});
    s.push_back({cxd(lp.alpha2), Mat4::Identity(), mu, mu, 2});
    for (int nu = 1; nu <= 4; ++nu)
      if (nu != mu) s.push_back({cxd(lp.alpha3), sigma_e(mu, nu), mu, nu, 3});
  }
  s.push_back({-euclid_mass_coupling(lp, m), Mat4::Identity(), 0, 0, 4});
  return s;
}

DensitySpec stress_spec(const LagrangianParams& lp, double m, int mu, int nu) {
  DensitySpec s;
  s.push_back({-lp.alpha1, gamma_e(mu), 0, nu, 1});
  s.push_back({lp.alpha1, gamma_e(mu), nu, 0, 1});
  s.push_back({cxd(-lp.alpha2), Mat4::Identity(), mu, nu, 2});
  s.push_back({cxd(-lp.alpha2), Mat4::Identity(), nu, mu, 2});
  for (int al = 1; al <= 4; ++al) {
    if (al != mu) {
      s.push_back({cxd(-lp.alpha3), sigma_e(al, mu), al, nu, 3});
      s.push_back({cxd(-lp.alpha3), sigma_e(mu, al), nu, al, 3});
    }
  }
  if (mu == nu)
    for (const auto& b : lagrangian_spec(lp, m)) s.push_back(b);
  return s;
}

DensitySpec current_spec(const LagrangianParams& lp, int mu) {
  DensitySpec s;
  s.push_back({-2.0 * I * lp.alpha1, gamma_e(mu), 0, 0, 1});
  s.push_back({-I * lp.alpha2, Mat4::Identity(), mu, 0, 2});
  s.push_back({I * lp.alpha2, Mat4::Identity(), 0, mu, 2});
  for (int al = 1; al <= 4; ++al) {
    if (al == mu) continue;
    s.push_back({-I * lp.alpha3, sigma_e(al, mu), al, 0, 3});
    s.push_back({I * lp.alpha3, sigma_e(mu, al), 0, al, 3});
  }
  return s;
}

DensitySpec charge_density_spec(const LagrangianParams& lp) {
  DensitySpec s = current_spec(lp, 4);
  for (auto& b : s) b.coeff *= -I;
  return s;
}

DensitySpec spin_spec(const LagrangianParams& lp, int mu, int nu, int lambda) {
  const cxd half_i = 0.5 * I;
  const Mat4& smn = sigma_e(mu, nu);
  DensitySpec s;
  s.push_back({-half_i * lp.alpha1, Mat4(gamma_e(lambda) * smn), 0, 0, 1});
  s.push_back({-half_i * lp.alpha1, Mat4(smn * gamma_e(lambda)), 0, 0, 1});
  s.push_back({-half_i * lp.alpha2, smn, lambda, 0, 2});
  s.push_back({half_i * lp.alpha2, smn, 0, lambda, 2});
  for (int al = 1; al <= 4; ++al) {
    if (al != lambda) {
      s.push_back({-half_i * lp.alpha3, Mat4(sigma_e(al, lambda) * smn), al, 0, 3});
      s.push_back({half_i * lp.alpha3, Mat4(smn * sigma_e(lambda, al)), 0, al, 3});
    }
  }
  return s;
}

InvariantReport invariants(const LagrangianParams& lp, const ModeSet& ms, double t) {
  const PlaneWaveField f = build_field(ms);
  InvariantReport r;
  r.t = t;

  const auto h_parts = box_integral_by_coupling(f, stress_spec(lp, ms.m, 4, 4), ms.L, t);
  r.H.alpha1 = -h_parts[1].total();
  r.H.alpha2 = -h_parts[2].total();
  r.H.alpha3 = -h_parts[3].total();
  r.H.mass = -h_parts[4].total();
  r.H_normal = -(h_parts[1].normal_ordered() + h_parts[2].normal_ordered() +
                 h_parts[3].normal_ordered() + h_parts[4].normal_ordered());

  const auto q_parts = box_integral_by_coupling(f, charge_density_spec(lp), ms.L, t);
  r.Q.alpha1 = q_parts[1].total();
  r.Q.alpha2 = q_parts[2].total();
  r.Q.alpha3 = q_parts[3].total();
  r.Q.mass = q_parts[4].total();
  r.Q_normal = q_parts[1].normal_ordered() + q_parts[2].normal_ordered() +
               q_parts[3].normal_ordered() + q_parts[4].normal_ordered();

  const DensitySpec q_spec = charge_density_spec(lp);
  for (const Vec3& x : {Vec3(0, 0, 0), Vec3(ms.L / 8, ms.L / 8, ms.L / 8), Vec3(ms.L / 4, 0, 0),
                        Vec3(ms.L / 10, ms.L / 5, 3 * ms.L / 10)})
    r.charge_density_samples.emplace_back(x, density_at(f, q_spec, x, t));
  return r;
}

cxd hamiltonian_quadrature(const LagrangianParams& lp, const ModeSet& ms, double t, int n) {
  return -grid_quadrature(build_field(ms), stress_spec(lp, ms.m, 4, 4), ms.L, t, n);
}

cxd charge_quadrature(const LagrangianParams& lp, const ModeSet& ms, double t, int n) {
  return grid_quadrature(build_field(ms), charge_density_spec(lp), ms.L, t, n);
}

cxd mode_hamiltonian_coefficient(const LagrangianParams& lp, const Vec3& k, double m) {
  const double e2 = k.squaredNorm() + m * m;
  return -(2.0 * e2 / m) * (lp.alpha1 + m * lp.alpha2);
}

cxd alpha3_charge_bilinear(const Vec3& k, double h, double hp, double m) {
  const SpinorState uh = build_u_spinor(k, h, 1.0, 0.0, m);
  const SpinorState up = build_u_spinor(k, hp, 1.0, 0.0, m);
  const Eigen::RowVector4cd ubar = uh.components.adjoint() * gamma_e(4);
  cxd val{0.0, 0.0};
  for (int i = 1; i <= 3; ++i) val += (ubar * sigma_e(i, 4) * up.components)(0) * k[i - 1];
  return val;
}

cxd mode_charge_coefficient(const LagrangianParams& lp, const Vec3& k, double h, double hp, double m) {
  const double e = std::sqrt(k.squaredNorm() + m * m);
  const cxd diag = (std::abs(h - hp) < 1e-12) ? (lp.alpha1 + m * lp.alpha2) : cxd(0.0, 0.0);
  return -(2.0 * e / m) * (diag - I * lp.alpha3 * alpha3_charge_bilinear(k, h, hp, m));
}

double anticommutator_normalization(double box_l, double m, const std::array<int, 3>& np,
                                    const std::array<int, 3>& nk, double h, double hp) {
  if (np != nk || std::abs(h - hp) > 1e-12) return 0.0;
  const double knorm = 2.0 * M_PI / box_l * std::sqrt(double(np[0] * np[0] + np[1] * np[1] + np[2] * np[2]));
  const double e = std::sqrt(knorm * knorm + m * m);
  return box_l * box_l * box_l * m / e;
}

Rank3 spin_tensor_sample(const LagrangianParams& lp, const ModeSet& ms, const Vec3& x, double t) {
  const PlaneWaveField f = build_field(ms);
  Rank3 out;
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu)
      for (int la = 1; la <= 4; ++la)
        out[static_cast<size_t>(mu - 1)][static_cast<size_t>(nu - 1)][static_cast<size_t>(la - 1)] =
            (mu == nu) ? cxd(0.0, 0.0) : density_at(f, spin_spec(lp, mu, nu, la), x, t);
  return out;
}

cxd lagrangian_density_at(const LagrangianParams& lp, double m, const PlaneWaveField& f, const Vec3& x,
                          double t) {
  return density_at(f, lagrangian_spec(lp, m), x, t);
}

double euler_lagrange_residual(const LagrangianParams& lp, const PlaneWaveField& f) {
  return f.minkowski_residual(field_equation_pair(lp).psi_op);
}

PolyOperator el_variation_operator(const LagrangianParams& lp) {
  // Minkowski term list {coeff, Gamma, derivs on PsiBar, derivs on Psi};
  // generic rule: each term contributes (-1)^{#left} coeff Gamma d_{left+right}.
  struct Term {
    cxd coeff;
    Mat4 gamma;
    std::vector<int> dl, dr;
  };
  const GammaSet gs = build_gammas(Representation::Chiral, Metric::Minkowski);
  const SigmaTensor sig = sigma_tensor(gs);
  const double gdiag[4] = {1.0, -1.0, -1.0, -1.0};

  std::vector<Term> lagr;
  for (int mu = 0; mu < 4; ++mu) {
    lagr.push_back({lp.alpha1, gs.g[static_cast<size_t>(mu)], {}, {mu}});
    lagr.push_back({-lp.alpha1, gs.g[static_cast<size_t>(mu)], {mu}, {}});
    lagr.push_back({lp.alpha2 * gdiag[mu], Mat4::Identity(), {mu}, {mu}});
    for (int nu = 0; nu < 4; ++nu)
      if (nu != mu) lagr.push_back({cxd(lp.alpha3), sig[static_cast<size_t>(mu)][static_cast<size_t>(nu)], {mu}, {nu}});
  }
  lagr.push_back({-lp.alpha4, Mat4::Identity(), {}, {}});

  PolyOperator op;
  for (const auto& t : lagr) {
    cxd c = t.coeff * (t.dl.size() % 2 == 1 ? -1.0 : 1.0);
    PolyOperator::Key key{0, 0, 0, 0};
    for (int idx : t.dl) {
      c *= -I * gdiag[idx];  // d_mu -> -i p_mu = -i g_mumu p^mu on e^{-ipx}
      ++key[static_cast<size_t>(idx)];
    }
    for (int idx : t.dr) {
      c *= -I * gdiag[idx];
      ++key[static_cast<size_t>(idx)];
    }
    op.add_term(key, Mat4(c * t.gamma));
  }
  return op;
}

}  // namespace barutkit
