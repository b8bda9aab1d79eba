#include "barutkit/fgm.hpp"

#include <cmath>
#include <stdexcept>

namespace barutkit {

namespace {
constexpr double kG[4] = {1.0, -1.0, -1.0, -1.0};
}

EMField EMField::zero(double charge) {
  EMField f;
  f.family = Family::Zero;
  f.e = charge;
  return f;
}

EMField EMField::constant_a(const Vec4& a_upper, double charge) {
  EMField f;
  f.family = Family::ConstantA;
  f.a_upper = a_upper;
  f.e = charge;
  return f;
}

EMField EMField::linear(const Eigen::Matrix4d& f_lower, double charge) {
  if ((f_lower + f_lower.transpose()).cwiseAbs().maxCoeff() > 1e-14)
    throw std::domain_error("EMField::linear: F must be antisymmetric");
  EMField f;
  f.family = Family::LinearA;
  f.f_lower = f_lower;
  f.e = charge;
  return f;
}

PolyWave PolyWave::monomial(const Key& alpha, const Vec4& c, const std::array<double, 4>& p) {
  PolyWave w;
  w.p = p;
  w.coeffs[alpha] = c;
  return w;
}

PolyWave& PolyWave::add(const Key& k, const Vec4& c) {
  auto it = coeffs.find(k);
  if (it == coeffs.end())
    coeffs[k] = c;
  else
    it->second += c;
  return *this;
}

PolyWave PolyWave::operator+(const PolyWave& o) const {
  PolyWave r = *this;
  for (const auto& [k, c] : o.coeffs) r.add(k, c);
  return r;
}

PolyWave PolyWave::operator-(const PolyWave& o) const {
  PolyWave r = *this;
  for (const auto& [k, c] : o.coeffs) r.add(k, Vec4(-c));
  return r;
}

PolyWave operator*(cxd s, const PolyWave& w) {
  PolyWave r = w;
  for (auto& [k, c] : r.coeffs) c *= s;
  return r;
}

PolyWave PolyWave::apply(const Mat4& m) const {
  PolyWave r = *this;
  for (auto& [k, c] : r.coeffs) c = m * c;
  return r;
}

PolyWave PolyWave::mul_x(int nu) const {
  PolyWave r;
  r.p = p;
  for (const auto& [k, c] : coeffs) {
    Key kk = k;
    ++kk[static_cast<size_t>(nu)];
    r.add(kk, c);
  }
  return r;
}

PolyWave PolyWave::i_deriv(int mu) const {
  PolyWave r;
  r.p = p;
  const double p_lower = kG[mu] * p[static_cast<size_t>(mu)];
  for (const auto& [k, c] : coeffs) {
    r.add(k, Vec4(p_lower * c));  // i d_mu e^{-ipx} = p_mu e^{-ipx}
    if (k[static_cast<size_t>(mu)] > 0) {
      Key kk = k;
      --kk[static_cast<size_t>(mu)];
      r.add(kk, Vec4(I * static_cast<double>(k[static_cast<size_t>(mu)]) * c));
    }
  }
  return r;
}

double PolyWave::norm() const {
  double v = 0.0;
  for (const auto& [k, c] : coeffs) v = std::max(v, c.cwiseAbs().maxCoeff());
  return v;
}

PolyWave covariant_d(const EMField& field, int mu, const PolyWave& psi) {
  PolyWave r = psi.i_deriv(mu);
  if (field.family == EMField::Family::ConstantA) {
    const double a_mu = kG[mu] * field.a_upper(mu).real();
    r = r - (field.e * a_mu) * psi;
  } else if (field.family == EMField::Family::LinearA) {
    // A_mu(x) = -1/2 F_{mu nu} x^nu
    for (int nu = 0; nu < 4; ++nu) {
      const double f = field.f_lower(mu, nu);
      if (f != 0.0) r = r + (0.5 * field.e * f) * psi.mul_x(nu);
    }
  }
  return r;
}

PolyWave dirac_squared_apply(const EMField& field, const PolyWave& psi, Representation rep) {
  const GammaSet gs = build_gammas(rep, Metric::Minkowski);
  PolyWave inner;
  inner.p = psi.p;
  for (int nu = 0; nu < 4; ++nu) inner = inner + covariant_d(field, nu, psi).apply(gs.g[static_cast<size_t>(nu)]);
  PolyWave outer;
  outer.p = psi.p;
  for (int mu = 0; mu < 4; ++mu) outer = outer + covariant_d(field, mu, inner).apply(gs.g[static_cast<size_t>(mu)]);
  return outer;
}

PolyWave fgm_apply(const EMField& field, double m, const PolyWave& psi, Representation rep) {
  PolyWave r;
  r.p = psi.p;
  for (int mu = 0; mu < 4; ++mu) r = r + kG[mu] * covariant_d(field, mu, covariant_d(field, mu, psi));
  const SigmaTensor sig = sigma_tensor(build_gammas(rep, Metric::Minkowski));
  Mat4 sf = Mat4::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      sf += sig[static_cast<size_t>(mu)][static_cast<size_t>(nu)] * field.f_lower(mu, nu);
  r = r - psi.apply(Mat4(0.5 * field.e * sf)) - (m * m) * psi;
  return r;
}

namespace {

std::vector<PolyWave::Key> basis_monomials() {
  std::vector<PolyWave::Key> keys;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          if (a + b + c + d <= 2) keys.push_back({a, b, c, d});
  return keys;
}

const std::vector<std::array<double, 4>>& basis_momenta() {
  static const std::vector<std::array<double, 4>> ps = {
      {0.0, 0.0, 0.0, 0.0}, {1.3, 0.2, -0.7, 0.4}, {0.9, -1.1, 0.5, 2.0}};
  return ps;
}

}  // namespace

double squared_dirac_identity(const EMField& field, Representation rep) {
  double worst = 0.0;
  for (const auto& p : basis_momenta())
    for (const auto& key : basis_monomials())
      for (int s = 0; s < 4; ++s) {
        Vec4 unit = Vec4::Zero();
        unit(s) = 1.0;
        const PolyWave psi = PolyWave::monomial(key, unit, p);
        // Dhat Dhat psi vs [D^2 - (e/2) sigma F] psi: add back m^2 to isolate the identity.
        PolyWave lhs = dirac_squared_apply(field, psi, rep);
        PolyWave rhs = fgm_apply(field, 0.0, psi, rep);
        worst = std::max(worst, (lhs - rhs).norm());
      }
  return worst;
}

cxd free_fgm_lagrangian_at(const PlaneWaveField& f, double m, const Vec3& x, double t) {
  const GammaSet gs = build_gammas(Representation::Chiral, Metric::Minkowski);
  auto pslash = [&gs](double e, const Vec3& k) {
    return Mat4(e * gs.g[0] - k.x() * gs.g[1] - k.y() * gs.g[2] - k.z() * gs.g[3]);
  };
  Eigen::RowVector4cd row = Eigen::RowVector4cd::Zero();
  Eigen::RowVector4cd rowbar = Eigen::RowVector4cd::Zero();
  Vec4 col = Vec4::Zero(), psi = Vec4::Zero();
  for (const auto& w : f.terms) {
    const double s = w.sign;
    const cxd ph = std::exp(I * s * (w.k.dot(x) - w.energy * t));
    psi += ph * w.amp;
    col += ph * s * (pslash(w.energy, w.k) * w.amp);
    const Eigen::RowVector4cd wbar = w.amp.adjoint() * gs.g[0];
    rowbar += std::conj(ph) * wbar;
    // (i dslash Psi)-bar: the Dirac adjoint of the column factor.
    row += std::conj(ph) * s * (wbar * pslash(w.energy, w.k));
  }
  return (row * col)(0) - m * m * (rowbar * psi)(0);
}

Gamma5Report gamma5_structure(const EMField& field, double m, Representation rep) {
  const GammaSet gs = build_gammas(rep, Metric::Minkowski);
  Gamma5Report rep_out{0.0, 0.0};
  for (const auto& p : basis_momenta())
    for (const auto& key : basis_monomials())
      for (int s = 0; s < 4; ++s) {
        Vec4 unit = Vec4::Zero();
        unit(s) = 1.0;
        const PolyWave psi = PolyWave::monomial(key, unit, p);
        PolyWave lhs = fgm_apply(field, m, psi.apply(gs.g5), rep);
        PolyWave rhs = fgm_apply(field, m, psi, rep).apply(gs.g5);
        rep_out.commutant_residual = std::max(rep_out.commutant_residual, (lhs - rhs).norm());
      }

  // Exact solutions exist in closed form for the Zero / ConstantA families:
  // psi = u e^{-i q x}, q = p + eA, p on shell. Chiral projections stay solutions.
  if (field.family != EMField::Family::LinearA) {
    const Mat4 proj_p = 0.5 * (Mat4::Identity() + gs.g5);
    const Mat4 proj_m = 0.5 * (Mat4::Identity() - gs.g5);
    const Mat4 torep = rep_transform(rep);
    for (const Vec3& k : {Vec3(0.3, -0.2, 0.5), Vec3(0.0, 0.0, 0.0), Vec3(-1.0, 0.4, 0.1)}) {
      const SpinorState u = build_u_spinor(k, 0.5, 1.0, 0.0, m);
      std::array<double, 4> q{u.energy + field.e * field.a_upper(0).real(),
                              k.x() + field.e * field.a_upper(1).real(),
                              k.y() + field.e * field.a_upper(2).real(),
                              k.z() + field.e * field.a_upper(3).real()};
      const PolyWave psi = PolyWave::monomial({0, 0, 0, 0}, Vec4(torep * u.components), q);
      for (const Mat4& proj : {proj_p, proj_m}) {
        const double res = fgm_apply(field, m, psi.apply(proj), rep).norm();
        rep_out.projected_solution_residual = std::max(rep_out.projected_solution_residual, res);
      }
    }
  }
  return rep_out;
}

BarutDecomposition barut_decomposition(const CanonicalParams& canon, double m) {
  BarutDecomposition d{};
  d.lambda1 = 1.0;
  d.lambda2 = -canon.alpha2 * m;

  // Constant matching: -kappa = kappa_d + alpha2 m^2. Carry the two_sum error
  // so the recombination check is exact, not rounding-limited.
  const double a2m2 = canon.alpha2 * (m * m);
  const TwoSum kd = two_sum(-canon.kappa, -a2m2);
  d.kappa_d = kd.s;

  // Residuals of the three coefficient matches.
  const double r_pslash = 1.0 - d.lambda1;
  const double r_p2 = -canon.alpha2 - (-canon.alpha2);  // lambda2 / m by construction
  // kappa_d + err + a2m2 == -kappa exactly as reals; evaluate with compensation.
  KahanSum cs;
  cs.add(d.kappa_d);
  cs.add(kd.err);
  cs.add(a2m2);
  const double r_const = -canon.kappa - cs.value();
  d.residual = std::max({std::abs(r_pslash), std::abs(r_p2), std::abs(r_const)});
  return d;
}

std::array<cxd, 4> general_current(const GeneralCurrentParams& gc, const SpinorState& u_in,
                                   const SpinorState& u_out) {
  const GammaSet gs = build_gammas(Representation::Chiral, Metric::Minkowski);
  const SigmaTensor sig = sigma_tensor(gs);
  const Eigen::RowVector4cd ubar = u_out.components.adjoint() * gs.g[0];
  const Vec4& u = u_in.components;

  const double p_in[4] = {u_in.energy, u_in.momentum.x(), u_in.momentum.y(), u_in.momentum.z()};
  const double p_out[4] = {u_out.energy, u_out.momentum.x(), u_out.momentum.y(), u_out.momentum.z()};

  std::array<cxd, 4> j{};
  const cxd scalar = (ubar * u)(0);
  for (int mu = 0; mu < 4; ++mu) {
    cxd val = gc.alpha1 * (ubar * gs.g[static_cast<size_t>(mu)] * u)(0);
    val += gc.alpha2 * 0.5 * (p_in[mu] + p_out[mu]) * scalar;
    for (int nu = 0; nu < 4; ++nu) {
      const double q_lower = kG[nu] * (p_out[nu] - p_in[nu]);
      val += gc.alpha3 * q_lower * (ubar * sig[static_cast<size_t>(mu)][static_cast<size_t>(nu)] * u)(0);
    }
    j[static_cast<size_t>(mu)] = val;
  }
  return j;
}

double gordon_residual(const Vec3& k, const Vec3& kp, double m) {
  const GammaSet gs = build_gammas(Representation::Chiral, Metric::Minkowski);
  const SigmaTensor sig = sigma_tensor(gs);
  const SpinorState u_in = build_u_spinor(k, 0.5, 1.0, 0.0, m);
  const SpinorState u_out = build_u_spinor(kp, -0.5, 1.0, 0.0, m);
  const Eigen::RowVector4cd ubar = u_out.components.adjoint() * gs.g[0];
  const Vec4& u = u_in.components;

  const double p_in[4] = {u_in.energy, k.x(), k.y(), k.z()};
  const double p_out[4] = {u_out.energy, kp.x(), kp.y(), kp.z()};
  const cxd scalar = (ubar * u)(0);

  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    cxd lhs = (ubar * gs.g[static_cast<size_t>(mu)] * u)(0);
    cxd rhs = (p_in[mu] + p_out[mu]) * scalar;
    for (int nu = 0; nu < 4; ++nu) {
      const double q_lower = kG[nu] * (p_out[nu] - p_in[nu]);
      rhs += I * q_lower * (ubar * sig[static_cast<size_t>(mu)][static_cast<size_t>(nu)] * u)(0);
    }
    worst = std::max(worst, std::abs(lhs - rhs / (2.0 * m)));
  }
  return worst;
}

}  // namespace barutkit
