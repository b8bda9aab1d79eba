#include "barutkit/barut.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "barutkit/algebra.hpp"
#include "barutkit/spinors.hpp"

namespace barutkit {

namespace {

const GammaSet& chiral() {
  static const GammaSet gs = build_gammas(Representation::Chiral, Metric::Minkowski);
  return gs;
}

PolyOperator pslash_poly() {
  const GammaSet& gs = chiral();
  PolyOperator p;
  p.add_term({1, 0, 0, 0}, gs.g[0]);
  p.add_term({0, 1, 0, 0}, Mat4(-gs.g[1]));
  p.add_term({0, 0, 1, 0}, Mat4(-gs.g[2]));
  p.add_term({0, 0, 0, 1}, Mat4(-gs.g[3]));
  return p;
}

PolyOperator p2_poly(cxd coeff) {  // coeff * (p0^2 - p1^2 - p2^2 - p3^2) * 1
  PolyOperator p;
  p.add_term({2, 0, 0, 0}, Mat4(coeff * Mat4::Identity()));
  p.add_term({0, 2, 0, 0}, Mat4(-coeff * Mat4::Identity()));
  p.add_term({0, 0, 2, 0}, Mat4(-coeff * Mat4::Identity()));
  p.add_term({0, 0, 0, 2}, Mat4(-coeff * Mat4::Identity()));
  return p;
}

PolyOperator const_poly(cxd c) { return PolyOperator::constant(Mat4(c * Mat4::Identity())); }

void merge_lines(SpectrumResult& r) {
  std::sort(r.lines.begin(), r.lines.end(), [](const SpectrumLine& x, const SpectrumLine& y) { return x.mass < y.mass; });
  std::vector<SpectrumLine> merged;
  for (const auto& l : r.lines) {
    if (!merged.empty() && std::abs(merged.back().mass - l.mass) < 1e-12 * (1.0 + l.mass)) {
      merged.back().multiplicity += l.multiplicity;
      merged.back().branch += "+" + l.branch;
    } else {
      merged.push_back(l);
    }
  }
  r.lines = std::move(merged);
}

}  // namespace

CanonicalParams param_map(const BarutParams& p) {
  if (p.a == 0.0) throw std::domain_error("param_map: a must be nonzero");
  return {p.a / (2.0 * p.m), (1.0 - p.b * p.b) * p.m / (2.0 * p.a)};
}

BarutParams inverse_param_map(const CanonicalParams& c, double m) {
  if (c.alpha2 == 0.0) throw std::domain_error("inverse_param_map: alpha2 must be nonzero");
  const double b2 = 1.0 - 4.0 * c.alpha2 * c.kappa;
  if (b2 < 0.0) throw std::domain_error("inverse_param_map: no real b for these (alpha2, kappa)");
  BarutParams p;
  p.a = 2.0 * m * c.alpha2;
  p.b = std::sqrt(b2);
  p.m = m;
  return p;
}

PolyOperator barut_operator(const CanonicalParams& c, Metric metric) {
  if (metric == Metric::Minkowski)
    return pslash_poly() - p2_poly(c.alpha2) - const_poly(c.kappa);

  const GammaSet ge = build_gammas(Representation::Chiral, Metric::Euclidean);
  PolyOperator p;
  p.add_term({1, 0, 0, 0}, ge(4));
  p.add_term({0, 1, 0, 0}, ge(1));
  p.add_term({0, 0, 1, 0}, ge(2));
  p.add_term({0, 0, 0, 1}, ge(3));
  for (int i = 0; i < 4; ++i) {
    PolyOperator::Key k{0, 0, 0, 0};
    k[static_cast<size_t>(i)] = 2;
    p.add_term(k, Mat4(-c.alpha2 * Mat4::Identity()));
  }
  p.add_term({0, 0, 0, 0}, Mat4(-c.kappa * Mat4::Identity()));
  return p;
}

PolyOperator second_order_operator(const BarutParams& p) {
  const double a = p.a, m = p.m;
  return (2.0 * a / m) * pslash_poly() - p2_poly(a * a / (m * m)) + const_poly(p.b * p.b - 1.0);
}

SpectrumResult second_order_spectrum(const BarutParams& p) {
  if (p.a == 0.0) throw std::domain_error("second_order_spectrum: a must be nonzero");
  SpectrumResult r;
  r.lines.push_back({p.m * (1.0 + p.b) / p.a, 4, "plus"});
  r.lines.push_back({p.m * (1.0 - p.b) / p.a, 4, "minus"});
  for (const auto& l : r.lines)
    if (std::abs(l.mass) < 1e-12 * p.m)
      r.warnings.push_back("branch '" + l.branch + "' is massless (degenerate case)");
  merge_lines(r);
  return r;
}

double factorization_residual(const BarutParams& p) {
  const double a = p.a, m = p.m;
  PolyOperator d = (a / m) * pslash_poly();
  PolyOperator f1 = d - const_poly(1.0 + p.b);
  PolyOperator f2 = d - const_poly(1.0 - p.b);
  return (f1 * f2 + second_order_operator(p)).max_coeff_norm();
}

double alpha2_physical(double m, double alpha) {
  if (m <= 0.0) throw std::domain_error("alpha2_physical: m must be positive");
  if (alpha <= 0.0) throw std::domain_error("alpha2_physical: alpha must be positive");
  return (1.0 / m) * (2.0 * alpha / 3.0) / (1.0 + 4.0 * alpha / 3.0);
}

double muon_mass(double m_e, double alpha) {
  if (m_e <= 0.0) throw std::domain_error("muon_mass: m_e must be positive");
  return m_e * (1.0 + 3.0 / (2.0 * alpha));
}

double tau_mass(double m_e, double alpha, const std::vector<int>& levels) {
  if (m_e <= 0.0) throw std::domain_error("tau_mass: m_e must be positive");
  double sum = 0.0;
  for (int n : levels) sum += std::pow(static_cast<double>(n), 4);
  return m_e * (1.0 + 1.5 * (1.0 / alpha) * sum);
}

ThirdOrderResult third_order_operator(const BarutParams& p, int sign1, int sign2) {
  if (p.a == 0.0) throw std::domain_error("third_order_operator: a must be nonzero");
  const double a = p.a, m = p.m;
  const double m1 = m * (1.0 + sign1 * p.b1 + sign2 * p.b2) / a;
  const double alpha2 = a / (2.0 * m);
  const double kappa1 = m * (1.0 - p.b1 * p.b1) / (2.0 * a);

  ThirdOrderResult r;
  r.factor_dirac = pslash_poly() - const_poly(m1);
  r.factor_second = pslash_poly() - p2_poly(alpha2) - const_poly(kappa1);

  // Monomial expansion of the product, using phat^2 = p.p:
  //   (1 + m1 alpha2) p.p - alpha2 p.p phat - (kappa1 + m1) phat + m1 kappa1.
  PolyOperator pp_ps = p2_poly(1.0) * pslash_poly();
  r.expanded = p2_poly(1.0 + m1 * alpha2) - alpha2 * pp_ps - (kappa1 + m1) * pslash_poly() +
               const_poly(m1 * kappa1);

  r.spectrum.lines.push_back({m1, 4, "dirac-factor"});
  r.spectrum.lines.push_back({m * (1.0 + p.b1) / a, 4, "second-factor-plus"});
  r.spectrum.lines.push_back({m * (1.0 - p.b1) / a, 4, "second-factor-minus"});
  for (const auto& l : r.spectrum.lines)
    if (std::abs(l.mass) < 1e-12 * p.m)
      r.spectrum.warnings.push_back("branch '" + l.branch + "' is massless (degenerate case)");
  merge_lines(r.spectrum);
  return r;
}

CoupledReduction coupled_system(const BarutParams& p, int constraint_sign) {
  const double a = p.a, m = p.m;
  const double beff = p.b1 + constraint_sign * p.b2;

  // (D - 1) phi - beff chi = 0, (D - 1) chi - beff phi = 0, D = (a/m) phat.
  PolyOperator d1 = (a / m) * pslash_poly() - const_poly(1.0);
  CoupledReduction red;
  for (const auto& [k, blk] : d1.terms) {
    Eigen::Matrix<cxd, 8, 8> b8 = Eigen::Matrix<cxd, 8, 8>::Zero();
    b8.block<4, 4>(0, 0) = blk;
    b8.block<4, 4>(4, 4) = blk;
    red.system.add_term(k, b8);
  }
  Eigen::Matrix<cxd, 8, 8> off = Eigen::Matrix<cxd, 8, 8>::Zero();
  off.block<4, 4>(0, 4) = -beff * Mat4::Identity();
  off.block<4, 4>(4, 0) = -beff * Mat4::Identity();
  red.system.add_term({0, 0, 0, 0}, off);

  red.factor_b1 = pslash_poly() - const_poly(m * (1.0 + beff) / a);
  red.factor_b2 = pslash_poly() - const_poly(m * (1.0 - beff) / a);
  red.effective_b = beff;
  return red;
}

double coupled_det_ratio_spread(const CoupledReduction& red, int n_samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  cxd ref{0.0, 0.0};
  double spread = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    std::array<cxd, 4> mom{cxd(u(rng)), cxd(u(rng)), cxd(u(rng)), cxd(u(rng))};
    cxd den = red.factor_b1.eval(mom).determinant() * red.factor_b2.eval(mom).determinant();
    if (std::abs(den) < 1e-10) continue;
    cxd ratio = red.system.eval(mom).determinant() / den;
    if (i == 0)
      ref = ratio;
    else
      spread = std::max(spread, std::abs(ratio - ref) / std::abs(ref));
  }
  return spread;
}

double coupled_embedding_residual(const BarutParams& p, int constraint_sign, int n_samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double beff = p.b1 + constraint_sign * p.b2;
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    Vec3 k(u(rng), u(rng), u(rng));
    for (int s : {+1, -1}) {
      const double mass = p.m * (1.0 + s * beff) / p.a;
      if (mass <= 1e-9) continue;
      // Psi_1 solves (D - 1 - beff), i.e. the third-order branch (s, s*constraint_sign); Psi_2 the mirror.
      ThirdOrderResult t = third_order_operator(p, s, s * constraint_sign);
      SpinorState mode = build_u_spinor(k, 0.5, 1.0, 0.0, mass, MassBranch::Minus);
      Mat4 op = t.expanded.eval(mode.energy, k);
      worst = std::max(worst, (op * mode.components).norm());
    }
  }
  return worst;
}

FieldEquationPair field_equation_pair(const LagrangianParams& lp) {
  FieldEquationPair fe;
  fe.psi_op = (-2.0 * I * lp.alpha1) * pslash_poly() + p2_poly(lp.alpha2) - const_poly(lp.alpha4);
  fe.psibar_op = (2.0 * I * lp.alpha1) * pslash_poly() - p2_poly(lp.alpha2) + const_poly(lp.alpha4);
  return fe;
}

}  // namespace barutkit
