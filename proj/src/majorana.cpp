#include "barutkit/majorana.hpp"

#include <random>

#include "barutkit/spinors.hpp"

namespace barutkit {

namespace {

void require_unitary(const Mat4& u) {
  if (max_diff(Mat4(u * u.adjoint()), Mat4::Identity()) > 1e-12)
    throw std::domain_error("to_majorana: transform must be unitary");
}

PolyOperator rep_pslash(Representation rep) {
  const GammaSet gs = build_gammas(rep, Metric::Minkowski);
  PolyOperator p;
  p.add_term({1, 0, 0, 0}, gs.g[0]);
  p.add_term({0, 1, 0, 0}, Mat4(-gs.g[1]));
  p.add_term({0, 0, 1, 0}, Mat4(-gs.g[2]));
  p.add_term({0, 0, 0, 1}, Mat4(-gs.g[3]));
  return p;
}

PolyOperator rep_p2(Representation, double coeff) {
  PolyOperator p;
  p.add_term({2, 0, 0, 0}, Mat4(coeff * Mat4::Identity()));
  p.add_term({0, 2, 0, 0}, Mat4(-coeff * Mat4::Identity()));
  p.add_term({0, 0, 2, 0}, Mat4(-coeff * Mat4::Identity()));
  p.add_term({0, 0, 0, 2}, Mat4(-coeff * Mat4::Identity()));
  return p;
}

}  // namespace

Vec4 to_majorana(const Vec4& psi, const Mat4& u) {
  require_unitary(u);
  return u * psi;
}

Vec4 from_majorana(const Vec4& psi, const Mat4& u) {
  require_unitary(u);
  return u.adjoint() * psi;
}

Mat4 to_majorana(const Mat4& op, const Mat4& u) {
  require_unitary(u);
  return u * op * u.adjoint();
}

std::pair<PolyOperator, PolyOperator> split_equations(const BarutParams& p) {
  PolyOperator d = (p.a / p.m) * rep_pslash(Representation::Majorana);
  PolyOperator first = d - PolyOperator::constant(Mat4((1.0 + p.b) * Mat4::Identity()));
  PolyOperator second = d - PolyOperator::constant(Mat4((1.0 - p.b) * Mat4::Identity()));
  return {first, second};
}

double split_realness_residual(Representation rep, double a, double m, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const PolyOperator ps = rep_pslash(rep);
  double worst = 0.0;
  for (int it = 0; it < 16; ++it) {
    Vec3 k(u(rng), u(rng), u(rng));
    const double e = std::sqrt(k.squaredNorm() + m * m);
    Vec4 w, wp;
    for (int i = 0; i < 4; ++i) {
      w(i) = u(rng);
      wp(i) = u(rng);
    }
    // [ (a/m) i g.d - c ] on w cos(p.x) + w' sin(p.x):
    //   cos-coefficient: (a/m) i phat w' - c w,  sin: -(a/m) i phat w - c w'.
    const Mat4 iphat = I * ps.eval(e, k);
    Vec4 cosc = (a / m) * (iphat * wp) - w;
    Vec4 sinc = -(a / m) * (iphat * w) - wp;
    worst = std::max({worst, cosc.imag().cwiseAbs().maxCoeff(), sinc.imag().cwiseAbs().maxCoeff()});
  }
  return worst;
}

PolyOperator recombined_operator(const BarutParams& p) {
  const double a = p.a, m = p.m;
  return (2.0 * a / m) * rep_pslash(Representation::Majorana) - rep_p2(Representation::Majorana, a * a / (m * m)) +
         PolyOperator::constant(Mat4((p.b * p.b - 1.0) * Mat4::Identity()));
}

PlaneWaveField majorana_plane_wave(double a, double c, double m, const Vec3& k) {
  const double mass = c * m / a;
  if (mass <= 0.0) throw std::domain_error("majorana_plane_wave: branch mass must be positive");
  const Mat4 u_maj = majorana_transform();
  SpinorState s = build_u_spinor(k, 0.5, 1.0, 0.0, mass, MassBranch::Minus);
  const Vec4 w = u_maj * s.components;

  PlaneWaveField f;
  WaveTerm t1;
  t1.amp = 0.5 * w;
  t1.energy = s.energy;
  t1.k = k;
  t1.sign = +1;
  WaveTerm t2 = t1;
  t2.amp = 0.5 * w.conjugate();
  t2.sign = -1;
  f.terms = {t1, t2};
  return f;
}

double recombine_residual(const BarutParams& p, const Vec3& k1, const Vec3& k2) {
  if (p.b == 0.0) throw std::domain_error("recombine_residual: requires b != 0");
  PlaneWaveField psi1 = majorana_plane_wave(p.a, 1.0 + p.b, p.m, k1);
  PlaneWaveField psi2 = majorana_plane_wave(p.a, 1.0 - p.b, p.m, k2);

  PlaneWaveField phi = psi1, chi = psi1;
  for (auto w : psi2.terms) {
    phi.terms.push_back(w);
    w.amp = -w.amp;
    chi.terms.push_back(w);
  }
  const PolyOperator op = recombined_operator(p);
  return std::max(phi.minkowski_residual(op), chi.minkowski_residual(op));
}

}  // namespace barutkit
