#include "barutkit/planewave.hpp"

#include <cmath>
#include <stdexcept>

#include "barutkit/algebra.hpp"

namespace barutkit {

namespace {

const Mat4& gamma4() {
  static const Mat4 g4 = build_gammas(Representation::Chiral, Metric::Euclidean)(4);
  return g4;
}

cxd phase(const WaveTerm& w, const Vec3& x, double t) {
  return std::exp(I * static_cast<double>(w.sign) * (w.k.dot(x) - w.energy * t));
}

// Euclidean derivative factor on the Psi side; conjugate side is -conj pattern
// handled explicitly below.
cxd d_factor(const WaveTerm& w, int mu) {
  const double s = w.sign;
  switch (mu) {
    case 0:
      return 1.0;
    case 1:
    case 2:
    case 3:
      return I * s * w.k[mu - 1];
    case 4:
      return cxd(-s * w.energy, 0.0);
    default:
      throw std::invalid_argument("d_factor: Euclidean index must be 1..4");
  }
}

cxd dbar_factor(const WaveTerm& w, int mu) {
  const double s = w.sign;
  switch (mu) {
    case 0:
      return 1.0;
    case 1:
    case 2:
    case 3:
      return -I * s * w.k[mu - 1];
    case 4:
      return cxd(s * w.energy, 0.0);
    default:
      throw std::invalid_argument("dbar_factor: Euclidean index must be 1..4");
  }
}

}  // namespace

Vec4 PlaneWaveField::eval(const Vec3& x, double t) const {
  Vec4 v = Vec4::Zero();
  for (const auto& w : terms) v += phase(w, x, t) * w.amp;
  return v;
}

Vec4 PlaneWaveField::eval_deriv_euclid(int mu, const Vec3& x, double t) const {
  Vec4 v = Vec4::Zero();
  for (const auto& w : terms) v += d_factor(w, mu) * phase(w, x, t) * w.amp;
  return v;
}

PlaneWaveField PlaneWaveField::apply_minkowski(const PolyOperator& op) const {
  PlaneWaveField out;
  out.terms.reserve(terms.size());
  for (const auto& w : terms) {
    WaveTerm r = w;
    const double s = w.sign;
    r.amp = op.eval(s * w.energy, Vec3(s * w.k)) * w.amp;
    out.terms.push_back(r);
  }
  return out;
}

double PlaneWaveField::minkowski_residual(const PolyOperator& op) const {
  double worst = 0.0;
  for (const auto& w : apply_minkowski(op).terms) worst = std::max(worst, w.amp.norm());
  return worst;
}

cxd density_at(const PlaneWaveField& f, const DensitySpec& spec, const Vec3& x, double t) {
  // Psi, d_mu Psi and their PsiBar images at the point; then each bilinear is
  // a plain sandwich.
  Vec4 psi = f.eval(x, t);
  std::array<Vec4, 5> dpsi;
  dpsi[0] = psi;
  for (int mu = 1; mu <= 4; ++mu) dpsi[static_cast<size_t>(mu)] = f.eval_deriv_euclid(mu, x, t);

  const Mat4& g4 = gamma4();
  std::array<Eigen::RowVector4cd, 5> dbar;
  for (auto& row : dbar) row.setZero();
  // PsiBar-side terms: conj(amp)^T g4 with conjugated phase and dbar factors.
  for (const auto& w : f.terms) {
    const cxd ph = std::conj(phase(w, x, t));
    const Eigen::RowVector4cd row = w.amp.adjoint() * g4;
    for (int mu = 0; mu <= 4; ++mu) dbar[static_cast<size_t>(mu)] += dbar_factor(w, mu) * ph * row;
  }

  cxd val{0.0, 0.0};
  for (const auto& b : spec)
    val += b.coeff * (dbar[static_cast<size_t>(b.dleft)] * b.gamma * dpsi[static_cast<size_t>(b.dright)])(0);
  return val;
}

namespace {

std::array<int, 3> signed_lattice(const WaveTerm& w) {
  if (!w.lattice) throw std::domain_error("box_integral: all terms need lattice quantum numbers");
  const auto& n = *w.lattice;
  return {w.sign * n[0], w.sign * n[1], w.sign * n[2]};
}

}  // namespace

std::array<BoxIntegral, 5> box_integral_by_coupling(const PlaneWaveField& f, const DensitySpec& spec,
                                                    double box_l, double t) {
  const Mat4& g4 = gamma4();
  const double vol = box_l * box_l * box_l;
  std::array<BoxIntegral, 5> out{};

  for (const auto& wj : f.terms) {
    const Eigen::RowVector4cd row = wj.amp.adjoint() * g4;
    const auto nj = signed_lattice(wj);
    for (const auto& wl : f.terms) {
      if (signed_lattice(wl) != nj) continue;  // exact spatial orthogonality
      const cxd tphase = std::exp(I * (wj.sign * wj.energy - wl.sign * wl.energy) * t);
      for (const auto& b : spec) {
        const cxd val = b.coeff * dbar_factor(wj, b.dleft) * d_factor(wl, b.dright) * tphase * vol *
                        (row * b.gamma * wl.amp)(0);
        BoxIntegral& acc = out[static_cast<size_t>(b.coupling)];
        if (wj.antiparticle && wl.antiparticle)
          acc.vv += val;
        else if (!wj.antiparticle && !wl.antiparticle)
          acc.uu += val;
        else
          acc.cross += val;
      }
    }
  }
  return out;
}

BoxIntegral box_integral(const PlaneWaveField& f, const DensitySpec& spec, double box_l, double t) {
  BoxIntegral total;
  for (const auto& part : box_integral_by_coupling(f, spec, box_l, t)) {
    total.uu += part.uu;
    total.cross += part.cross;
    total.vv += part.vv;
  }
  return total;
}

}  // namespace barutkit
