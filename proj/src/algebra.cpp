#include "barutkit/algebra.hpp"

#include <Eigen/Dense>

namespace barutkit {

Mat2 sigma_pauli(int k) {
  Mat2 s = Mat2::Zero();
  switch (k) {
    case 1:
      s << 0, 1, 1, 0;
      break;
    case 2:
      s << 0, -I, I, 0;
      break;
    case 3:
      s << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("sigma_pauli: k must be 1, 2 or 3");
  }
  return s;
}

WignerPair wigner_pair(double phi) {
  WignerPair w;
  w.theta = -I * sigma_pauli(2);  // [[0,-1],[1,0]]
  w.xi = Mat2::Zero();
  w.xi(0, 0) = std::exp(I * phi);
  w.xi(1, 1) = std::exp(-I * phi);
  w.phi = phi;
  return w;
}

namespace {

Mat4 block2(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
  Mat4 m;
  m.block<2, 2>(0, 0) = a;
  m.block<2, 2>(0, 2) = b;
  m.block<2, 2>(2, 0) = c;
  m.block<2, 2>(2, 2) = d;
  return m;
}

std::array<Mat4, 4> chiral_minkowski() {
  const Mat2 one = Mat2::Identity(), zero = Mat2::Zero();
  std::array<Mat4, 4> g;
  g[0] = block2(zero, one, one, zero);
  for (int k = 1; k <= 3; ++k) g[k] = block2(zero, -sigma_pauli(k), sigma_pauli(k), zero);
  return g;
}

}  // namespace

Mat4 chiral_to_dirac() {
  const Mat2 one = Mat2::Identity();
  return block2(one, one, one, -one) / std::sqrt(2.0);
}

Mat4 majorana_transform() {
  const Mat2 one = Mat2::Identity();
  const Mat2 ith = I * wigner_pair(0.0).theta;  // i*Theta = sigma_2
  return 0.5 * block2(one - ith, one + ith, -(one + ith), one - ith);
}

Mat4 rep_transform(Representation rep) {
  switch (rep) {
    case Representation::Chiral:
      return Mat4::Identity();
    case Representation::DiracStandard:
      return chiral_to_dirac();
    case Representation::Majorana:
      return majorana_transform();
  }
  throw std::logic_error("rep_transform: bad representation");
}

GammaSet build_gammas(Representation rep, Metric metric) {
  GammaSet gs;
  gs.rep = rep;
  gs.metric = metric;

  std::array<Mat4, 4> g = chiral_minkowski();
  Mat4 g5 = block2(Mat2::Identity(), Mat2::Zero(), Mat2::Zero(), -Mat2::Identity());

  const Mat4 r = rep_transform(rep);
  const Mat4 rinv = r.adjoint();
  for (auto& m : g) m = r * m * rinv;
  g5 = r * g5 * rinv;

  if (metric == Metric::Euclidean) {
    // gamma_4 = gamma^0, gamma_k = -i gamma^k: all four Hermitian, {g_mu,g_nu} = 2 delta.
    std::array<Mat4, 4> ge;
    ge[0] = g[0];
    for (int k = 1; k <= 3; ++k) ge[k] = -I * g[k];
    gs.g = ge;
  } else {
    gs.g = g;
  }
  gs.g5 = g5;
  return gs;
}

Mat4 charge_conjugation_matrix(Representation rep) {
  const Mat2 ith = I * wigner_pair(0.0).theta;
  const Mat4 c_chiral = block2(Mat2::Zero(), ith, -ith, Mat2::Zero());
  const Mat4 r = rep_transform(rep);
  return r * c_chiral * r.transpose();
}

SigmaTensor sigma_tensor(const GammaSet& gs) {
  SigmaTensor s;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Mat4 &a = gs.g[static_cast<size_t>(mu)], &b = gs.g[static_cast<size_t>(nu)];
      s[static_cast<size_t>(mu)][static_cast<size_t>(nu)] = 0.5 * I * (a * b - b * a);
    }
  return s;
}

Mat4 conformal_generator(const GammaSet& gs, int a, int b) {
  if (a == b) throw std::invalid_argument("conformal_generator: requires a != b");
  auto slot = [&gs](int idx) -> Mat4 {
    if (idx < 4) return gs.g[static_cast<size_t>(idx)];
    if (idx == 4) return gs.g5;
    return I * Mat4::Identity();  // the "i" slot
  };
  return 0.5 * I * slot(a) * slot(b);
}

std::vector<ConformalGenerator> conformal_generators(const GammaSet& gs) {
  std::vector<ConformalGenerator> gens;
  gens.reserve(15);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) gens.push_back({a, b, conformal_generator(gs, a, b)});
  return gens;
}

double conformal_closure_residual(const std::vector<ConformalGenerator>& gens) {
  // Flatten the candidate basis {N_ab} + identity into a 16 x 16 system and
  // expand every commutator over it; report the worst residual.
  const int nb = static_cast<int>(gens.size()) + 1;
  Eigen::MatrixXcd basis(16, nb);
  for (int j = 0; j < nb - 1; ++j)
    basis.col(j) = Eigen::Map<const Eigen::VectorXcd>(gens[static_cast<size_t>(j)].n.data(), 16);
  Mat4 id = Mat4::Identity();
  basis.col(nb - 1) = Eigen::Map<const Eigen::VectorXcd>(id.data(), 16);

  const auto solver = basis.colPivHouseholderQr();
  double worst = 0.0;
  for (const auto& x : gens)
    for (const auto& y : gens) {
      Mat4 comm = x.n * y.n - y.n * x.n;
      Eigen::VectorXcd rhs = Eigen::Map<const Eigen::VectorXcd>(comm.data(), 16);
      Eigen::VectorXcd coeff = solver.solve(rhs);
      double res = (basis * coeff - rhs).cwiseAbs().maxCoeff();
      worst = std::max(worst, res);
    }
  return worst;
}

}  // namespace barutkit
