#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barutkit/algebra.hpp"
#include "barutkit/verify.hpp"

using namespace barutkit;

TEST_CASE("clifford relation for every representation and metric") {
  const double gdiag[4] = {1.0, -1.0, -1.0, -1.0};
  for (auto rep : {Representation::Chiral, Representation::DiracStandard, Representation::Majorana}) {
    for (auto metric : {Metric::Minkowski, Metric::Euclidean}) {
      const GammaSet gs = build_gammas(rep, metric);
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          const Mat4 anti = gs.g[mu] * gs.g[nu] + gs.g[nu] * gs.g[mu];
          const double want =
              metric == Metric::Minkowski ? (mu == nu ? 2.0 * gdiag[mu] : 0.0) : (mu == nu ? 2.0 : 0.0);
          CHECK(max_diff(anti, Mat4(want * Mat4::Identity())) < 1e-12);
        }
      CHECK(max_diff(Mat4(gs.g5 * gs.g5), Mat4::Identity()) < 1e-12);
      for (int mu = 0; mu < 4; ++mu)
        CHECK(max_abs(Mat4(gs.g5 * gs.g[mu] + gs.g[mu] * gs.g5)) < 1e-12);
    }
  }
}

TEST_CASE("majorana gammas are purely imaginary") {
  const GammaSet gs = build_gammas(Representation::Majorana, Metric::Minkowski);
  for (const auto& g : gs.g) CHECK(g.real().cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("chiral gamma5 from the Dirac-standard one by direct multiplication") {
  // Independent route: conjugate gamma5_Dirac back with the inverse transform.
  const GammaSet ds = build_gammas(Representation::DiracStandard, Metric::Minkowski);
  const Mat4 s = chiral_to_dirac();
  const Mat4 g5_chiral = s.adjoint() * ds.g5 * s;
  Mat4 want = Mat4::Zero();
  want.diagonal() << 1, 1, -1, -1;
  CHECK(max_diff(g5_chiral, want) < 1e-12);
}

TEST_CASE("gamma5 equals i g0 g1 g2 g3") {
  for (auto rep : {Representation::Chiral, Representation::DiracStandard, Representation::Majorana}) {
    const GammaSet gs = build_gammas(rep, Metric::Minkowski);
    CHECK(max_diff(gs.g5, Mat4(I * gs.g[0] * gs.g[1] * gs.g[2] * gs.g[3])) < 1e-12);
  }
}

TEST_CASE("sigma tensor") {
  const GammaSet ch = build_gammas(Representation::Chiral, Metric::Minkowski);
  const SigmaTensor s = sigma_tensor(ch);
  CHECK(max_abs(s[0][0]) == 0.0);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      CHECK(max_abs(Mat4(s[mu][nu] + s[nu][mu])) < 1e-14);
      CHECK(std::abs(s[mu][nu].trace()) < 1e-14);
    }
  const SigmaTensor sd = sigma_tensor(build_gammas(Representation::DiracStandard, Metric::Minkowski));
  Mat4 want = Mat4::Zero();
  want.block<2, 2>(0, 0) = sigma_pauli(3);
  want.block<2, 2>(2, 2) = sigma_pauli(3);
  CHECK(max_diff(sd[1][2], want) < 1e-14);
}

TEST_CASE("charge conjugation matrix") {
  const Mat4 c = charge_conjugation_matrix(Representation::Chiral);
  const Mat2 ith = I * wigner_pair(0.0).theta;
  Mat4 want = Mat4::Zero();
  want.block<2, 2>(0, 2) = ith;
  want.block<2, 2>(2, 0) = -ith;
  CHECK(max_diff(c, want) == 0.0);
  CHECK(max_diff(Mat4(c * c.inverse()), Mat4::Identity()) < 1e-15);
  CHECK(max_diff(Mat4(c * c), Mat4(-Mat4::Identity())) == 0.0);

  // Operative identity behind the Dirac-form constraint: C g* C^-1 = -g. The transpose variant
  // C g^T C^-1 = -g^T fails for mu = 2 with this block form.
  const GammaSet ch = build_gammas(Representation::Chiral, Metric::Minkowski);
  for (int mu = 0; mu < 4; ++mu)
    CHECK(max_diff(Mat4(c * ch.g[mu].conjugate() * c.inverse()), Mat4(-ch.g[mu])) < 1e-15);
  CHECK(max_diff(Mat4(c * ch.g[2].transpose() * c.inverse()), Mat4(-ch.g[2].transpose())) > 0.5);

  // The conjugation operation picks up a minus sign in the Majorana
  // representation (antilinear transport), while plain similarity keeps C.
  const Mat4 u = majorana_transform();
  CHECK(max_diff(Mat4(u * c * u.transpose()), Mat4(-Mat4::Identity())) < 1e-15);
  CHECK(max_diff(Mat4(u * c * u.adjoint()), c) < 1e-15);
}

TEST_CASE("conformal generators") {
  const GammaSet ch = build_gammas(Representation::Chiral, Metric::Minkowski);
  CHECK_THROWS_AS(conformal_generator(ch, 3, 3), std::invalid_argument);
  const auto gens = conformal_generators(ch);
  CHECK(gens.size() == 15);
  CHECK(conformal_closure_residual(gens) < 1e-10);
  // N_a6 with the "i" slot reduces to -gamma_a / 2 under the adopted convention.
  CHECK(max_diff(conformal_generator(ch, 0, 5), Mat4(-0.5 * ch.g[0])) < 1e-15);
}

TEST_CASE("verify suite aggregate") {
  for (const auto& r : verify_algebra()) {
    INFO(r.name);
    CHECK(r.pass);
  }
}
