#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "barutkit/barut.hpp"
#include "barutkit/spinors.hpp"
#include "barutkit/verify.hpp"

using namespace barutkit;

TEST_CASE("parameter maps") {
  const CanonicalParams c = param_map({1.0, 0.0, 0, 0, 1.0});
  CHECK(c.alpha2 == 0.5);
  CHECK(c.kappa == 0.5);
  CHECK(param_map({1.0, 1.0, 0, 0, 2.0}).kappa == 0.0);
  CHECK_THROWS_AS(param_map({0.0, 0.1, 0, 0, 1.0}), std::domain_error);

  std::mt19937 rng(2);
  std::uniform_real_distribution<double> ua(0.2, 2.0), ub(0.0, 0.95), um(0.3, 4.0);
  for (int i = 0; i < 50; ++i) {
    const BarutParams p{ua(rng), ub(rng), 0, 0, um(rng)};
    const BarutParams q = inverse_param_map(param_map(p), p.m);
    CHECK(std::abs(q.a - p.a) < 1e-14 * p.a);
    CHECK(std::abs(q.b - p.b) < 1e-14);
  }
}

TEST_CASE("barut operator") {
  // Dirac limit: alpha2 = 0, kappa = m gives phat - m with det (p.p - m^2)^2.
  const PolyOperator dirac = barut_operator({0.0, 1.0});
  const Vec3 k(0.2, 0.4, -0.1);
  const double e = 1.7;
  const cxd det = dirac.eval(e, k).determinant();
  const double pp = e * e - k.squaredNorm();
  CHECK(std::abs(det - (pp - 1.0) * (pp - 1.0)) < 1e-12);

  // At p = 0 only the constant block survives.
  const PolyOperator op = barut_operator({0.7, 0.3});
  CHECK(max_diff(op.eval(0.0, Vec3::Zero()), Mat4(-0.3 * Mat4::Identity())) == 0.0);

  // Spectrum by determinant-root oracle.
  const auto masses = det_mass_roots(barut_operator(param_map({1.0, 0.5, 0, 0, 1.0})),
                                     Vec3(0.1, -0.2, 0.3), 2.0);
  REQUIRE(masses.size() == 2);
  CHECK(std::abs(masses[0] - 0.5) < 1e-9);
  CHECK(std::abs(masses[1] - 1.5) < 1e-9);

  // Euclidean variant: Hermitian at real Euclidean momenta (delta contractions).
  const PolyOperator eu = barut_operator({0.7, 0.3}, Metric::Euclidean);
  const Mat4 v = eu.eval({cxd(0.2), cxd(-0.4), cxd(0.6), cxd(0.9)});
  CHECK(max_diff(v, Mat4(v.adjoint())) < 1e-14);
}

TEST_CASE("second-order spectrum") {
  const SpectrumResult degenerate = second_order_spectrum({1.0, 0.0, 0, 0, 1.0});
  REQUIRE(degenerate.lines.size() == 1);
  CHECK(degenerate.lines[0].mass == 1.0);
  CHECK(degenerate.lines[0].multiplicity == 8);

  const SpectrumResult split = second_order_spectrum({1.0, 0.5, 0, 0, 1.0});
  REQUIRE(split.lines.size() == 2);
  CHECK(split.lines[0].mass == 0.5);
  CHECK(split.lines[1].mass == 1.5);

  const SpectrumResult massless = second_order_spectrum({2.0, 1.0, 0, 0, 1.0});
  REQUIRE(massless.lines.size() == 2);
  CHECK(massless.lines[0].mass == 0.0);
  CHECK(massless.lines[1].mass == 1.0);
  CHECK(!massless.warnings.empty());

  CHECK(factorization_residual({1.0, 0.5, 0, 0, 1.0}) == 0.0);
  CHECK(factorization_residual({1.7, 0.81, 0, 0, 2.3}) < 1e-15);
}

TEST_CASE("lepton mass formulas") {
  CHECK(alpha2_physical(1.0, 1.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  // Direct arithmetic: (2a/3)/(1 + 4a/3) at 1/a = 137.03.
  const double alpha = 1.0 / 137.03;
  CHECK(alpha2_physical(1.0, alpha) == doctest::Approx(0.0048182).epsilon(1e-4));
  CHECK(alpha2_physical(1.0, 1e-9) < 1e-8);  // Dirac limit

  CHECK(muon_mass(1.0, 1.5) == 2.0);
  CHECK(muon_mass(0.511, alpha) == doctest::Approx(105.5445).epsilon(1e-6));
  CHECK(muon_mass(1.0, 1e12) == doctest::Approx(1.0).epsilon(1e-9));

  CHECK(tau_mass(0.511, alpha) == doctest::Approx(1786.08).epsilon(2e-5));
  CHECK(tau_mass(1.0, 1e12) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(tau_mass(0.73, alpha, {1}) == muon_mass(0.73, alpha));
}

TEST_CASE("third-order operator") {
  const BarutParams p{1.0, 0.0, 0.3, 0.2, 1.0};
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      const ThirdOrderResult t = third_order_operator(p, s1, s2);
      CHECK(PolyOperator::max_coeff_diff(t.expanded, t.factor_dirac * t.factor_second) < 1e-12);
    }

  const ThirdOrderResult t = third_order_operator(p, 1, 1);
  REQUIRE(t.spectrum.lines.size() == 3);
  CHECK(t.spectrum.lines[0].mass == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(t.spectrum.lines[1].mass == doctest::Approx(1.3).epsilon(1e-14));
  CHECK(t.spectrum.lines[2].mass == doctest::Approx(1.5).epsilon(1e-14));

  // Determinant-root oracle on the expanded cubic operator.
  const auto roots = det_mass_roots(t.expanded, Vec3(0.15, 0.1, -0.2), 2.0);
  REQUIRE(roots.size() == 3);
  CHECK(std::abs(roots[0] - 0.7) < 1e-8);
  CHECK(std::abs(roots[1] - 1.3) < 1e-8);
  CHECK(std::abs(roots[2] - 1.5) < 1e-8);

  // b2 = 0 collapses the Dirac factor onto a second-order mass: two states.
  const ThirdOrderResult c = third_order_operator({1.0, 0.0, 0.3, 0.0, 1.0}, 1, 1);
  CHECK(c.spectrum.lines.size() == 2);
}

TEST_CASE("coupled system reduction") {
  const BarutParams p{1.0, 0.0, 0.3, 0.2, 1.0};
  for (int cs : {+1, -1}) {
    const CoupledReduction red = coupled_system(p, cs);
    CHECK(red.effective_b == doctest::Approx(0.3 + cs * 0.2));
    CHECK(coupled_det_ratio_spread(red, 100) < 1e-10);
    CHECK(coupled_embedding_residual(p, cs, 25) < 1e-10);
  }

  // b2 = 0: two copies of the split-equation content, masses m(1 +- b1)/a.
  const CoupledReduction dec = coupled_system({1.0, 0.0, 0.3, 0.0, 1.0}, +1);
  CHECK(dec.effective_b == 0.3);
  // b1 = b2 = 0: pure Dirac-squared structure, all masses m/a.
  const CoupledReduction pure = coupled_system({2.0, 0.0, 0.0, 0.0, 1.0}, +1);
  const auto masses = det_mass_roots(pure.factor_b1, Vec3(0.2, 0.0, 0.1), 1.0);
  REQUIRE(masses.size() == 1);
  CHECK(std::abs(masses[0] - 0.5) < 1e-9);
}

TEST_CASE("8 solutions: 4 null directions per mass across both energy signs") {
  const BarutParams p{1.1, 0.35, 0, 0, 1.2};
  const Vec3 k(0.4, 0.1, -0.3);
  const PolyOperator op = barut_operator(param_map(p));
  int total = 0;
  for (const auto& line : second_order_spectrum(p).lines) {
    const double e = std::sqrt(k.squaredNorm() + line.mass * line.mass);
    total += nullity(op.eval(e, k)) + nullity(op.eval(-e, k));
  }
  CHECK(total == 8);
}

TEST_CASE("field equation pair") {
  const FieldEquationPair fe = field_equation_pair(LagrangianParams::dirac(0.8));
  const Vec3 k(0.3, 0.3, 0.3);
  const SpinorState u = build_u_spinor(k, 0.5, 1.0, 0.0, 0.8);
  CHECK((fe.psi_op.eval(u.energy, k) * u.components).norm() < 1e-13);
  CHECK(PolyOperator::max_coeff_diff(fe.psibar_op, cxd(-1.0) * fe.psi_op) == 0.0);
}

TEST_CASE("verify suite aggregate") {
  for (const auto& r : verify_barut()) {
    INFO(r.name);
    CHECK(r.pass);
  }
}
