#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "barutkit/noether.hpp"
#include "barutkit/verify.hpp"

using namespace barutkit;

namespace {
ModeSet sample_modeset() {
  ModeSet ms;
  ms.L = 16.0;
  ms.m = 1.0;
  ms.modes = {{{1, 0, 0}, 0.5, cxd(0.8, 0.2), cxd(0.1, -0.3)},
              {{0, 1, 0}, -0.5, cxd(-0.4, 0.5), cxd(0.6, 0.0)},
              {{0, 0, 0}, 0.5, cxd(0.3, 0.0), cxd(0.0, 0.4)}};
  return ms;
}
}  // namespace

TEST_CASE("modeset validation") {
  ModeSet ms = sample_modeset();
  ms.modes.push_back(ms.modes.front());
  CHECK_THROWS_AS(validate_modeset(ms), std::domain_error);
  ms = sample_modeset();
  ms.modes[0].h = 0.3;
  CHECK_THROWS_AS(validate_modeset(ms), std::domain_error);
  ms = sample_modeset();
  ms.L = -1.0;
  CHECK_THROWS_AS(validate_modeset(ms), std::domain_error);
}

TEST_CASE("euler-lagrange variation reproduces the field-equation operator") {
  for (double a3 : {0.0, 0.4}) {
    const LagrangianParams lp{cxd(0.0, 0.5), cxd(0.21, 0.0), cxd(a3, 0.0), cxd(0.9, 0.0)};
    CHECK(PolyOperator::max_coeff_diff(el_variation_operator(lp), field_equation_pair(lp).psi_op) <
          1e-14);
  }
  // alpha3 never reaches the field equation.
  LagrangianParams l0{cxd(0.0, 0.5), cxd(0.21, 0.0), cxd(0.0, 0.0), cxd(0.9, 0.0)};
  LagrangianParams l3 = l0;
  l3.alpha3 = cxd(2.7, 0.0);
  CHECK(PolyOperator::max_coeff_diff(el_variation_operator(l0), el_variation_operator(l3)) < 1e-14);
}

TEST_CASE("lagrangian density") {
  const ModeSet ms = sample_modeset();
  const PlaneWaveField f = build_field(ms);
  const LagrangianParams dirac = LagrangianParams::dirac(ms.m);

  PlaneWaveField empty;
  CHECK(std::abs(lagrangian_density_at(dirac, ms.m, empty, Vec3(1, 2, 3), 0.5)) == 0.0);
  for (const Vec3& x : {Vec3(0, 0, 0), Vec3(2.7, 0.4, 9.1)})
    CHECK(std::abs(lagrangian_density_at(dirac, ms.m, f, x, 1.1)) < 1e-12);

  // alpha3-only density on a single helicity plane wave: finite value recorded,
  // and it comes from an antisymmetric sigma sandwich (diagonal terms vanish).
  LagrangianParams a3only{cxd(0.0, 0.0), cxd(0.0, 0.0), cxd(1.0, 0.0), cxd(0.0, 0.0)};
  ModeSet single;
  single.L = 16.0;
  single.m = 1.0;
  single.modes = {{{1, 2, 0}, 0.5, cxd(1.0, 0.0), cxd(0.0, 0.0)}};
  const PlaneWaveField fs = build_field(single);
  CHECK(std::abs(lagrangian_density_at(a3only, 1.0, fs, Vec3(0.3, 0.1, 0.9), 0.0)) < 1e-13);
}

TEST_CASE("euler-lagrange residual on fields") {
  const ModeSet ms = sample_modeset();
  const PlaneWaveField f = build_field(ms);
  CHECK(euler_lagrange_residual(LagrangianParams::dirac(ms.m), f) < 1e-12);

  // Barut params with a wrong-mass plane wave: strictly positive.
  const LagrangianParams barut = LagrangianParams::onshell(cxd(0.0, 0.5), cxd(0.00482, 0.0),
                                                           cxd(0.0, 0.0), 1.4);
  CHECK(euler_lagrange_residual(barut, f) > 1e-3);
}

TEST_CASE("invariants against the quadrature oracle") {
  const ModeSet ms = sample_modeset();
  for (const LagrangianParams& lp :
       {LagrangianParams::dirac(ms.m),
        LagrangianParams::onshell(cxd(0.0, 0.5), cxd(0.18, 0.0), cxd(0.25, 0.0), ms.m)}) {
    const InvariantReport rep = invariants(lp, ms, 0.6);
    const cxd hq = hamiltonian_quadrature(lp, ms, 0.6);
    const cxd qq = charge_quadrature(lp, ms, 0.6);
    CHECK(std::abs(rep.H.total() - hq) < 1e-10 * std::abs(hq));
    CHECK(std::abs(rep.Q.total() - qq) < 1e-10 * std::abs(qq));

    // Conservation at a second time.
    const InvariantReport rep2 = invariants(lp, ms, 3.7);
    CHECK(std::abs(rep.H.total() - rep2.H.total()) < 1e-10);
    CHECK(std::abs(rep.Q.total() - rep2.Q.total()) < 1e-10);
    CHECK(std::abs(rep.Q.alpha3) < 1e-12);
    CHECK(std::abs(rep.H.alpha3) < 1e-12);
  }

  ModeSet empty = ms;
  empty.modes.clear();
  const InvariantReport rep = invariants(LagrangianParams::dirac(1.0), empty, 0.0);
  CHECK(std::abs(rep.H.total()) == 0.0);
  CHECK(std::abs(rep.Q.total()) == 0.0);
}

TEST_CASE("mode coefficients") {
  const LagrangianParams dirac = LagrangianParams::dirac(1.0);
  // alpha1 = i/2, alpha2 = 0, p = 0: -(2 m^2/m)(i/2) = -i m.
  CHECK(std::abs(mode_hamiltonian_coefficient(dirac, Vec3::Zero(), 1.0) - cxd(0.0, -1.0)) < 1e-15);

  // Coefficient ratio at two momenta is E1^2 / E2^2.
  const Vec3 k1(0.3, 0.0, 0.4), k2(1.0, -0.5, 0.2);
  const double e1 = std::sqrt(k1.squaredNorm() + 1.0), e2 = std::sqrt(k2.squaredNorm() + 1.0);
  const cxd ratio = mode_hamiltonian_coefficient(dirac, k1, 1.0) / mode_hamiltonian_coefficient(dirac, k2, 1.0);
  CHECK(std::abs(ratio - (e1 * e1) / (e2 * e2)) < 1e-14);

  // alpha2 = -alpha1 / m kills the coefficient at every momentum.
  LagrangianParams tuned = dirac;
  tuned.alpha2 = -tuned.alpha1 / 1.0;
  CHECK(std::abs(mode_hamiltonian_coefficient(tuned, k2, 1.0)) < 1e-15);

  // Charge coefficient: diagonal form, and Q/H ratio 1/E (the quotient of the
  // H and Q per-mode coefficients).
  const cxd qc = mode_charge_coefficient(dirac, k1, 0.5, 0.5, 1.0);
  CHECK(std::abs(qc - (-2.0 * e1 * cxd(0.0, 0.5))) < 1e-13);
  CHECK(std::abs(qc / mode_hamiltonian_coefficient(dirac, k1, 1.0) - 1.0 / e1) < 1e-14);

  // alpha3 bilinear vanishes for helicity pairs at random momenta.
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dis(-2.0, 2.0);
  for (int i = 0; i < 30; ++i) {
    const Vec3 k(dis(rng), dis(rng), dis(rng));
    for (double h : {0.5, -0.5})
      for (double hp : {0.5, -0.5}) CHECK(std::abs(alpha3_charge_bilinear(k, h, hp, 1.0)) < 1e-12);
  }
}

TEST_CASE("anticommutator normalization") {
  CHECK(anticommutator_normalization(16.0, 1.0, {1, 2, 0}, {0, 0, 1}, 0.5, 0.5) == 0.0);
  CHECK(anticommutator_normalization(16.0, 1.0, {1, 2, 0}, {1, 2, 0}, 0.5, -0.5) == 0.0);
  const double k = 2.0 * M_PI * std::sqrt(5.0) / 16.0;
  const double e = std::sqrt(k * k + 1.0);
  CHECK(anticommutator_normalization(16.0, 1.0, {1, 2, 0}, {1, 2, 0}, 0.5, 0.5) ==
        doctest::Approx(16.0 * 16.0 * 16.0 / e).epsilon(1e-14));
}

TEST_CASE("two-branch charge density changes sign, single branch does not") {
  const TwoBranchField tb = barut_two_branch_field({1.0, 0.5, 0, 0, 1.0});
  CHECK(euler_lagrange_residual(tb.lagr, tb.field) < 1e-12);  // both branches on shell
  const auto [lo, hi] = charge_density_range(tb);
  CHECK(lo < -1e-8);
  CHECK(hi > 1e-8);
}

TEST_CASE("verify suite aggregate") {
  for (const auto& r : verify_noether()) {
    INFO(r.name);
    CHECK(r.pass);
  }
}
