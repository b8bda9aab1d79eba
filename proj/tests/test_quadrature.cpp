#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barutkit/noether.hpp"
#include "barutkit/quadrature.hpp"

using namespace barutkit;

namespace {
ModeSet sample_modeset() {
  ModeSet ms;
  ms.L = 12.0;
  ms.m = 0.8;
  ms.modes = {{{2, 0, -1}, 0.5, cxd(0.7, -0.1), cxd(0.2, 0.3)},
              {{0, 1, 1}, -0.5, cxd(0.1, 0.6), cxd(-0.5, 0.2)}};
  return ms;
}
}  // namespace

TEST_CASE("serial and parallel kernels agree bitwise") {
  const ModeSet ms = sample_modeset();
  const PlaneWaveField f = build_field(ms);
  const LagrangianParams lp = LagrangianParams::onshell(cxd(0.0, 0.5), cxd(0.1, 0.0), cxd(0.2, 0.0), ms.m);
  for (const DensitySpec& spec : {stress_spec(lp, ms.m, 4, 4), charge_density_spec(lp)}) {
    const cxd a = grid_quadrature_serial(f, spec, ms.L, 0.45, 24);
    const cxd b = grid_quadrature_parallel(f, spec, ms.L, 0.45, 24);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == b.imag());
  }
}

TEST_CASE("riemann quadrature is exact for box fields") {
  const ModeSet ms = sample_modeset();
  const PlaneWaveField f = build_field(ms);
  const LagrangianParams lp = LagrangianParams::dirac(ms.m);
  const DensitySpec spec = stress_spec(lp, ms.m, 4, 4);
  const cxd closed = box_integral(f, spec, ms.L, 0.45).total();
  // Mode-number differences stay below every grid size used here.
  for (int n : {16, 24, 32}) {
    const cxd grid = grid_quadrature_serial(f, spec, ms.L, 0.45, n);
    CHECK(std::abs(grid - closed) < 1e-12 * (1.0 + std::abs(closed)));
  }
}

TEST_CASE("compensated accumulation survives large cancellations") {
  KahanSum acc;
  acc.add(1e16);
  for (int i = 0; i < 1000; ++i) acc.add(0.1);
  acc.add(-1e16);
  CHECK(acc.value() == doctest::Approx(100.0).epsilon(1e-12));
}
