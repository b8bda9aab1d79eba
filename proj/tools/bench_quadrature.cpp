// Times the serial reference quadrature kernel against the OpenMP one on the
// Hamiltonian-density integrand and reports the agreement.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "barutkit/noether.hpp"
#include "barutkit/quadrature.hpp"

using namespace barutkit;
using clock_type = std::chrono::steady_clock;

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 48;
  int reps = argc > 2 ? std::atoi(argv[2]) : 3;

  ModeSet ms;
  ms.L = 16.0;
  ms.m = 1.0;
  ms.modes = {{{1, 0, 0}, 0.5, cxd(0.8, 0.2), cxd(0.1, -0.3)},
              {{0, 1, 0}, -0.5, cxd(-0.4, 0.5), cxd(0.6, 0.0)},
              {{1, 1, -1}, 0.5, cxd(0.3, 0.1), cxd(0.2, 0.4)}};
  const LagrangianParams lp = LagrangianParams::onshell(cxd(0.0, 0.5), 0.15, 0.1, ms.m);
  const PlaneWaveField f = build_field(ms);
  const DensitySpec spec = stress_spec(lp, ms.m, 4, 4);

#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not available (serial fallback)\n");
#endif
  std::printf("grid %d^3, %d repetitions, %zu field terms, %zu bilinears\n", n, reps, f.terms.size(),
              spec.size());

  cxd serial{}, parallel{};
  double t_serial = 0.0, t_parallel = 0.0;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clock_type::now();
    serial = grid_quadrature_serial(f, spec, ms.L, 0.3, n);
    auto t1 = clock_type::now();
    parallel = grid_quadrature_parallel(f, spec, ms.L, 0.3, n);
    auto t2 = clock_type::now();
    t_serial += std::chrono::duration<double>(t1 - t0).count();
    t_parallel += std::chrono::duration<double>(t2 - t1).count();
  }
  t_serial /= reps;
  t_parallel /= reps;

  std::printf("serial   : %8.3f ms   value (%.12e, %.12e)\n", 1e3 * t_serial, serial.real(), serial.imag());
  std::printf("parallel : %8.3f ms   value (%.12e, %.12e)\n", 1e3 * t_parallel, parallel.real(),
              parallel.imag());
  std::printf("speedup  : %.2fx, |serial - parallel| = %.3e\n", t_serial / t_parallel,
              std::abs(serial - parallel));

  const cxd closed = -box_integral(f, spec, ms.L, 0.3).total();
  std::printf("closed-form -int T44: (%.12e, %.12e), |diff| = %.3e\n", closed.real(), closed.imag(),
              std::abs(closed - (-serial)));
  return 0;
}
