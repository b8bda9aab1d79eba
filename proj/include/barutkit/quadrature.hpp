#pragma once

#include "barutkit/planewave.hpp"

namespace barutkit {

// Riemann quadrature of a bilinear density over the periodic L^3 box at fixed
// time: sum over an N^3 uniform grid times (L/N)^3. Exact (to roundoff) for
// box fields whose mode-number differences stay below N per axis, which makes
// it the independent oracle for the closed-form box integrals.
//
// The serial kernel is the reference implementation; the OpenMP kernel fans
// the z-slices out over threads. Both accumulate per-slice partial sums with
// compensated summation and combine them in slice order, so the two kernels
// return bitwise-identical results regardless of thread count.
cxd grid_quadrature_serial(const PlaneWaveField& f, const DensitySpec& spec, double box_l, double t,
                           int n = 32);
cxd grid_quadrature_parallel(const PlaneWaveField& f, const DensitySpec& spec, double box_l, double t,
                             int n = 32);

// Dispatches to the parallel kernel when OpenMP is available.
cxd grid_quadrature(const PlaneWaveField& f, const DensitySpec& spec, double box_l, double t,
                    int n = 32);

}  // namespace barutkit
