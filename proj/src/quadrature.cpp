#include "barutkit/quadrature.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace barutkit {

namespace {

cxd slice_sum(const PlaneWaveField& f, const DensitySpec& spec, double box_l, double t, int n, int iz) {
  const double h = box_l / n;
  KahanSumC acc;
  Vec3 x;
  x.z() = iz * h;
  for (int iy = 0; iy < n; ++iy) {
    x.y() = iy * h;
    for (int ix = 0; ix < n; ++ix) {
      x.x() = ix * h;
      acc.add(density_at(f, spec, x, t));
    }
  }
  return acc.value();
}

cxd combine(const std::vector<cxd>& partial, double weight) {
  KahanSumC acc;
  for (cxd z : partial) acc.add(z);
  return acc.value() * weight;
}

}  // namespace

cxd grid_quadrature_serial(const PlaneWaveField& f, const DensitySpec& spec, double box_l, double t, int n) {
  std::vector<cxd> partial(static_cast<size_t>(n));
  for (int iz = 0; iz < n; ++iz) partial[static_cast<size_t>(iz)] = slice_sum(f, spec, box_l, t, n, iz);
  const double h = box_l / n;
  return combine(partial, h * h * h);
}

cxd grid_quadrature_parallel(const PlaneWaveField& f, const DensitySpec& spec, double box_l, double t, int n) {
  std::vector<cxd> partial(static_cast<size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int iz = 0; iz < n; ++iz) partial[static_cast<size_t>(iz)] = slice_sum(f, spec, box_l, t, n, iz);
  const double h = box_l / n;
  return combine(partial, h * h * h);
}

cxd grid_quadrature(const PlaneWaveField& f, const DensitySpec& spec, double box_l, double t, int n) {
#ifdef _OPENMP
  return grid_quadrature_parallel(f, spec, box_l, t, n);
#else
  return grid_quadrature_serial(f, spec, box_l, t, n);
#endif
}

}  // namespace barutkit
