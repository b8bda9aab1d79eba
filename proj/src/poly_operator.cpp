#include "barutkit/poly_operator.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace barutkit {

namespace {

double smallest_singular_value(const Mat4& m) {
  Eigen::JacobiSVD<Mat4> svd(m);
  return svd.singularValues()(3);
}

// Ternary search for the minimum of a V-shaped function on [lo, hi].
template <class F>
double ternary_min(F f, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::abs(hi)); ++it) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> real_poly_roots(const std::vector<double>& coeffs, double tol) {
  // Strip negligible leading coefficients.
  int deg = static_cast<int>(coeffs.size()) - 1;
  double scale = 0.0;
  for (double c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return {};
  while (deg > 0 && std::abs(coeffs[static_cast<size_t>(deg)]) < 1e-13 * scale) --deg;
  if (deg < 1) return {};

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i)
    comp(i, deg - 1) = -coeffs[static_cast<size_t>(i)] / coeffs[static_cast<size_t>(deg)];

  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  std::vector<double> roots;
  for (int i = 0; i < deg; ++i) {
    cxd z = es.eigenvalues()(i);
    if (std::abs(z.imag()) < tol * (1.0 + std::abs(z.real()))) roots.push_back(z.real());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> det_energy_roots(const PolyOperator& op, const Vec3& k, double p0_max) {
  // Determinant roots of these operators have even multiplicity, so sign
  // changes are useless and det-based refinement is noise-floored at
  // sqrt(eps). The smallest singular value instead falls linearly to zero at
  // every rank drop: scan it on a grid, zoom around each local minimum, and
  // finish with a ternary search.
  auto smin = [&](double x) { return smallest_singular_value(op.eval(x, k)); };

  const int n_coarse = 384;
  std::vector<double> grid(n_coarse), val(n_coarse);
  for (int i = 0; i < n_coarse; ++i) {
    grid[static_cast<size_t>(i)] = (i + 0.5) * p0_max / n_coarse;
    val[static_cast<size_t>(i)] = smin(grid[static_cast<size_t>(i)]);
  }

  std::vector<double> out;
  auto polish = [&](double lo, double hi) {
    const double r = ternary_min(smin, std::max(lo, 1e-12), std::min(hi, p0_max));
    Eigen::JacobiSVD<Mat4> svd(op.eval(r, k));
    if (svd.singularValues()(3) < 1e-6 * (svd.singularValues()(0) + 1.0)) out.push_back(r);
  };

  for (int i = 0; i < n_coarse; ++i) {
    const bool left_ok = i == 0 || val[static_cast<size_t>(i)] < val[static_cast<size_t>(i - 1)];
    const bool right_ok =
        i == n_coarse - 1 || val[static_cast<size_t>(i)] <= val[static_cast<size_t>(i + 1)];
    if (!left_ok || !right_ok) continue;
    const double cell = p0_max / n_coarse;
    const double lo = grid[static_cast<size_t>(i)] - 2.0 * cell,
                 hi = grid[static_cast<size_t>(i)] + 2.0 * cell;
    // Fine scan inside the window: a coarse cell can hide two nearby roots.
    const int n_fine = 96;
    std::vector<double> fv(n_fine);
    for (int j = 0; j < n_fine; ++j) fv[static_cast<size_t>(j)] = smin(lo + (hi - lo) * (j + 0.5) / n_fine);
    for (int j = 0; j < n_fine; ++j) {
      const bool l = j == 0 || fv[static_cast<size_t>(j)] < fv[static_cast<size_t>(j - 1)];
      const bool r = j == n_fine - 1 || fv[static_cast<size_t>(j)] <= fv[static_cast<size_t>(j + 1)];
      if (l && r)
        polish(lo + (hi - lo) * (j - 0.5) / n_fine, lo + (hi - lo) * (j + 1.5) / n_fine);
    }
  }

  std::sort(out.begin(), out.end());
  std::vector<double> uniq;
  for (double r : out)
    if (uniq.empty() || std::abs(r - uniq.back()) > 1e-8 * (1.0 + std::abs(r))) uniq.push_back(r);
  return uniq;
}

std::vector<double> det_mass_roots(const PolyOperator& op, const Vec3& k, double mass_max) {
  const double k2 = k.squaredNorm();
  const double p0_max = std::sqrt(mass_max * mass_max + k2) * 1.25;
  std::vector<double> masses;
  for (double e : det_energy_roots(op, k, p0_max)) {
    double m2 = e * e - k2;
    if (m2 < -1e-8) continue;
    masses.push_back(std::sqrt(std::max(0.0, m2)));
  }
  std::sort(masses.begin(), masses.end());
  std::vector<double> uniq;
  for (double m : masses)
    if (uniq.empty() || std::abs(m - uniq.back()) > 1e-7 * (1.0 + m)) uniq.push_back(m);
  return uniq;
}

int nullity(const Mat4& m, double tol) {
  Eigen::JacobiSVD<Mat4> svd(m);
  const auto& sv = svd.singularValues();
  int n = 0;
  for (int i = 0; i < 4; ++i)
    if (sv(i) < tol * (sv(0) + 1e-300)) ++n;
  return n;
}

}  // namespace barutkit
