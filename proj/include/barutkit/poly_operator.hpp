#pragma once

#include <array>
#include <map>
#include <vector>

#include "barutkit/types.hpp"

namespace barutkit {

// Matrix-valued polynomial in the four momentum components (p0, p1, p2, p3).
// Momentum components commute, so products are plain coefficient convolutions.
template <int N>
struct PolyOperatorT {
  using Mat = Eigen::Matrix<cxd, N, N>;
  using Key = std::array<int, 4>;  // exponents of p0..p3
  std::map<Key, Mat> terms;

  static PolyOperatorT constant(const Mat& m) {
    PolyOperatorT p;
    p.terms[{0, 0, 0, 0}] = m;
    return p;
  }

  PolyOperatorT& add_term(const Key& k, const Mat& m) {
    auto it = terms.find(k);
    if (it == terms.end())
      terms[k] = m;
    else
      it->second += m;
    return *this;
  }

  PolyOperatorT operator+(const PolyOperatorT& o) const {
    PolyOperatorT r = *this;
    for (const auto& [k, m] : o.terms) r.add_term(k, m);
    return r;
  }
  PolyOperatorT operator-(const PolyOperatorT& o) const {
    PolyOperatorT r = *this;
    for (const auto& [k, m] : o.terms) r.add_term(k, Mat(-m));
    return r;
  }
  PolyOperatorT operator*(const PolyOperatorT& o) const {
    PolyOperatorT r;
    for (const auto& [ka, ma] : terms)
      for (const auto& [kb, mb] : o.terms) {
        Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]};
        r.add_term(k, Mat(ma * mb));
      }
    return r;
  }
  friend PolyOperatorT operator*(cxd s, const PolyOperatorT& p) {
    PolyOperatorT r = p;
    for (auto& [k, m] : r.terms) m *= s;
    return r;
  }

  Mat eval(const std::array<cxd, 4>& p) const {
    Mat out = Mat::Zero();
    for (const auto& [k, m] : terms) {
      cxd mono = 1.0;
      for (int i = 0; i < 4; ++i)
        for (int e = 0; e < k[static_cast<size_t>(i)]; ++e) mono *= p[static_cast<size_t>(i)];
      out += mono * m;
    }
    return out;
  }
  Mat eval(double p0, const Vec3& k) const { return eval({cxd(p0), cxd(k.x()), cxd(k.y()), cxd(k.z())}); }

  int degree() const {
    int d = 0;
    for (const auto& [k, m] : terms) d = std::max(d, k[0] + k[1] + k[2] + k[3]);
    return d;
  }

  double max_coeff_norm() const {
    double v = 0.0;
    for (const auto& [k, m] : terms) v = std::max(v, m.cwiseAbs().maxCoeff());
    return v;
  }

  static double max_coeff_diff(const PolyOperatorT& a, const PolyOperatorT& b) {
    return (a - b).max_coeff_norm();
  }
};

using PolyOperator = PolyOperatorT<4>;
using PolyOperator8 = PolyOperatorT<8>;

// All real roots of a real-coefficient polynomial (ascending coefficients),
// multiple roots included once. Interpolation + companion eigenvalues, then a
// Newton / ternary polish on the supplied exact evaluator when given.
std::vector<double> real_poly_roots(const std::vector<double>& coeffs, double tol = 1e-9);

// Positive-energy determinant roots of a 4x4 momentum-space operator at fixed
// spatial momentum: p0 values in (0, p0_max) where det Op(p0, k) = 0, found by
// Chebyshev interpolation of the determinant, companion-matrix roots, and a
// final ternary-search polish on the smallest singular value. Independent of
// any closed-form spectrum.
std::vector<double> det_energy_roots(const PolyOperator& op, const Vec3& k, double p0_max);

// Invariant masses sqrt(p0^2 - |k|^2) of the det_energy_roots, deduplicated.
std::vector<double> det_mass_roots(const PolyOperator& op, const Vec3& k, double mass_max);

// Dimension of the null space of m at relative threshold tol (SVD).
int nullity(const Mat4& m, double tol = 1e-8);

}  // namespace barutkit
