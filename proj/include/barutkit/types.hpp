#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

namespace barutkit {

using cxd  = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;
using Vec3 = Eigen::Vector3d;

inline constexpr cxd I{0.0, 1.0};

inline double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

// |a - b| in the max-entry norm; the default equality check everywhere.
inline double max_diff(const Mat4& a, const Mat4& b) { return max_abs(Mat4(a - b)); }
inline double max_diff(const Mat2& a, const Mat2& b) { return max_abs(Mat2(a - b)); }

// Knuth two_sum: s + err == a + b exactly.
struct TwoSum {
  double s, err;
};
inline TwoSum two_sum(double a, double b) {
  double s = a + b;
  double bp = s - a;
  double ap = s - bp;
  return {s, (a - ap) + (b - bp)};
}

// Neumaier compensated accumulator, used by the quadrature kernels.
struct KahanSum {
  double sum = 0.0, c = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      c += (sum - t) + x;
    else
      c += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + c; }
};

struct KahanSumC {
  KahanSum re, im;
  void add(cxd z) {
    re.add(z.real());
    im.add(z.imag());
  }
  cxd value() const { return {re.value(), im.value()}; }
};

}  // namespace barutkit
