#pragma once

#include <stdexcept>

#include "barutkit/algebra.hpp"
#include "barutkit/types.hpp"

namespace barutkit {

// Pure boosts acting on the 2-spinor halves, Lambda_{R,L} = exp(+- sigma.phi/2),
// cosh phi = E/m, sinh phi = |p|/m. Built from the half-angle closed form
//   cosh(phi/2) = sqrt((E+m)/2m), sinh(phi/2) = |p| / sqrt(2m(E+m)),
// which is stable down to |p| = 0.
struct BoostPair {
  Mat2 lambdaR;
  Mat2 lambdaL;
};
BoostPair boost_pair(const Vec3& p, double m);

// Helicity eigenspinors of sigma.phat with the spherical-angle phases
//   phi(+) = (cos t/2, e^{i az} sin t/2), phi(-) = (-e^{-i az} sin t/2, cos t/2).
// At p = 0 the axis defaults to +z (t = az = 0).
Vec2 helicity_spinor(const Vec3& p, double h);
double azimuth_of(const Vec3& p);

struct RestRelationParams {
  cxd a{1.0, 0.0};
  cxd b{0.0, 0.0};
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi = 0.0;  // azimuth entering Xi
};

// phi_L^h(0) = a (-1)^{1/2-h} e^{i(th1+th2)} Theta [phi_R]^* + b e^{2i th_h} Xi^{-1} [phi_R]^*
// (th_h = th1 for h = +1/2, th2 for h = -1/2).
Vec2 rest_relation(const RestRelationParams& params, double h, const Vec2& phiR0);

enum class Kind { U, V };
enum class MassBranch { Plus, Minus };  // mass m(1 + b)/a resp. m(1 - b)/a

double branch_mass(double a, double b, double m, MassBranch branch);

struct SpinorState {
  Vec4 components;  // chiral representation, column(phi_R, phi_L)
  double energy = 0.0;
  Vec3 momentum = Vec3::Zero();
  double h = 0.5;
  Kind kind = Kind::U;
  double mass = 0.0;
};

// Positive-energy solution of the boosted rest-frame relations on the chosen mass
// branch, helicity h, normalized ubar u = 1. The two helicities of a branch
// share one overall normalization (the b-coupling locks them); on the Plus
// branch this shows up as a relative sign 2h between the helicity spinors.
SpinorState build_u_spinor(const Vec3& p, double h, double a, double b, double m,
                           MassBranch branch = MassBranch::Minus);

// Charge conjugate v_h(p) = C [u_h(p)]^*; satisfies (phat + M) v = 0, vbar v = -1.
SpinorState v_from_u(const SpinorState& u);

// || [a phat/m - 1] u_h + i b (-1)^{1/2-h} gamma5 C u*_{-h} ||.
double eq7_residual(const SpinorState& u_h, const SpinorState& u_minus_h, double a, double b,
                    double m);

// Worst 2-spinor residual of the two boosted relations on a helicity pair.
double eq56_residual(const SpinorState& u_plus, const SpinorState& u_minus, double a, double b,
                     double m);

// The 8x8 linear system behind the boosted relations, acting on stacked
// (phiR^+, phiR^-, phiL^+, phiL^-); nontrivial null space iff (a,b,m,p) on shell.
Eigen::MatrixXcd spinor_system_matrix(const Vec3& p, double p0, double a, double b, double m);

// Gram matrix of psibar_i psi_j over states sharing one momentum.
Eigen::MatrixXcd normalization_check(const std::vector<SpinorState>& states);

}  // namespace barutkit
