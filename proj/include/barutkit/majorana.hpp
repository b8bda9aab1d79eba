#pragma once

#include "barutkit/algebra.hpp"
#include "barutkit/barut.hpp"
#include "barutkit/planewave.hpp"

namespace barutkit {

// Field / operator transport psi -> U psi, O -> U O U^{-1}. Rejects non-unitary U.
Vec4 to_majorana(const Vec4& psi, const Mat4& u);
Vec4 from_majorana(const Vec4& psi, const Mat4& u);
Mat4 to_majorana(const Mat4& op, const Mat4& u);

// Momentum images of the split equations (Majorana-representation gammas):
//   first  = (a/m) phat - (1 + b)   [ a i dslash/m - b - 1 ]
//   second = (a/m) phat - (1 - b)   [ a i dslash/m + b - 1 ]
std::pair<PolyOperator, PolyOperator> split_equations(const BarutParams& p);

// Realness of [ (a/m) i dslash - c ] as a real-linear operator: apply it to
// random real cos/sin plane-wave pairs and return the largest imaginary part
// of the result (pure imaginary gammas make i dslash real).
double split_realness_residual(Representation rep, double a, double m, unsigned seed = 3);

// Residual of the recombined operator [2a i g.d / m + a^2 d.d / m^2 + b^2 - 1] on the
// superpositions phi = Psi1 + Psi2, chi = Psi1 - Psi2, where Psi1, Psi2 are
// real plane waves solving the split equations at spatial momenta k1, k2.
// Throws on b = 0 (the recombination multiplies through by b).
double recombine_residual(const BarutParams& p, const Vec3& k1, const Vec3& k2);

// Recombined second-order operator in the Majorana representation (momentum image).
PolyOperator recombined_operator(const BarutParams& p);

// Real plane-wave solution of [ (a/m) i dslash - c ] = 0 at spatial momentum k
// in the Majorana representation (mass = c m / a must be positive).
PlaneWaveField majorana_plane_wave(double a, double c, double m, const Vec3& k);

}  // namespace barutkit
