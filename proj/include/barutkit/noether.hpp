#pragma once

#include <array>
#include <vector>

#include "barutkit/barut.hpp"
#include "barutkit/lagrangian_params.hpp"
#include "barutkit/planewave.hpp"

namespace barutkit {

struct Mode {
  std::array<int, 3> n{0, 0, 0};  // k = 2 pi n / L
  double h = 0.5;
  cxd a{0.0, 0.0};  // particle amplitude
  cxd b{0.0, 0.0};  // antiparticle amplitude (enters the field as conj(b))
};

struct ModeSet {
  double L = 16.0;
  double m = 1.0;
  std::vector<Mode> modes;
};

void validate_modeset(const ModeSet& ms);
Vec3 mode_momentum(const ModeSet& ms, const Mode& mode);
double mode_energy(const ModeSet& ms, const Mode& mode);

// Classical box field per the mode expansion, weights sqrt(m / (L^3 E_p)).
PlaneWaveField build_field(const ModeSet& ms);

// Euclidean continuation of the mass coupling used by the invariant densities:
//   alpha4 -> -i (alpha4 - alpha2 m^2) - alpha2 m^2.
// The pure-mass part rotates by -i under x4 = it; the alpha2 sector is kept
// real so the per-mode coefficients keep the (alpha1 + m alpha2) form.
cxd euclid_mass_coupling(const LagrangianParams& lp, double m);

// Density encodings (Euclidean indices 1..4).
DensitySpec lagrangian_spec(const LagrangianParams& lp, double m);
DensitySpec stress_spec(const LagrangianParams& lp, double m, int mu, int nu);
DensitySpec current_spec(const LagrangianParams& lp, int mu);
DensitySpec charge_density_spec(const LagrangianParams& lp);  // -i J_4
DensitySpec spin_spec(const LagrangianParams& lp, int mu, int nu, int lambda);

struct TermBreakdown {
  cxd alpha1{0.0, 0.0}, alpha2{0.0, 0.0}, alpha3{0.0, 0.0}, mass{0.0, 0.0};
  cxd total() const { return alpha1 + alpha2 + alpha3 + mass; }
};

struct InvariantReport {
  double t = 0.0;
  TermBreakdown H, Q;       // classical values of -int T44 and -i int J4
  cxd H_normal{0.0, 0.0};   // antiparticle quadratics reordered (b b+ -> -b+ b)
  cxd Q_normal{0.0, 0.0};
  std::vector<std::pair<Vec3, cxd>> charge_density_samples;
};

InvariantReport invariants(const LagrangianParams& lp, const ModeSet& ms, double t);

// Independent oracle: N^3-point Riemann quadrature of the same densities.
cxd hamiltonian_quadrature(const LagrangianParams& lp, const ModeSet& ms, double t, int n = 32);
cxd charge_quadrature(const LagrangianParams& lp, const ModeSet& ms, double t, int n = 32);

// -(2 E^2 / m)(alpha1 + m alpha2), the per-mode coefficient of the
// second-quantized Hamiltonian.
cxd mode_hamiltonian_coefficient(const LagrangianParams& lp, const Vec3& k, double m);

// ubar_h sigma_{i4} k_i u_{h'} at momentum k (vanishes for helicity spinors).
cxd alpha3_charge_bilinear(const Vec3& k, double h, double hp, double m);

// -(2 E / m)[ (alpha1 + m alpha2) delta_hh' - i alpha3 * bilinear ].
cxd mode_charge_coefficient(const LagrangianParams& lp, const Vec3& k, double h, double hp, double m);

// Box form of the anticommutator weight: (L^3 m / E_p) delta_pk delta_hh'.
double anticommutator_normalization(double box_l, double m, const std::array<int, 3>& np,
                                    const std::array<int, 3>& nk, double h, double hp);

using Rank3 = std::array<std::array<std::array<cxd, 4>, 4>, 4>;  // [mu][nu][lambda], Euclid 1..4 -> 0..3
Rank3 spin_tensor_sample(const LagrangianParams& lp, const ModeSet& ms, const Vec3& x, double t);

cxd lagrangian_density_at(const LagrangianParams& lp, double m, const PlaneWaveField& f, const Vec3& x,
                          double t);

// Worst plane-wave residual of [2 a1 g.d - a2 d.d - a4] on the field (Minkowski rules).
double euler_lagrange_residual(const LagrangianParams& lp, const PlaneWaveField& f);

// Generic Euler-Lagrange variation of the Lagrangian term list; must reproduce
// field_equation_pair(lp).psi_op coefficientwise, with no alpha3 contribution.
PolyOperator el_variation_operator(const LagrangianParams& lp);

}  // namespace barutkit
