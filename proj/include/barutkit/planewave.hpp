#pragma once

#include <array>
#include <optional>
#include <vector>

#include "barutkit/poly_operator.hpp"
#include "barutkit/types.hpp"

namespace barutkit {

// One plane-wave term  amp * exp( i s (k.x - E t) ).
// Euclidean bookkeeping (x4 = it, p4 = iE) gives the derivative factors
//   d/dx_j -> i s k_j,   d4 = -i d/dt -> -s E
// on the term, and the conjugated factors on its PsiBar image.
struct WaveTerm {
  Vec4 amp = Vec4::Zero();
  double energy = 0.0;
  Vec3 k = Vec3::Zero();
  int sign = +1;                       // frequency sign s
  bool antiparticle = false;           // true for the b-amplitude (v) pieces
  std::optional<std::array<int, 3>> lattice;  // box quantum numbers when applicable
};

struct PlaneWaveField {
  std::vector<WaveTerm> terms;

  Vec4 eval(const Vec3& x, double t) const;
  Vec4 eval_deriv_euclid(int mu, const Vec3& x, double t) const;  // mu in 1..4

  // Apply a Minkowski momentum-space operator (plane-wave rule i d -> p on
  // e^{-ipx} terms, i d -> -p on e^{+ipx} terms).
  PlaneWaveField apply_minkowski(const PolyOperator& op) const;

  // Largest 4-norm of op applied to any single term (zero iff op kills the field).
  double minkowski_residual(const PolyOperator& op) const;
};

// One bilinear  coeff * (d_A PsiBar) Gamma (d_B Psi), Euclidean indices 1..4,
// at most one derivative per side. `coupling` tags the report breakdown.
struct Bilin {
  cxd coeff{1.0, 0.0};
  Mat4 gamma = Mat4::Identity();
  int dleft = 0;   // 0 = none, else 1..4
  int dright = 0;
  int coupling = 0;  // 1..3 = alpha_i, 4 = mass term
};

using DensitySpec = std::vector<Bilin>;

// Pointwise value of the density at (x, t).
cxd density_at(const PlaneWaveField& f, const DensitySpec& spec, const Vec3& x, double t);

// Closed-form box integral int d3x of the density over the L^3 box: spatial
// orthogonality collapses term pairs onto exact lattice matches. All terms
// must carry lattice quantum numbers. Values are split by pair class
// (uu / cross / vv order of {PsiBar-mode, Psi-mode}).
struct BoxIntegral {
  cxd uu{0.0, 0.0};
  cxd cross{0.0, 0.0};
  cxd vv{0.0, 0.0};
  cxd total() const { return uu + cross + vv; }
  // Fermionic reordering of the antiparticle quadratics (b b-dag -> -b-dag b).
  cxd normal_ordered() const { return uu + cross - vv; }
};
BoxIntegral box_integral(const PlaneWaveField& f, const DensitySpec& spec, double box_l, double t);

// Same, with per-coupling breakdown keyed 1..4 by Bilin::coupling.
std::array<BoxIntegral, 5> box_integral_by_coupling(const PlaneWaveField& f, const DensitySpec& spec,
                                                    double box_l, double t);

}  // namespace barutkit
