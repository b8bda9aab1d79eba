#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "barutkit/types.hpp"

namespace barutkit {

enum class Representation { Chiral, DiracStandard, Majorana };
enum class Metric { Minkowski, Euclidean };

// Pauli matrices.
Mat2 sigma_pauli(int k);  // k = 1,2,3

// Wigner operator for spin 1/2 and the azimuthal phase matrix,
//   Theta = -i sigma_2,  Xi = diag(e^{i phi}, e^{-i phi}).
struct WignerPair {
  Mat2 theta;
  Mat2 xi;
  double phi;
};
WignerPair wigner_pair(double phi);

// A full set of constant gamma matrices for one (representation, metric).
//
// Chiral base (Psi = column(phi_R, phi_L)):
//   gamma^0 = offdiag(1,1), gamma^k = offdiag(-sigma_k, +sigma_k),
//   gamma^5 = diag(1,1,-1,-1).
// DiracStandard and Majorana are obtained from it by the fixed unitaries
// chiral_to_dirac() and majorana_transform().
// Euclidean: gamma_4 = gamma^0, gamma_k = -i gamma^k (all four Hermitian);
// gamma5 is kept equal to the Minkowski matrix of the same representation.
struct GammaSet {
  std::array<Mat4, 4> g;  // Minkowski: gamma^0..gamma^3. Euclidean: g[0] = gamma_4, g[1..3] = gamma_1..3.
  Mat4 g5;
  Representation rep;
  Metric metric;

  // Minkowski index mu = 0..3; Euclidean index mu = 1..4 (gamma_4 = (*this)(4)).
  const Mat4& operator()(int mu) const {
    if (metric == Metric::Euclidean && mu == 4) return g[0];
    return g[static_cast<size_t>(mu)];
  }
};

GammaSet build_gammas(Representation rep, Metric metric);

// Unitary from the chiral base to DiracStandard: (1/sqrt2) [[1,1],[1,-1]] blocks.
Mat4 chiral_to_dirac();

// Unitary from the chiral base to the Majorana representation,
//   U = (1/2) [[1 - i Theta, 1 + i Theta], [-(1 + i Theta), 1 - i Theta]].
Mat4 majorana_transform();

// Transform from the chiral base into `rep` (identity for Chiral).
Mat4 rep_transform(Representation rep);

// Charge-conjugation matrix: chiral form [[0, i Theta], [-i Theta, 0]],
// transported to other representations as C -> R C R^T (psi -> C psi* rule).
// Verified identities: C^dag C = 1, C^2 = -1, C gamma_mu^* C^{-1} = -gamma_mu.
Mat4 charge_conjugation_matrix(Representation rep);

// sigma^{mu nu} = (i/2)[gamma^mu, gamma^nu] from the given set.
using SigmaTensor = std::array<std::array<Mat4, 4>, 4>;
SigmaTensor sigma_tensor(const GammaSet& gs);

// The 15 O(4,2) generators N_ab = (i/2) gamma_a gamma_b over
// gamma_a = {gamma^0..gamma^3, gamma5, i*1}. Labels are the index pairs a<b.
struct ConformalGenerator {
  int a, b;
  Mat4 n;
};
std::vector<ConformalGenerator> conformal_generators(const GammaSet& gs);
Mat4 conformal_generator(const GammaSet& gs, int a, int b);  // throws on a == b

// Largest least-squares residual of [N_ab, N_cd] expanded over {N_ef} + identity.
double conformal_closure_residual(const std::vector<ConformalGenerator>& gens);

}  // namespace barutkit
