#pragma once

#include <string>
#include <vector>

#include "barutkit/algebra.hpp"
#include "barutkit/lagrangian_params.hpp"
#include "barutkit/poly_operator.hpp"
#include "barutkit/types.hpp"

namespace barutkit {

struct BarutParams {
  double a = 1.0;
  double b = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double m = 1.0;
};

struct CanonicalParams {
  double alpha2 = 0.0;  // inverse energy
  double kappa = 0.0;   // energy
};

CanonicalParams param_map(const BarutParams& p);                  // alpha2 = a/2m, kappa = (1-b^2) m/2a
BarutParams inverse_param_map(const CanonicalParams& c, double m);

// Momentum-space Barut operator. Minkowski (plane waves e^{-ipx}, i d -> p):
//   phat - alpha2 p.p - kappa,  p.p = p0^2 - |p|^2,
// the sign convention under which the Dirac limit (alpha2=0, kappa=m) and the
// spectrum {m(1 +- b)/a} hold together. Euclidean: variable 0 is pi_4,
// delta contractions throughout.
PolyOperator barut_operator(const CanonicalParams& c, Metric metric = Metric::Minkowski);

// Momentum image of the two-mass form [2a phat/m - a^2 p.p/m^2 + b^2 - 1].
PolyOperator second_order_operator(const BarutParams& p);

struct SpectrumLine {
  double mass;
  int multiplicity;
  std::string branch;
};
struct SpectrumResult {
  std::vector<SpectrumLine> lines;  // sorted by mass, equal masses merged
  std::vector<std::string> warnings;
};
SpectrumResult second_order_spectrum(const BarutParams& p);

// Max coefficient norm of (a phat/m - (1+b))(a phat/m - (1-b)) + second_order_operator.
double factorization_residual(const BarutParams& p);

// alpha2 of the physical electron from the anomalous-moment condition g = 4 alpha/3:
//   (1/m) (2 alpha/3) / (1 + 4 alpha/3).
double alpha2_physical(double m, double alpha);

double muon_mass(double m_e, double alpha);
// m_e (1 + (3/2) alpha^{-1} sum n^4) over the given levels; {1,2} is the tau case.
double tau_mass(double m_e, double alpha, const std::vector<int>& levels = {1, 2});

struct ThirdOrderResult {
  PolyOperator factor_dirac;    // phat - m(1 +- b1 +- b2)/a
  PolyOperator factor_second;   // phat - (a/2m) p.p - m(1-b1^2)/2a
  PolyOperator expanded;        // independent monomial expansion of the product
  SpectrumResult spectrum;      // {m(1+-b1+-b2)/a} U {m(1+-b1)/a}
};
ThirdOrderResult third_order_operator(const BarutParams& p, int sign1, int sign2);

// Coupled (phi, chi) system with the linear-dependence constraint Psi1 = -i g5 Psi4,
// Psi2 = +i g5 Psi3 (constraint_sign = +1; the opposite sign choice selects the
// other pair of third-order first-factor branches). The reduced system acts on
// (phi, chi) and is first order; its solutions satisfy the full third-order
// operator of the matching branches.
struct CoupledReduction {
  PolyOperator8 system;
  PolyOperator factor_b1;   // first factor, branch (s, s)
  PolyOperator factor_b2;   // first factor, branch (-s, -s)
  double effective_b;       // b1 + b2 (or b1 - b2)
};
CoupledReduction coupled_system(const BarutParams& p, int constraint_sign = +1);

// max_p | det8(system) / (det4(factor_b1) det4(factor_b2)) - const | / |const|
// over n random momenta.
double coupled_det_ratio_spread(const CoupledReduction& red, int n_samples, unsigned seed = 7);

// Worst residual of the full third-order operator on plane-wave solutions of the reduced system.
double coupled_embedding_residual(const BarutParams& p, int constraint_sign, int n_samples,
                                  unsigned seed = 11);

// Momentum images (plane waves e^{-ipx}) of the field equation and its Dirac conjugate:
//   psi_op    = -2i alpha1 phat + alpha2 p.p - alpha4      ( [2a1 g.d - a2 d.d - a4] Psi )
//   psibar_op =  2i alpha1 phat - alpha2 p.p + alpha4      ( PsiBar [2a1 g.d + a2 d.d + a4] )
struct FieldEquationPair {
  PolyOperator psi_op;
  PolyOperator psibar_op;
};
FieldEquationPair field_equation_pair(const LagrangianParams& lp);

}  // namespace barutkit
