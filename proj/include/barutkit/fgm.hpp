#pragma once

#include <map>

#include "barutkit/algebra.hpp"
#include "barutkit/barut.hpp"
#include "barutkit/planewave.hpp"
#include "barutkit/spinors.hpp"

namespace barutkit {

// External electromagnetic potential, restricted to the families with exact
// closed forms: A = 0, constant A, linear A with constant field strength
// (A_mu(x) = -1/2 F_{mu nu} x^nu).
struct EMField {
  enum class Family { Zero, ConstantA, LinearA };
  Family family = Family::Zero;
  Vec4 a_upper = Vec4::Zero();                    // constant A^mu
  Eigen::Matrix4d f_lower = Eigen::Matrix4d::Zero();  // F_{mu nu}
  double e = 1.0;

  static EMField zero(double charge = 1.0);
  static EMField constant_a(const Vec4& a_upper, double charge = 1.0);
  static EMField linear(const Eigen::Matrix4d& f_lower, double charge = 1.0);  // F must be antisymmetric
};

// Spinor-valued polynomial in x^0..x^3 times e^{-i p.x} (p contravariant).
struct PolyWave {
  using Key = std::array<int, 4>;
  std::map<Key, Vec4> coeffs;
  std::array<double, 4> p{0, 0, 0, 0};

  static PolyWave monomial(const Key& alpha, const Vec4& c, const std::array<double, 4>& p);
  PolyWave& add(const Key& k, const Vec4& c);
  PolyWave operator+(const PolyWave& o) const;
  PolyWave operator-(const PolyWave& o) const;
  friend PolyWave operator*(cxd s, const PolyWave& w);
  PolyWave apply(const Mat4& m) const;
  PolyWave mul_x(int nu) const;     // multiply by the coordinate x^nu
  PolyWave i_deriv(int mu) const;   // i d/dx^mu
  double norm() const;              // max coefficient norm
};

// D_mu psi = (i d_mu - e A_mu(x)) psi.
PolyWave covariant_d(const EMField& field, int mu, const PolyWave& psi);

// [ (i d - e A)^2 - (e/2) sigma^{mu nu} F_{mu nu} - m^2 ] psi.
PolyWave fgm_apply(const EMField& field, double m, const PolyWave& psi,
                   Representation rep = Representation::Chiral);

// gamma^mu D_mu gamma^nu D_nu psi (the squared-Dirac route).
PolyWave dirac_squared_apply(const EMField& field, const PolyWave& psi,
                             Representation rep = Representation::Chiral);

// Worst || Dhat Dhat psi - [D^2 - (e/2) sigma F] psi || over the monomial
// (|alpha| <= 2) x unit-spinor x momentum test basis.
double squared_dirac_identity(const EMField& field, Representation rep = Representation::Chiral);

// Free-case Lagrangian density (i dslash PsiBar)(i dslash Psi) - m^2 PsiBar Psi
// at a point, for plane-wave fields.
cxd free_fgm_lagrangian_at(const PlaneWaveField& f, double m, const Vec3& x, double t);

struct Gamma5Report {
  double commutant_residual;           // worst ||Op(g5 psi) - g5 Op(psi)|| over the basis
  double projected_solution_residual;  // worst ||Op(P+- psi_sol)|| over exact solutions
};
Gamma5Report gamma5_structure(const EMField& field, double m,
                              Representation rep = Representation::Chiral);

// Barut operator as lambda1 (phat + kappa_d) + lambda2 (p.p - m^2)/m.
// The match is an exact polynomial identity; the residual is evaluated with
// compensated arithmetic and is identically zero.
struct BarutDecomposition {
  double lambda1;
  double lambda2;
  double kappa_d;
  double residual;
};
BarutDecomposition barut_decomposition(const CanonicalParams& canon, double m);

struct GeneralCurrentParams {
  double alpha1 = 1.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
};

// J^mu = a1 ubar' gamma^mu u + a2 ((p+p')/2)^mu ubar' u + a3 ubar' sigma^{mu nu} u q_nu,
// q = p' - p. The a2 slot uses the symmetric momentum so q.J = 0 on shell.
std::array<cxd, 4> general_current(const GeneralCurrentParams& gc, const SpinorState& u_in,
                                   const SpinorState& u_out);

// Gordon decomposition residual for mass-m Dirac spinors at momenta k, k'.
double gordon_residual(const Vec3& k, const Vec3& kp, double m);

}  // namespace barutkit
