#pragma once

#include "barutkit/types.hpp"

namespace barutkit {

// Couplings of L = alpha1 [PsiBar g.d Psi - d PsiBar g Psi] - alpha4 PsiBar Psi
//                + alpha2 (d PsiBar)(d Psi) + alpha3 d PsiBar sigma d Psi.
// Dirac limit: (i/2, 0, 0, m).
struct LagrangianParams {
  cxd alpha1{0.0, 0.5};
  cxd alpha2{0.0, 0.0};
  cxd alpha3{0.0, 0.0};
  cxd alpha4{0.0, 0.0};

  static LagrangianParams dirac(double m) {
    return {cxd(0.0, 0.5), cxd(0.0, 0.0), cxd(0.0, 0.0), cxd(m, 0.0)};
  }

  // alpha4 tuned so mass-m plane waves solve the free field equation.
  static LagrangianParams onshell(cxd alpha1, cxd alpha2, cxd alpha3, double m) {
    return {alpha1, alpha2, alpha3, -2.0 * I * alpha1 * m + alpha2 * m * m};
  }
};

}  // namespace barutkit
