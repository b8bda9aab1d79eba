#pragma once

#include <string>
#include <vector>

#include "barutkit/noether.hpp"

namespace barutkit {

struct CheckResult {
  std::string name;
  bool pass;
  double value;      // measured residual / detail
  double threshold;  // bound it was held to (0 when the check is boolean)
};

struct VerifyOptions {
  double tolerance = 1e-10;
  bool corrupt_majorana_u = false;  // fault-injection hook for the negative control
};

std::vector<CheckResult> verify_algebra(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_spinors(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_barut(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_majorana(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_noether(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_fgm(const VerifyOptions& opt = {});

// name in {all, algebra, spinors, barut, majorana, noether, fgm}; throws on unknown.
std::vector<CheckResult> verify_suite(const std::string& name, const VerifyOptions& opt = {});

// Two modes on the two mass branches of the Barut operator plus the Lagrangian
// parameters under which both are exact solutions; used for the
// J0-indefiniteness check.
struct TwoBranchField {
  PlaneWaveField field;
  LagrangianParams lagr;
  double box_l;
};
TwoBranchField barut_two_branch_field(const BarutParams& p, double box_l = 16.0);

// Min and max of Re(charge density) over a box scan.
std::pair<double, double> charge_density_range(const TwoBranchField& tb, int n = 24);

}  // namespace barutkit
