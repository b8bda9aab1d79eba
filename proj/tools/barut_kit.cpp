#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "barutkit/config.hpp"
#include "barutkit/fgm.hpp"
#include "barutkit/majorana.hpp"
#include "barutkit/spinors.hpp"
#include "barutkit/verify.hpp"

namespace bk = barutkit;

namespace {

bk::JsonValue mat4_json(const bk::Mat4& m) {
  bk::JsonValue::Array rows;
  for (int r = 0; r < 4; ++r) {
    bk::JsonValue::Array row;
    for (int c = 0; c < 4; ++c) row.push_back(bk::JsonValue(m(r, c)));
    rows.push_back(bk::JsonValue(row));
  }
  return bk::JsonValue(rows);
}

bk::JsonValue spectrum_json(const bk::SpectrumResult& spec) {
  bk::JsonValue::Array lines;
  for (const auto& l : spec.lines) {
    bk::JsonValue::Object o;
    o["mass"] = bk::JsonValue(l.mass);
    o["multiplicity"] = bk::JsonValue(l.multiplicity);
    o["branch"] = bk::JsonValue(l.branch);
    lines.push_back(bk::JsonValue(o));
  }
  return bk::JsonValue(lines);
}

void print_spectrum_csv(const bk::SpectrumResult& spec) {
  std::printf("mass,multiplicity,branch\n");
  for (const auto& l : spec.lines)
    std::printf("%s,%d,%s\n", bk::format_double17(l.mass).c_str(), l.multiplicity, l.branch.c_str());
}

bk::JsonValue spinor_row_json(const bk::SpinorState& s) {
  bk::JsonValue::Object o;
  o["p"] = bk::JsonValue(bk::JsonValue::Array{bk::JsonValue(s.momentum.x()), bk::JsonValue(s.momentum.y()),
                                              bk::JsonValue(s.momentum.z())});
  o["energy"] = bk::JsonValue(s.energy);
  o["h"] = bk::JsonValue(s.h);
  o["mass"] = bk::JsonValue(s.mass);
  bk::JsonValue::Array comp;
  for (int i = 0; i < 4; ++i) comp.push_back(bk::JsonValue(s.components(i)));
  o["components"] = bk::JsonValue(comp);
  return bk::JsonValue(o);
}

int run_verify(const std::string& suite, double tol, const std::string& fault) {
  bk::VerifyOptions opt;
  opt.tolerance = tol;
  opt.corrupt_majorana_u = (fault == "u");
  const auto results = bk::verify_suite(suite, opt);
  int failures = 0;
  std::string first_fail;
  for (const auto& r : results) {
    std::printf("%-60s %s  (%.3e vs %.1e)\n", r.name.c_str(), r.pass ? "PASS" : "FAIL", r.value,
                r.threshold);
    if (!r.pass && failures++ == 0) first_fail = r.name;
  }
  std::printf("%s: %zu checks, %d failures\n", suite.c_str(), results.size(), failures);
  if (failures) {
    std::printf("first failing identity: %s\n", first_fail.c_str());
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Barut second- and third-order wave equation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  std::string output;
  double tol_override = -1.0;
  app.add_option("--config", config_path, "JSON config file (or $BARUT_KIT_CONFIG)");
  app.add_option("--output", output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tolerance", tol_override, "override verification tolerance");

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "mass spectrum of the second/third order operator");
  sp->fallthrough();
  double sp_a = 1.0, sp_b = 0.0, sp_b1 = 0.0, sp_b2 = 0.0, sp_m = 1.0;
  bool third = false;
  std::string branch = "++";
  std::vector<double> table_p;
  sp->add_option("--a", sp_a);
  sp->add_option("--b", sp_b);
  sp->add_option("--b1", sp_b1);
  sp->add_option("--b2", sp_b2);
  sp->add_option("--m", sp_m);
  sp->add_flag("--third-order", third);
  sp->add_option("--branch", branch)->check(CLI::IsMember({"++", "+-", "-+", "--"}));
  sp->add_option("--spinor-table", table_p, "emit u-spinors at this momentum (px py pz)")->expected(3);

  // leptons
  auto* lep = app.add_subcommand("leptons", "electron / muon / tau masses from the splitting formulas");
  lep->fallthrough();
  double lep_alpha_inv = -1.0;
  lep->add_option("--alpha-inverse", lep_alpha_inv, "override 1/alpha");

  // invariants
  auto* inv = app.add_subcommand("invariants", "Noether invariants of a mode set");
  inv->fallthrough();
  std::string modeset_path;
  double inv_t = 0.0;
  inv->add_option("modeset", modeset_path, "ModeSet JSON file")->required();
  inv->add_option("--t", inv_t, "evaluation time");

  // transform
  auto* tr = app.add_subcommand("transform", "gamma matrices and C in a representation");
  tr->fallthrough();
  std::string rep_name = "majorana";
  tr->add_option("--rep", rep_name)->check(CLI::IsMember({"chiral", "dirac", "majorana"}));

  // fgm-check
  auto* fg = app.add_subcommand("fgm-check", "Feynman-Gell-Mann operator checks");
  fg->fallthrough();
  std::string family = "zero";
  std::vector<double> a0{0.0, 0.0, 0.0, 0.0};
  std::vector<double> fcomp{0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  double charge = 1.0, fg_mass = 1.0;
  fg->add_option("--field", family)->check(CLI::IsMember({"zero", "constant-a", "linear-f"}));
  fg->add_option("--a0", a0, "constant A^mu")->expected(4);
  fg->add_option("--f", fcomp, "F_{01} F_{02} F_{03} F_{12} F_{13} F_{23}")->expected(6);
  fg->add_option("--e", charge);
  fg->add_option("--mass", fg_mass);

  // verify
  auto* ver = app.add_subcommand("verify", "run the identity suites");
  ver->fallthrough();
  std::string suite = "all";
  std::string fault;
  ver->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "algebra", "spinors", "barut", "majorana", "noether", "fgm"}));
  ver->add_option("--inject-fault", fault)->group("");  // test hook, hidden from help

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    const bk::Config cfg = [&] {
      bk::Config c = bk::load_config(config_path);
      if (!output.empty()) c.output_format = output;
      if (tol_override > 0.0) c.tolerance = tol_override;
      if (lep_alpha_inv > 0.0) c.alpha_inverse = lep_alpha_inv;
      c.validate();
      return c;
    }();

    if (*sp) {
      if (sp_a == 0.0) {
        std::fprintf(stderr, "spectrum: a must be nonzero\n");
        return 2;
      }
      bk::BarutParams params{sp_a, sp_b, sp_b1, sp_b2, sp_m};
      bk::SpectrumResult spec;
      bk::PolyOperator op;
      if (third) {
        const int s1 = branch[0] == '+' ? 1 : -1;
        const int s2 = branch[1] == '+' ? 1 : -1;
        const bk::ThirdOrderResult t = bk::third_order_operator(params, s1, s2);
        if (bk::PolyOperator::max_coeff_diff(t.expanded, t.factor_dirac * t.factor_second) > 1e-12) {
          std::fprintf(stderr, "spectrum: third-order expansion check failed\n");
          return 1;
        }
        spec = t.spectrum;
        op = t.expanded;
      } else {
        spec = bk::second_order_spectrum(params);
        op = bk::barut_operator(bk::param_map(params));
      }
      // Internal verification: determinant roots must reproduce the closed form.
      const bk::Vec3 kprobe(0.21, -0.13, 0.34);
      double max_mass = 0.0;
      for (const auto& l : spec.lines) max_mass = std::max(max_mass, l.mass);
      const auto roots = bk::det_mass_roots(op, kprobe, 1.3 * max_mass + 0.5);
      std::vector<double> want;
      for (const auto& l : spec.lines)
        if (l.mass > 1e-12) want.push_back(l.mass);
      bool ok = roots.size() == want.size();
      for (size_t i = 0; ok && i < roots.size(); ++i)
        ok = std::abs(roots[i] - want[i]) <= 1e-8 * (1.0 + want[i]);
      if (!ok) {
        std::fprintf(stderr, "spectrum: determinant-root verification failed\n");
        return 1;
      }

      if (cfg.output_format == "csv") {
        if (table_p.empty()) {
          print_spectrum_csv(spec);
        } else {
          std::printf("px,py,pz,h,mass,re0,im0,re1,im1,re2,im2,re3,im3\n");
          const bk::Vec3 p(table_p[0], table_p[1], table_p[2]);
          for (auto br : {bk::MassBranch::Plus, bk::MassBranch::Minus})
            for (double h : {0.5, -0.5}) {
              if (bk::branch_mass(sp_a, sp_b, sp_m, br) <= 0.0) continue;
              const bk::SpinorState s = bk::build_u_spinor(p, h, sp_a, sp_b, sp_m, br);
              std::printf("%s,%s,%s,%s,%s", bk::format_double17(p.x()).c_str(),
                          bk::format_double17(p.y()).c_str(), bk::format_double17(p.z()).c_str(),
                          bk::format_double17(h).c_str(), bk::format_double17(s.mass).c_str());
              for (int i = 0; i < 4; ++i)
                std::printf(",%s,%s", bk::format_double17(s.components(i).real()).c_str(),
                            bk::format_double17(s.components(i).imag()).c_str());
              std::printf("\n");
            }
        }
      } else {
        bk::JsonValue::Object o;
        o["schema"] = bk::JsonValue("barut-kit/1");
        o["command"] = bk::JsonValue("spectrum");
        o["spectrum"] = spectrum_json(spec);
        bk::JsonValue::Array warn;
        for (const auto& w : spec.warnings) warn.push_back(bk::JsonValue(w));
        o["warnings"] = bk::JsonValue(warn);
        if (!table_p.empty() && !third) {
          const bk::Vec3 p(table_p[0], table_p[1], table_p[2]);
          bk::JsonValue::Array rows;
          for (auto br : {bk::MassBranch::Plus, bk::MassBranch::Minus})
            for (double h : {0.5, -0.5}) {
              if (bk::branch_mass(sp_a, sp_b, sp_m, br) <= 0.0) continue;
              rows.push_back(spinor_row_json(bk::build_u_spinor(p, h, sp_a, sp_b, sp_m, br)));
            }
          o["spinors"] = bk::JsonValue(rows);
        }
        std::printf("%s\n", bk::JsonValue(o).dump().c_str());
      }
      return 0;
    }

    if (*lep) {
      const double alpha = 1.0 / cfg.alpha_inverse;
      bk::JsonValue::Object o;
      o["schema"] = bk::JsonValue("barut-kit/1");
      o["command"] = bk::JsonValue("leptons");
      o["alpha_inverse"] = bk::JsonValue(cfg.alpha_inverse);
      o["electron_mev"] = bk::JsonValue(cfg.electron_mass_mev);
      o["muon_mev"] = bk::JsonValue(bk::muon_mass(cfg.electron_mass_mev, alpha));
      o["tau_mev"] = bk::JsonValue(bk::tau_mass(cfg.electron_mass_mev, alpha));
      o["alpha2_physical_per_electron_mass"] = bk::JsonValue(bk::alpha2_physical(1.0, alpha));
      if (cfg.output_format == "csv") {
        std::printf("lepton,mass_mev\nelectron,%s\nmuon,%s\ntau,%s\n",
                    bk::format_double17(cfg.electron_mass_mev).c_str(),
                    bk::format_double17(bk::muon_mass(cfg.electron_mass_mev, alpha)).c_str(),
                    bk::format_double17(bk::tau_mass(cfg.electron_mass_mev, alpha)).c_str());
      } else {
        std::printf("%s\n", bk::JsonValue(o).dump().c_str());
      }
      return 0;
    }

    if (*inv) {
      const bk::ModeSet ms = bk::load_modeset(modeset_path);
      const bk::LagrangianParams lp = bk::LagrangianParams::dirac(ms.m);
      const bk::InvariantReport rep = bk::invariants(lp, ms, inv_t);
      bk::JsonValue::Object o;
      o["schema"] = bk::JsonValue("barut-kit/1");
      o["command"] = bk::JsonValue("invariants");
      o["t"] = bk::JsonValue(rep.t);
      auto breakdown = [](const bk::TermBreakdown& b) {
        bk::JsonValue::Object d;
        d["alpha1"] = bk::JsonValue(b.alpha1);
        d["alpha2"] = bk::JsonValue(b.alpha2);
        d["alpha3"] = bk::JsonValue(b.alpha3);
        d["mass_term"] = bk::JsonValue(b.mass);
        d["total"] = bk::JsonValue(b.total());
        return bk::JsonValue(d);
      };
      o["hamiltonian"] = breakdown(rep.H);
      o["charge"] = breakdown(rep.Q);
      o["hamiltonian_normal_ordered"] = bk::JsonValue(rep.H_normal);
      o["charge_normal_ordered"] = bk::JsonValue(rep.Q_normal);
      bk::JsonValue::Array samples;
      for (const auto& [x, q] : rep.charge_density_samples) {
        bk::JsonValue::Object s;
        s["x"] = bk::JsonValue(bk::JsonValue::Array{bk::JsonValue(x.x()), bk::JsonValue(x.y()),
                                                    bk::JsonValue(x.z())});
        s["charge_density"] = bk::JsonValue(q);
        samples.push_back(bk::JsonValue(s));
      }
      o["charge_density_samples"] = bk::JsonValue(samples);
      std::printf("%s\n", bk::JsonValue(o).dump().c_str());
      return 0;
    }

    if (*tr) {
      const bk::Representation rep = rep_name == "chiral" ? bk::Representation::Chiral
                                     : rep_name == "dirac" ? bk::Representation::DiracStandard
                                                           : bk::Representation::Majorana;
      const bk::GammaSet gs = bk::build_gammas(rep, bk::Metric::Minkowski);
      bk::JsonValue::Object o;
      o["schema"] = bk::JsonValue("barut-kit/1");
      o["command"] = bk::JsonValue("transform");
      o["representation"] = bk::JsonValue(rep_name);
      bk::JsonValue::Array gammas;
      double max_re = 0.0;
      for (const auto& g : gs.g) {
        gammas.push_back(mat4_json(g));
        max_re = std::max(max_re, g.real().cwiseAbs().maxCoeff());
      }
      o["gamma"] = bk::JsonValue(gammas);
      o["gamma5"] = mat4_json(gs.g5);
      o["charge_conjugation"] = mat4_json(bk::charge_conjugation_matrix(rep));
      if (rep == bk::Representation::Majorana) {
        o["transform_u"] = mat4_json(bk::majorana_transform());
        o["max_abs_re_gamma"] = bk::JsonValue(max_re);
      }
      std::printf("%s\n", bk::JsonValue(o).dump().c_str());
      return 0;
    }

    if (*fg) {
      bk::EMField field = bk::EMField::zero(charge);
      if (family == "constant-a")
        field = bk::EMField::constant_a(bk::Vec4(bk::cxd(a0[0]), bk::cxd(a0[1]), bk::cxd(a0[2]), bk::cxd(a0[3])), charge);
      else if (family == "linear-f") {
        Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
        const int idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        for (int i = 0; i < 6; ++i) {
          f(idx[i][0], idx[i][1]) = fcomp[static_cast<size_t>(i)];
          f(idx[i][1], idx[i][0]) = -fcomp[static_cast<size_t>(i)];
        }
        field = bk::EMField::linear(f, charge);
      }
      const double ident = bk::squared_dirac_identity(field);
      const bk::Gamma5Report g5 = bk::gamma5_structure(field, fg_mass);
      bk::JsonValue::Object o;
      o["schema"] = bk::JsonValue("barut-kit/1");
      o["command"] = bk::JsonValue("fgm-check");
      o["field_family"] = bk::JsonValue(family);
      o["squared_dirac_identity_residual"] = bk::JsonValue(ident);
      o["gamma5_commutant_residual"] = bk::JsonValue(g5.commutant_residual);
      if (family != "linear-f")
        o["chiral_projection_residual"] = bk::JsonValue(g5.projected_solution_residual);
      o["pass"] = bk::JsonValue(ident < cfg.tolerance && g5.commutant_residual < cfg.tolerance);
      std::printf("%s\n", bk::JsonValue(o).dump().c_str());
      return (ident < cfg.tolerance && g5.commutant_residual < cfg.tolerance) ? 0 : 1;
    }

    if (*ver) return run_verify(suite, cfg.tolerance, fault);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
