#include "surgery/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <complex>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "surgery/dehn.hpp"
#include "surgery/errors.hpp"
#include "surgery/gluing.hpp"
#include "surgery/hitchin.hpp"
#include "surgery/liealg.hpp"
#include "surgery/models.hpp"

namespace surgery::cli {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Output {
  std::string path;     // empty = stdout
  std::string format = "json";
  bool timestamp = false;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--out", path, "write the report to this file instead of stdout");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--timestamp", timestamp,
                  "stamp the report with wall-clock time (off by default; reports are "
                  "byte-deterministic without it)");
  }

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(path);
      if (!out) throw NumericError("cannot open output file: " + path);
      out << text << "\n";
    }
  }

  void emit_report(json& j) const {
    j["version"] = kVersion;
    if (timestamp)
      j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count();
    if (format == "csv") {
      std::ostringstream cs;
      cs << "key,value";
      for (const auto& [key, value] : j.flatten().items())
        cs << "\n" << csv_quote(key) << "," << csv_quote(value.dump());
      emit(cs.str());
    } else {
      emit(j.dump(2));
    }
  }
};

std::complex<double> parse_complex(const std::string& text) {
  std::istringstream is(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  is >> re;
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw InvalidParameter("expected re,im: " + text);
  }
  return {re, im};
}

int lie_verify(int p, const Output& out) {
  auto triple = lie::principal_sl2(p);
  bool rel_xe = bracket(triple.x, triple.e) == GaussianRational(2) * triple.e;
  bool rel_xet =
      bracket(triple.x, triple.etilde) == GaussianRational(-2) * triple.etilde;
  bool rel_eet = bracket(triple.e, triple.etilde) == triple.x;

  auto strings = lie::adx_decomposition(p);
  long dim_total = 0;
  json dims = json::array();
  for (const auto& s : strings) {
    dim_total += s.dimension;
    dims.push_back(s.dimension);
  }
  bool dims_ok = dim_total == 2L * p * p + p;

  bool roots_ok = static_cast<long>(lie::positive_roots(p).size()) == 1L * p * p;
  bool membership_ok = lie::check_membership(p, triple.x) &&
                       lie::check_membership(p, triple.e) &&
                       lie::check_membership(p, triple.etilde);
  auto display = lie::etilde_display_check(p);

  json j;
  j["inputs"] = {{"p", p}};
  j["results"] = {{"bracket_xe_is_2e", rel_xe},
                  {"bracket_xetilde_is_minus2etilde", rel_xet},
                  {"bracket_eetilde_is_x", rel_eet},
                  {"adx_dimensions", dims},
                  {"adx_dimension_sum_ok", dims_ok},
                  {"root_count_ok", roots_ok},
                  {"membership_ok", membership_ok},
                  {"etilde_display_discrepancies", display}};
  bool pass = rel_xe && rel_xet && rel_eet && dims_ok && roots_ok && membership_ok;
  j["pass"] = pass;
  out.emit_report(j);
  return pass ? 0 : 1;
}

int models_stability(const std::string& family, int p, int g, int s, int k,
                     const Output& out) {
  models::HiggsModel model;
  if (family == "bag")
    model = models::bag_model(g, s);
  else if (family == "hitchin")
    model = models::hitchin_model(p, g, s);
  else
    model = models::psi_model(p, g, s, k);
  auto report = models::stability_report(model);
  json j = json::parse(report.to_json());
  j["inputs"] = {{"family", family}, {"p", p}, {"g", g}, {"s", s}, {"k", k}};
  j["pass"] = report.stable;
  out.emit_report(j);
  return report.stable ? 0 : 1;
}

int glue_classify(int p, int g, long d, const Output& out) {
  auto cls = glue::classify_component(p, g, d);
  json j;
  j["inputs"] = {{"p", p}, {"g", g}, {"d", d}};
  j["results"] = {{"classification", cls.str()},
                  {"hitchin_degree", static_cast<long>(p) * (2 * g - 2)}};
  j["pass"] = true;
  out.emit_report(j);
  return 0;
}

int glue_exhaust(int p, int g, const Output& out) {
  auto result = glue::exhaust(p, g);
  json j;
  j["inputs"] = {{"p", p}, {"g", g}};
  j["results"] = json::parse(result.to_json());
  // Witnesses must classify as exceptional and glue stable models.
  bool sound = true;
  for (const auto& [d, spec] : result.witnesses) {
    if (glue::classify_component(p, g, d).tag != glue::ComponentClass::Tag::Exceptional)
      sound = false;
    if (!models::stability_report(models::hitchin_model(spec.p, spec.g1, spec.s)).stable)
      sound = false;
    if (!models::stability_report(models::psi_model(spec.p, spec.g2, spec.s, spec.k)).stable)
      sound = false;
  }
  j["results"]["witnesses_sound"] = sound;
  j["pass"] = sound;
  out.emit_report(j);
  return sound ? 0 : 1;
}

int dehn_coeffs(const std::string& u_text, const std::string& tau_text, double tol,
                const Output& out) {
  auto u = parse_complex(u_text);
  auto tau = parse_complex(tau_text);
  json j;
  j["inputs"] = {{"u", {u.real(), u.imag()}}, {"tau", {tau.real(), tau.imag()}}};
  auto coeffs = dehn::filling_coefficients(u, tau);
  if (coeffs.is_infinity()) {
    j["results"] = {{"coefficients", "infinity"}};
    j["pass"] = true;
    out.emit_report(j);
    return 0;
  }
  auto v = dehn::v_of_u(u, tau);
  double defect = dehn::commutator_defect(u, v, tau);
  auto [pc, qc] = *coeffs.value;
  double closure = std::abs(pc * u + qc * v - std::complex<double>(0.0, 2.0 * M_PI));
  bool pass = defect < tol && closure < 1e-9;
  j["results"] = {{"v", {v.real(), v.imag()}},
                  {"p", pc},
                  {"q", qc},
                  {"commutator_defect", defect},
                  {"closure_error", closure}};
  j["pass"] = pass;
  out.emit_report(j);
  return pass ? 0 : 1;
}

int dehn_slope(double p, double q, const std::string& tau_text, double tol,
               const Output& out) {
  auto tau = parse_complex(tau_text);
  auto u = dehn::u_for_slope(p, q, tau);
  auto coeffs = dehn::filling_coefficients(u, tau);
  double err = 0.0;
  if (coeffs.is_infinity()) {
    err = std::numeric_limits<double>::infinity();
  } else {
    auto [pr, qr] = *coeffs.value;
    err = std::hypot(pr - p, qr - q);
  }
  bool pass = err < tol;
  json j;
  j["inputs"] = {{"p", p}, {"q", q}, {"tau", {tau.real(), tau.imag()}}};
  j["results"] = {{"u", {u.real(), u.imag()}}, {"round_trip_error", err}};
  j["pass"] = pass;
  out.emit_report(j);
  return pass ? 0 : 1;
}

hitchin::ModelFamily parse_family(const std::string& name) {
  if (name == "sl2") return hitchin::ModelFamily::Sl2;
  if (name == "1" || name == "principal") return hitchin::ModelFamily::Principal;
  if (name == "2" || name == "psi") return hitchin::ModelFamily::PsiReduced;
  throw InvalidParameter("unknown model family: " + name);
}

int hitchin_residual(int p, double C, const std::string& family, int nr, int ntheta,
                     double rmin, double rmax, double tol, const Output& out) {
  hitchin::PolarGrid grid{rmin, rmax, nr, ntheta};
  auto pair = hitchin::model_solution(p, C, grid, parse_family(family));
  auto res = hitchin::residual(pair.A, pair.Phi);

  if (out.format == "csv") {
    std::ostringstream cs;
    cs << csv_quote("r") << "," << csv_quote("theta") << "," << csv_quote("residual_norm");
    for (int i = 0; i < grid.n_r; ++i)
      for (int j = 0; j < grid.n_theta; ++j)
        cs << "\n" << grid.r(i) << "," << grid.theta(j) << "," << res.field.at(i, j).norm();
    out.emit(cs.str());
    return res.sup_norm < tol ? 0 : 1;
  }

  bool pass = res.sup_norm < tol;
  json j;
  j["inputs"] = {{"p", p},     {"C", C},         {"family", family},
                 {"nr", nr},   {"ntheta", ntheta}, {"rmin", rmin},
                 {"rmax", rmax}};
  j["results"] = {{"sup_norm", res.sup_norm}, {"l2_norm", res.l2_norm}};
  j["pass"] = pass;
  out.emit_report(j);
  return pass ? 0 : 1;
}

int hitchin_glue(double R, double gamma_scale, int p, double C, int nr, int ntheta,
                 double rmin, double rmax, double tol, const Output& out) {
  hitchin::PolarGrid grid{rmin, rmax, nr, ntheta};
  auto base = hitchin::model_solution(p, C, grid, hitchin::ModelFamily::Principal);

  // Diagonal gauge direction: the principal semisimple diagonal, scaled.
  auto gamma = hitchin::PolarField::zero(grid, base.Phi.dim);
  Eigen::VectorXd diag(2 * p + 1);
  for (int i = 1; i <= p; ++i) {
    diag(i - 1) = 2.0 * (p + 1 - i);
    diag(p + i - 1) = -2.0 * (p + 1 - i);
  }
  diag(2 * p) = 0.0;
  for (int i = 0; i < grid.n_r; ++i)
    for (int j = 0; j < grid.n_theta; ++j)
      gamma.at(i, j) = (gamma_scale * diag).asDiagonal();

  auto chi = hitchin::cutoff(R);
  auto glued = hitchin::approximate_glue(base, gamma, chi);
  auto res = hitchin::residual(glued.A, glued.Phi);

  double outside = 0.0, inside = 0.0;
  for (int i = 0; i < grid.n_r; ++i) {
    double r = grid.r(i);
    bool in_annulus = r >= 0.75 * R && r <= R;
    for (int j = 0; j < grid.n_theta; ++j) {
      double norm = res.field.at(i, j).norm();
      (in_annulus ? inside : outside) = std::max(in_annulus ? inside : outside, norm);
    }
  }
  double k = hitchin::growth_constant(chi, grid);
  bool pass = outside < tol;

  json j;
  j["inputs"] = {{"R", R},   {"gamma_scale", gamma_scale}, {"p", p},
                 {"C", C},   {"nr", nr},                   {"ntheta", ntheta},
                 {"rmin", rmin}, {"rmax", rmax}};
  j["results"] = {{"sup_outside_annulus", outside},
                  {"sup_inside_annulus", inside},
                  {"growth_constant", k},
                  {"gamma_sup", gamma_scale * diag.cwiseAbs().maxCoeff()}};
  j["pass"] = pass;
  out.emit_report(j);
  return pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"verification tool for surgery arithmetic in representation varieties"};
  app.require_subcommand(1);

  // lie verify
  auto* lie_cmd = app.add_subcommand("lie", "exact so(p,p+1) Lie-algebra data");
  lie_cmd->require_subcommand(1);
  auto* verify_cmd = lie_cmd->add_subcommand("verify", "check the principal sl2 identities");
  int lie_p = 1;
  Output lie_out;
  verify_cmd->add_option("--p", lie_p, "rank parameter")->required();
  lie_out.add_flags(verify_cmd);

  // models stability
  auto* models_cmd = app.add_subcommand("models", "parabolic Higgs bundle models");
  models_cmd->require_subcommand(1);
  auto* stab_cmd = models_cmd->add_subcommand("stability", "stability report for a model");
  std::string stab_family = "hitchin";
  int stab_p = 1, stab_g = 2, stab_s = 1, stab_k = 1;
  Output stab_out;
  stab_cmd->add_option("--family", stab_family, "bag | hitchin | psi")
      ->check(CLI::IsMember({"bag", "hitchin", "psi"}));
  stab_cmd->add_option("--p", stab_p, "rank parameter");
  stab_cmd->add_option("--g", stab_g, "genus")->required();
  stab_cmd->add_option("--s", stab_s, "number of marked points")->required();
  stab_cmd->add_option("--k", stab_k, "Mtilde parameter (psi family)");
  stab_out.add_flags(stab_cmd);

  // glue classify / exhaust
  auto* glue_cmd = app.add_subcommand("glue", "connected-sum component arithmetic");
  glue_cmd->require_subcommand(1);
  auto* classify_cmd = glue_cmd->add_subcommand("classify", "classify a degree d");
  int cls_p = 1, cls_g = 2;
  long cls_d = 0;
  Output cls_out;
  classify_cmd->add_option("--p", cls_p)->required();
  classify_cmd->add_option("--g", cls_g)->required();
  classify_cmd->add_option("--d", cls_d)->required();
  cls_out.add_flags(classify_cmd);

  auto* exhaust_cmd = glue_cmd->add_subcommand("exhaust", "enumerate reachable components");
  int ex_p = 1, ex_g = 2;
  Output ex_out;
  exhaust_cmd->add_option("--p", ex_p)->required();
  exhaust_cmd->add_option("--g", ex_g)->required();
  ex_out.add_flags(exhaust_cmd);

  // dehn coeffs / slope
  auto* dehn_cmd = app.add_subcommand("dehn", "generalized Dehn filling coefficients");
  dehn_cmd->require_subcommand(1);
  auto* coeffs_cmd = dehn_cmd->add_subcommand("coeffs", "coefficients for a given u");
  std::string dc_u = "0", dc_tau = "0,1";
  double dc_tol = 1e-12;
  Output dc_out;
  coeffs_cmd->add_option("--u", dc_u, "cusp parameter, re,im")->required();
  coeffs_cmd->add_option("--tau", dc_tau, "tau, re,im")->required();
  coeffs_cmd->add_option("--tol", dc_tol, "commutator tolerance");
  dc_out.add_flags(coeffs_cmd);

  auto* slope_cmd = dehn_cmd->add_subcommand("slope", "solve for u at a slope (p,q)");
  double ds_p = 1, ds_q = 0;
  std::string ds_tau = "0,1";
  double ds_tol = 1e-9;
  Output ds_out;
  slope_cmd->add_option("--p", ds_p)->required();
  slope_cmd->add_option("--q", ds_q)->required();
  slope_cmd->add_option("--tau", ds_tau, "tau, re,im")->required();
  slope_cmd->add_option("--tol", ds_tol, "round-trip tolerance");
  ds_out.add_flags(slope_cmd);

  // hitchin residual / glue
  auto* hh_cmd = app.add_subcommand("hitchin", "model-solution numerics");
  hh_cmd->require_subcommand(1);
  auto* res_cmd = hh_cmd->add_subcommand("residual", "Hitchin-equation residual of a model");
  int hr_p = 1, hr_nr = 64, hr_ntheta = 32;
  double hr_C = 1.0, hr_rmin = 0.05, hr_rmax = 1.0, hr_tol = 1e-12;
  std::string hr_family = "principal";
  Output hr_out;
  res_cmd->add_option("--p", hr_p)->required();
  res_cmd->add_option("--C", hr_C, "model constant, nonzero")->required();
  res_cmd->add_option("--family", hr_family, "sl2 | principal | psi (or 1 | 2)");
  res_cmd->add_option("--nr", hr_nr, "radial nodes");
  res_cmd->add_option("--ntheta", hr_ntheta, "angular nodes");
  res_cmd->add_option("--rmin", hr_rmin);
  res_cmd->add_option("--rmax", hr_rmax);
  res_cmd->add_option("--tol", hr_tol, "sup-norm tolerance");
  hr_out.add_flags(res_cmd);

  auto* hglue_cmd = hh_cmd->add_subcommand("glue", "approximate-glue residual support");
  double hg_R = 0.4, hg_scale = 1.0, hg_C = 1.0, hg_rmin = 0.05, hg_rmax = 1.0,
         hg_tol = 1e-10;
  int hg_p = 2, hg_nr = 128, hg_ntheta = 64;
  Output hg_out;
  hglue_cmd->add_option("--R", hg_R, "cutoff radius in (0,1)")->required();
  hglue_cmd->add_option("--gamma-scale", hg_scale, "gauge direction scale")->required();
  hglue_cmd->add_option("--p", hg_p);
  hglue_cmd->add_option("--C", hg_C);
  hglue_cmd->add_option("--nr", hg_nr);
  hglue_cmd->add_option("--ntheta", hg_ntheta);
  hglue_cmd->add_option("--rmin", hg_rmin);
  hglue_cmd->add_option("--rmax", hg_rmax);
  hglue_cmd->add_option("--tol", hg_tol, "outside-annulus tolerance");
  hg_out.add_flags(hglue_cmd);

  std::vector<const char*> argv;
  argv.push_back("surgery");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify_cmd->parsed()) return lie_verify(lie_p, lie_out);
    if (stab_cmd->parsed())
      return models_stability(stab_family, stab_p, stab_g, stab_s, stab_k, stab_out);
    if (classify_cmd->parsed()) return glue_classify(cls_p, cls_g, cls_d, cls_out);
    if (exhaust_cmd->parsed()) return glue_exhaust(ex_p, ex_g, ex_out);
    if (coeffs_cmd->parsed()) return dehn_coeffs(dc_u, dc_tau, dc_tol, dc_out);
    if (slope_cmd->parsed()) return dehn_slope(ds_p, ds_q, ds_tau, ds_tol, ds_out);
    if (res_cmd->parsed())
      return hitchin_residual(hr_p, hr_C, hr_family, hr_nr, hr_ntheta, hr_rmin, hr_rmax,
                              hr_tol, hr_out);
    if (hglue_cmd->parsed())
      return hitchin_glue(hg_R, hg_scale, hg_p, hg_C, hg_nr, hg_ntheta, hg_rmin, hg_rmax,
                          hg_tol, hg_out);
  } catch (const InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return 2;
  } catch (const BranchError& e) {
    std::cerr << "branch error: " << e.what() << "\n";
    return 2;
  } catch (const GluingIncompatibility& e) {
    std::cerr << "gluing incompatibility: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace surgery::cli
