// viewcurve: analyze | signs | verify | render
//
// Exit codes: 0 success, 1 verification failures, 2 parse or configuration
// error, 3 evaluation domain error, 4 --critical precondition not met.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "viewcurve/json_io.hpp"
#include "viewcurve/viewcurve.hpp"

namespace {

using namespace viewcurve;

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kConfigError = 2,
  kDomainError = 3,
  kPreconditionError = 4,
};

struct PointOptions {
  std::string surface;
  double theta = 3.0 * std::numbers::pi / 4.0;
  double phi = 0.0;
  bool degrees = false;
  double x = 0.0;
  double y = 0.0;
};

void add_view_options(CLI::App* cmd, PointOptions& o, bool with_point) {
  cmd->add_option("--surface,-s", o.surface,
                  "builtin (sin_xy, ellip, hyp, parab, flat) or an expression in x and y")
      ->required();
  cmd->add_option("--theta", o.theta, "polar angle of the view direction (radians)")
      ->capture_default_str();
  cmd->add_option("--phi", o.phi, "azimuth of the view direction (radians)")->capture_default_str();
  cmd->add_flag("--degrees", o.degrees, "read --theta and --phi in degrees");
  if (with_point) {
    cmd->add_option("--x", o.x, "x coordinate of the point")->capture_default_str();
    cmd->add_option("--y", o.y, "y coordinate of the point")->capture_default_str();
  }
}

ViewDirection view_of(const PointOptions& o) {
  double t = o.theta;
  double p = o.phi;
  if (o.degrees) {
    t *= std::numbers::pi / 180.0;
    p *= std::numbers::pi / 180.0;
  }
  if (!std::isfinite(t) || !std::isfinite(p)) throw ConfigError("angles must be finite");
  return ViewDirection::from_angles(t, p);
}

nlohmann::json echo(const PointOptions& o, const Surface& s, const ViewDirection& v) {
  return {{"surface", s.name()}, {"formula", s.formula()}, {"theta", v.theta},
          {"phi", v.phi},        {"x", o.x},               {"y", o.y}};
}

int cmd_analyze(const PointOptions& o, double eps) {
  const Surface s = Surface::from_spec(o.surface);
  const ViewDirection v = view_of(o);
  const InvariantSample sample = invariant_sample(s, v, o.x, o.y, eps);
  nlohmann::json out = {{"command", "analyze"}, {"input", echo(o, s, v)}, {"result", to_json(sample)}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_signs(const PointOptions& o, bool critical, double eps_sign) {
  const Surface s = Surface::from_spec(o.surface);
  const ViewDirection v = view_of(o);
  nlohmann::json out = {{"command", "signs"}, {"input", echo(o, s, v)}, {"eps_sign", eps_sign}};
  out["sign_laws"] = to_json(check_sign_corollaries(s, v, o.x, o.y, eps_sign));
  if (critical) {
    out["critical"] = to_json(check_critical_props(s, v, eps_sign));
    out["K_origin"] = gaussian_curvature(s.jet(0.0, 0.0));
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_verify(SuiteConfig config, const std::vector<std::string>& surfaces,
               const std::string& output) {
  if (!surfaces.empty()) config.surfaces = surfaces;
  const VerificationReport rep = run_suite(config);
  std::ofstream file(output, std::ios::binary);
  if (!file) throw ConfigError("cannot write report to '" + output + "'");
  file << to_json(rep).dump(2) << "\n";
  file.close();
  if (!file) throw ConfigError("failed writing report to '" + output + "'");

  std::cout << "samples " << rep.samples << " seed " << config.seed << " domain_errors "
            << rep.domain_errors << "\n";
  for (const auto& t : rep.theorems) {
    std::cout << "  " << to_string(t.id) << ": met " << t.hypotheses_met << "/" << t.samples
              << " max_rel " << t.max_rel_residual << " fd_max_rel " << t.fd_max_rel_residual
              << " failures " << t.failures + t.fd_failures << "\n";
  }
  for (const auto& l : rep.sign_laws) {
    std::cout << "  " << to_string(l.id) << ": agree " << l.agree << " disagree " << l.disagree
              << " skipped " << l.skipped << "\n";
  }
  std::cout << "  gauss_sign_lemma: violations " << rep.lemma.violations << "\n";
  std::cout << "runtime " << rep.runtime_seconds << " s\n";
  std::cout << (rep.passed() ? "PASS" : "FAIL") << " report written to " << output << "\n";
  return rep.passed() ? kOk : kVerifyFailed;
}

struct RenderOptions {
  std::string family = "y";
  std::vector<double> box = {-1.0, 1.0, -1.0, 1.0};
  int n_curves = 11;
  int n_pts = 101;
  int width = 800;
  int height = 800;
  std::string output = "out.svg";
};

int cmd_render(const PointOptions& o, const RenderOptions& r) {
  const Surface s = Surface::from_spec(o.surface);
  const ViewDirection v = view_of(o);
  FamilySelection fam = FamilySelection::y;
  if (r.family == "x") {
    fam = FamilySelection::x;
  } else if (r.family == "both") {
    fam = FamilySelection::both;
  }
  const auto drawing =
      sample_family(s, v, SampleBox{r.box[0], r.box[1], r.box[2], r.box[3]}, r.n_curves, r.n_pts, fam);
  const std::string svg = render_svg(drawing, r.width, r.height);
  std::ofstream file(r.output, std::ios::binary);
  if (!file) throw ConfigError("cannot write SVG to '" + r.output + "'");
  file << svg;
  file.close();
  if (!file) throw ConfigError("failed writing SVG to '" + r.output + "'");
  std::cout << r.output << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projected curve families of graph surfaces: invariants, sign laws, verification"};
  app.require_subcommand(1);

  PointOptions point;
  double eps_regular = kDefaultRegularityEps;
  double eps_sign = kDefaultEpsSign;
  bool critical = false;

  auto* analyze = app.add_subcommand("analyze", "invariants of the projected families at a point");
  add_view_options(analyze, point, true);
  analyze->add_option("--eps", eps_regular, "regularity threshold")->capture_default_str();

  auto* signs = app.add_subcommand("signs", "sign laws at a point");
  add_view_options(signs, point, true);
  signs->add_flag("--critical", critical, "also run the critical-point laws at the origin");
  signs->add_option("--eps-sign", eps_sign, "sign threshold")->capture_default_str();

  SuiteConfig suite;
  std::vector<std::string> suite_surfaces;
  std::string report_path = "verify_report.json";
  auto* verify = app.add_subcommand("verify", "seeded randomized verification suite");
  verify->add_option("--samples", suite.samples, "number of random samples")->capture_default_str();
  verify->add_option("--seed", suite.seed, "random seed")->capture_default_str();
  verify->add_option("--tol", suite.tol, "relative residual tolerance (exact path)")
      ->capture_default_str();
  verify->add_option("--fd-tol", suite.fd_tol, "relative residual tolerance (finite differences)")
      ->capture_default_str();
  verify->add_option("--fd-step", suite.fd_step, "finite-difference step (first partials)")
      ->capture_default_str();
  verify->add_option("--fd-second-step", suite.fd_second_step,
                     "finite-difference step (second partials)")
      ->capture_default_str();
  verify->add_option("--eps-sign", suite.eps_sign, "sign threshold")->capture_default_str();
  verify->add_option("--surface,-s", suite_surfaces, "surfaces to sample (default: all builtins)");
  verify->add_option("-o,--output", report_path, "report file")->capture_default_str();

  RenderOptions render;
  auto* render_cmd = app.add_subcommand("render", "SVG of a projected curve family");
  add_view_options(render_cmd, point, false);
  render_cmd->add_option("--family", render.family, "x, y or both")
      ->check(CLI::IsMember({"x", "y", "both"}))
      ->capture_default_str();
  render_cmd->add_option("--box", render.box, "x0 x1 y0 y1")->expected(4);
  render_cmd->add_option("--n-curves", render.n_curves, "curves per family")->capture_default_str();
  render_cmd->add_option("--n-pts", render.n_pts, "points per curve")->capture_default_str();
  render_cmd->add_option("--width", render.width, "width in px")->capture_default_str();
  render_cmd->add_option("--height", render.height, "height in px")->capture_default_str();
  render_cmd->add_option("-o,--output", render.output, "output SVG path")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*analyze) return cmd_analyze(point, eps_regular);
    if (*signs) return cmd_signs(point, critical, eps_sign);
    if (*verify) return cmd_verify(suite, suite_surfaces, report_path);
    if (*render_cmd) return cmd_render(point, render);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition not met: " << e.what() << "\n";
    return kPreconditionError;
  }
  return kConfigError;
}
