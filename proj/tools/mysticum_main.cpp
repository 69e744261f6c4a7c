// Command-line front end: sextuple analysis, tri-involutive construction,
// extension enumeration, identity-verification suites, and SVG rendering.
//
// Exit codes: 0 success, 1 domain degeneracy, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mysticum/analysis.hpp"
#include "mysticum/cspoly.hpp"
#include "mysticum/report_json.hpp"
#include "mysticum/svg_render.hpp"
#include "mysticum/verify_suites.hpp"

namespace {

using namespace mysticum;

std::array<P1Point<GaussianRational>, 6> parse_six(const std::vector<std::string>& raw) {
  std::array<P1Point<GaussianRational>, 6> pts;
  for (int i = 0; i < 6; ++i) pts[i] = parse_point(raw[i]);
  return pts;
}

int cmd_analyze(const std::vector<std::string>& raw, bool as_json, bool csc_only,
                bool alignments_only) {
  SextupleAnalysis a = analyze_sextuple(parse_six(raw));
  if (as_json)
    std::cout << report_json(a).dump(2) << "\n";
  else
    std::cout << report_text(a, csc_only, alignments_only);
  return 0;
}

int cmd_verify(const std::string& suite) {
  SuiteResult res = run_suite(suite);
  for (const auto& c : res.checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
  }
  std::cout << (res.pass() ? "suite passed" : "suite FAILED") << " (" << res.checks.size()
            << " checks)\n";
  return res.pass() ? 0 : 1;
}

int cmd_triinv(const std::string& p_text, bool as_json) {
  P1Point<GaussianRational> pp = parse_point(p_text);
  if (pp.is_infinity()) throw DegenerateParameterError("triinv: p must be finite");
  SextupleAnalysis a = analyze_sextuple(standard_hexad(pp.affine()).pts);
  if (as_json)
    std::cout << report_json(a).dump(2) << "\n";
  else
    std::cout << report_text(a, false, false);
  return 0;
}

int cmd_extensions(const std::vector<std::string>& raw, double tolerance, bool as_json) {
  std::array<P1Point<GaussianRational>, 4> seed;
  for (int i = 0; i < 4; ++i) seed[i] = parse_point(raw[i]);
  ExtensionSet<GaussianRational> ext = extensions(seed, tolerance);
  if (as_json)
    std::cout << extensions_json(ext).dump(2) << "\n";
  else
    std::cout << extensions_text(ext);
  return 0;
}

int cmd_cspoly(const std::string& alpha, bool verify_factorization) {
  if (alpha.size() != 3) throw PointParseError("cspoly: alpha must be three digits, e.g. 123");
  Triple t(alpha[0] - '0', alpha[1] - '0', alpha[2] - '0');
  MultiPoly cs = cs_polynomial(t);
  std::cout << "CS_" << t.str() << ": degree " << cs.total_degree() << ", " << cs.term_count()
            << " terms, homogeneous: " << (cs.is_homogeneous() ? "yes" : "no") << "\n";
  if (verify_factorization) {
    FactorFamily fam = factor_family(t);
    MultiPoly q = mpoly_exact_div(cs, fam.product());
    std::cout << "factorization: CS_" << t.str() << " = (" << q << ")";
    for (int v = 1; v <= 6; ++v) std::cout << " * " << fam.label(v);
    std::cout << "\n";
    for (int v = 1; v <= 6; ++v)
      std::cout << "  " << fam.label(v) << " = " << fam.by_index(v) << "\n";
  }
  return 0;
}

int cmd_covariants(const std::string& input) {
  // 7 comma-separated rational coefficients, or 6 whitespace-separated points
  std::vector<std::string> parts;
  std::string cur;
  bool has_comma = input.find(',') != std::string::npos;
  std::istringstream is(input);
  if (has_comma) {
    while (std::getline(is, cur, ',')) parts.push_back(cur);
  } else {
    while (is >> cur) parts.push_back(cur);
  }
  BinaryForm<GaussianRational> sextic({GaussianRational(1)});
  if (has_comma) {
    if (parts.size() != 7) throw PointParseError("covariants: expected 7 coefficients");
    std::vector<GaussianRational> coeffs;
    for (const auto& p : parts) coeffs.push_back(GaussianRational(Rational::from_string(p)));
    sextic = BinaryForm<GaussianRational>(coeffs);
  } else {
    if (parts.size() != 6) throw PointParseError("covariants: expected 6 points");
    std::array<P1Point<GaussianRational>, 6> pts;
    for (int i = 0; i < 6; ++i) pts[i] = parse_point(parts[i]);
    sextic = sextic_from_roots<GaussianRational>(pts);
  }
  ThetaTriple<GaussianRational> th = theta(sextic);
  auto print_form = [](const char* name, const BinaryForm<GaussianRational>& f) {
    std::cout << name << " = " << (f.is_zero() ? "0" : f.str()) << "\n";
  };
  print_form("theta24", th.theta24);
  print_form("theta32", th.theta32);
  print_form("theta54", th.theta54);
  std::cout << "theta54 vanishes: " << (th.theta54.is_zero() ? "true" : "false") << "\n";
  return 0;
}

int cmd_render(const std::vector<std::string>& raw, const std::string& out_path) {
  std::array<P1Point<Rational>, 6> pts;
  for (int i = 0; i < 6; ++i) {
    auto rp = as_rational_point(parse_point(raw[i]));
    if (!rp) throw NonRealPointError();
    pts[i] = *rp;
  }
  std::string svg = render_sextuple_svg(pts);
  std::ofstream out(out_path);
  if (!out) throw domain_error("render: cannot write '" + out_path + "'");
  out << svg;
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hexagrammum mysticum toolkit: exact Pascal configurations, "
               "tri-involutive sextuples and Cayley-Salmon conjugacy"};
  app.require_subcommand(1);

  std::vector<std::string> points;
  bool as_json = false, csc_only = false, alignments_only = false;
  auto* analyze = app.add_subcommand("analyze", "full configuration report for six points");
  analyze->add_option("points", points, "six point literals")->expected(6);
  analyze->add_flag("--json", as_json, "machine-readable report");
  analyze->add_flag("--csc", csc_only, "print only the conjugacy table");
  analyze->add_flag("--alignments", alignments_only, "print only the alignment summary");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite, "incidence | csc | cspoly | covariants | extensions | all")
      ->required();

  std::string p_text;
  bool triinv_json = false;
  auto* triinv = app.add_subcommand("triinv", "construct and analyze the standard sextuple");
  triinv->add_option("--p", p_text, "parameter (exact scalar)")->required();
  triinv->add_flag("--json", triinv_json, "machine-readable report");

  std::vector<std::string> seed;
  double tolerance = 1e-9;
  bool ext_json = false;
  auto* ext = app.add_subcommand("extensions", "all 16 tri-involutive extensions of four points");
  ext->add_option("points", seed, "four point literals")->expected(4);
  ext->add_option("--tolerance", tolerance, "numeric distinctness/vanishing tolerance");
  ext->add_flag("--json", ext_json, "machine-readable report");

  std::string alpha;
  bool verify_fact = false;
  auto* csp = app.add_subcommand("cspoly", "Cayley-Salmon polynomial for a 3-subset");
  csp->add_option("--alpha", alpha, "three indices, e.g. 123")->required();
  csp->add_flag("--verify-factorization", verify_fact, "divide by the six transported cubics");

  std::string cov_input;
  auto* cov = app.add_subcommand("covariants", "theta covariants of a sextic");
  cov->add_option("input", cov_input, "7 comma-separated coefficients or 6 points")->required();

  std::vector<std::string> render_pts;
  std::string out_path;
  auto* render = app.add_subcommand("render", "SVG figure of a sextuple on the conic");
  render->add_option("points", render_pts, "six real rational point literals")->expected(6);
  render->add_option("--out", out_path, "output SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(points, as_json, csc_only, alignments_only);
    if (*verify) return cmd_verify(suite);
    if (*triinv) return cmd_triinv(p_text, triinv_json);
    if (*ext) return cmd_extensions(seed, tolerance, ext_json);
    if (*csp) return cmd_cspoly(alpha, verify_fact);
    if (*cov) return cmd_covariants(cov_input);
    if (*render) return cmd_render(render_pts, out_path);
  } catch (const UnknownSuiteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PointParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const theorem_violation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
