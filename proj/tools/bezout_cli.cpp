#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bezout/backends.hpp"
#include "bezout/error.hpp"
#include "bezout/harness.hpp"
#include "bezout/json_io.hpp"
#include "bezout/regions.hpp"
#include "bezout/roots.hpp"
#include "bezout/separation.hpp"
#include "bezout/sylvester.hpp"

using nlohmann::json;
using namespace bezout;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::vector<std::string> tol;
  std::string out = "out";
  bool json = false;
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string num(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "--tol expects name=value, got " + item);
    try {
      out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad tolerance value in " + item);
    }
  }
  return out;
}

double tol_or(const Globals& g, const std::string& name, double fallback) {
  const auto t = parse_tolerances(g.tol);
  const auto it = t.find(name);
  return it == t.end() ? fallback : it->second;
}

Polynomial parse_rhs(const std::string& spec) {
  if (spec == "one") return Polynomial{1.0};
  if (spec.rfind("monomial:", 0) == 0) {
    try {
      return Polynomial::monomial(std::stoi(spec.substr(9)));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidArgument, "bad monomial power in --rhs " + spec);
    }
  }
  return load_polynomial(spec);
}

json solution_json(const BezoutSolution& s) {
  json j = {{"backend", s.backend}, {"R", to_json(s.R)}, {"S", to_json(s.S)}, {"residual", s.residual}};
  if (s.bound_report) {
    const auto& c = *s.bound_report;
    j["certification"] = {{"delta", c.delta},
                          {"norm_R", c.norm_R},
                          {"norm_S", c.norm_S},
                          {"ratio_R", c.ratio_R},
                          {"ratio_S", c.ratio_S},
                          {"crude_ratio_R", c.crude_ratio_R},
                          {"crude_ratio_S", c.crude_ratio_S},
                          {"ceiling", c.ceiling ? json(*c.ceiling) : json(nullptr)},
                          {"ceiling_source", c.ceiling_source},
                          {"passed", c.passed}};
  }
  return j;
}

void print_poly(std::ostream& out, const char* name, const Polynomial& p) {
  out << name << " =";
  for (int k = 0; k <= p.degree(); ++k) out << "  [" << k << "] " << num(p.coeff(k));
  out << "\n";
}

int run_roots(const Globals& g, const std::string& src) {
  const Polynomial p = load_polynomial(src);
  RootOptions opt;
  opt.residual_tolerance = tol_or(g, "root_residual", opt.residual_tolerance);
  const RootSet rs = find_roots(p, opt);
  if (g.json) {
    json roots = json::array();
    for (Complex z : rs.roots) roots.push_back(to_json(z));
    std::vector<bool> flags(rs.multiplicity_suspect.begin(), rs.multiplicity_suspect.end());
    std::cout << json{{"roots", roots},
                      {"residuals", rs.residuals},
                      {"multiplicity_suspect", flags},
                      {"cauchy_bound", rs.cauchy_bound},
                      {"verified", rs.verified}}
                     .dump(2)
              << "\n";
  } else {
    for (std::size_t i = 0; i < rs.size(); ++i)
      std::cout << num(rs.roots[i]) << "  residual " << num(rs.residuals[i])
                << (rs.multiplicity_suspect[i] ? "  (clustered)" : "") << "\n";
    std::cout << "cauchy bound " << num(rs.cauchy_bound) << (rs.verified ? "" : "  UNVERIFIED") << "\n";
  }
  return rs.verified ? kExitOk : kExitNonConvergence;
}

int run_delta(const Globals& g, const std::string& a, const std::string& b) {
  const Polynomial A = load_polynomial(a);
  const Polynomial B = load_polynomial(b);
  SeparationOptions opt;
  opt.sandwich_tolerance = tol_or(g, "sandwich", opt.sandwich_tolerance);
  const DeltaReport r = analyze_separation(A, B, opt);
  if (g.json) {
    std::cout << json{{"delta", r.delta},
                      {"argmin_witness", to_json(r.argmin_witness)},
                      {"delta_tilde", {{"lower", r.delta_tilde_lower}, {"upper", r.delta_tilde_upper}}},
                      {"delta_tilde_witness", to_json(r.delta_tilde_witness)},
                      {"sandwich_ok", r.sandwich_ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "delta               " << num(r.delta) << "  at " << num(r.argmin_witness) << "\n"
              << "delta-tilde bracket [" << num(r.delta_tilde_lower) << ", " << num(r.delta_tilde_upper) << "]  at "
              << num(r.delta_tilde_witness) << "\n"
              << "sandwich            " << (r.sandwich_ok ? "ok" : "VIOLATED") << "\n";
  }
  return r.sandwich_ok ? kExitOk : kExitCheckFailed;
}

int run_solve(const Globals& g, const std::string& a, const std::string& b, const std::string& backend,
              const std::string& rhs, const std::vector<double>& shift) {
  const Polynomial A = load_polynomial(a);
  const Polynomial B = load_polynomial(b);
  const Polynomial P = parse_rhs(rhs);
  const bool is_one = P == Polynomial{1.0};
  const RootSet ra = find_roots(A);
  const RootSet rb = find_roots(B);
  const double d = delta_value(A, B, ra, rb).value;
  std::optional<Complex> z0;
  if (shift.size() == 2) z0 = Complex(shift[0], shift[1]);

  std::vector<std::string> which;
  if (backend == "all") which = {"sylvester", "residue", "quadrature", "reversed", "main"};
  else which = {backend};

  json results = json::array();
  std::vector<BezoutSolution> solved;
  int code = kExitOk;
  for (const auto& w : which) {
    try {
      BezoutSolution s;
      if (w == "sylvester") {
        s = solve_rhs(build_sylvester(A, B), P);
      } else if (w == "residue") {
        s = solve_residue(A, B, ra, rb, P);
      } else if (w == "quadrature") {
        QuadratureRule rule;
        rule.tolerance = tol_or(g, "quadrature", rule.tolerance);
        s = solve_quadrature(A, B, ra, rb, default_contours(ra, rb), P, rule);
      } else if (w == "reversed" || w == "main") {
        if (!is_one) throw Error(ErrorKind::InvalidArgument, w + " backend solves the right-hand side 1 only");
        s = w == "reversed" ? solve_reversed(A, B, InnerBackend::Residue, z0) : solve_main_pipeline(A, B).solution;
      }
      if (is_one && d > 0.0) s.bound_report = certify_main_bound(A, B, s, d);
      results.push_back(solution_json(s));
      solved.push_back(std::move(s));
    } catch (const Error& e) {
      results.push_back({{"backend", w}, {"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
      code = std::max(code, exit_code_for(e));
    }
  }
  double gap = 0.0;
  for (std::size_t i = 1; i < solved.size(); ++i)
    gap = std::max({gap, coeff_distance(solved[i].R, solved[0].R), coeff_distance(solved[i].S, solved[0].S)});

  if (g.json) {
    json out = {{"delta", d}, {"solutions", results}};
    if (solved.size() > 1) out["max_backend_gap"] = gap;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "delta " << num(d) << "\n";
    for (const auto& s : solved) {
      std::cout << "[" << s.backend << "] residual " << num(s.residual) << "\n";
      print_poly(std::cout, "  R", s.R);
      print_poly(std::cout, "  S", s.S);
      if (s.bound_report)
        std::cout << "  ratio_R " << num(s.bound_report->ratio_R) << "  ratio_S " << num(s.bound_report->ratio_S)
                  << "  certified " << (s.bound_report->passed ? "yes" : "no") << "\n";
    }
    for (const auto& r : results)
      if (r.contains("error")) std::cout << "[" << r["backend"].get<std::string>() << "] " << r["message"].get<std::string>() << "\n";
    if (solved.size() > 1) std::cout << "max backend gap " << num(gap) << "\n";
  }
  return code;
}

int run_regions(const Globals& g, const std::string& a, const std::string& b, const std::vector<std::string>& kinds,
                const std::string& svg, const std::string& arcs_json, bool invert) {
  const Polynomial A = load_polynomial(a);
  const Polynomial B = load_polynomial(b);
  const RootSet ra = find_roots(A);
  const RootSet rb = find_roots(B);
  std::vector<ContourSystem> contours;
  json out = json::array();
  for (const auto& k : kinds) {
    const RegionSpec spec = make_region_spec(region_kind_from_string(k), ra, rb, invert);
    ContourSystem c = build_region(spec);
    json arcs = json::array();
    for (std::size_t i = 0; i < c.arcs.size(); ++i) {
      const Arc& arc = c.arcs[i];
      arcs.push_back({{"loop", c.loop_of_arc[i]},
                      {"center", to_json(arc.circle.center)},
                      {"radius", arc.circle.radius},
                      {"start_angle", arc.start_angle},
                      {"end_angle", arc.end_angle},
                      {"ccw", arc.ccw}});
    }
    json cert = json::array();
    for (const auto& p : c.orientation_certificate) cert.push_back({{"point", to_json(p.point)}, {"winding", p.winding}});
    out.push_back({{"kind", k},
                   {"inverted", invert},
                   {"components", c.loop_count},
                   {"total_length", c.total_length},
                   {"orientation_certificate", cert},
                   {"arcs", arcs}});
    contours.push_back(std::move(c));
  }
  if (!svg.empty()) {
    std::vector<Complex> markers;
    for (Complex z : ra.roots) markers.push_back(invert ? 1.0 / z : z);
    for (Complex z : rb.roots) markers.push_back(invert ? 1.0 / z : z);
    emit_svg(contours, markers, svg);
  }
  if (!arcs_json.empty()) save_json(out, arcs_json);
  if (g.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < contours.size(); ++i)
      std::cout << kinds[i] << (invert ? " (inverted)" : "") << ": " << contours[i].loop_count << " component(s), "
                << contours[i].arcs.size() << " arcs, length " << num(contours[i].total_length) << "\n";
  }
  return kExitOk;
}

int run_sylvester(const Globals& g, const std::string& a, const std::string& b, double C3) {
  const Polynomial A = load_polynomial(a);
  const Polynomial B = load_polynomial(b);
  const SylvesterMatrix M = build_sylvester(A, B);
  const RootSet ra = find_roots(A);
  const RootSet rb = find_roots(B);
  const ResultantReport res = resultant(A, B, ra, rb);
  const double d = delta(A, B, ra, rb);
  const InverseNormReport inv = inverse_norm_report(A, B, d, C3);
  if (g.json) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < M.entries.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < M.entries.cols(); ++j) row.push_back(to_json(M.entries(i, j)));
      rows.push_back(row);
    }
    std::cout << json{{"matrix", rows},
                      {"resultant",
                       {{"abs_determinant", res.abs_determinant},
                        {"via_roots_of_B", res.via_roots_of_B},
                        {"via_roots_of_A", res.via_roots_of_A},
                        {"relative_spread", res.max_relative_spread},
                        {"agree", res.agree}}},
                      {"delta", d},
                      {"inverse",
                       {{"max_entry", inv.max_entry},
                        {"two_norm", inv.two_norm},
                        {"inf_norm", inv.inf_norm},
                        {"M", inv.M},
                        {"exponent", inv.exponent},
                        {"C3", inv.C3},
                        {"C3_source", inv.C3_source},
                        {"bound", inv.bound},
                        {"ratio", inv.ratio},
                        {"unnormalized_bound", inv.unnormalized_bound},
                        {"unnormalized_ratio", inv.unnormalized_ratio},
                        {"within_bound", inv.within_bound}}}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "Sylvester matrix (" << M.entries.rows() << "x" << M.entries.cols() << ")\n";
    for (Eigen::Index i = 0; i < M.entries.rows(); ++i) {
      for (Eigen::Index j = 0; j < M.entries.cols(); ++j) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " %10.4g%+10.4gi", M.entries(i, j).real(), M.entries(i, j).imag());
        std::cout << buf;
      }
      std::cout << "\n";
    }
    std::cout << "|det|              " << num(res.abs_determinant) << "\n"
              << "|b_K|^N prod|A(b)| " << num(res.via_roots_of_B) << "\n"
              << "|a_N|^K prod|B(a)| " << num(res.via_roots_of_A) << "\n"
              << "delta              " << num(d) << "\n"
              << "inverse max-entry  " << num(inv.max_entry) << "\n"
              << "inverse 2-norm     " << num(inv.two_norm) << "\n"
              << "inverse inf-norm   " << num(inv.inf_norm) << "\n"
              << "bound (C3=" << num(inv.C3) << ") " << num(inv.bound) << "\n"
              << "ratio              " << num(inv.ratio) << "\n";
  }
  return res.agree ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bezout identity A R + B S = 1: solvers, separation quantities and contours"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every randomized step");
  app.add_option("--tol", g.tol, "Tolerance override name=value (repeatable)");
  app.add_option("--out", g.out, "Output directory");
  app.add_flag("--json", g.json, "Machine-readable output");

  std::string pa, pb;
  auto* roots = app.add_subcommand("roots", "Roots with residuals");
  roots->add_option("poly", pa, "Polynomial JSON file or inline JSON")->required();

  auto* del = app.add_subcommand("delta", "delta and the delta-tilde bracket");
  del->add_option("A", pa)->required();
  del->add_option("B", pb)->required();

  std::string backend = "sylvester", rhs = "one";
  std::vector<double> shift;
  auto* solve = app.add_subcommand("solve", "Solve A R + B S = P");
  solve->add_option("A", pa)->required();
  solve->add_option("B", pb)->required();
  solve->add_option("--backend", backend)
      ->check(CLI::IsMember({"sylvester", "residue", "quadrature", "reversed", "main", "all"}));
  solve->add_option("--rhs", rhs, "one | monomial:t | polynomial JSON");
  solve->add_option("--shift", shift, "Translation re im for the reversed backend")->expected(2);

  std::vector<std::string> kinds;
  std::string svg, arcs_json;
  bool invert = false;
  auto* regions = app.add_subcommand("regions", "Disk-arrangement regions and their contours");
  regions->add_option("A", pa)->required();
  regions->add_option("B", pb)->required();
  regions->add_option("--kind", kinds, "EA, EB, DA, DB, gamma1, gamma2 (repeatable)")->required();
  regions->add_option("--svg", svg, "Write an SVG drawing");
  regions->add_option("--arcs-json", arcs_json, "Write the arcs as JSON");
  regions->add_flag("--invert", invert, "Image of the region under z -> 1/z");

  double C3 = -1.0;
  auto* syl = app.add_subcommand("sylvester", "Sylvester matrix, resultant and inverse-norm report");
  syl->add_option("A", pa)->required();
  syl->add_option("B", pb)->required();
  syl->add_option("--C3", C3, "Constant for the inverse-norm bound");

  RunConfig cfg;
  auto* cert = app.add_subcommand("certify", "Random-ensemble certification");
  cert->add_option("--size", cfg.ensemble_size);
  cert->add_option("--min-degree", cfg.min_degree);
  cert->add_option("--max-degree", cfg.max_degree);
  cert->add_option("--delta-floor", cfg.delta_floor);
  cert->add_option("--samples", cfg.separation_samples, "Separation samples per instance");
  cert->add_option("--threads", cfg.threads);
  cert->add_flag("--timing", cfg.timing, "Record wall time per instance (breaks byte-identical reports)");

  auto* examples = app.add_subcommand("examples", "The worked examples: sharpness, norm cap, discontinuity");
  auto* figures = app.add_subcommand("figures", "Rebuild the figure instances as SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*roots) return run_roots(g, pa);
    if (*del) return run_delta(g, pa, pb);
    if (*solve) return run_solve(g, pa, pb, backend, rhs, shift);
    if (*regions) return run_regions(g, pa, pb, kinds, svg, arcs_json, invert);
    if (*syl) return run_sylvester(g, pa, pb, C3);
    if (*cert) {
      cfg.seed = g.seed;
      cfg.tolerances = parse_tolerances(g.tol);
      cfg.out_dir = g.out;
      cfg.json = g.json;
      const CertReport rep = cmd_certify(cfg);
      save_json(to_json(rep), cfg.out_dir / "cert_report.json");
      if (g.json) std::cout << to_json(rep).dump(2) << "\n";
      else print_summary(rep, std::cout);
      return rep.ok() ? kExitOk : kExitCheckFailed;
    }
    if (*examples) return cmd_examples(std::cout, g.json);
    if (*figures) return cmd_figures(g.out, std::cout, g.json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}
