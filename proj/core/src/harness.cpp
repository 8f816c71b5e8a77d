#include "bezout/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

#include "bezout/backends.hpp"
#include "bezout/error.hpp"
#include "bezout/json_io.hpp"
#include "bezout/regions.hpp"
#include "bezout/roots.hpp"
#include "bezout/separation.hpp"
#include "bezout/sylvester.hpp"

namespace bezout {

const std::map<std::string, double>& RunConfig::default_tolerances() {
  static const std::map<std::string, double> t = {
      {"residual", 1e-9},  {"agreement", 1e-7}, {"resultant", 1e-6},
      {"sandwich", 1e-9},  {"quadrature", 1e-9},
  };
  return t;
}

double RunConfig::tol(const std::string& name) const {
  if (auto it = tolerances.find(name); it != tolerances.end()) return it->second;
  return default_tolerances().at(name);
}

void RunConfig::validate() const {
  for (const auto& [name, v] : tolerances) {
    if (!default_tolerances().contains(name))
      throw Error(ErrorKind::InvalidArgument, "unknown tolerance '" + name + "'");
    if (!(v > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance '" + name + "' must be positive");
  }
  if (ensemble_size < 0) throw Error(ErrorKind::InvalidArgument, "ensemble size must be nonnegative");
  if (min_degree < 1 || max_degree < min_degree)
    throw Error(ErrorKind::InvalidArgument, "degree range must satisfy 1 <= min <= max");
  if (delta_floor < 0.0) throw Error(ErrorKind::InvalidArgument, "delta floor must be nonnegative");
  if (separation_samples < 0) throw Error(ErrorKind::InvalidArgument, "separation samples must be nonnegative");
}

Polynomial random_polynomial(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) {
    do {
      x = std::polar(std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
    } while (&x == &c.back() && x == Complex{0.0});
  }
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> ensemble_pair(std::uint64_t seed, std::uint64_t index, int min_degree,
                                                int max_degree) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> deg(min_degree, max_degree);
  const int N = deg(rng);
  const int K = deg(rng);
  Polynomial A = random_polynomial(rng, N);
  Polynomial B = random_polynomial(rng, K);
  return {std::move(A), std::move(B)};
}

namespace {

// One ensemble instance; nullopt when it falls under the delta floor.
std::optional<CertRecord> certify_instance(const RunConfig& config, int index) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto [A, B] = ensemble_pair(config.seed, static_cast<std::uint64_t>(index), config.min_degree,
                                    config.max_degree);
  const RootSet ra = find_roots(A);
  const RootSet rb = find_roots(B);
  const DeltaValue dv = delta_value(A, B, ra, rb);
  if (!(dv.value >= config.delta_floor) || !(dv.value > 1e-12 * std::max(coeff_norm(A), coeff_norm(B))))
    return std::nullopt;

  CertRecord r;
  r.index = index;
  r.N = A.degree();
  r.K = B.degree();
  r.delta = dv.value;
  r.simple_roots = ra.all_simple() && rb.all_simple();

  SeparationOptions sopt;
  sopt.sandwich_tolerance = config.tol("sandwich");
  const DeltaTildeBracket dt = delta_tilde(A, B, ra, rb, r.delta, sopt);
  r.delta_tilde_lower = dt.lower;
  r.delta_tilde_upper = dt.upper;
  r.sandwich_ok = dt.lower <= dt.upper + sopt.sandwich_tolerance && dt.upper <= r.delta + sopt.sandwich_tolerance;

  const BezoutSolution syl = solve_rhs(build_sylvester(A, B), Polynomial{1.0});
  r.backends.push_back(syl.backend);
  r.residuals[syl.backend] = syl.residual;

  const MainBoundCertificate cert = certify_main_bound(A, B, syl, r.delta);
  r.norm_R = cert.norm_R;
  r.norm_S = cert.norm_S;
  r.ratio_R = cert.ratio_R;
  r.ratio_S = cert.ratio_S;
  r.crude_ratio_R = cert.crude_ratio_R;
  r.crude_ratio_S = cert.crude_ratio_S;
  r.ceiling = cert.ceiling;
  r.bound_ok = cert.passed || !cert.ceiling;
  if (!cert.ceiling) r.notes.push_back("no ceiling entry for these degrees");

  r.inverse_ratio = inverse_norm_report(A, B, r.delta).ratio;
  const ResultantReport res = resultant(A, B, ra, rb);
  r.resultant_spread = res.max_relative_spread;
  r.resultant_ok = res.max_relative_spread <= config.tol("resultant");

  if (config.separation_samples > 0) {
    try {
      const SeparationReport sep = check_separation(A, B, ra, rb, r.delta, config.separation_samples);
      r.separation_samples = sep.samples;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SeparationViolation) throw;
      r.separation_joint_hits = 1;
      r.notes.push_back(e.what());
    }
  }

  if (r.simple_roots) {
    double gap = 0.0;
    bool all = true;
    const auto compare = [&](const BezoutSolution& s) {
      r.backends.push_back(s.backend);
      r.residuals[s.backend] = s.residual;
      gap = std::max({gap, coeff_distance(s.R, syl.R), coeff_distance(s.S, syl.S)});
    };
    try {
      compare(solve_residue(A, B, ra, rb, Polynomial{1.0}));
    } catch (const Error& e) {
      all = false;
      r.notes.push_back(std::string("residue: ") + e.what());
    }
    try {
      QuadratureRule rule;
      rule.tolerance = config.tol("quadrature");
      compare(solve_quadrature(A, B, ra, rb, default_contours(ra, rb), Polynomial{1.0}, rule));
    } catch (const Error& e) {
      all = false;
      r.notes.push_back(std::string("quadrature: ") + e.what());
    }
    if (all) r.agreement = gap;
  } else {
    r.notes.push_back("clustered roots: analytic backends skipped");
  }

  if (config.timing)
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

bool CertReport::ok() const noexcept {
  return residual_failures == 0 && disagreements == 0 && resultant_failures == 0 && separation_violations == 0 &&
         sandwich_failures == 0 && bound_failures == 0 && backend_errors == 0;
}

void CertReport::recompute_aggregates(const RunConfig& config) {
  residual_failures = disagreements = resultant_failures = separation_violations = sandwich_failures =
      bound_failures = backend_errors = 0;
  max_ratio = max_inverse_ratio = empirical_T = 0.0;
  for (const auto& r : records) {
    if (r.residuals.at("sylvester") > config.tol("residual")) ++residual_failures;
    if (r.agreement && *r.agreement > config.tol("agreement")) ++disagreements;
    if (r.simple_roots && !r.agreement) ++backend_errors;
    if (!r.resultant_ok) ++resultant_failures;
    separation_violations += static_cast<int>(r.separation_joint_hits > 0);
    if (!r.sandwich_ok) ++sandwich_failures;
    if (!r.bound_ok) ++bound_failures;
    max_ratio = std::max({max_ratio, r.ratio_R, r.ratio_S});
    max_inverse_ratio = std::max(max_inverse_ratio, r.inverse_ratio);
    empirical_T = std::max(empirical_T, r.delta);
  }
}

nlohmann::json to_json(const CertRecord& r) {
  nlohmann::json j = {
      {"index", r.index},
      {"N", r.N},
      {"K", r.K},
      {"delta", r.delta},
      {"delta_tilde", {{"lower", r.delta_tilde_lower}, {"upper", r.delta_tilde_upper}}},
      {"sandwich_ok", r.sandwich_ok},
      {"norm_R", r.norm_R},
      {"norm_S", r.norm_S},
      {"ratio_R", r.ratio_R},
      {"ratio_S", r.ratio_S},
      {"crude_ratio_R", r.crude_ratio_R},
      {"crude_ratio_S", r.crude_ratio_S},
      {"ceiling", r.ceiling ? nlohmann::json(*r.ceiling) : nlohmann::json(nullptr)},
      {"bound_ok", r.bound_ok},
      {"inverse_ratio", r.inverse_ratio},
      {"resultant_spread", r.resultant_spread},
      {"resultant_ok", r.resultant_ok},
      {"separation", {{"samples", r.separation_samples}, {"joint_hits", r.separation_joint_hits}}},
      {"simple_roots", r.simple_roots},
      {"residuals", r.residuals},
      {"agreement", r.agreement ? nlohmann::json(*r.agreement) : nlohmann::json(nullptr)},
      {"backends", r.backends},
      {"notes", r.notes},
  };
  if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
  return j;
}

nlohmann::json to_json(const CertReport& r) {
  auto records = nlohmann::json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  return {
      {"seed", r.seed},
      {"requested", r.requested},
      {"rejected", r.rejected},
      {"records", std::move(records)},
      {"warnings", r.warnings},
      {"aggregate",
       {{"residual_failures", r.residual_failures},
        {"disagreements", r.disagreements},
        {"resultant_failures", r.resultant_failures},
        {"separation_violations", r.separation_violations},
        {"sandwich_failures", r.sandwich_failures},
        {"bound_failures", r.bound_failures},
        {"backend_errors", r.backend_errors},
        {"max_ratio", r.max_ratio},
        {"max_inverse_ratio", r.max_inverse_ratio},
        {"empirical_T", r.empirical_T},
        {"ceiling_table", c_ceiling_table_version()},
        {"ok", r.ok()}}},
  };
}

CertReport cmd_certify(const RunConfig& config) {
  config.validate();
  const int n = config.ensemble_size;
  std::vector<std::optional<CertRecord>> slots(static_cast<std::size_t>(n));
  std::vector<std::string> errors(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        slots[static_cast<std::size_t>(i)] = certify_instance(config, i);
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(i)] = e.what();
      }
    }
  };
  int threads = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, n));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CertReport rep;
  rep.seed = config.seed;
  rep.requested = n;
  for (int i = 0; i < n; ++i) {
    const auto& e = errors[static_cast<std::size_t>(i)];
    if (!e.empty()) {
      rep.warnings.push_back("instance " + std::to_string(i) + ": " + e);
      ++rep.rejected;
      continue;
    }
    if (slots[static_cast<std::size_t>(i)]) {
      rep.records.push_back(std::move(*slots[static_cast<std::size_t>(i)]));
    } else {
      ++rep.rejected;
    }
  }
  if (rep.records.empty()) rep.warnings.push_back("empty ensemble: every instance fell under the delta floor");
  rep.recompute_aggregates(config);
  // Instances that threw are counted as backend errors, not silently dropped.
  for (const auto& e : errors)
    if (!e.empty()) ++rep.backend_errors;
  return rep;
}

void print_summary(const CertReport& r, std::ostream& out) {
  out << "seed               " << r.seed << "\n"
      << "requested          " << r.requested << "\n"
      << "records            " << r.records.size() << "\n"
      << "rejected           " << r.rejected << "\n"
      << "residual failures  " << r.residual_failures << "\n"
      << "disagreements      " << r.disagreements << "\n"
      << "resultant failures " << r.resultant_failures << "\n"
      << "separation hits    " << r.separation_violations << "\n"
      << "sandwich failures  " << r.sandwich_failures << "\n"
      << "bound failures     " << r.bound_failures << "\n"
      << "backend errors     " << r.backend_errors << "\n"
      << "max ratio          " << fmt("%.6g", r.max_ratio) << "\n"
      << "max inverse ratio  " << fmt("%.6g", r.max_inverse_ratio) << "\n"
      << "empirical T        " << fmt("%.6g", r.empirical_T) << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  out << (r.ok() ? "OK" : "FAILED") << "\n";
}

// ---------------------------------------------------------------- examples

namespace {

struct SharpInstance {
  Polynomial A, B, R, S;
  double delta;
};

SharpInstance sharpness_instance(int N, double a) {
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / (2 * N - 1));
  std::vector<Complex> rb, rs;
  for (int j = 1; j <= N; ++j) rb.push_back(a * std::pow(w, j));
  for (int j = N + 1; j <= 2 * N - 1; ++j) rs.push_back(a * std::pow(w, j));
  const double inv = std::pow(a, -(2 * N - 1));
  return {Polynomial::monomial(N), Polynomial::from_roots(rb), Polynomial::monomial(N - 1, inv),
          Polynomial::from_roots(rs, -inv), std::pow(a, N)};
}

double rel(double x, double ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

}  // namespace

int cmd_examples(std::ostream& out, bool json) {
  bool ok = true;
  nlohmann::json j;

  // Sharpness family.
  auto sharp = nlohmann::json::array();
  if (!json) out << "sharpness: ||R|| against delta^(-2+1/N)\n  N      a          delta          ||R||          target         rel.err   ||R-R_exact||\n";
  for (int N : {2, 3, 4, 5}) {
    for (double a : {1.0, 0.9, 0.5, 0.25, 0.1}) {
      const SharpInstance in = sharpness_instance(N, a);
      const RootSet ra = find_roots(in.A);
      const RootSet rb = find_roots(in.B);
      const double d = delta_value(in.A, in.B, ra, rb).value;
      const BezoutSolution s = solve_rhs(build_sylvester(in.A, in.B), Polynomial{1.0});
      const double target = std::pow(d, -2.0 + 1.0 / N);
      const double err = rel(coeff_norm(s.R), target);
      const double exact_gap =
          std::max(coeff_distance(s.R, in.R), coeff_distance(s.S, in.S)) / coeff_norm(in.R);
      const bool row_ok = err <= 1e-8 && rel(d, in.delta) <= 1e-12 && exact_gap <= 1e-8;
      ok = ok && row_ok;
      sharp.push_back({{"N", N}, {"a", a}, {"delta", d}, {"norm_R", coeff_norm(s.R)}, {"target", target},
                       {"rel_error", err}, {"exact_gap", exact_gap}, {"ok", row_ok}});
      if (!json)
        out << "  " << N << fmt("  %8.3g", a) << fmt("  %13.6e", d) << fmt("  %13.6e", coeff_norm(s.R))
            << fmt("  %13.6e", target) << fmt("  %9.2e", err) << fmt("  %9.2e", exact_gap) << (row_ok ? "" : "  MISMATCH")
            << "\n";
    }
  }
  j["sharpness"] = sharp;

  // Dropping the norm cap: ||R1|| delta(A1,B1)^2 = 1/a.
  auto unnorm = nlohmann::json::array();
  if (!json) out << "\nunnormalized: ||R1|| delta1^2 against 1/a\n  N      a          ||A1||         value          1/a\n";
  for (int N : {2, 3, 4}) {
    for (double a : {0.5, 0.25, 0.1}) {
      const SharpInstance in = sharpness_instance(N, a);
      const Polynomial A1 = scale(in.A, 1.0 / (a * a));
      const Polynomial B1 = scale(in.B, 1.0 / (a * a));
      const double d1 = delta_value(A1, B1, find_roots(A1), find_roots(B1)).value;
      const BezoutSolution s = solve_rhs(build_sylvester(A1, B1), Polynomial{1.0});
      const double value = coeff_norm(s.R) * d1 * d1;
      const bool row_ok = rel(value, 1.0 / a) <= 1e-8;
      ok = ok && row_ok;
      unnorm.push_back({{"N", N}, {"a", a}, {"norm_A1", coeff_norm(A1)}, {"delta1", d1}, {"value", value},
                        {"expected", 1.0 / a}, {"ok", row_ok}});
      if (!json)
        out << "  " << N << fmt("  %8.3g", a) << fmt("  %13.6e", coeff_norm(A1)) << fmt("  %13.6e", value)
            << fmt("  %13.6e", 1.0 / a) << (row_ok ? "" : "  MISMATCH") << "\n";
    }
  }
  j["unnormalized"] = unnorm;

  // Discontinuity of delta.
  const Polynomial A{0.0, 1.0};
  const Polynomial B{1.0, -1.0};
  const double d0 = delta_value(A, B, find_roots(A), find_roots(B)).value;
  const DeltaTildeBracket dt0 = delta_tilde(A, B);
  ok = ok && std::abs(d0 - 1.0) <= 1e-15;
  auto disc = nlohmann::json::array();
  if (!json)
    out << "\ndiscontinuity: delta(z, 1-z) = " << fmt("%.6g", d0) << ", delta-tilde in ["
        << fmt("%.6g", dt0.lower) << ", " << fmt("%.6g", dt0.upper) << "]\n  n      delta(An,Bn)   ||An-A||       ||Bn-B||\n";
  for (int n = 2; n <= 10; ++n) {
    const double inv = 1.0 / n;
    const Polynomial An{0.0, 1.0, inv};
    const Polynomial Bn{1.0, -1.0, -(inv + inv * inv)};
    const double dn = delta_value(An, Bn, find_roots(An), find_roots(Bn)).value;
    const double dA = coeff_distance(An, A);
    const double dB = coeff_distance(Bn, B);
    const bool row_ok = dn <= 1e-9 && dA == inv && rel(dB, inv + inv * inv) <= 1e-15;
    ok = ok && row_ok;
    disc.push_back({{"n", n}, {"delta_n", dn}, {"dist_A", dA}, {"dist_B", dB}, {"ok", row_ok}});
    if (!json)
      out << fmt("  %-4.0f", n) << fmt("  %13.6e", dn) << fmt("  %13.6e", dA) << fmt("  %13.6e", dB)
          << (row_ok ? "" : "  MISMATCH") << "\n";
  }
  j["discontinuity"] = {{"delta", d0},
                        {"delta_tilde", {{"lower", dt0.lower}, {"upper", dt0.upper}}},
                        {"rows", disc}};
  j["ok"] = ok;
  if (json) out << j.dump(2) << "\n";
  else out << "\n" << (ok ? "all examples match" : "MISMATCH in examples") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- figures

int cmd_figures(const std::filesystem::path& out_dir, std::ostream& out, bool json) {
  bool ok = true;
  nlohmann::json counts;

  const std::vector<Complex> a1 = {{0.25, 0.125}, {-0.5, 0.0}, {0.4, 0.0}};
  const std::vector<Complex> b1 = {{1.0 / 9.0, 5.0 / 6.0}, {0.125, 0.5}, {0.0, 1.0 / 3.0}, {0.0, 0.2}};
  const RootSet ra1 = find_roots(Polynomial::from_roots(a1));
  const RootSet rb1 = find_roots(Polynomial::from_roots(b1));
  const ContourSystem ea = build_region(make_region_spec(RegionKind::EA, ra1, rb1));
  const ContourSystem eb = build_region(make_region_spec(RegionKind::EB, ra1, rb1));
  std::vector<Complex> markers1 = ra1.roots;
  markers1.insert(markers1.end(), rb1.roots.begin(), rb1.roots.end());
  emit_svg({ea, eb}, markers1, out_dir / "fig1_regions.svg");
  emit_svg({ea, eb}, markers1, out_dir / "fig3_oriented.svg");
  const bool fig1_ok = ea.loop_count == 2 && eb.loop_count == 1;
  ok = ok && fig1_ok;
  counts["fig1"] = {{"EA_components", ea.loop_count}, {"EB_components", eb.loop_count}, {"ok", fig1_ok}};

  const std::vector<Complex> a4 = {{1.0 / 3.0, 0.0}, {-0.2, 0.34641}, {-0.2, -0.34641}};
  const std::vector<Complex> b4 = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  const RootSet ra4 = find_roots(Polynomial::from_roots(a4));
  const RootSet rb4 = find_roots(Polynomial::from_roots(b4));
  // This E_A has a small hole between the three disk families; draw it as is.
  const ContourSystem ea4 = build_region(make_region_spec(RegionKind::EA, ra4, rb4, false, true));
  const ContourSystem da4 = build_region(make_region_spec(RegionKind::DA, ra4, rb4));
  const ContourSystem g1 = build_region(make_region_spec(RegionKind::Gamma1, ra4, rb4));
  std::vector<Complex> markers4 = ra4.roots;
  markers4.insert(markers4.end(), rb4.roots.begin(), rb4.roots.end());
  emit_svg({ea4, da4}, markers4, out_dir / "fig4_ea_da.svg");
  emit_svg({g1}, markers4, out_dir / "fig5_gamma1.svg");
  std::vector<int> wa, wb;
  for (Complex z : ra4.roots) wa.push_back(winding_number(g1, z));
  for (Complex z : rb4.roots) wb.push_back(winding_number(g1, z));
  const bool fig5_ok = std::all_of(wa.begin(), wa.end(), [](int w) { return w == 1; }) &&
                       std::all_of(wb.begin(), wb.end(), [](int w) { return w == 0; });
  ok = ok && fig5_ok;
  counts["fig4"] = {{"EA_components", ea4.loop_count}, {"DA_components", da4.loop_count}};
  counts["fig5"] = {{"gamma1_components", g1.loop_count},
                    {"winding_at_alpha", wa},
                    {"winding_at_beta", wb},
                    {"ok", fig5_ok}};
  counts["ok"] = ok;
  save_json(counts, out_dir / "counts.json");

  if (json) {
    out << counts.dump(2) << "\n";
  } else {
    out << "fig1: E_A components " << ea.loop_count << " (expect 2), E_B components " << eb.loop_count
        << " (expect 1)\n";
    out << "fig5: gamma1 winding at alpha:";
    for (int w : wa) out << ' ' << w;
    out << " (expect 1), at beta:";
    for (int w : wb) out << ' ' << w;
    out << " (expect 0)\n";
    out << "written to " << out_dir.string() << "\n" << (ok ? "OK" : "MISMATCH") << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int exit_code_for(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    switch (err->kind()) {
      case ErrorKind::InvalidArgument:
      case ErrorKind::Io: return kExitUsage;
      case ErrorKind::NonConvergence:
      case ErrorKind::QuadratureNotConverged: return kExitNonConvergence;
      default: return kExitCheckFailed;
    }
  }
  return kExitCheckFailed;
}

}  // namespace bezout
