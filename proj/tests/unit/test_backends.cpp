#include <gtest/gtest.h>

#include <cmath>

#include "bezout/backends.hpp"
#include "bezout/error.hpp"
#include "bezout/roots.hpp"
#include "bezout/separation.hpp"
#include "bezout/sylvester.hpp"
#include "oracles.hpp"

using namespace bezout;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Io;
}

struct Case {
  Polynomial A, B;
  RootSet ra, rb;
  double delta;
};

// Normalized random pair with simple roots and delta >= floor.
Case draw(oracle::Gen& g, int max_degree, double floor) {
  for (;;) {
    const Polynomial A = g.poly(g.integer(1, max_degree)), B = g.poly(g.integer(1, max_degree));
    const RootSet ra = find_roots(A), rb = find_roots(B);
    if (!ra.all_simple() || !rb.all_simple()) continue;
    const double d = delta_value(A, B, ra, rb).value;
    if (d >= floor) return {A, B, ra, rb, d};
  }
}

// Sharpness family partner of A = z^N: B = prod_{j=1..N} (z - a w^j) with
// w = exp(2 pi i / (2N - 1)).
Polynomial sharpness_B(int N, double a) {
  std::vector<Complex> roots;
  for (int j = 1; j <= N; ++j) roots.push_back(a * std::polar(1.0, 2.0 * M_PI * j / (2 * N - 1)));
  return Polynomial::from_roots(roots);
}

double gap(const BezoutSolution& x, const BezoutSolution& y) {
  return std::max(coeff_distance(x.R, y.R), coeff_distance(x.S, y.S));
}

}  // namespace

TEST(Backends, KernelIdentity) {
  oracle::Gen g(701);
  for (int t = 0; t < 200; ++t) {
    const Polynomial G = g.poly(g.integer(1, 10));
    const DifferenceQuotientKernel k(G);
    const Complex zeta = g.in_disk(1.5), z = g.in_disk(1.5);
    if (std::abs(zeta - z) <= 1e-8) continue;
    const Complex lhs = k(zeta, z) * (zeta - z), rhs = eval(G, zeta) - eval(G, z);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max({1.0, std::abs(rhs), std::abs(eval(G, zeta))}) * 10);
    EXPECT_EQ(k.in_z(zeta).degree(), G.degree() - 1);
    EXPECT_LE(std::abs(k(zeta, zeta) - eval(derivative(G), zeta)), 1e-12 * std::max(1.0, std::abs(eval(derivative(G), zeta))) * 10);
  }
}

TEST(Backends, ResidueLinearPair) {
  const Polynomial A{0.0, 1.0}, B{1.0, -1.0};
  const BezoutSolution s = solve_residue(A, B, find_roots(A), find_roots(B), Polynomial{1.0});
  EXPECT_LE(coeff_distance(s.R, Polynomial{1.0}), 1e-15);
  EXPECT_LE(coeff_distance(s.S, Polynomial{1.0}), 1e-15);
}

TEST(Backends, ResidueSharpnessExample) {
  // A = z^2 has a double root, so the backend refuses; R is still the
  // interpolant of 1/A at the simple roots of B.
  const double a = 0.5;
  const Polynomial A{0.0, 0.0, 1.0};
  const Polynomial B = sharpness_B(2, a);
  const RootSet ra = find_roots(A), rb = find_roots(B);
  EXPECT_EQ(kind_of([&] { solve_residue(A, B, ra, rb, Polynomial{1.0}); }), ErrorKind::MultipleRoots);
  // Interpolate 1/A(beta_j) at the roots of B; z / a^3 is the expected line.
  std::vector<Complex> x = rb.roots, y;
  for (Complex b : x) y.push_back(1.0 / eval(A, b));
  const auto R = oracle::lagrange(x, y);
  EXPECT_LE(oracle::max_gap(R, {0.0, 1.0 / (a * a * a)}), 1e-12);
  EXPECT_LE(coeff_distance(solve_rhs(build_sylvester(A, B), Polynomial{1.0}).R, Polynomial(R)), 1e-12);
}

TEST(Backends, ResidueMatchesSylvester) {
  oracle::Gen g(702);
  for (int t = 0; t < 100; ++t) {
    const Case c = draw(g, 6, 0.05);
    const Polynomial P = g.poly(g.integer(0, c.A.degree() + c.B.degree() - 1));
    const BezoutSolution r = solve_residue(c.A, c.B, c.ra, c.rb, P);
    const BezoutSolution s = solve_rhs(build_sylvester(c.A, c.B), P);
    EXPECT_LE(gap(r, s), 1e-8) << "trial " << t;
  }
}

TEST(Backends, ResidueMatchesLagrangeOracle) {
  oracle::Gen g(703);
  for (int t = 0; t < 50; ++t) {
    const Case c = draw(g, 6, 0.05);
    std::vector<Complex> y;
    for (Complex a : c.ra.roots) y.push_back(1.0 / eval(c.B, a));
    const auto S = oracle::lagrange(c.ra.roots, y);
    const BezoutSolution r = solve_residue(c.A, c.B, c.ra, c.rb, Polynomial{1.0});
    EXPECT_LE(oracle::max_gap(oracle::coeffs(r.S), S), 1e-9 * std::max(1.0, coeff_norm(r.S)));
  }
}

TEST(Backends, ResidueSumOracle) {
  oracle::Gen g(704);
  for (int t = 0; t < 50; ++t) {
    const Case c = draw(g, 5, 0.05);
    const Polynomial P = g.poly(g.integer(0, c.A.degree() + c.B.degree() - 1));
    const Polynomial lit = residue_sum_S(c.A, c.B, c.ra, P);
    const BezoutSolution r = solve_residue(c.A, c.B, c.ra, c.rb, P);
    EXPECT_LE(coeff_distance(lit, r.S), 1e-8 * std::max(1.0, coeff_norm(r.S)));
  }
}

TEST(Backends, ResidueRefusesCommonRoot) {
  const Polynomial A{-0.25, 0.0, 1.0}, B{-0.5, 1.0};
  EXPECT_EQ(kind_of([&] { solve_residue(A, B, find_roots(A), find_roots(B), Polynomial{1.0}); }),
            ErrorKind::CommonRoot);
}

TEST(Backends, QuadratureMatchesResidue) {
  oracle::Gen g(705);
  int solved = 0;
  for (int t = 0; t < 60; ++t) {
    const Case c = draw(g, 6, 0.05);
    const Polynomial P = g.poly(g.integer(0, c.A.degree() + c.B.degree() - 1));
    const BezoutSolution r = solve_residue(c.A, c.B, c.ra, c.rb, P);
    const BezoutSolution q = solve_quadrature(c.A, c.B, c.ra, c.rb, default_contours(c.ra, c.rb), P);
    EXPECT_LE(gap(q, r), 1e-7) << "trial " << t;
    ++solved;
  }
  EXPECT_EQ(solved, 60);
}

TEST(Backends, QuadratureWithPEqualA) {
  oracle::Gen g(706);
  for (int t = 0; t < 30; ++t) {
    const Case c = draw(g, 5, 0.05);
    const BezoutSolution q = solve_quadrature(c.A, c.B, c.ra, c.rb, default_contours(c.ra, c.rb), c.A);
    EXPECT_LE(q.residual, 1e-8);
    // A R + B S = A with minimal degrees forces R = 1, S = 0.
    EXPECT_LE(coeff_distance(q.R, Polynomial{1.0}), 1e-8);
    EXPECT_LE(coeff_norm(q.S), 1e-8);
  }
}

TEST(Backends, QuadratureReproducesInterpolationValues) {
  // The contour integral evaluated at a root alpha gives P(alpha)/B(alpha).
  oracle::Gen g(707);
  for (int t = 0; t < 30; ++t) {
    const Case c = draw(g, 5, 0.05);
    const Polynomial P = g.poly(g.integer(0, c.A.degree() + c.B.degree() - 1));
    const BezoutSolution q = solve_quadrature(c.A, c.B, c.ra, c.rb, default_contours(c.ra, c.rb), P);
    for (Complex a : c.ra.roots) {
      const Complex expect = eval(P, a) / eval(c.B, a);
      EXPECT_LE(std::abs(eval(q.S, a) - expect), 1e-8 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST(Backends, QuadratureConvergedAtReportedOrder) {
  oracle::Gen g(708);
  for (int t = 0; t < 20; ++t) {
    const Case c = draw(g, 5, 0.05);
    const ContourPair cp = default_contours(c.ra, c.rb);
    QuadratureRule coarse;
    const BezoutSolution q1 = solve_quadrature(c.A, c.B, c.ra, c.rb, cp, Polynomial{1.0}, coarse);
    QuadratureRule fine;
    fine.order = 256;
    fine.tolerance = 1e-12;
    const BezoutSolution q2 = solve_quadrature(c.A, c.B, c.ra, c.rb, cp, Polynomial{1.0}, fine);
    const double s = std::max({1.0, coeff_norm(q2.R), coeff_norm(q2.S)});
    EXPECT_LE(gap(q1, q2), 1e-9 * s) << "trial " << t;
  }
}

TEST(Backends, QuadratureRejectsWrongContours) {
  const Polynomial A{-0.5, 1.0}, B{0.5, 1.0};
  const RootSet ra = find_roots(A), rb = find_roots(B);
  // Swap the roles: gamma1 now surrounds the root of B.
  const ContourPair good = default_contours(ra, rb);
  const ContourPair swapped{good.gamma2, good.gamma1};
  EXPECT_EQ(kind_of([&] { solve_quadrature(A, B, ra, rb, swapped, Polynomial{1.0}); }), ErrorKind::BadContour);
}

TEST(Backends, QuadratureBudgetExhausted) {
  const Polynomial A{0.3, -0.2, 1.0}, B{0.5, 1.0};
  const RootSet ra = find_roots(A), rb = find_roots(B);
  QuadratureRule rule;
  rule.tolerance = 1e-30;
  rule.max_order = 64;
  EXPECT_EQ(kind_of([&] { solve_quadrature(A, B, ra, rb, default_contours(ra, rb), Polynomial{1.0}, rule); }),
            ErrorKind::QuadratureNotConverged);
}

TEST(Backends, ArgumentPrincipleOnDefaultContours) {
  oracle::Gen g(709);
  for (int t = 0; t < 30; ++t) {
    const Case c = draw(g, 6, 0.05);
    const ContourPair cp = default_contours(c.ra, c.rb);
    const Polynomial dA = derivative(c.A);
    const Complex n = contour_integral(cp.gamma1, [&](Complex z) { return eval(dA, z) / eval(c.A, z); }, 32, 8);
    EXPECT_NEAR(n.real(), c.A.degree(), 1e-6);
  }
}

TEST(Backends, ReversedMatchesDirect) {
  const Polynomial A{-0.5, 1.0}, B{0.5, 1.0};
  const BezoutSolution d = solve_rhs(build_sylvester(A, B), Polynomial{1.0});
  for (InnerBackend inner : {InnerBackend::Sylvester, InnerBackend::Residue, InnerBackend::Quadrature}) {
    const BezoutSolution r = solve_reversed(A, B, inner);
    EXPECT_LE(gap(r, d), 1e-9) << to_string(inner);
    EXPECT_EQ(r.backend, "reversed/" + to_string(inner));
  }
  EXPECT_EQ(coeff_norm(reverse(A, 1)), coeff_norm(A));
}

TEST(Backends, ReversedNeedsShiftForZeroRoot) {
  const Polynomial A{0.0, 1.0}, B{1.0, -1.0};
  EXPECT_EQ(kind_of([&] { solve_reversed(A, B); }), ErrorKind::ZeroRoot);
  const BezoutSolution s = solve_reversed(A, B, InnerBackend::Residue, Complex(0.5));
  EXPECT_LE(coeff_distance(s.R, Polynomial{1.0}), 1e-12);
  EXPECT_LE(coeff_distance(s.S, Polynomial{1.0}), 1e-12);
}

TEST(Backends, ReversedRoundTrip) {
  oracle::Gen g(710);
  for (int t = 0; t < 50; ++t) {
    const Case c = draw(g, 6, 0.05);
    const BezoutSolution d = solve_rhs(build_sylvester(c.A, c.B), Polynomial{1.0});
    try {
      const BezoutSolution r = solve_reversed(c.A, c.B, InnerBackend::Residue);
      EXPECT_LE(gap(r, d), 1e-8 * std::max({1.0, coeff_norm(d.R), coeff_norm(d.S)}));
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::ZeroRoot || e.kind() == ErrorKind::MultipleRoots) << e.what();
    }
  }
}

TEST(Backends, MainPipelineMatchesSylvester) {
  oracle::Gen g(711);
  for (int t = 0; t < 30; ++t) {
    const Case c = draw(g, 5, 0.05);
    const BezoutSolution d = solve_rhs(build_sylvester(c.A, c.B), Polynomial{1.0});
    const MainPipelineReport m = solve_main_pipeline(c.A, c.B);
    EXPECT_LE(gap(m.solution, d), 1e-7 * std::max({1.0, coeff_norm(d.R), coeff_norm(d.S)})) << "trial " << t;
    EXPECT_LE(m.solution.residual, 1e-9);
    EXPECT_TRUE(m.gamma1_metrics.log_length_ok);
    EXPECT_GE(m.shift.clearance, 2.0 * m.shift.epsilon);
  }
}

TEST(Backends, SharpnessFamilyNorms) {
  for (int N : {2, 3, 4, 5})
    for (double a : {1.0, 0.9, 0.5, 0.25, 0.2, 0.1}) {
      const Polynomial A = Polynomial::monomial(N);
      const Polynomial B = sharpness_B(N, a);
      const RootSet ra = find_roots(A), rb = find_roots(B);
      const double d = delta_value(A, B, ra, rb).value;
      EXPECT_NEAR(d, std::pow(a, N), 1e-13) << N << " " << a;
      const BezoutSolution s = solve_rhs(build_sylvester(A, B), Polynomial{1.0});
      const double expect = std::pow(d, -2.0 + 1.0 / N);
      EXPECT_NEAR(coeff_norm(s.R), expect, 1e-8 * expect) << N << " " << a;
      const MainBoundCertificate m = certify_main_bound(A, B, s, d, 1.0);
      const double cap = std::max({1.0, coeff_norm(A), coeff_norm(B)});
      EXPECT_NEAR(m.ratio_R, std::pow(d, 1.0 / N) / cap, 1e-8);
      EXPECT_LE(m.ratio_R, 1.0 + 1e-12);
    }
}

TEST(Backends, CertifyLinearPair) {
  const Polynomial A{0.0, 1.0}, B{1.0, -1.0};
  const BezoutSolution s = solve_rhs(build_sylvester(A, B), Polynomial{1.0});
  const MainBoundCertificate m = certify_main_bound(A, B, s, 1.0);
  EXPECT_EQ(m.norm_R, 1.0);
  EXPECT_EQ(m.norm_S, 1.0);
  EXPECT_EQ(m.ratio_R, 1.0);
  EXPECT_EQ(m.ratio_S, 1.0);
  ASSERT_TRUE(m.ceiling.has_value());
  EXPECT_TRUE(m.passed);
}

TEST(Backends, UnnormalizedFamilyBlowsUp) {
  for (int N : {2, 3, 4})
    for (double a : {0.5, 0.25, 0.1}) {
      const Polynomial A1 = scale(Polynomial::monomial(N), 1.0 / (a * a));
      const Polynomial B1 = scale(sharpness_B(N, a), 1.0 / (a * a));
      const RootSet ra = find_roots(A1), rb = find_roots(B1);
      const double d1 = delta_value(A1, B1, ra, rb).value;
      const BezoutSolution s = solve_rhs(build_sylvester(A1, B1), Polynomial{1.0});
      const double top = std::abs(s.R.coeff(N - 1));
      EXPECT_NEAR(top * d1 * d1, 1.0 / a, 1e-8 / a) << N << " " << a;
    }
}

TEST(Backends, CeilingTable) {
  ASSERT_TRUE(c_ceiling(1, 1).has_value());
  ASSERT_TRUE(c_ceiling(8, 8).has_value());
  EXPECT_FALSE(c_ceiling(9, 1).has_value());
  EXPECT_GT(*c_ceiling(3, 4), 0.0);
  EXPECT_NE(c_ceiling_table_version().find("c_ceiling_v1"), std::string::npos);
  const Polynomial A = Polynomial::monomial(9), B{1.0, 1.0};
  const BezoutSolution s = solve_rhs(build_sylvester(A, B), Polynomial{1.0});
  const MainBoundCertificate m = certify_main_bound(A, B, s, 1.0);
  EXPECT_FALSE(m.ceiling.has_value());
  EXPECT_FALSE(m.passed);
}

TEST(Backends, GaussLegendreRules) {
  const GaussLegendre& one = gauss_legendre(1);
  ASSERT_EQ(one.nodes.size(), 1u);
  EXPECT_NEAR(one.nodes[0], 0.0, 1e-15);
  EXPECT_NEAR(one.weights[0], 2.0, 1e-15);
  for (int n : {2, 5, 16, 33}) {
    const GaussLegendre& r = gauss_legendre(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      EXPECT_NEAR(s, exact, 1e-13) << "n " << n << " k " << k;
    }
  }
}

// The rule is Gauss-Legendre in the angle, so zeta^k d(zeta) is a trigonometric term
// of frequency k+1 rather than a polynomial: m nodes resolve k <= m-1 and the next
// doubling covers k <= 2m-1.
TEST(Backends, ArcRuleIntegratesPowers) {
  const std::vector<Arc> arcs{{{Complex(0.3, -0.1), 0.7}, 0.2, 1.4, true},
                              {{Complex(0.0, 0.0), 1.0}, 0.0, M_PI / 2, true},
                              {{Complex(0.2, 0.1), 0.8}, -0.5, -0.5 + M_PI / 2, false}};
  for (const Arc& arc : arcs) {
    ContourSystem c;
    c.arcs = {arc};
    c.loop_of_arc = {0};
    c.loop_count = 1;
    for (int k = 0; k <= 31; ++k) {
      const Complex exact =
          (std::pow(arc.end(), k + 1) - std::pow(arc.start(), k + 1)) / (k + 1.0) / Complex(0.0, 2.0 * M_PI);
      const auto rule = [&](int m) { return contour_integral(c, [&](Complex z) { return std::pow(z, k); }, m, 1); };
      if (k <= 15) EXPECT_LE(std::abs(rule(16) - exact), 1e-10) << "m 16 k " << k;
      EXPECT_LE(std::abs(rule(32) - exact), 1e-10) << "m 32 k " << k;
    }
  }
}
