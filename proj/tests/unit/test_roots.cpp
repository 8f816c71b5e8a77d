#include <gtest/gtest.h>

#include <cmath>

#include "bezout/error.hpp"
#include "bezout/roots.hpp"
#include "bezout/separation.hpp"
#include "oracles.hpp"

using namespace bezout;

namespace {

const Complex I{0.0, 1.0};

std::vector<Complex> roots_of(const Polynomial& p) { return find_roots(p).roots; }

}  // namespace

TEST(Roots, ZSquaredPlusOne) {
  const RootSet r = find_roots(Polynomial{1.0, 0.0, 1.0});
  EXPECT_LE(oracle::match_distance(r.roots, {I, -I}), 1e-14);
  EXPECT_TRUE(r.verified);
  EXPECT_TRUE(r.all_simple());
  EXPECT_EQ(r.cauchy_bound, 2.0);
}

TEST(Roots, CubeRootsOfAEighth) {
  const double a = 0.5;
  const RootSet r = find_roots(Polynomial{-a * a * a, 0.0, 0.0, 1.0});
  std::vector<Complex> expect;
  for (int j = 0; j < 3; ++j) expect.push_back(std::polar(a, 2.0 * M_PI * j / 3.0));
  EXPECT_LE(oracle::match_distance(r.roots, expect), 1e-14);
}

TEST(Roots, FigureCubicFromExpandedCoefficients) {
  const std::vector<Complex> truth{{0.25, 0.125}, -0.5, 0.4};
  const Polynomial p(oracle::expand_roots(truth));
  EXPECT_LE(oracle::match_distance(roots_of(p), truth), 1e-10);
}

TEST(Roots, ConstantThrowsDegreeZero) {
  try {
    find_roots(Polynomial{3.0});
    FAIL() << "expected DegreeZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeZero);
  }
}

TEST(Roots, ResidualsAndCauchyDisk) {
  oracle::Gen g(301);
  for (int t = 0; t < 200; ++t) {
    const Polynomial p = g.poly(g.integer(1, 10));
    const RootSet r = find_roots(p);
    ASSERT_EQ(static_cast<int>(r.size()), p.degree());
    EXPECT_EQ(r.cauchy_bound, 1.0 + coeff_norm(p) / std::abs(p.leading()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      EXPECT_LE(std::abs(r.roots[i]), r.cauchy_bound);
      EXPECT_EQ(r.residuals[i], std::abs(eval(p, r.roots[i])));
    }
  }
}

TEST(Roots, ProductReconstruction) {
  oracle::Gen g(302);
  for (int t = 0; t < 100; ++t) {
    const int d = g.integer(1, 10);
    const auto truth = g.separated_points(d, 1.5, 0.2);
    const Complex lead = g.in_disk() + Complex(1.0, 0.0);
    const Polynomial p(oracle::expand_roots(truth, lead));
    const RootSet r = find_roots(p);
    EXPECT_LE(oracle::max_gap(oracle::expand_roots(r.roots, p.leading()), oracle::coeffs(p)), 1e-8 * coeff_norm(p));
    EXPECT_TRUE(r.all_simple());
  }
}

TEST(Roots, ReversalReciprocatesRoots) {
  oracle::Gen g(303);
  for (int t = 0; t < 100; ++t) {
    const int d = g.integer(1, 8);
    auto truth = g.separated_points(d, 1.2, 0.15);
    for (auto& z : truth)
      if (std::abs(z) < 0.2) z += 0.3;
    const Polynomial p(oracle::expand_roots(truth));
    const RootSet rev = find_roots(reverse(p, d));
    std::vector<Complex> inv;
    for (Complex z : find_roots(p).roots) inv.push_back(1.0 / z);
    EXPECT_LE(oracle::match_distance(rev.roots, inv), 1e-8 * (1.0 + std::abs(inv[0]))) << "trial " << t;
  }
}

TEST(Roots, DoubleRootFlagged) {
  const RootSet r = find_roots(Polynomial{0.0, 0.0, 1.0});
  EXPECT_FALSE(r.all_simple());
  const RootSet triple = find_roots(Polynomial(oracle::expand_roots({0.3, 0.3, 0.3, -0.5})));
  EXPECT_FALSE(triple.all_simple());
  for (std::size_t i = 0; i < triple.size(); ++i)
    EXPECT_EQ(triple.multiplicity_suspect[i], std::abs(triple.roots[i] - 0.3) < 0.01) << triple.roots[i];
}

TEST(Roots, PerturbSeparatesDoubleRoot) {
  const Polynomial A{0.0, 0.0, 1.0}, B{1.0, -1.0};
  const auto [Ap, Bp] = perturb_to_simple(A, B, 1e-6);
  const RootSet r = find_roots(Ap);
  EXPECT_TRUE(r.all_simple());
  EXPECT_NE(r.roots[0], r.roots[1]);
  for (Complex z : r.roots) EXPECT_LE(std::abs(z), 1e-6);
  EXPECT_LE(coeff_norm(Ap), coeff_norm(A) + 1e-15);
  EXPECT_LE(coeff_norm(Bp), coeff_norm(B) + 1e-15);
  EXPECT_LE(coeff_distance(Ap, A) + coeff_distance(Bp, B), 1e-6);
}

TEST(Roots, PerturbLeavesSimplePairAlone) {
  const Polynomial A{-0.5, 1.0}, B{0.5, 0.0, 1.0};
  const auto [Ap, Bp] = perturb_to_simple(A, B, 1e-6);
  EXPECT_EQ(Ap, A);
  EXPECT_EQ(Bp, B);
}

TEST(Roots, DeltaContinuousUnderPerturbation) {
  // Double root at 0.2, B with roots away from it.
  const Polynomial A(oracle::expand_roots({0.2, 0.2, -0.6}));
  const Polynomial B(oracle::expand_roots({0.9, -0.1 + 0.7 * I}));
  const double d = delta_value(A, B, find_roots(A), find_roots(B)).value;
  double prev = std::numeric_limits<double>::infinity();
  for (double eps : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    const auto [Ap, Bp] = perturb_to_simple(A, B, eps);
    const double gap = std::abs(delta_value(Ap, Bp, find_roots(Ap), find_roots(Bp)).value - d);
    EXPECT_LE(gap, 10.0 * eps) << "eps " << eps;
    EXPECT_LE(gap, prev * 1.01 + 1e-12);
    prev = gap;
  }
}
