#include <gtest/gtest.h>

#include <cmath>

#include "bezout/error.hpp"
#include "bezout/roots.hpp"
#include "bezout/separation.hpp"
#include "bezout/sylvester.hpp"
#include "oracles.hpp"

using namespace bezout;

namespace {

const Complex W = std::polar(1.0, 2.0 * M_PI / 3.0);

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

double matrix_gap(const Eigen::MatrixXcd& m, std::initializer_list<std::initializer_list<Complex>> rows) {
  double g = 0.0;
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (Complex v : row) g = std::max(g, std::abs(m(i, j++) - v));
    ++i;
  }
  return g;
}

}  // namespace

TEST(Sylvester, RemarkLayout) {
  const double a = 0.3;
  const SylvesterMatrix M = build_sylvester(Polynomial{0.0, a}, Polynomial{1.0, a});
  EXPECT_EQ(matrix_gap(M.entries, {{0.0, 1.0}, {a, a}}), 0.0);
}

TEST(Sylvester, LinearLayout) {
  const SylvesterMatrix M = build_sylvester(Polynomial{0.0, 1.0}, Polynomial{1.0, -1.0});
  EXPECT_EQ(matrix_gap(M.entries, {{0.0, 1.0}, {1.0, -1.0}}), 0.0);
}

TEST(Sylvester, LayoutInvariant) {
  oracle::Gen g(601);
  for (int t = 0; t < 50; ++t) {
    const int N = g.integer(1, 6), K = g.integer(1, 6);
    const Polynomial A = g.poly(N), B = g.poly(K);
    const SylvesterMatrix M = build_sylvester(A, B);
    ASSERT_EQ(M.entries.rows(), N + K);
    ASSERT_EQ(M.entries.cols(), N + K);
    for (int c = 0; c < N + K; ++c)
      for (int r = 0; r < N + K; ++r) {
        Complex expect = 0.0;
        if (c < K && r >= c && r <= c + N) expect = A.coeff(r - c);
        if (c >= K && r >= c - K && r <= c - K + K) expect = B.coeff(r - (c - K));
        EXPECT_EQ(M.entries(r, c), expect);
      }
  }
}

TEST(Sylvester, MatrixVectorProductIsPolynomialProduct) {
  oracle::Gen g(602);
  for (int t = 0; t < 50; ++t) {
    const int N = g.integer(1, 6), K = g.integer(1, 6);
    const Polynomial A = g.poly(N), B = g.poly(K), R = g.poly(K - 1), S = g.poly(N - 1);
    const Eigen::VectorXcd y = build_sylvester(A, B).entries * pack_solution(R, S, N, K);
    const auto ref = oracle::product(oracle::coeffs(A), oracle::coeffs(R));
    const auto ref2 = oracle::product(oracle::coeffs(B), oracle::coeffs(S));
    for (int k = 0; k < N + K; ++k) {
      const Complex expect = (k < static_cast<int>(ref.size()) ? ref[k] : 0.0) +
                             (k < static_cast<int>(ref2.size()) ? ref2[k] : 0.0);
      EXPECT_LE(std::abs(y(k) - expect), 1e-14);
    }
  }
}

TEST(Sylvester, ConstantRejected) {
  EXPECT_EQ(kind_of([] { build_sylvester(Polynomial{1.0}, Polynomial{0.0, 1.0}); }), ErrorKind::ConstantPolynomial);
}

TEST(Sylvester, SolveLinearPair) {
  const BezoutSolution s = solve_rhs(build_sylvester(Polynomial{0.0, 1.0}, Polynomial{1.0, -1.0}), Polynomial{1.0});
  EXPECT_EQ(s.R, Polynomial{1.0});
  EXPECT_EQ(s.S, Polynomial{1.0});
  EXPECT_EQ(s.residual, 0.0);
}

TEST(Sylvester, SolveSharpnessPair) {
  const double a = 0.5;
  const Polynomial A{0.0, 0.0, 1.0};
  const Polynomial B = Polynomial::from_roots(std::vector<Complex>{a * W, a * W * W});
  const BezoutSolution s = solve_rhs(build_sylvester(A, B), Polynomial{1.0});
  EXPECT_LE(coeff_distance(s.R, Polynomial{0.0, 8.0}), 1e-12);
  EXPECT_NEAR(coeff_norm(s.R), 8.0, 1e-12);
  // B S = 1 - A R = 1 - 8 z^3 = (1 - 2z)(1 + 2z + 4z^2), B = z^2 + z/2 + 1/4.
  EXPECT_LE(coeff_distance(s.S, Polynomial{4.0, -8.0}), 1e-12);
  EXPECT_LE(s.residual, 1e-14);
}

TEST(Sylvester, CommonRootIsSingular) {
  EXPECT_EQ(kind_of([] { solve_rhs(build_sylvester(Polynomial{0.0, 1.0}, Polynomial{0.0, 1.0}), Polynomial{1.0}); }),
            ErrorKind::SingularSystem);
}

TEST(Sylvester, RhsDegreeTooHigh) {
  EXPECT_EQ(kind_of([] {
              solve_rhs(build_sylvester(Polynomial{0.0, 1.0}, Polynomial{1.0, -1.0}), Polynomial::monomial(2));
            }),
            ErrorKind::InvalidArgument);
}

TEST(Sylvester, MatchesEliminationOracle) {
  oracle::Gen g(603);
  for (int t = 0; t < 100; ++t) {
    const int N = g.integer(1, 8), K = g.integer(1, 8);
    const Polynomial A = g.poly(N), B = g.poly(K);
    const RootSet ra = find_roots(A), rb = find_roots(B);
    if (delta_value(A, B, ra, rb).value < 1e-3) continue;
    const Polynomial P = g.poly(g.integer(0, N + K - 1));
    const BezoutSolution s = solve_rhs(build_sylvester(A, B), P);
    const oracle::Pair ref = oracle::bezout_by_elimination(A, B, P);
    const double scale = std::max({1.0, coeff_norm(s.R), coeff_norm(s.S)});
    EXPECT_LE(oracle::max_gap(oracle::coeffs(s.R), ref.R), 1e-9 * scale);
    EXPECT_LE(oracle::max_gap(oracle::coeffs(s.S), ref.S), 1e-9 * scale);
    EXPECT_LE(s.R.degree(), K - 1);
    EXPECT_LE(s.S.degree(), N - 1);
  }
}

TEST(Sylvester, ResidualInvariant) {
  oracle::Gen g(604);
  for (int t = 0; t < 200; ++t) {
    const int N = g.integer(1, 8), K = g.integer(1, 8);
    const Polynomial A = g.poly(N), B = g.poly(K);
    const RootSet ra = find_roots(A), rb = find_roots(B);
    if (delta_value(A, B, ra, rb).value < 1e-3) continue;
    const Polynomial P = g.poly(g.integer(0, N + K - 1));
    const BezoutSolution s = solve_rhs(build_sylvester(A, B), P);
    const double inv = inverse_norm_report(A, B, 1.0).max_entry;
    // Recompute the residual independently.
    auto lhs = oracle::product(oracle::coeffs(A), oracle::coeffs(s.R));
    const auto bs = oracle::product(oracle::coeffs(B), oracle::coeffs(s.S));
    lhs.resize(std::max(lhs.size(), bs.size()), 0.0);
    for (std::size_t k = 0; k < bs.size(); ++k) lhs[k] += bs[k];
    const double r = oracle::max_gap(lhs, oracle::coeffs(P));
    EXPECT_LE(r, 1e-10 * (1.0 + inv) * coeff_norm(P));
    EXPECT_NEAR(s.residual, r, 1e-15 + 1e-3 * r);
  }
}

TEST(Sylvester, ResultantExamples) {
  const Polynomial A{0.0, 1.0}, B{1.0, -1.0};
  const ResultantReport r = resultant(A, B, find_roots(A), find_roots(B));
  EXPECT_NEAR(r.abs_determinant, 1.0, 1e-15);
  EXPECT_NEAR(r.via_roots_of_A, 1.0, 1e-15);
  EXPECT_NEAR(r.via_roots_of_B, 1.0, 1e-15);
  EXPECT_TRUE(r.agree);

  const double a = 0.125;
  const Polynomial A2{0.0, a}, B2{1.0, a};
  const ResultantReport r2 = resultant(A2, B2, find_roots(A2), find_roots(B2));
  EXPECT_NEAR(std::abs(r2.determinant + a), 0.0, 1e-16);
  EXPECT_NEAR(r2.via_roots_of_A, a, 1e-15);
  EXPECT_NEAR(r2.via_roots_of_B, a, 1e-15);
}

TEST(Sylvester, ResultantHomogeneity) {
  oracle::Gen g(605);
  for (int t = 0; t < 50; ++t) {
    const int N = g.integer(1, 6), K = g.integer(1, 6);
    const Polynomial A = g.poly(N), B = g.poly(K);
    const Complex c = g.in_disk(2.0) + 0.5;
    const RootSet ra = find_roots(A), rb = find_roots(B);
    const double d0 = resultant(A, B, ra, rb).abs_determinant;
    const double d1 = resultant(c * A, c * B, ra, rb).abs_determinant;
    EXPECT_NEAR(d1, std::pow(std::abs(c), N + K) * d0, 1e-10 * std::pow(std::abs(c), N + K) * d0 + 1e-300);
  }
}

TEST(Sylvester, ResultantTripleAgreement) {
  oracle::Gen g(606);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const Polynomial A = g.poly(g.integer(1, 6)), B = g.poly(g.integer(1, 6));
    const RootSet ra = find_roots(A), rb = find_roots(B);
    if (delta_value(A, B, ra, rb).value < 0.05) continue;
    const ResultantReport r = resultant(A, B, ra, rb);
    EXPECT_LE(r.max_relative_spread, 1e-6);
    // Product formula recomputed here straight from the definition.
    double prod = std::pow(std::abs(B.leading()), A.degree());
    for (Complex b : rb.roots) prod *= std::abs(eval(A, b));
    EXPECT_NEAR(r.via_roots_of_B, prod, 1e-12 * prod);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Sylvester, RemarkInverse) {
  for (int e = 0; e <= 10; ++e) {
    const double a = std::ldexp(1.0, -e);
    const MonomialFamily f = solve_monomial_all(Polynomial{0.0, a}, Polynomial{1.0, a});
    EXPECT_LE(matrix_gap(f.inverse, {{-1.0, 1.0 / a}, {1.0, 0.0}}), 1e-12 / a);
    const InverseNormReport r = inverse_norm_report(Polynomial{0.0, a}, Polynomial{1.0, a}, 1.0);
    EXPECT_NEAR(r.max_entry, std::max(1.0, 1.0 / a), 1e-12);
    EXPECT_DOUBLE_EQ(r.M, 1.0 / a);
    EXPECT_EQ(r.exponent, 2);
    // ratio = (1/a) / (1/a)^2 = a stays bounded.
    EXPECT_NEAR(r.ratio, a, 1e-12);
  }
}

TEST(Sylvester, MonomialFamilyInvertsMatrix) {
  const Polynomial A{0.0, 1.0}, B{1.0, -1.0};
  const MonomialFamily f = solve_monomial_all(A, B);
  const Eigen::MatrixXcd prod = build_sylvester(A, B).entries * f.inverse;
  EXPECT_LE((prod - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
  // P = z: z R + (1 - z) S = z gives R = 1, S = 0.
  EXPECT_LE(coeff_distance(f.solutions[1].R, Polynomial{1.0}), 1e-15);
  EXPECT_LE(coeff_distance(f.solutions[1].S, Polynomial{0.0}), 1e-15);
}

TEST(Sylvester, MonomialFamilyConsistency) {
  oracle::Gen g(607);
  for (int t = 0; t < 50; ++t) {
    const int N = g.integer(1, 6), K = g.integer(1, 6);
    const Polynomial A = g.poly(N), B = g.poly(K);
    const RootSet ra = find_roots(A), rb = find_roots(B);
    if (delta_value(A, B, ra, rb).value < 1e-3) continue;
    const MonomialFamily f = solve_monomial_all(A, B);
    ASSERT_EQ(static_cast<int>(f.solutions.size()), N + K);
    const Eigen::MatrixXcd prod = build_sylvester(A, B).entries * f.inverse;
    EXPECT_LE((prod - Eigen::MatrixXcd::Identity(N + K, N + K)).cwiseAbs().maxCoeff(),
              1e-12 * std::max(1.0, f.inverse.cwiseAbs().maxCoeff()));
    const BezoutSolution one = solve_rhs(build_sylvester(A, B), Polynomial{1.0});
    EXPECT_LE(coeff_distance(f.solutions[0].R, one.R), 1e-12 * std::max(1.0, coeff_norm(one.R)));
    EXPECT_LE(coeff_distance(f.solutions[0].S, one.S), 1e-12 * std::max(1.0, coeff_norm(one.S)));
    for (int l = 0; l < N + K; ++l) {
      const oracle::Pair ref = oracle::bezout_by_elimination(A, B, Polynomial::monomial(l));
      const double scale = std::max(1.0, f.inverse.cwiseAbs().maxCoeff());
      EXPECT_LE(oracle::max_gap(oracle::coeffs(f.solutions[l].R), ref.R), 1e-8 * scale);
    }
  }
}

TEST(Sylvester, InverseNormReportFields) {
  const Polynomial A{0.2, -0.5, 0.9}, B{0.7, 0.4};
  const RootSet ra = find_roots(A), rb = find_roots(B);
  const double d = delta(A, B, ra, rb);
  const InverseNormReport r = inverse_norm_report(A, B, d);
  const Eigen::MatrixXcd inv = build_sylvester(A, B).entries.inverse();
  EXPECT_NEAR(r.max_entry, inv.cwiseAbs().maxCoeff(), 1e-12 * r.max_entry);
  EXPECT_EQ(r.exponent, 2 + 1 + 2 - 1);
  EXPECT_DOUBLE_EQ(r.M, std::max(0.9 / 0.9, 0.7 / 0.4));
  EXPECT_DOUBLE_EQ(r.C3, default_C3(2, 1));
  EXPECT_NEAR(r.ratio, r.max_entry * d * d / std::pow(r.M, r.exponent), 1e-12 * r.ratio);
  EXPECT_NEAR(r.bound, r.C3 * std::pow(r.M, r.exponent) / (d * d), 1e-12 * r.bound);
  EXPECT_TRUE(r.within_bound);
  const InverseNormReport custom = inverse_norm_report(A, B, d, 2.5);
  EXPECT_EQ(custom.C3, 2.5);
}
