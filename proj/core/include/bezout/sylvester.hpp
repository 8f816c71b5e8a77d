#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bezout/polynomial.hpp"
#include "bezout/roots.hpp"
#include "bezout/solution.hpp"

namespace bezout {

/**
 * (N+K) x (N+K) Sylvester matrix of A (degree N) and B (degree K).
 *
 * Column c < K carries a_0..a_N in rows c..c+N, column K+c carries b_0..b_K
 * in rows c..c+K, so that S x = p with x = [r_0..r_{K-1}, s_0..s_{N-1}]
 * is the coefficient form of A R + B S = P.
 */
struct SylvesterMatrix {
  Eigen::MatrixXcd entries;
  int N = 0;
  int K = 0;
  Polynomial A;
  Polynomial B;
};

/// Throws ConstantPolynomial when either degree is 0.
SylvesterMatrix build_sylvester(const Polynomial& A, const Polynomial& B);

/**
 * Partial-pivoting LU solve of S x = p, unpacked into (R, S).
 *
 * One step of iterative refinement is taken when the residual exceeds
 * refine_tolerance * ||P||. Throws SingularSystem on a zero pivot or a
 * reciprocal condition estimate below 1e-15, InvalidArgument when
 * deg P > N+K-1.
 */
BezoutSolution solve_rhs(const SylvesterMatrix& M, const Polynomial& P, double refine_tolerance = 1e-12);

struct ResultantReport {
  Complex determinant;
  double abs_determinant = 0.0;
  double via_roots_of_B = 0.0;  // |b_K|^N prod |A(beta_j)|
  double via_roots_of_A = 0.0;  // |a_N|^K prod |B(alpha_i)|
  double max_relative_spread = 0.0;
  bool agree = false;  // spread <= 1e-6
};

ResultantReport resultant(const Polynomial& A, const Polynomial& B, const RootSet& rootsA, const RootSet& rootsB);

struct InverseNormReport {
  double max_entry = 0.0;  // max |(S^-1)_{ij}|
  double two_norm = 0.0;
  double inf_norm = 0.0;
  double delta = 0.0;
  double M = 0.0;  // max(||A|| / |a_N|, ||B|| / |b_K|)
  int exponent = 0;  // N + K + max(N,K) - 1
  double C3 = 0.0;
  std::string C3_source;
  double bound = 0.0;  // C3 M^exponent / delta^2
  double ratio = 0.0;  // max_entry delta^2 / M^exponent
  double norm_cap = 1.0;  // max(||A||, ||B||)
  double unnormalized_bound = 0.0;  // bound * norm_cap
  double unnormalized_ratio = 0.0;  // ratio / norm_cap
  bool within_bound = false;
};

/// Default C3: m m^m 3^(N+K) (10/3)^exponent with m = max(N,K), obtained by
/// chaining the coefficient estimates of the proof; not a sharp constant.
double default_C3(int N, int K);

InverseNormReport inverse_norm_report(const Polynomial& A, const Polynomial& B, double delta, double C3 = -1.0);

struct MonomialFamily {
  std::vector<BezoutSolution> solutions;  // P = z^l, l = 0..N+K-1
  Eigen::MatrixXcd inverse;  // column l is the x-vector of solution l
};

/// Every monomial right-hand side off a single factorization.
MonomialFamily solve_monomial_all(const Polynomial& A, const Polynomial& B);

/// Pack (R, S) as x = [r_0..r_{K-1}, s_0..s_{N-1}].
Eigen::VectorXcd pack_solution(const Polynomial& R, const Polynomial& S, int N, int K);

}  // namespace bezout
